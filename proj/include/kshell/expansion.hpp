#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kshell/complex.hpp"

namespace kshell {

// One positive multiplicity per universe vertex. The uniform vector
// (k,...,k) is the common case.
struct ExpansionVector {
    std::vector<int> entries;

    explicit ExpansionVector(std::vector<int> e);
    static ExpansionVector uniform(int k, int n);

    int size() const { return static_cast<int>(entries.size()); }
    int at(int i) const { return entries.at(static_cast<std::size_t>(i)); }
    int total() const;
};

// Sparse monomial: (variable index, exponent) pairs sorted by variable,
// exponents strictly positive. The empty product is 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial variable(int v) { return Monomial({{v, 1}}); }
    explicit Monomial(std::vector<std::pair<int, int>> factors);
    static Monomial squarefree(Face support);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    bool is_squarefree() const;
    int degree() const;
    int exponent(int v) const;
    Face support() const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    // this : m, i.e. this / gcd(this, m).
    Monomial colon(const Monomial& m) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::pair<int, int>> factors_;
};

// Lexicographic comparison under x_0 > x_1 > ... (canonical variable order,
// lower index is the greater variable).
bool lex_greater(const Monomial& a, const Monomial& b);

// Monomial ideal over an ordered variable list, kept minimally generated and
// canonically sorted (lex descending). The zero ideal has no generators.
class MonomialIdeal {
public:
    explicit MonomialIdeal(Universe variables, std::vector<Monomial> generators = {});

    const Universe& variables() const { return variables_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }
    bool is_squarefree() const;

    // Divisibility by some generator.
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const {
        return variables_ == o.variables_ && generators_ == o.generators_;
    }

private:
    Universe variables_;
    std::vector<Monomial> generators_;
};

std::string monomial_to_string(const Monomial& m, const Universe& vars);

// Universe of the expansion: each vertex x becomes copies "x_1".."x_k",
// ordered by (original index, copy index).
Universe expanded_universe(const Universe& u, const ExpansionVector& alpha);

// F^alpha: every vertex of f is replaced by all of its copies. `f` is read
// against `src`; the result is a face of expanded_universe(src, alpha).
Face expand_face(Face f, const Universe& src, const ExpansionVector& alpha);

// Facet-wise expansion, input order preserved.
Complex expand_complex(const Complex& c, const ExpansionVector& alpha);

// Stanley-Reisner ideal: squarefree generators from the inclusion-minimal
// non-faces, cross-checked against the intersection of the facet-complement
// primes. Throws DomainError on the void complex.
MonomialIdeal stanley_reisner_ideal(const Complex& c);

// I^alpha: each generator u contributes the product over j of
// (x_{j,1}..x_{j,k_j})^{e_j(u)}, expanded into monomials; the union is then
// minimalized.
MonomialIdeal expand_ideal(const MonomialIdeal& ideal, const ExpansionVector& alpha);

// Inverse Stanley-Reisner map: the complex whose faces are the squarefree
// monomials outside the (squarefree) ideal. Facets in ascending lex order.
Complex complex_from_squarefree_ideal(const MonomialIdeal& ideal);

}  // namespace kshell
