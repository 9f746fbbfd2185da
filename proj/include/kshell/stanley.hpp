#pragma once

#include <cstdint>
#include <vector>

#include "kshell/complex.hpp"
#include "kshell/expansion.hpp"
#include "kshell/shelling.hpp"

namespace kshell {

// One step of the face-ring filtration. Step i (1-based) adjoins the facet
// at shelling position r-i+1; `a` counts the facets of that facet's
// intersection subcomplex, `sigmas` are their complements (pairwise disjoint
// k-sets), and `shifts` are the k^a multidegrees of the product-of-primes
// generators, each of total degree a.
struct FiltrationStep {
    int i = 0;
    Face facet = 0;
    int a = 0;
    std::vector<Face> sigmas;
    std::vector<Monomial> shifts;
};

// One Stanley space u*K[Z]. i is the shelling position of the facet,
// j the generator position (1-based), L the complement variable set.
struct StanleySpace {
    int i = 0;
    int j = 0;
    Monomial u;
    Face z_vars = 0;
    Face l_vars = 0;
};

struct StanleyDecomposition {
    int k = 1;
    std::vector<StanleySpace> spaces;
    std::vector<Face> order_facets;  // F_i in shelling order
    std::vector<int> a;              // a_i per shelling position
};

// Sigma sets of one shelling step: F_i minus each facet of
// <F_i> ∩ <F_1..F_{i-1}> (empty for i = 1), ascending. Requires the order to
// be accepted by verify_k_shelling; the sigmas of an accepted order are
// checked pairwise disjoint (InternalError otherwise).
std::vector<Face> shelling_step_data(const Complex& c, const ShellingOrder& order, int i);

// The k^s squarefree monomials choosing one variable from each of s pairwise
// disjoint k-sets, in descending lexicographic order (x_0 > x_1 > ...).
// For s = 0 the list is {1}.
std::vector<Monomial> product_prime_generators(const std::vector<Face>& sigmas);

// Successive colon ideals (f_1..f_{j-1}) : f_j of the generator sequence,
// as variable sets; Q_1 is empty. Every colon must be generated by single
// variables and the last one must have exactly (k-1)*s of them
// (InternalError otherwise).
std::vector<Face> colon_quotients(const std::vector<Monomial>& gens);

// Filtration of the face ring along the reversed shelling order. Each step
// m >= 2 is validated against the prime identity
//   (∩_{j<m} P_{F_j^c}) + P_{F_m^c}  =  P_{F_m^c} + P_{σ_1}...P_{σ_a}
// by comparing minimal generating sets (InternalError on mismatch).
std::vector<FiltrationStep> build_filtration(const Complex& c, const ShellingOrder& order);

// Stanley decomposition of the face ring of a pure complex from a verified
// k-shelling order: u_{ij} K[Z_{ij}] with u the j-th product generator,
// L_{ij} = F_i^c ∪ Q_j and Z_{ij} its complement.
StanleyDecomposition stanley_decomposition(const Complex& c, const ShellingOrder& order);

// Number of monomials of total degree d whose support is a face of c
// (1 for d = 0): sum over the nonempty faces F of binom(d-1, |F|-1).
long long hilbert_function(const Complex& c, int degree);

// True when, for every degree d <= maxdeg, each monomial with face support
// lies in exactly one space (divisible by u with the quotient supported in
// Z) and the per-degree counts match hilbert_function.
bool verify_partition(const StanleyDecomposition& d, const Complex& c, int maxdeg);

struct SdepthCheck {
    int min_z = 0;
    bool pass = false;
};

// min |Z| over the spaces, compared against the depth target (the facet
// cardinality of the unexpanded complex). Also re-derives the closed form
// |Z_{i,last}| = (k-1)(target - a_i) + target for every i, which requires
// |F_i| = k * target (DomainError otherwise).
SdepthCheck sdepth_bound_check(const StanleyDecomposition& d, int target);

}  // namespace kshell
