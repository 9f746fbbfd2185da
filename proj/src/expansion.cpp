#include "kshell/expansion.hpp"

#include <algorithm>
#include <string>

namespace kshell {

ExpansionVector::ExpansionVector(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries)
        if (v < 1) throw InputError("expansion multiplicities must be >= 1");
}

ExpansionVector ExpansionVector::uniform(int k, int n) {
    if (k < 1) throw InputError("expansion multiplicities must be >= 1");
    return ExpansionVector(std::vector<int>(static_cast<std::size_t>(n), k));
}

int ExpansionVector::total() const {
    int t = 0;
    for (int v : entries) t += v;
    return t;
}

Monomial::Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second <= 0) throw InputError("monomial exponents must be positive");
        if (i > 0 && factors_[i].first == factors_[i - 1].first)
            throw InputError("repeated variable in monomial factor list");
    }
}

Monomial Monomial::squarefree(Face support) {
    std::vector<std::pair<int, int>> f;
    for (int v : face_indices(support)) f.emplace_back(v, 1);
    return Monomial(std::move(f));
}

bool Monomial::is_squarefree() const {
    for (auto [v, e] : factors_)
        if (e > 1) return false;
    return true;
}

int Monomial::degree() const {
    int d = 0;
    for (auto [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(int v) const {
    for (auto [var, e] : factors_)
        if (var == v) return e;
    return 0;
}

Face Monomial::support() const {
    Face s = 0;
    for (auto [v, e] : factors_) s |= face_bit(v);
    return s;
}

bool Monomial::divides(const Monomial& m) const {
    for (auto [v, e] : factors_)
        if (m.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    std::vector<std::pair<int, int>> out;
    auto a = factors_.begin();
    auto b = m.factors_.begin();
    while (a != factors_.end() || b != m.factors_.end()) {
        if (b == m.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            out.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    Monomial r;
    r.factors_ = std::move(out);
    return r;
}

Monomial Monomial::colon(const Monomial& m) const {
    std::vector<std::pair<int, int>> out;
    for (auto [v, e] : factors_) {
        int rest = e - m.exponent(v);
        if (rest > 0) out.emplace_back(v, rest);
    }
    Monomial r;
    r.factors_ = std::move(out);
    return r;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) return ia->first < ib->first;  // earlier variable present wins
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.factors().end();
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Universe variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)) {
    for (const Monomial& g : generators) {
        for (auto [v, e] : g.factors())
            if (v < 0 || v >= variables_.size())
                throw InputError("generator uses a variable outside the declared list");
    }
    generators_ = minimalize(std::move(generators));
    std::sort(generators_.begin(), generators_.end(), lex_greater);
}

bool MonomialIdeal::is_squarefree() const {
    for (const Monomial& g : generators_)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : generators_)
        if (g.divides(m)) return true;
    return false;
}

std::string monomial_to_string(const Monomial& m, const Universe& vars) {
    if (m.is_one()) return "1";
    std::string out;
    for (auto [v, e] : m.factors()) {
        if (!out.empty()) out += ' ';
        out += vars.label(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

Universe expanded_universe(const Universe& u, const ExpansionVector& alpha) {
    if (alpha.size() != u.size())
        throw DomainError("expansion vector length does not match the universe");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(alpha.total()));
    for (int i = 0; i < u.size(); ++i)
        for (int copy = 1; copy <= alpha.at(i); ++copy)
            labels.push_back(u.label(i) + "_" + std::to_string(copy));
    return Universe(std::move(labels));
}

namespace {

// Start offset of vertex i's copy block in the expanded universe.
std::vector<int> copy_offsets(const ExpansionVector& alpha) {
    std::vector<int> off(static_cast<std::size_t>(alpha.size()) + 1, 0);
    for (int i = 0; i < alpha.size(); ++i) off[static_cast<std::size_t>(i) + 1] = off[static_cast<std::size_t>(i)] + alpha.at(i);
    return off;
}

Face copy_block(const std::vector<int>& off, int vertex, int count) {
    Face block = (count == kMaxVertices) ? ~Face{0} : (Face{1} << count) - 1;
    return block << off[static_cast<std::size_t>(vertex)];
}

}  // namespace

Face expand_face(Face f, const Universe& src, const ExpansionVector& alpha) {
    if (alpha.size() != src.size())
        throw DomainError("expansion vector length does not match the universe");
    if (alpha.total() > kMaxVertices)
        throw InputError("expanded universe exceeds " + std::to_string(kMaxVertices) + " vertices");
    std::vector<int> off = copy_offsets(alpha);
    Face out = 0;
    for (int v : face_indices(f)) out |= copy_block(off, v, alpha.at(v));
    return out;
}

Complex expand_complex(const Complex& c, const ExpansionVector& alpha) {
    Universe target = expanded_universe(c.universe(), alpha);
    std::vector<Face> facets;
    facets.reserve(c.facets().size());
    for (Face f : c.facets()) facets.push_back(expand_face(f, c.universe(), alpha));
    // Expansion preserves inclusion both ways, so the antichain survives.
    return Complex(std::move(target), std::move(facets));
}

namespace {

// Next subset of the same popcount (Gosper); wraps past the last one.
inline Face next_same_size(Face v) {
    Face c = v & (~v + 1);
    Face r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// Minimal non-faces by cardinality sweep.
std::vector<Face> minimal_nonfaces(const Complex& c) {
    int n = c.universe().size();
    std::vector<Face> found;
    for (int s = 1; s <= n; ++s) {
        Face m = (Face{1} << s) - 1;
        Face limit = c.full_mask();
        while (m <= limit) {
            bool covered = false;
            for (Face nf : found) {
                if (face_subset(nf, m)) {
                    covered = true;
                    break;
                }
            }
            if (!covered && !c.contains_face(m)) found.push_back(m);
            if (m == 0) break;
            Face nxt = next_same_size(m);
            if (nxt < m) break;  // wrapped
            m = nxt;
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Squarefree ideals as sorted bitset vectors; used for the prime-intersection
// cross-check.
std::vector<Face> sf_minimalize(std::vector<Face> gens) {
    std::vector<Face> out = minimal_faces(gens);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> sf_intersect(const std::vector<Face>& a, const std::vector<Face>& b) {
    std::vector<Face> prod;
    prod.reserve(a.size() * b.size());
    for (Face x : a)
        for (Face y : b) prod.push_back(x | y);
    return sf_minimalize(std::move(prod));
}

}  // namespace

MonomialIdeal stanley_reisner_ideal(const Complex& c) {
    if (c.is_void()) throw DomainError("Stanley-Reisner ideal of the void complex is undefined");

    std::vector<Face> nonfaces = minimal_nonfaces(c);

    // Cross-check: I equals the intersection of the primes on the facet
    // complements.
    std::vector<Face> primes{};
    bool first = true;
    Face full = c.full_mask();
    for (Face f : c.facets()) {
        std::vector<Face> p;
        for (int v : face_indices(full & ~f)) p.push_back(face_bit(v));
        primes = first ? sf_minimalize(std::move(p)) : sf_intersect(primes, p);
        first = false;
    }
    if (primes != nonfaces)
        throw InternalError("minimal non-faces disagree with the facet-complement prime intersection");

    std::vector<Monomial> gens;
    gens.reserve(nonfaces.size());
    for (Face nf : nonfaces) gens.push_back(Monomial::squarefree(nf));
    return MonomialIdeal(c.universe(), std::move(gens));
}

namespace {

// All exponent assignments of total degree `deg` on the copy block of one
// variable, as monomials over the expanded universe.
void block_powers(int offset, int copies, int deg, std::vector<Monomial>& out) {
    // Positions offset..offset+copies-1; distribute `deg` among them.
    std::vector<int> exps(static_cast<std::size_t>(copies), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == copies - 1) {
            exps[static_cast<std::size_t>(pos)] = left;
            std::vector<std::pair<int, int>> f;
            for (int i = 0; i < copies; ++i)
                if (exps[static_cast<std::size_t>(i)] > 0) f.emplace_back(offset + i, exps[static_cast<std::size_t>(i)]);
            out.push_back(Monomial(std::move(f)));
            return;
        }
        for (int e = left; e >= 0; --e) {
            exps[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, deg);
}

}  // namespace

MonomialIdeal expand_ideal(const MonomialIdeal& ideal, const ExpansionVector& alpha) {
    if (alpha.size() != ideal.variables().size())
        throw DomainError("expansion vector length does not match the variable list");
    Universe target = expanded_universe(ideal.variables(), alpha);
    std::vector<int> off = copy_offsets(alpha);

    std::vector<Monomial> gens;
    for (const Monomial& u : ideal.generators()) {
        std::vector<Monomial> partial{Monomial::one()};
        for (auto [v, e] : u.factors()) {
            std::vector<Monomial> block;
            block_powers(off[static_cast<std::size_t>(v)], alpha.at(v), e, block);
            std::vector<Monomial> next;
            next.reserve(partial.size() * block.size());
            for (const Monomial& p : partial)
                for (const Monomial& q : block) next.push_back(p.times(q));
            partial = std::move(next);
        }
        for (Monomial& m : partial) gens.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(target), std::move(gens));
}

Complex complex_from_squarefree_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw DomainError("inverse Stanley-Reisner map requires a squarefree ideal");
    int n = ideal.variables().size();
    if (n > 26) throw InputError("inverse Stanley-Reisner map enumerates 2^n subsets; n > 26 unsupported");

    std::vector<Face> supports;
    for (const Monomial& g : ideal.generators()) supports.push_back(g.support());

    Face full = ideal.variables().full_mask();
    std::vector<Face> faces;
    for (Face m = 0;; ++m) {
        bool in_ideal = false;
        for (Face s : supports) {
            if (face_subset(s, m)) {
                in_ideal = true;
                break;
            }
        }
        if (!in_ideal) faces.push_back(m);
        if (m == full) break;
    }
    std::vector<Face> facets = maximal_faces(faces);
    std::sort(facets.begin(), facets.end(), face_lex_less);
    return Complex(ideal.variables(), std::move(facets));
}

}  // namespace kshell
