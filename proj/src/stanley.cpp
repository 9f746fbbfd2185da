#include "kshell/stanley.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace kshell {

namespace {

// Squarefree monomial ideals as sorted vectors of support masks.
using SfIdeal = std::vector<Face>;

SfIdeal sf_canonical(std::vector<Face> gens) {
    std::vector<Face> out = minimal_faces(gens);
    std::sort(out.begin(), out.end());
    return out;
}

SfIdeal sf_prime(Face support) {
    SfIdeal out;
    for (int v : face_indices(support)) out.push_back(face_bit(v));
    return out;
}

SfIdeal sf_intersect(const SfIdeal& a, const SfIdeal& b) {
    std::vector<Face> prod;
    prod.reserve(a.size() * b.size());
    for (Face x : a)
        for (Face y : b) prod.push_back(x | y);
    return sf_canonical(std::move(prod));
}

SfIdeal sf_sum(const SfIdeal& a, const SfIdeal& b) {
    std::vector<Face> all(a);
    all.insert(all.end(), b.begin(), b.end());
    return sf_canonical(std::move(all));
}

ShellingCertificate verified_certificate(const Complex& c, const ShellingOrder& order) {
    ShellingCertificate cert = verify_k_shelling(c, order);
    if (!cert.accepted)
        throw DomainError("the order is not a k-shelling (rejected at step " +
                          std::to_string(cert.failure_j) + ")");
    return cert;
}

std::vector<Face> step_sigmas(const ShellingCertificate& cert, int i) {
    if (i < 1 || i > static_cast<int>(cert.order.size())) throw InputError("step index out of range");
    if (i == 1) return {};
    std::vector<Face> sigmas = cert.steps[static_cast<std::size_t>(i - 2)].sigmas;
    std::sort(sigmas.begin(), sigmas.end());
    Face seen = 0;
    for (Face s : sigmas) {
        if ((s & seen) != 0)
            throw InternalError("intersection complements of an accepted step are not disjoint");
        seen |= s;
    }
    return sigmas;
}

}  // namespace

std::vector<Face> shelling_step_data(const Complex& c, const ShellingOrder& order, int i) {
    return step_sigmas(verified_certificate(c, order), i);
}

std::vector<Monomial> product_prime_generators(const std::vector<Face>& sigmas) {
    Face seen = 0;
    int k = sigmas.empty() ? 1 : face_size(sigmas.front());
    for (Face s : sigmas) {
        if (face_size(s) != face_size(sigmas.front()))
            throw DomainError("product of primes requires uniform set sizes");
        if ((s & seen) != 0) throw DomainError("product of primes requires disjoint sets");
        seen |= s;
    }
    (void)k;

    std::vector<Face> picks{kEmptyFace};
    for (Face s : sigmas) {
        std::vector<Face> next;
        next.reserve(picks.size() * static_cast<std::size_t>(face_size(s)));
        for (Face p : picks)
            for (int v : face_indices(s)) next.push_back(p | face_bit(v));
        picks = std::move(next);
    }
    std::vector<Monomial> gens;
    gens.reserve(picks.size());
    for (Face p : picks) gens.push_back(Monomial::squarefree(p));
    std::sort(gens.begin(), gens.end(), lex_greater);
    return gens;
}

std::vector<Face> colon_quotients(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw InputError("generator list is empty");
    std::vector<Face> quotients{kEmptyFace};
    for (std::size_t j = 1; j < gens.size(); ++j) {
        std::vector<Monomial> colon;
        colon.reserve(j);
        for (std::size_t t = 0; t < j; ++t) colon.push_back(gens[t].colon(gens[j]));
        // Minimalize, then demand single variables.
        Face q = 0;
        for (const Monomial& m : colon) {
            bool redundant = false;
            for (const Monomial& other : colon)
                if (!(other == m) && other.divides(m)) redundant = true;
            if (redundant) continue;
            if (m.degree() != 1)
                throw InternalError("colon ideal has a non-linear minimal generator '" +
                                    std::to_string(m.degree()) + "'");
            q |= m.support();
        }
        quotients.push_back(q);
    }

    // The generator count is k^s for s = deg(f_1); recover k and check that
    // the final colon ideal has exactly (k-1)s variables.
    int s = gens.front().degree();
    if (s > 0 && gens.size() > 1) {
        int k = 1;
        std::uint64_t power = 1;
        while (power < gens.size()) {
            ++k;
            power = 1;
            for (int i = 0; i < s; ++i) power *= static_cast<std::uint64_t>(k);
        }
        if (power != gens.size())
            throw InternalError("generator count is not a perfect power k^s");
        if (face_size(quotients.back()) != (k - 1) * s)
            throw InternalError("final colon ideal size disagrees with (k-1)s");
    }
    return quotients;
}

std::vector<FiltrationStep> build_filtration(const Complex& c, const ShellingOrder& order) {
    ShellingCertificate cert = verified_certificate(c, order);
    int r = c.facet_count();
    Face full = c.full_mask();

    std::vector<FiltrationStep> steps;
    steps.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        int m = r - i + 1;  // shelling position adjoined at filtration step i
        Face facet = c.facets()[static_cast<std::size_t>(order.order[static_cast<std::size_t>(m - 1)])];
        FiltrationStep step;
        step.i = i;
        step.facet = facet;
        step.sigmas = step_sigmas(cert, m);
        step.a = static_cast<int>(step.sigmas.size());
        step.shifts = product_prime_generators(step.sigmas);

        if (m >= 2) {
            // (∩_{j<m} P_{F_j^c}) + P_{F_m^c} = P_{F_m^c} + P_{σ_1}...P_{σ_a}
            SfIdeal inter;
            for (int j = 1; j < m; ++j) {
                Face fj = c.facets()[static_cast<std::size_t>(order.order[static_cast<std::size_t>(j - 1)])];
                SfIdeal prime = sf_prime(full & ~fj);
                inter = (j == 1) ? prime : sf_intersect(inter, prime);
            }
            SfIdeal lhs = sf_sum(inter, sf_prime(full & ~facet));

            std::vector<Face> product;
            for (const Monomial& g : step.shifts) product.push_back(g.support());
            SfIdeal rhs = sf_sum(sf_canonical(std::move(product)), sf_prime(full & ~facet));
            if (lhs != rhs)
                throw InternalError("filtration step " + std::to_string(i) +
                                    " fails the prime decomposition identity");
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

StanleyDecomposition stanley_decomposition(const Complex& c, const ShellingOrder& order) {
    if (!c.is_pure()) throw DomainError("the Stanley decomposition requires a pure complex");
    ShellingCertificate cert = verified_certificate(c, order);

    StanleyDecomposition d;
    d.k = order.k;
    Face full = c.full_mask();
    int r = c.facet_count();
    for (int i = 1; i <= r; ++i) {
        Face facet = c.facets()[static_cast<std::size_t>(order.order[static_cast<std::size_t>(i - 1)])];
        std::vector<Face> sigmas = step_sigmas(cert, i);
        std::vector<Monomial> gens = product_prime_generators(sigmas);
        std::vector<Face> quotients = colon_quotients(gens);
        d.order_facets.push_back(facet);
        d.a.push_back(static_cast<int>(sigmas.size()));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            StanleySpace space;
            space.i = i;
            space.j = static_cast<int>(j) + 1;
            space.u = gens[j];
            space.l_vars = (full & ~facet) | quotients[j];
            space.z_vars = full & ~space.l_vars;
            d.spaces.push_back(std::move(space));
        }
    }
    return d;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

long long hilbert_function(const Complex& c, int degree) {
    if (degree < 0) throw InputError("degree must be nonnegative");
    if (degree == 0) return 1;
    long long total = 0;
    for (Face f : all_faces(c)) {
        if (f == 0) continue;
        total += binomial(degree - 1, face_size(f) - 1);
    }
    return total;
}

namespace {

// Visits every monomial of total degree `deg` supported exactly on `support`.
template <typename Fn>
void for_each_composition(const std::vector<int>& vars, int deg, Fn&& fn) {
    int n = static_cast<int>(vars.size());
    if (n == 0) return;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            exps[static_cast<std::size_t>(pos)] = left;
            std::vector<std::pair<int, int>> f;
            for (int i = 0; i < n; ++i) f.emplace_back(vars[static_cast<std::size_t>(i)], exps[static_cast<std::size_t>(i)]);
            fn(Monomial(std::move(f)));
            return;
        }
        for (int e = left - (n - 1 - pos); e >= 1; --e) {
            exps[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (deg >= n) rec(rec, 0, deg);
}

}  // namespace

bool verify_partition(const StanleyDecomposition& d, const Complex& c, int maxdeg) {
    std::vector<Face> faces = all_faces(c);
    for (int deg = 0; deg <= maxdeg; ++deg) {
        long long counted = 0;
        bool ok = true;
        auto member_count = [&](const Monomial& m) {
            int hits = 0;
            for (const StanleySpace& sp : d.spaces) {
                if (!sp.u.divides(m)) continue;
                if (face_subset(m.colon(sp.u).support(), sp.z_vars)) ++hits;
            }
            return hits;
        };
        if (deg == 0) {
            counted = 1;
            ok = member_count(Monomial::one()) == 1;
        } else {
            for (Face f : faces) {
                if (f == 0 || face_size(f) > deg) continue;
                std::vector<int> vars = face_indices(f);
                for_each_composition(vars, deg, [&](const Monomial& m) {
                    ++counted;
                    if (member_count(m) != 1) ok = false;
                });
                if (!ok) break;
            }
        }
        if (!ok || counted != hilbert_function(c, deg)) return false;
    }
    return true;
}

SdepthCheck sdepth_bound_check(const StanleyDecomposition& d, int target) {
    SdepthCheck check;
    check.min_z = kMaxVertices + 1;
    for (const StanleySpace& sp : d.spaces) check.min_z = std::min(check.min_z, face_size(sp.z_vars));
    check.pass = check.min_z >= target;

    // Closed form for the final space of every shelling position.
    for (std::size_t i = 0; i < d.order_facets.size(); ++i) {
        if (face_size(d.order_facets[i]) != d.k * target)
            throw DomainError("target is not the unexpanded facet cardinality");
        std::uint64_t last_j = 1;
        for (int t = 0; t < d.a[i]; ++t) last_j *= static_cast<std::uint64_t>(d.k);
        int expected = (d.k - 1) * (target - d.a[i]) + target;
        bool found = false;
        for (const StanleySpace& sp : d.spaces) {
            if (sp.i == static_cast<int>(i) + 1 && sp.j == static_cast<int>(last_j)) {
                found = true;
                if (face_size(sp.z_vars) != expected)
                    throw InternalError("final space dimension disagrees with the closed form");
            }
        }
        if (!found) throw InternalError("missing final space for a shelling position");
    }
    return check;
}

}  // namespace kshell
