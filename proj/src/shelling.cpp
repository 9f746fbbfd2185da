#include "kshell/shelling.hpp"

#include <algorithm>
#include <string>

namespace kshell {

namespace {

void validate_order(const Complex& c, const ShellingOrder& order) {
    int r = c.facet_count();
    if (static_cast<int>(order.order.size()) != r)
        throw InputError("order has " + std::to_string(order.order.size()) + " entries, complex has " +
                         std::to_string(r) + " facets");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int v : order.order) {
        if (v < 0 || v >= r || seen[static_cast<std::size_t>(v)])
            throw InputError("order is not a permutation of the facet indices");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

void validate_k(const Complex& c, int k) {
    if (c.is_void()) throw DomainError("k-shelling of the void complex is undefined");
    if (k < 1) throw DomainError("k must be a positive integer");
    // A single facet has no step conditions and is accepted for every k.
    if (c.facet_count() >= 2 && k > c.dimension() + 1)
        throw DomainError("k = " + std::to_string(k) + " exceeds dim+1 = " +
                          std::to_string(c.dimension() + 1));
}

// Facets of <F_cand> ∩ <F_p : p in prefix>: the maximal pairwise
// intersections, deduped, ascending by mask.
std::vector<Face> intersection_subcomplex(const std::vector<Face>& facets,
                                          const std::vector<int>& prefix, std::size_t prefix_len,
                                          Face cand) {
    std::vector<Face> inters;
    inters.reserve(prefix_len);
    for (std::size_t p = 0; p < prefix_len; ++p)
        inters.push_back(cand & facets[static_cast<std::size_t>(prefix[p])]);
    std::vector<Face> maxi = maximal_faces(inters);
    std::sort(maxi.begin(), maxi.end());
    return maxi;
}

// Conditions (dimension, covering) for one step against a prefix.
StepCondition step_condition(const std::vector<Face>& inter_facets, Face cand, int k) {
    int want = face_size(cand) - k;
    for (Face f : inter_facets)
        if (face_size(f) != want) return StepCondition::dimension;
    if (inter_facets.size() > 1) {
        for (std::size_t a = 0; a < inter_facets.size(); ++a)
            for (std::size_t b = a + 1; b < inter_facets.size(); ++b) {
                if ((inter_facets[a] & inter_facets[b]) != 0) continue;  // only disjoint pairs
                if ((cand & ~(inter_facets[a] | inter_facets[b])) != 0)
                    return StepCondition::covering;
            }
    }
    return StepCondition::none;
}

}  // namespace

ShellingCertificate verify_k_shelling(const Complex& c, const ShellingOrder& order) {
    validate_order(c, order);
    validate_k(c, order.k);

    ShellingCertificate cert;
    cert.k = order.k;
    cert.order = order.order;
    cert.accepted = true;

    const std::vector<Face>& facets = c.facets();
    int r = c.facet_count();
    for (int j = 2; j <= r; ++j) {
        Face cand = facets[static_cast<std::size_t>(order.order[static_cast<std::size_t>(j - 1)])];
        StepCertificate step;
        step.j = j;
        step.intersection_facets =
            intersection_subcomplex(facets, order.order, static_cast<std::size_t>(j - 1), cand);
        for (Face f : step.intersection_facets) step.sigmas.push_back(cand & ~f);
        cert.steps.push_back(step);

        StepCondition fail = step_condition(step.intersection_facets, cand, order.k);
        if (fail != StepCondition::none) {
            cert.accepted = false;
            cert.failure_j = j;
            cert.failure_condition = fail;
            return cert;
        }
    }
    return cert;
}

std::vector<Face> minimal_new_faces(const Complex& c, const std::vector<int>& order, int j) {
    if (j < 1 || j > c.facet_count()) throw InputError("step index out of range");
    if (j == 1) return {kEmptyFace};

    const std::vector<Face>& facets = c.facets();
    Face target = facets[static_cast<std::size_t>(order[static_cast<std::size_t>(j - 1)])];
    std::vector<Face> fresh;
    Face s = target;
    while (true) {
        bool old = false;
        for (int p = 0; p < j - 1 && !old; ++p)
            old = face_subset(s, facets[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])]);
        if (!old) fresh.push_back(s);
        if (s == 0) break;
        s = (s - 1) & target;
    }
    std::vector<Face> mins = minimal_faces(fresh);
    std::sort(mins.begin(), mins.end());
    return mins;
}

ConditionBResult check_condition_b(const Complex& c, const ShellingOrder& order) {
    validate_order(c, order);
    validate_k(c, order.k);

    ConditionBResult res;
    int r = c.facet_count();
    for (int j = 1; j <= r; ++j) {
        std::vector<Face> mnf = minimal_new_faces(c, order.order, j);
        int t = face_size(mnf.front());
        for (Face m : mnf) {
            if (face_size(m) != t) {
                res.failure_j = j;
                return res;
            }
        }
        if (t == 0) {  // j == 1: the only new minimal face is the empty face
            res.e_sets.emplace_back();
            continue;
        }

        Face target = c.facets()[static_cast<std::size_t>(order.order[static_cast<std::size_t>(j - 1)])];
        Face witness = mnf.front();
        std::vector<int> anchor = face_indices(witness);
        std::vector<Face> e_sets;
        Face combined = 0;
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            Face base = witness & ~face_bit(anchor[static_cast<std::size_t>(i)]);
            Face e = 0;
            for (int v : face_indices(target)) {
                Face probe = base | face_bit(v);
                if (std::binary_search(mnf.begin(), mnf.end(), probe)) e |= face_bit(v);
            }
            if (face_size(e) != order.k || (e & combined) != 0) ok = false;
            combined |= e;
            e_sets.push_back(e);
        }
        if (ok) {
            // The box product {a_1..a_t : a_i in E_i} must equal the minimal set.
            std::vector<Face> box{kEmptyFace};
            for (Face e : e_sets) {
                std::vector<Face> next;
                next.reserve(box.size() * static_cast<std::size_t>(order.k));
                for (Face partial : box)
                    for (int v : face_indices(e)) next.push_back(partial | face_bit(v));
                box = std::move(next);
            }
            std::sort(box.begin(), box.end());
            box.erase(std::unique(box.begin(), box.end()), box.end());
            ok = box == mnf;
        }
        if (!ok) {
            res.failure_j = j;
            return res;
        }
        res.e_sets.push_back(std::move(e_sets));
    }
    res.ok = true;
    return res;
}

bool check_condition_c(const Complex& c, const ShellingOrder& order) {
    validate_order(c, order);
    validate_k(c, order.k);

    const std::vector<Face>& facets = c.facets();
    int r = c.facet_count();
    for (int j = 2; j <= r; ++j) {
        Face fj = facets[static_cast<std::size_t>(order.order[static_cast<std::size_t>(j - 1)])];
        for (int i = 1; i < j; ++i) {
            Face fi = facets[static_cast<std::size_t>(order.order[static_cast<std::size_t>(i - 1)])];
            bool found = false;
            for (int l = 1; l < j && !found; ++l) {
                Face fl = facets[static_cast<std::size_t>(order.order[static_cast<std::size_t>(l - 1)])];
                Face diff = fj & ~fl;
                found = face_size(diff) == order.k && face_subset(diff, fj & ~fi);
            }
            if (!found) return false;
        }
    }
    return true;
}

namespace {

struct Searcher {
    const std::vector<Face>& facets;
    int k;
    int r;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t nodes = 0;
    bool expired = false;
    std::vector<int> prefix;
    std::vector<bool> used;

    Searcher(const std::vector<Face>& f, int k_, const SearchLimits& limits)
        : facets(f), k(k_), r(static_cast<int>(f.size())), used(f.size(), false) {
        if (limits.timeout) deadline = std::chrono::steady_clock::now() + *limits.timeout;
        prefix.reserve(f.size());
    }

    bool out_of_time() {
        if (!deadline || expired) return expired;
        if (std::chrono::steady_clock::now() > *deadline) expired = true;
        return expired;
    }

    bool extend_ok(int cand) {
        Face f = facets[static_cast<std::size_t>(cand)];
        std::vector<Face> inter = intersection_subcomplex(facets, prefix, prefix.size(), f);
        return step_condition(inter, f, k) == StepCondition::none;
    }

    // Candidates tried in ascending input index, so the first full order found
    // is the lexicographically least valid permutation.
    bool dfs() {
        if (static_cast<int>(prefix.size()) == r) return true;
        for (int cand = 0; cand < r; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            ++nodes;
            if (out_of_time()) return false;
            if (!prefix.empty() && !extend_ok(cand)) continue;
            used[static_cast<std::size_t>(cand)] = true;
            prefix.push_back(cand);
            if (dfs()) return true;
            prefix.pop_back();
            used[static_cast<std::size_t>(cand)] = false;
            if (expired) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult find_k_shelling(const Complex& c, int k, const SearchLimits& limits) {
    validate_k(c, k);

    SearchResult res;
    if (c.facet_count() == 1) {
        res.status = SearchStatus::found;
        res.order = ShellingOrder{k, {0}};
        return res;
    }

    Searcher s(c.facets(), k, limits);
    bool found = s.dfs();
    res.nodes = s.nodes;
    if (found) {
        res.status = SearchStatus::found;
        res.order = ShellingOrder{k, s.prefix};
    } else if (s.expired) {
        res.status = SearchStatus::undecided;
    } else {
        res.status = SearchStatus::none;
    }
    return res;
}

SearchResult is_shellable(const Complex& c, const SearchLimits& limits) {
    return find_k_shelling(c, 1, limits);
}

}  // namespace kshell
