#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "kshell/complex.hpp"

namespace kshell {

// A candidate k-shelling: a permutation of the facet positions of a Complex
// together with the codimension parameter k >= 1.
struct ShellingOrder {
    int k = 1;
    std::vector<int> order;  // bijection on {0..r-1}, values are input facet indices
};

// Which acceptance condition a step failed.
enum class StepCondition {
    none,
    dimension,  // some facet of the intersection subcomplex has size != |F_j| - k
    covering,   // two disjoint intersection facets fail to cover F_j
};

// Witness data for one step j >= 2 of an order: the facets of
// D_j = <F_j> ∩ <F_1..F_{j-1}>, the complements sigma = F_j \ facet (each of
// size k when the step is accepted), and, when available, the restriction
// sets E_1..E_t whose box product generates the new minimal faces.
struct StepCertificate {
    int j = 0;  // 1-based step index, >= 2
    std::vector<Face> intersection_facets;
    std::vector<Face> sigmas;
    std::optional<std::vector<Face>> restriction_sets;
};

struct ShellingCertificate {
    int k = 1;
    std::vector<int> order;
    std::vector<StepCertificate> steps;  // one per j = 2..r, stops after a failure
    bool accepted = false;
    int failure_j = 0;  // first failing step when rejected
    StepCondition failure_condition = StepCondition::none;
};

// Checks the order against the definition of a k-shelling: for each j >= 2
// every facet of D_j must have size |F_j| - k, and whenever D_j has two or
// more facets, every two *disjoint* facets of D_j must cover F_j. Single
// facet complexes are accepted for every k; otherwise k must lie in
// [1, dim+1] (DomainError).
ShellingCertificate verify_k_shelling(const Complex& c, const ShellingOrder& order);

// Inclusion-minimal faces of <F_1..F_j> that are not faces of <F_1..F_{j-1}>
// (1-based j; for j = 1 this is {empty face}).
std::vector<Face> minimal_new_faces(const Complex& c, const std::vector<int>& order, int j);

struct ConditionBResult {
    bool ok = false;
    int failure_j = 0;                        // first failing step when !ok
    std::vector<std::vector<Face>> e_sets;    // per step j = 1..r, the witness E_1..E_t
};

// Restriction-set criterion: at every step the minimal new faces must be the
// full box product of pairwise disjoint k-sets E_1..E_t. Witnesses are
// reconstructed from the lex-least minimal face and then verified exactly.
ConditionBResult check_condition_b(const Complex& c, const ShellingOrder& order);

// Exchange criterion: for all i < j there are k vertices of F_j \ F_i that
// arise exactly as F_j \ F_l for some l < j. Necessary for acceptance by
// verify_k_shelling, not sufficient.
bool check_condition_c(const Complex& c, const ShellingOrder& order);

enum class SearchStatus { found, none, undecided };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<ShellingOrder> order;  // set iff status == found
    std::uint64_t nodes = 0;             // prefix extensions examined
};

struct SearchLimits {
    std::optional<std::chrono::milliseconds> timeout;
    bool deterministic = true;  // reserved; the search is always run in index order
};

// Backtracking over facet permutations; a prefix is extended only when the
// incremental step check passes, so pruning is exact and the first complete
// order found is the lexicographically least valid permutation.
// Returns `undecided` when the timeout expires first.
SearchResult find_k_shelling(const Complex& c, int k, const SearchLimits& limits = {});

// find_k_shelling with k = 1 (classic shellability).
SearchResult is_shellable(const Complex& c, const SearchLimits& limits = {});

}  // namespace kshell
