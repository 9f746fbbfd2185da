#include <doctest.h>

#include "support.hpp"

using namespace kshell;
using support::cx;
using support::fc;

namespace {

bool sigmas_pairwise_disjoint(const ShellingCertificate& cert) {
    for (const StepCertificate& s : cert.steps) {
        Face seen = 0;
        for (Face sig : s.sigmas) {
            if ((sig & seen) != 0) return false;
            seen |= sig;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("verify: path is a 1-shelling") {
    Complex c = cx("ab bc cd");
    ShellingCertificate cert = verify_k_shelling(c, {1, {0, 1, 2}});
    CHECK(cert.accepted);
    REQUIRE(cert.steps.size() == 2);
    CHECK(cert.steps[0].intersection_facets == std::vector<Face>{fc(c, "b")});
    CHECK(cert.steps[1].intersection_facets == std::vector<Face>{fc(c, "c")});
}

TEST_CASE("verify: three disjoint edges are 2-shellable in every order") {
    Complex c = cx("ae bf cg");
    for (const auto& order : support::all_orders(3)) {
        ShellingCertificate cert = verify_k_shelling(c, {2, order});
        CHECK(cert.accepted);
        for (const StepCertificate& s : cert.steps)
            CHECK(s.intersection_facets == std::vector<Face>{kEmptyFace});
    }
}

TEST_CASE("verify: the three-triangle complex is rejected at j=3, condition ii") {
    Complex c = cx("abcdef", "abc aef cdf");
    ShellingCertificate cert = verify_k_shelling(c, {2, {0, 1, 2}});
    CHECK_FALSE(cert.accepted);
    CHECK(cert.failure_j == 3);
    CHECK(cert.failure_condition == StepCondition::covering);
    REQUIRE(cert.steps.size() == 2);
    CHECK(cert.steps[1].intersection_facets == std::vector<Face>{fc(c, "c"), fc(c, "f")});
}

TEST_CASE("verify: k out of range") {
    Complex c = cx("ab bc");
    CHECK_THROWS_AS(verify_k_shelling(c, {3, {0, 1}}), DomainError);
    CHECK_THROWS_AS(verify_k_shelling(c, {0, {0, 1}}), DomainError);
    CHECK_THROWS_AS(verify_k_shelling(c, {1, {0, 0}}), InputError);
    // A single facet is fine for any k.
    Complex one = cx("ab");
    CHECK(verify_k_shelling(one, {5, {0}}).accepted);
}

TEST_CASE("minimal_new_faces: examples and oracle") {
    Complex path = cx("ab bc cd");
    CHECK(minimal_new_faces(path, {0, 1, 2}, 2) == std::vector<Face>{fc(path, "c")});
    CHECK(minimal_new_faces(path, {0, 1, 2}, 1) == std::vector<Face>{kEmptyFace});

    Complex edges = cx("ae bf cg");
    CHECK(minimal_new_faces(edges, {0, 1, 2}, 2) ==
          std::vector<Face>{fc(edges, "b"), fc(edges, "f")});

    Complex tri = cx("abcdef", "abc aef cdf");
    CHECK(minimal_new_faces(tri, {0, 1, 2}, 3) ==
          std::vector<Face>{fc(tri, "d"), fc(tri, "cf")});
}

TEST_CASE("condition (b): examples") {
    Complex edges = cx("ae bf cg");
    ConditionBResult r = check_condition_b(edges, {2, {0, 1, 2}});
    CHECK(r.ok);
    REQUIRE(r.e_sets.size() == 3);
    CHECK(r.e_sets[0].empty());
    CHECK(r.e_sets[1] == std::vector<Face>{fc(edges, "bf")});

    Complex tri = cx("abcdef", "abc aef cdf");
    ConditionBResult bad = check_condition_b(tri, {2, {0, 1, 2}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure_j == 3);  // minimal new faces of mixed cardinality

    // k=1: the E-sets are the singleton restriction faces.
    Complex path = cx("ab bc cd");
    ConditionBResult k1 = check_condition_b(path, {1, {0, 1, 2}});
    CHECK(k1.ok);
    CHECK(k1.e_sets[1] == std::vector<Face>{fc(path, "c")});
    CHECK(k1.e_sets[2] == std::vector<Face>{fc(path, "d")});
}

TEST_CASE("condition (c): examples") {
    CHECK(check_condition_c(cx("ab bc cd"), {1, {0, 1, 2}}));
    Complex tri = cx("abcdef", "abc aef cdf");
    CHECK(check_condition_c(tri, {2, {0, 1, 2}}));  // holds although the order is rejected
    CHECK_FALSE(check_condition_c(cx("abc ade"), {1, {0, 1}}));
}

TEST_CASE("search: spec examples") {
    SearchResult cone = find_k_shelling(cx("abc acd bcd"), 1);
    REQUIRE(cone.status == SearchStatus::found);
    CHECK(cone.order->order == std::vector<int>{0, 1, 2});

    SearchResult strip = find_k_shelling(cx("abe bcf cdg"), 2);
    CHECK(strip.status == SearchStatus::found);

    SearchResult none = find_k_shelling(cx("abcdef", "abc aef cdf"), 2);
    CHECK(none.status == SearchStatus::none);

    SearchResult single = is_shellable(cx("abc"));
    REQUIRE(single.status == SearchStatus::found);
    CHECK(single.order->order == std::vector<int>{0});
}

TEST_CASE("search: deterministic lexicographically least witness") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        Complex c = support::random_complex(rng, 5, 4);
        SearchResult res = is_shellable(c);
        if (res.status != SearchStatus::found) continue;
        // Exhaustively confirm no lexicographically smaller valid order.
        for (const auto& order : support::all_orders(c.facet_count())) {
            if (order >= res.order->order) break;
            CHECK_FALSE(verify_k_shelling(c, {1, order}).accepted);
        }
    }
}

TEST_CASE("search: timeout yields undecided") {
    SearchLimits limits;
    limits.timeout = std::chrono::milliseconds(0);
    SearchResult res = find_k_shelling(cx("abcdef", "abc aef cdf"), 2, limits);
    CHECK(res.status == SearchStatus::undecided);
}

TEST_CASE("sweep: acceptance agrees with the brute-force oracle") {
    for (const auto& facets : support::all_antichains(4, 3)) {
        Complex c(support::letters(4), facets);
        int r = c.facet_count();
        int dmax = c.dimension() + 1;
        for (const auto& order : support::all_orders(r)) {
            for (int k = 1; k <= (r == 1 ? 1 : dmax); ++k) {
                ShellingCertificate cert = verify_k_shelling(c, {k, order});
                CHECK(cert.accepted == support::oracle_is_k_shelling(facets, order, k));
            }
        }
    }
}

TEST_CASE("sweep: k=1 coincides with the classic shellability test") {
    for (const auto& facets : support::all_antichains(4, 4)) {
        Complex c(support::letters(4), facets);
        for (const auto& order : support::all_orders(c.facet_count())) {
            bool ours = verify_k_shelling(c, {1, order}).accepted;
            CHECK(ours == support::oracle_is_classic_shelling(facets, order));
        }
    }
}

// Relations between the acceptance test (a), the restriction-set criterion
// (b) and the exchange criterion (c), under the literal reading of the
// covering condition:
//   (b) => (a) and (a) => (c) always;
//   (a) => (b) exactly when the step complements are pairwise disjoint.
TEST_CASE("sweep: criteria implications") {
    for (const auto& facets : support::all_antichains(4, 3)) {
        Complex c(support::letters(4), facets);
        int r = c.facet_count();
        int dmax = c.dimension() + 1;
        for (const auto& order : support::all_orders(r)) {
            for (int k = 1; k <= (r == 1 ? 1 : dmax); ++k) {
                ShellingOrder so{k, order};
                ShellingCertificate cert = verify_k_shelling(c, so);
                ConditionBResult b = check_condition_b(c, so);
                if (b.ok) CHECK(cert.accepted);
                if (cert.accepted) CHECK(check_condition_c(c, so));
                if (cert.accepted && sigmas_pairwise_disjoint(cert)) CHECK(b.ok);
                if (cert.accepted && !b.ok) CHECK_FALSE(sigmas_pairwise_disjoint(cert));
            }
        }
    }
}

// Witness that acceptance does not imply the restriction-set criterion when
// two step complements overlap: the order passes the literal covering test
// (the two intersection facets meet, so no disjoint pair exists) but the new
// minimal faces have mixed cardinalities.
TEST_CASE("boundary: accepted order without restriction sets") {
    Complex c = cx("abcdef", "abe acf abcd");
    ShellingOrder order{2, {0, 1, 2}};
    ShellingCertificate cert = verify_k_shelling(c, order);
    CHECK(cert.accepted);
    CHECK_FALSE(sigmas_pairwise_disjoint(cert));
    CHECK_FALSE(check_condition_b(c, order).ok);
    CHECK(check_condition_c(c, order));

    // The same complex shows that links of such orders need not inherit
    // k-shellability: the link of {a} has no 2-shelling at all.
    Complex lk = link(c, fc(c, "a"));
    CHECK(support::facet_labels(lk) == std::set<std::string>{"be", "cf", "bcd"});
    CHECK(find_k_shelling(lk, 2).status == SearchStatus::none);
}

// For expansions the situation is clean: every accepted order of an expanded
// complex has pairwise disjoint step complements, links inherit the property
// with the induced order, and joins accept the product order.
TEST_CASE("sweep: expansion orders have disjoint complements; links and joins close") {
    std::mt19937_64 rng(20260811);
    int joins = 0;
    std::optional<std::pair<Complex, ShellingOrder>> previous;
    for (int trial = 0; trial < 25; ++trial) {
        Complex base = support::random_complex(rng, 4, 3);
        if (is_shellable(base).status != SearchStatus::found) continue;
        Complex c2 = expand_complex(base, ExpansionVector::uniform(2, base.universe().size()));
        SearchResult found = find_k_shelling(c2, 2);
        REQUIRE(found.status == SearchStatus::found);
        ShellingCertificate cert = verify_k_shelling(c2, *found.order);
        CHECK(cert.accepted);
        CHECK(sigmas_pairwise_disjoint(cert));

        for (Face sigma : all_faces(c2)) {
            Complex lk = link(c2, sigma);
            if (lk.is_void()) continue;
            ShellingOrder induced = support::induced_link_order(c2, *found.order, sigma, lk);
            CHECK(verify_k_shelling(lk, induced).accepted);
        }

        if (previous && joins < 8) {
            // Relabel to keep the universes disjoint, then join.
            std::vector<std::string> fresh;
            for (const auto& l : c2.universe().labels()) fresh.push_back(l + "'");
            Complex rhs(Universe(fresh), c2.facets());
            Complex j = join(previous->first, rhs);
            ShellingOrder po = support::product_order(previous->second, *found.order,
                                                      rhs.facet_count());
            CHECK(verify_k_shelling(j, po).accepted);
            ++joins;
        }
        previous = {c2, *found.order};
    }
    CHECK(joins > 0);
}
