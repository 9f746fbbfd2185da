#include <doctest.h>

#include "support.hpp"

using namespace kshell;
using support::cx;
using support::fc;

TEST_CASE("normalize drops non-maximal faces, keeps input order") {
    Complex c = Complex::normalize_labels({"a", "b", "c"}, {{"a", "b"}, {"a"}, {"b", "c"}});
    REQUIRE(c.facet_count() == 2);
    CHECK(c.facets()[0] == fc(c, "ab"));
    CHECK(c.facets()[1] == fc(c, "bc"));
}

TEST_CASE("normalize keeps the empty-face complex distinct from the void complex") {
    Complex just_empty = Complex::normalize_labels({"a"}, {{}});
    REQUIRE(just_empty.facet_count() == 1);
    CHECK(just_empty.facets()[0] == kEmptyFace);
    CHECK_FALSE(just_empty.is_void());

    Complex none = Complex::normalize_labels({"a"}, {});
    CHECK(none.is_void());
}

TEST_CASE("normalize keeps an antichain unchanged") {
    Complex c = cx("abcdef", "abc aef cdf");
    REQUIRE(c.facet_count() == 3);
    CHECK(c.facets()[0] == fc(c, "abc"));
    CHECK(c.facets()[1] == fc(c, "aef"));
    CHECK(c.facets()[2] == fc(c, "cdf"));
}

TEST_CASE("unknown labels are input errors") {
    CHECK_THROWS_AS(Complex::normalize_labels({"a", "b"}, {{"a", "q"}}), InputError);
    CHECK_THROWS_AS(Universe({"a", "a"}), InputError);
}

TEST_CASE("dimension and purity") {
    CHECK(cx("ab bc cd").dimension() == 1);
    CHECK(cx("ab bc cd").is_pure());

    Complex just_empty = Complex::normalize_labels({"a"}, {{}});
    CHECK(just_empty.dimension() == -1);
    CHECK(just_empty.is_pure());

    Complex mixed = cx("abc de");
    CHECK(mixed.dimension() == 2);
    CHECK_FALSE(mixed.is_pure());

    Complex none = Complex::normalize_labels({"a"}, {});
    CHECK_THROWS_AS(none.dimension(), DomainError);
}

TEST_CASE("link: examples and oracle") {
    Complex c = cx("abcdef", "abc aef cdf");
    Complex lk = link(c, fc(c, "a"));
    CHECK(support::facet_labels(lk) == std::set<std::string>{"bc", "ef"});
    // Oracle agreement (compare as label sets; the library re-indexes).
    std::set<std::string> oracle;
    for (Face f : support::oracle_link_facets(c, fc(c, "a"))) {
        std::string s;
        for (const auto& l : c.labels_of(f)) s += l;
        oracle.insert(s);
    }
    CHECK(support::facet_labels(lk) == oracle);

    CHECK(link(c, kEmptyFace) == c);

    Complex path = cx("ab bc");
    CHECK(support::facet_labels(link(path, fc(path, "b"))) == std::set<std::string>{"a", "c"});

    CHECK_THROWS_AS(link(path, fc(path, "ac")), DomainError);
}

TEST_CASE("deletion: examples and oracle") {
    Complex path = cx("ab bc");
    CHECK(support::facet_labels(deletion(path, fc(path, "b"))) == std::set<std::string>{"a", "c"});

    CHECK(deletion(path, kEmptyFace).is_void());

    Complex c = cx("abcdef", "abc aef cdf");
    Complex d = deletion(c, fc(c, "d"));
    CHECK(support::facet_labels(d) == std::set<std::string>{"abc", "aef", "cf"});

    std::set<std::string> oracle;
    for (Face f : support::oracle_deletion_facets(c, fc(c, "d"))) {
        std::string s;
        for (const auto& l : c.labels_of(f)) s += l;
        oracle.insert(s);
    }
    CHECK(support::facet_labels(d) == oracle);
}

TEST_CASE("join: examples") {
    Complex a = cx("a", "a");
    Complex bc = Complex::normalize_labels({"b", "c"}, {{"b"}, {"c"}});
    Complex j = join(a, bc);
    CHECK(support::facet_labels(j) == std::set<std::string>{"ab", "ac"});

    Complex ab = cx("ab");
    Complex cd = cx("cd");
    CHECK(support::facet_labels(join(ab, cd)) == std::set<std::string>{"abcd"});

    // Join with the empty-face complex on an empty universe is the identity.
    Complex point = Complex::normalize_labels({}, {{}});
    CHECK(join(ab, point) == ab);

    CHECK_THROWS_AS(join(ab, cx("bc")), DomainError);
}

TEST_CASE("contains_face") {
    Complex c = cx("abc");
    CHECK(c.contains_face(fc(c, "ac")));
    CHECK_THROWS_AS(fc(c, "d"), InputError);  // outside the universe
    Complex path = cx("ab bc");
    CHECK_FALSE(path.contains_face(fc(path, "ac")));
}

TEST_CASE("property: join face count multiplies, antichain preserved") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        Complex a = support::random_complex(rng, 4, 3);
        Complex b = support::random_complex(rng, 3, 3);
        // Relabel b's universe to keep it disjoint from a's.
        std::vector<std::string> relabeled;
        for (const auto& l : b.universe().labels()) relabeled.push_back(l + "'");
        Complex b2(Universe(relabeled), b.facets());
        Complex j = join(a, b2);
        CHECK(face_count(j) == face_count(a) * face_count(b2));
        CHECK_NOTHROW(Complex(j.universe(), j.facets()));  // antichain re-validated
    }
}

TEST_CASE("property: link and deletion produce faces of the input") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Complex c = support::random_complex(rng, 5, 4);
        std::vector<Face> faces = all_faces(c);
        Face probe = faces[rng() % faces.size()];
        Complex lk = link(c, probe);
        for (Face f : lk.facets()) {
            // Map back to the original universe by labels.
            CHECK(c.contains_face(c.face_from_labels(lk.labels_of(f))));
        }
        Complex dl = deletion(c, probe);
        for (Face f : dl.facets()) CHECK(c.contains_face(f));
    }
}

TEST_CASE("property: dim(link) <= dim - |F|, equality inside a maximum facet") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Complex c = support::random_complex(rng, 5, 4);
        int dim = c.dimension();
        // Pick a face inside a maximum facet.
        Face maxf = 0;
        for (Face f : c.facets())
            if (face_size(f) > face_size(maxf)) maxf = f;
        std::vector<int> verts = face_indices(maxf);
        Face probe = 0;
        for (int v : verts)
            if (rng() & 1) probe |= face_bit(v);
        Complex lk = link(c, probe);
        if (!lk.is_void()) {
            CHECK(lk.dimension() <= dim - face_size(probe));
            CHECK(lk.dimension() == dim - face_size(probe));  // probe lies in a maximum facet
        }
    }
}
