#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kshell/error.hpp"
#include "kshell/face.hpp"

namespace kshell {

// Ordered list of vertex labels with a dense index [0, n). Labels must be
// unique; the index order is the canonical variable order everywhere.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(const std::string& label) const;
    int index_of(const std::string& label) const;  // throws InputError if unknown

    Face full_mask() const;
    bool operator==(const Universe& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

// Simplicial complex given by its facets. Invariants: facets form an
// antichain under inclusion, every facet fits the universe, and the facet
// list order is preserved from input (shelling orders are permutations of
// these positions). The void complex (no facets) and the complex whose only
// facet is the empty face are distinct legal values.
//
// Dimension convention: dim(empty face) = -1.
class Complex {
public:
    // Requires `facets` to already be an antichain; throws InputError otherwise.
    Complex(Universe universe, std::vector<Face> facets);

    // Drops duplicates and non-maximal members of `raw_faces`, preserving the
    // input order of the survivors.
    static Complex normalize(Universe universe, const std::vector<Face>& raw_faces);
    static Complex normalize_labels(std::vector<std::string> universe_labels,
                                    const std::vector<std::vector<std::string>>& raw_faces);

    const Universe& universe() const { return universe_; }
    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool is_void() const { return facets_.empty(); }
    int dimension() const;  // throws DomainError on the void complex
    bool is_pure() const;   // throws DomainError on the void complex

    bool contains_face(Face f) const;

    Face full_mask() const { return universe_.full_mask(); }
    Face face_from_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Face f) const;

    bool operator==(const Complex& other) const {
        return universe_ == other.universe_ && facets_ == other.facets_;
    }

private:
    Universe universe_;
    std::vector<Face> facets_;
};

// lk(F) = { G : G∩F = ∅, G∪F ∈ C }, presented by facets over C's universe
// minus F. Throws DomainError if F is not a face of C.
Complex link(const Complex& c, Face f);

// dl(F) = { G ∈ C : F ⊄ G }, over the unchanged universe.
Complex deletion(const Complex& c, Face f);

// Join of complexes on disjoint label sets: facets are all unions, first
// factor major. Throws DomainError if the label sets overlap.
Complex join(const Complex& a, const Complex& b);

// Intersection of two complexes over the same universe: facets are the
// maximal pairwise facet intersections.
Complex intersect_complexes(const Complex& a, const Complex& b);

// Every face of c including the empty face, in ascending mask order.
// Enumerates facet power sets; intended for desk-scale universes.
std::vector<Face> all_faces(const Complex& c);

// Number of faces of c (including the empty face unless c is void).
std::size_t face_count(const Complex& c);

}  // namespace kshell
