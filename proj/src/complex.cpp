#include "kshell/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace kshell {

std::vector<Face> maximal_faces(const std::vector<Face>& faces) {
    std::vector<Face> out;
    for (Face f : faces) {
        bool dominated = false;
        for (Face g : faces) {
            if (g != f && face_subset(f, g)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

std::vector<Face> minimal_faces(const std::vector<Face>& faces) {
    std::vector<Face> out;
    for (Face f : faces) {
        bool dominated = false;
        for (Face g : faces) {
            if (g != f && face_subset(g, f)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > static_cast<std::size_t>(kMaxVertices))
        throw InputError("universe has " + std::to_string(labels_.size()) +
                         " vertices; at most " + std::to_string(kMaxVertices) + " supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw InputError("empty vertex label");
        auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!fresh) throw InputError("duplicate vertex label '" + labels_[i] + "'");
    }
}

std::optional<int> Universe::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Universe::index_of(const std::string& label) const {
    auto idx = find(label);
    if (!idx) throw InputError("unknown vertex '" + label + "'");
    return *idx;
}

Face Universe::full_mask() const {
    return size() == kMaxVertices ? ~Face{0} : (Face{1} << size()) - 1;
}

Complex::Complex(Universe universe, std::vector<Face> facets)
    : universe_(std::move(universe)), facets_(std::move(facets)) {
    Face full = universe_.full_mask();
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (!face_subset(facets_[i], full))
            throw InputError("facet exceeds the universe");
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            if (i != j && face_subset(facets_[i], facets_[j]))
                throw InputError("facet list is not an antichain");
        }
    }
}

Complex Complex::normalize(Universe universe, const std::vector<Face>& raw_faces) {
    return Complex(std::move(universe), maximal_faces(raw_faces));
}

Complex Complex::normalize_labels(std::vector<std::string> universe_labels,
                                  const std::vector<std::vector<std::string>>& raw_faces) {
    Universe u(std::move(universe_labels));
    std::vector<Face> faces;
    faces.reserve(raw_faces.size());
    for (const auto& labels : raw_faces) {
        Face f = 0;
        for (const auto& l : labels) f |= face_bit(u.index_of(l));
        faces.push_back(f);
    }
    return normalize(std::move(u), faces);
}

int Complex::dimension() const {
    if (is_void()) throw DomainError("dimension of the void complex is undefined");
    int best = -1;
    for (Face f : facets_) best = std::max(best, face_size(f) - 1);
    return best;
}

bool Complex::is_pure() const {
    if (is_void()) throw DomainError("purity of the void complex is undefined");
    int d = face_size(facets_.front());
    for (Face f : facets_)
        if (face_size(f) != d) return false;
    return true;
}

bool Complex::contains_face(Face f) const {
    for (Face g : facets_)
        if (face_subset(f, g)) return true;
    return false;
}

Face Complex::face_from_labels(const std::vector<std::string>& labels) const {
    Face f = 0;
    for (const auto& l : labels) f |= face_bit(universe_.index_of(l));
    return f;
}

std::vector<std::string> Complex::labels_of(Face f) const {
    std::vector<std::string> out;
    for (int i : face_indices(f)) out.push_back(universe_.label(i));
    return out;
}

Complex link(const Complex& c, Face f) {
    if (!c.contains_face(f)) throw DomainError("link of a non-face");
    // New universe: old labels minus f, with a dense re-index.
    std::vector<std::string> labels;
    std::vector<int> new_index(static_cast<std::size_t>(c.universe().size()), -1);
    for (int i = 0; i < c.universe().size(); ++i) {
        if (face_contains(f, i)) continue;
        new_index[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
        labels.push_back(c.universe().label(i));
    }
    std::vector<Face> raw;
    for (Face g : c.facets()) {
        if (!face_subset(f, g)) continue;
        Face rest = g & ~f;
        Face remapped = 0;
        for (int i : face_indices(rest)) remapped |= face_bit(new_index[static_cast<std::size_t>(i)]);
        raw.push_back(remapped);
    }
    return Complex::normalize(Universe(std::move(labels)), raw);
}

Complex deletion(const Complex& c, Face f) {
    std::vector<Face> raw;
    for (Face g : c.facets()) {
        if (!face_subset(f, g)) {
            raw.push_back(g);
        } else {
            // Maximal subsets of g avoiding f: drop one vertex of f each.
            for (int i : face_indices(f)) raw.push_back(g & ~face_bit(i));
        }
    }
    // Deleting the empty face removes every face: the void complex.
    if (f == kEmptyFace) raw.clear();
    return Complex::normalize(c.universe(), raw);
}

Complex join(const Complex& a, const Complex& b) {
    std::vector<std::string> labels = a.universe().labels();
    for (const auto& l : b.universe().labels()) {
        if (a.universe().find(l))
            throw DomainError("join requires disjoint universes; '" + l + "' occurs in both");
        labels.push_back(l);
    }
    int offset = a.universe().size();
    std::vector<Face> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (Face fa : a.facets())
        for (Face fb : b.facets()) facets.push_back(fa | (fb << offset));
    return Complex(Universe(std::move(labels)), std::move(facets));
}

Complex intersect_complexes(const Complex& a, const Complex& b) {
    if (!(a.universe() == b.universe()))
        throw DomainError("complex intersection requires a common universe");
    std::vector<Face> raw;
    for (Face fa : a.facets())
        for (Face fb : b.facets()) raw.push_back(fa & fb);
    return Complex::normalize(a.universe(), raw);
}

std::vector<Face> all_faces(const Complex& c) {
    std::unordered_set<Face> seen;
    for (Face m : c.facets()) {
        Face s = m;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & m;
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t face_count(const Complex& c) {
    return all_faces(c).size();
}

}  // namespace kshell
