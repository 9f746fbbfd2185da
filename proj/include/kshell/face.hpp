#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kshell {

// A face is a set of vertex indices packed into a 64-bit mask. All set
// algebra in the search kernels is done on these masks; labels appear only
// at I/O boundaries. Universes are capped at 64 vertices.
using Face = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr Face kEmptyFace = 0;

inline int face_size(Face f) { return std::popcount(f); }

inline bool face_subset(Face a, Face b) { return (a & ~b) == 0; }

inline bool face_proper_subset(Face a, Face b) { return a != b && face_subset(a, b); }

inline Face face_of(std::initializer_list<int> indices) {
    Face f = 0;
    for (int i : indices) f |= Face{1} << i;
    return f;
}

inline Face face_bit(int index) { return Face{1} << index; }

inline bool face_contains(Face f, int index) { return (f >> index) & 1; }

// Ascending vertex indices of f.
inline std::vector<int> face_indices(Face f) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(face_size(f)));
    while (f) {
        out.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return out;
}

// Lexicographic order on the ascending index sequences, so {0,1} < {0,4} <
// {1,2} and a set precedes its proper supersets.
inline bool face_lex_less(Face a, Face b) {
    if (a == b) return false;
    Face diff = a ^ b;
    Face low = diff & (~diff + 1);
    return (a & low) != 0;
}

// Keeps the inclusion-maximal members, first occurrence wins, order preserved.
std::vector<Face> maximal_faces(const std::vector<Face>& faces);

// Keeps the inclusion-minimal members, first occurrence wins, order preserved.
std::vector<Face> minimal_faces(const std::vector<Face>& faces);

}  // namespace kshell
