#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "weylgr/error.hpp"
#include "weylgr/eta_sequence.hpp"
#include "weylgr/scalar.hpp"

namespace weylgr {

// Vertices are 0-based internally, everywhere in the library; the JSON/CLI
// boundary (json_io) renders them 1-based.  A chord is an unordered pair,
// stored with a < b; polygon sides and diagonals are both chords.
struct Chord {
    int a = 0, b = 0;

    static Chord sorted(int x, int y) { return x < y ? Chord{x, y} : Chord{y, x}; }

    bool operator==(const Chord& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Chord& o) const { return !(*this == o); }
    bool operator<(const Chord& o) const { return a != o.a ? a < o.a : b < o.b; }

    std::string to_string() const {
        return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; // 0-based
    }
};

// Whether {a,b} is a diagonal of the n-gon: distinct non-adjacent vertices.
bool is_diagonal(int n, Chord c);

// Two diagonals cross iff their endpoints interleave around the polygon;
// sharing an endpoint does not count.
bool chords_cross(Chord c, Chord d);

// A triangulation of the convex n-gon: exactly n-3 pairwise non-crossing
// diagonals (maximality is forced by the count).  Validated on construction.
class Triangulation {
public:
    static ValidityReport validate(int n, const std::vector<Chord>& diagonals);
    static Triangulation checked(int n, std::vector<Chord> diagonals);

    // Diagonals {apex, k} for all non-adjacent k.
    static Triangulation fan(int n, int apex = 0);

    int n() const noexcept { return n_; }
    const std::vector<Chord>& diagonals() const noexcept { return diagonals_; }
    bool has_diagonal(Chord c) const;

    // The n-2 triangular faces, each as an increasing vertex triple.  In a
    // triangulation a vertex triple bounds a face iff all three connecting
    // chords (sides or diagonals) are present.
    std::vector<std::array<int, 3>> triangles() const;

    // Number of triangles incident to each vertex; this is the degree
    // sequence realizing the bijection with eta-sequences.
    std::vector<int> vertex_degrees() const;

    bool operator==(const Triangulation& o) const {
        return n_ == o.n_ && diagonals_ == o.diagonals_;
    }
    bool operator<(const Triangulation& o) const {
        return n_ != o.n_ ? n_ < o.n_ : diagonals_ < o.diagonals_;
    }

private:
    Triangulation(int n, std::vector<Chord> d) : n_(n), diagonals_(std::move(d)) {}
    int n_ = 3;
    std::vector<Chord> diagonals_; // sorted
};

// All triangulations of the n-gon, sorted by diagonal list; the count is the
// Catalan number C_{n-2}.
std::vector<Triangulation> enumerate_triangulations(int n);

// Diagonal flip: d together with its two incident triangles spans a
// quadrilateral; the flip replaces d by the other diagonal of that quad.
struct FlipQuad {
    Chord removed;
    Chord added;
    std::array<int, 4> quad; // cyclic order; removed = {quad[0], quad[2]},
                             // added = {quad[1], quad[3]}
};
FlipQuad flip_quad(const Triangulation& t, Chord d); // errors: not-a-diagonal
Triangulation flip(const Triangulation& t, Chord d);

// Degree-sequence side of the bijection: valid eta-sequence entries in, the
// unique triangulation with those vertex degrees out (and back).
std::vector<BigInt> psi_inverse(const Triangulation& t);
Triangulation psi(const EtaSequence& seq);

// Orbit representative under the dihedral relabelings of the polygon,
// chosen so that canonicalization commutes with the bijection:
// canonical(t) = psi(canonical_form(psi_inverse(t))).
Triangulation canonical_triangulation(const Triangulation& t);

// Flip graph on all triangulations of the n-gon; nodes index into `nodes`,
// edges are flip moves (each listed once, i < j).
struct FlipGraph {
    std::vector<Triangulation> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};
FlipGraph flip_graph(int n);

} // namespace weylgr
