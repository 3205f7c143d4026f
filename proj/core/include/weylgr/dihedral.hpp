#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "weylgr/error.hpp"

namespace weylgr {

// An element of the dihedral group acting on Z/m:
//   flip = false:  x -> shift + x   (rotation)
//   flip = true:   x -> shift - x   (reflection)
// Used both for relabelings of sequence positions (m = n) and for symmetries
// of the object change cycle (m = 2n).
struct DihedralElement {
    int m = 1;
    int shift = 0;
    bool flip = false;

    static DihedralElement rotation(int m, int shift) {
        return {m, mod(shift, m), false};
    }
    static DihedralElement reflection(int m, int shift) {
        return {m, mod(shift, m), true};
    }
    static DihedralElement id(int m) { return {m, 0, false}; }

    int apply(int x) const { return mod(flip ? shift - x : shift + x, m); }

    bool is_identity() const { return !flip && shift == 0; }

    // Function composition, right factor applied first.
    friend DihedralElement operator*(const DihedralElement& g, const DihedralElement& h) {
        if (g.m != h.m)
            throw error(errc::precondition, "composing dihedral elements of different moduli");
        DihedralElement r;
        r.m = g.m;
        r.flip = g.flip != h.flip;
        r.shift = mod(g.flip ? g.shift - h.shift : g.shift + h.shift, g.m);
        return r;
    }

    DihedralElement inverse() const {
        if (flip)
            return *this; // reflections are involutions
        return {m, mod(-shift, m), false};
    }

    bool operator==(const DihedralElement& o) const {
        return m == o.m && shift == o.shift && flip == o.flip;
    }
    // Rotations before reflections, then by shift: a deterministic order for
    // element lists and subgroup comparison.
    bool operator<(const DihedralElement& o) const {
        if (flip != o.flip)
            return !flip;
        return shift < o.shift;
    }

    std::string to_string() const {
        return (flip ? "s" : "r") + std::to_string(shift);
    }

private:
    static int mod(int x, int m) {
        int r = x % m;
        return r < 0 ? r + m : r;
    }
};

// Closure of a generating set, returned sorted.  Group orders here are at
// most 4n, so the naive worklist is fine.
inline std::vector<DihedralElement> subgroup_closure(std::vector<DihedralElement> gens,
                                                     int m) {
    std::set<DihedralElement> elems{DihedralElement::id(m)};
    for (auto& g : gens) {
        if (g.m != m)
            throw error(errc::precondition, "generator modulus mismatch");
        elems.insert(g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<DihedralElement> snapshot(elems.begin(), elems.end());
        for (const auto& a : snapshot)
            for (const auto& b : snapshot)
                if (elems.insert(a * b).second)
                    grew = true;
    }
    return {elems.begin(), elems.end()};
}

// All subgroups of a given group of dihedral elements.  Subgroups of a
// dihedral group need at most two generators, so closing every pair of
// elements (plus the trivial subgroup) finds them all.
inline std::vector<std::vector<DihedralElement>>
enumerate_subgroups(const std::vector<DihedralElement>& group, int m) {
    std::set<std::vector<DihedralElement>> out;
    out.insert({DihedralElement::id(m)});
    for (const auto& a : group) {
        out.insert(subgroup_closure({a}, m));
        for (const auto& b : group)
            out.insert(subgroup_closure({a, b}, m));
    }
    return {out.begin(), out.end()};
}

// Structural name of a subgroup of a dihedral group: cyclic groups are
// "Z<k>"; groups containing a reflection are "Z2", "Z2 x Z2" or "D<k>"
// (dihedral with k rotations, order 2k; D3 is the symmetric group S3).
inline std::string dihedral_group_name(const std::vector<DihedralElement>& elems) {
    std::size_t order = elems.size();
    std::size_t rotations = 0;
    for (const auto& e : elems)
        if (!e.flip)
            ++rotations;
    if (rotations == order)
        return order == 1 ? "1" : "Z" + std::to_string(order);
    switch (rotations) {
    case 1:  return "Z2";
    case 2:  return "Z2 x Z2";
    default: return "D" + std::to_string(rotations);
    }
}

} // namespace weylgr
