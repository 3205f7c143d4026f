#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weylgr/dihedral.hpp"
#include "weylgr/error.hpp"
#include "weylgr/mat2.hpp"
#include "weylgr/scalar.hpp"

namespace weylgr {

// A cyclic sequence (c_1, ..., c_n) of positive integers with
//
//   (1) every entry >= 1,
//   (2) eta(c_1) * eta(c_2) * ... * eta(c_n) = -identity,
//   (3) each proper partial product eta(c_1)...eta(c_i), i < n, has a
//       nonnegative first column.
//
// These sequences classify the finite rank-two setting and biject with
// triangulations of the convex n-gon via vertex degrees (c_i = number of
// triangles at vertex i); see triangulation.hpp.  Instances are validated on
// construction, so holding an EtaSequence is holding the certificate.
class EtaSequence {
public:
    // First failing condition in the documented order: "length",
    // "positivity", "eta-product", "partial-positivity".
    static ValidityReport validate(const std::vector<BigInt>& entries);

    static EtaSequence checked(std::vector<BigInt> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<BigInt>& entries() const noexcept { return entries_; }
    const BigInt& at(std::size_t i) const { return entries_.at(i); }

    // Entry at any integer position, reduced cyclically.
    const BigInt& cyclic(long i) const {
        long n = static_cast<long>(entries_.size());
        long r = i % n;
        return entries_[static_cast<std::size_t>(r < 0 ? r + n : r)];
    }

    bool operator==(const EtaSequence& o) const { return entries_ == o.entries_; }
    bool operator<(const EtaSequence& o) const { return entries_ < o.entries_; }

private:
    explicit EtaSequence(std::vector<BigInt> e) : entries_(std::move(e)) {}
    std::vector<BigInt> entries_;
};

// Insert a 1 into gap g (0-based, between positions g and g+1 mod n) and bump
// both neighbors: expand((1,1,1), 0) = (2,1,2,1).  Inverse of contract.
EtaSequence expand(const EtaSequence& seq, std::size_t gap);

// Remove the entry at pos (which must equal 1, n >= 4) and decrement both
// cyclic neighbors.  Errors: invalid-position, not-contractible.
EtaSequence contract(const EtaSequence& seq, std::size_t pos);

// A certificate that a sequence reduces to (1,1,1): contract positions to
// apply in order.  Deterministic (always the leftmost 1).
struct ReduceStep {
    std::size_t position;
};
std::vector<ReduceStep> reduce_to_base(const EtaSequence& seq);

// Lexicographically least among the 2n rotations/reflections of the entry
// vector; constant on dihedral orbits.
EtaSequence canonical_form(const EtaSequence& seq);

// All valid sequences of length n, sorted lexicographically; with
// canonical_only, one representative (the canonical form) per dihedral
// orbit.  Generated through the triangulation bijection and re-validated.
std::vector<EtaSequence> enumerate_eta_sequences(int n, bool canonical_only = false);

// (primitive block d, repetition count r) with n = r * |d|.
std::pair<std::vector<BigInt>, int> period(const EtaSequence& seq);

// Type 1 sequences admit a reflection symmetry compatible with the object
// change cycle: some axis s (even when n is even) with c_{s-p} = c_p for all
// p mod n.  Type 2 sequences have rotational symmetry only.
enum class SymmetryType { type1 = 1, type2 = 2 };
SymmetryType symmetry_type(const EtaSequence& seq);

} // namespace weylgr
