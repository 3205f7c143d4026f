#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylgr/cartan_scheme.hpp"
#include "weylgr/error.hpp"
#include "weylgr/scalar.hpp"

namespace weylgr {

// A nonnegative root written in the basis (alpha_1, alpha_2): the pair
// (a, b) stands for a*alpha_1 + b*alpha_2.
struct RootVec {
    BigInt a, b;

    friend RootVec operator+(const RootVec& x, const RootVec& y) {
        return {x.a + y.a, x.b + y.b};
    }
    bool operator==(const RootVec& o) const { return a == o.a && b == o.b; }
    bool operator!=(const RootVec& o) const { return !(*this == o); }
    // Component order, for sets/maps only; the geometric order is leq_Q.
    bool operator<(const RootVec& o) const { return a != o.a ? a < o.a : b < o.b; }

    std::string to_string() const { return "(" + a.str() + "," + b.str() + ")"; }
};

// Slope order on nonnegative vectors: (a,b) <= (c,d) iff a*d <= c*b, i.e.
// comparing a/b with c/d in [0, infinity].  (0,1) is least, (1,0) greatest.
inline bool leq_Q(const RootVec& x, const RootVec& y) { return x.a * y.b <= y.a * x.b; }

using RootSeq = std::vector<RootVec>;

// Insert the mediant (a+c, b+d) into gap g (0-based, between g and g+1).
RootSeq mediant_insert(const RootSeq& rs, std::size_t gap);

// Certificate-producing recognizer for mediant sequences: sequences built
// from ((0,1), (1,1), (1,0)) by repeated mediant insertion.  A sequence is
// one iff the endpoints are right and repeatedly deleting the (leftmost)
// interior element of maximal component sum, which must equal the sum of its
// two neighbors, reaches the base.  removal_order records the deleted
// positions (indices in the then-current sequence), giving a replayable
// witness; on failure, code/detail name the first violated condition.
struct FValidity {
    bool ok = true;
    std::string code;
    std::string detail;
    std::vector<std::size_t> removal_order;

    explicit operator bool() const noexcept { return ok; }
};
FValidity validate_F(const RootSeq& rs);

// v as a sum of two members of rs, or the statement that v is simple.
// Searches pairs (i, j), i <= j, in lexicographic order and returns the
// first hit.  Errors: not-a-root if v is not a member of rs, and also if v
// is neither simple nor a sum (cannot happen for genuine root sequences).
struct SumOfTwo {
    bool simple = false;
    std::size_t i = 0, j = 0; // indices into rs, valid when !simple
};
SumOfTwo sum_of_two(const RootSeq& rs, const RootVec& v);

// The nonnegative real roots at an object: columns of all morphism matrices
// arriving there, filtered to the nonnegative quadrant and sorted by slope.
// Primitivity (gcd 1) is checked, not assumed, as is the absence of slope
// ties (comparison-tie).  Errors from the closure (non-terminating)
// propagate.
RootSeq roots_from_scheme(const CartanScheme<BigInt>& scheme, int object);

} // namespace weylgr
