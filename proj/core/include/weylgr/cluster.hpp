#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylgr/error.hpp"
#include "weylgr/mat2.hpp"
#include "weylgr/poly.hpp"
#include "weylgr/scalar.hpp"
#include "weylgr/triangulation.hpp"

namespace weylgr {

// psi sends the Pluecker coordinate P_{i,j} of Gr(2,n) to a polynomial in
// c1..c_{n-2}: the (1,1) entry of eta(c_{j-2})...eta(c_i) in 1-based paper
// indexing.  Arguments here are 0-based polygon vertices a < b; adjacent
// vertices (an empty product) give 1, and psi(P_{a,a+2}) is the variable
// c_{a+1}.  Errors: index-error.
Poly psi_poly(int a, int b, int n);

// Values on all chords of the n-gon (sides included; sides are preset to 1).
class ChordLabeling {
public:
    explicit ChordLabeling(int n);

    int n() const noexcept { return n_; }
    bool has(Chord c) const;
    const Rational& at(Chord c) const; // errors: incomplete-labeling if unset
    void set(Chord c, Rational v);     // errors: index-error on non-chords
    bool complete() const;
    std::vector<Chord> missing() const;
    std::vector<Chord> chords() const; // all chords in lex order

private:
    std::size_t index(Chord c) const;
    int n_;
    std::vector<std::optional<Rational>> values_;
};

// Thrown when completion stalls; carries the first zero-valued chord (in
// lex order) whose flips could not be taken.
class division_by_zero_error : public error {
public:
    division_by_zero_error(Chord blocking, const std::string& message)
        : error(errc::division_by_zero, message), chord(blocking) {}
    Chord chord;
};

// Propagate seed values across the flip graph by the exchange relation
// P_ac * P_bd = P_ab * P_cd + P_ad * P_bc on each flipped quadrilateral
// (a,b,c,d).  `values` must assign a value to exactly the diagonals of
// `seed`.  Zero-valued chords are never divided by: flips across them are
// skipped and other routes tried.  If some chord stays unreachable, a
// division_by_zero_error names the first blocking zero chord.  Values
// obtained along different routes are asserted to agree.
ChordLabeling ptolemy_complete(const Triangulation& seed,
                               const std::map<Chord, Rational>& values);

// c_i read off a complete labeling: the values on the length-two chords
// {i, i+2} (mod n), 0-based i = 0..n-1.
std::vector<Rational> cvalues_from_labeling(const ChordLabeling& lab);

// Given c_1..c_{n-2}, the unique c_{n-1}, c_n putting the full sequence on
// the variety eta(c_n)...eta(c_1) = -id, provided the closing constraint
// (eta(c_{n-2})...eta(c_1))_{11} = 1 holds; otherwise off-variety, with the
// residual in the message.
template <typename K>
std::vector<K> complete_sequence(const std::vector<K>& prefix) {
    Mat2<K> M = identity<K>();
    for (const auto& c : prefix)
        M = eta(c) * M;
    K one = K(1);
    if (M.a11 != one)
        throw error(errc::off_variety,
                    "closing entry is " + weylgr::to_string(M.a11) + ", residual " +
                        weylgr::to_string(K(M.a11 - one)));
    std::vector<K> full = prefix;
    full.push_back(M.a21);
    full.push_back(-M.a12);
    return full;
}

// The 2 x n matrix whose column minors realize a value sequence on the
// variety as an actual point of Gr(2,n): z_det(i, i+1) = 1,
// z_det(i, i+2) = c_{i+1} (1-based c), and the wrap-around minors pick up
// the sign -1.  Requires eta(c_n)...eta(c_1) = -id (precondition-violated).
template <typename K>
struct ZMatrix {
    std::vector<K> row1, row2; // column j of the matrix is (row1[j], row2[j])
};

// Ordered minor z_1i * z_2j - z_1j * z_2i on 0-based columns.
template <typename K>
K z_det(const ZMatrix<K>& z, int i, int j) {
    return z.row1.at(static_cast<std::size_t>(i)) * z.row2.at(static_cast<std::size_t>(j)) -
           z.row1.at(static_cast<std::size_t>(j)) * z.row2.at(static_cast<std::size_t>(i));
}

template <typename K>
ZMatrix<K> z_matrix(const std::vector<K>& c) {
    const int n = static_cast<int>(c.size());
    Mat2<K> prod = identity<K>();
    for (const auto& v : c)
        prod = eta(v) * prod;
    if (prod != -identity<K>())
        throw error(errc::precondition,
                    "values do not satisfy the eta-product identity");

    // xi^(k) = -eta(c_k)^{-1} ... eta(c_1)^{-1}, built incrementally; xibar
    // is its inverse.  eta has determinant 1, so inverses stay in K.
    std::vector<Mat2<K>> xi, xibar;
    xi.push_back(-identity<K>());
    xibar.push_back(-identity<K>());
    for (int k = 1; k < n; ++k) {
        xi.push_back(eta(c[static_cast<std::size_t>(k - 1)]).inverse() * xi.back());
        xibar.push_back(xi.back().inverse());
    }

    ZMatrix<K> z;
    z.row1.assign(static_cast<std::size_t>(n), K(0));
    z.row2.assign(static_cast<std::size_t>(n), K(0));
    auto put = [&](int col1based, K top, K bottom) {
        if (col1based >= 1 && col1based <= n) {
            z.row1[static_cast<std::size_t>(col1based - 1)] = std::move(top);
            z.row2[static_cast<std::size_t>(col1based - 1)] = std::move(bottom);
        }
    };
    for (int i = 1; i <= n; i += 4) {
        put(i, xi[static_cast<std::size_t>(i - 1)].a11, xi[static_cast<std::size_t>(i - 1)].a12);
        if (i <= n - 1)
            put(i + 1, xi[static_cast<std::size_t>(i)].a11, xi[static_cast<std::size_t>(i)].a12);
        if (i <= n - 2)
            put(i + 2, -xibar[static_cast<std::size_t>(i)].a21,
                xibar[static_cast<std::size_t>(i)].a11);
        if (i <= n - 3)
            put(i + 3, -xibar[static_cast<std::size_t>(i + 1)].a21,
                xibar[static_cast<std::size_t>(i + 1)].a11);
    }
    return z;
}

// One named identity check; detail carries the offending difference when a
// check fails (it never should; these are regression tripwires over exact
// symbolic arithmetic).
struct IdentityReport {
    std::string name;
    int n = 0;
    bool pass = true;
    std::string detail;
};

// Symbolic matrix identities behind the exchange machinery:
//  - mu-assoc: mu(f1,a,b) mu(f2,b,c) mu(f3,c,d) * f2
//              = mu(f1 f2 - a c, a b, b f2) mu(f2 f3 - b d, c f2, c d)
//  - eta-entry: (eta(x) A)_21 = A_11, (A eta(y))_12 = -A_11,
//               (eta(x) A eta(y))_22 = -A_11 for a generic 2x2 A
//  - mu-cycle(n): over generic z_11..z_2n with P_{ij} the column minors,
//      prod_{i=1..n} mu(P_{i,i+2}, P_{i,i+1}, P_{i+1,i+2})
//        = - (prod_i P_{i,i+1}) * id    (indices mod n)
std::vector<IdentityReport> verify_mu_identities(int n_cycle);

// The recurrences tying psi to the Grassmannian presentation, checked as
// polynomial identities in c1..c_{n-2}:
//  - base: psi(P_{i,i+1}) = 1 and psi(P_{i,i+2}) = c_i
//  - three-term: psi(P_{j,k+1}) = c_{k-1} psi(P_{j,k}) - psi(P_{j,k-1})
//  - product: psi(P_{i,j}) = psi(P_{i,k}) psi(P_{j,k+1})
//                            - psi(P_{j,k}) psi(P_{i,k+1})
//  - generation: psi(P_{i,j}) = psi(P_{i,i+2}) psi(P_{i+1,j}) - psi(P_{i+2,j})
std::vector<IdentityReport> verify_psi_recurrences(int n);

// Randomized two-way check of the main correspondence at one polygon size.
// Forward: for `trials` random triangulations with random nonzero rational
// diagonal values, complete by Ptolemy; either a division-by-zero is
// reported (skipped trial) or the induced c-values satisfy the eta-product
// identity, pass the finiteness check, and every chord value is reproduced
// by evaluating psi.  Converse: for every valid eta-sequence of length n,
// the psi-induced integer labeling satisfies all Pluecker relations.
struct TrialResult {
    int trial = 0;
    bool skipped = false;          // division-by-zero route
    Chord blocking{};              // valid when skipped
    bool eta_identity = false;     // checks below valid when !skipped
    bool finiteness = false;
    bool psi_match = false;
    std::vector<Rational> cvalues;

    bool ok() const { return skipped || (eta_identity && finiteness && psi_match); }
};

struct MainTheoremReport {
    int n = 0;
    int trials = 0;
    std::uint64_t rng_seed = 0;
    int value_range = 0;
    std::vector<TrialResult> results;
    std::size_t converse_sequences = 0;
    bool converse_ok = false;
    bool ok = false;
};

MainTheoremReport verify_main_theorem(int n, int trials, std::uint64_t rng_seed,
                                      int value_range = 6);

} // namespace weylgr
