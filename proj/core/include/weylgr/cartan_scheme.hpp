#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylgr/dihedral.hpp"
#include "weylgr/error.hpp"
#include "weylgr/eta_sequence.hpp"
#include "weylgr/mat2.hpp"
#include "weylgr/scalar.hpp"

namespace weylgr {

// A rank-two Cartan scheme: objects carrying Cartan matrices
// ((2, c12), (c21, 2)) and two involutions rho_1, rho_2 on objects.  K is
// BigInt for schemes of eta-sequences and Rational for the rational
// (reflection groupoid) examples.
//
// Conventions.  Objects are 0-based.  Schemes built from a length-n value
// sequence have 2n objects arranged in a cycle: the edge joining objects
// p and p+1 (mod 2n) is labeled with generator 2 when p is even and 1 when
// p is odd, and carries the value c_{p mod n}.  The Cartan entry c^a_{i,j}
// at an object is minus the value on its incident edge labeled i.  n is
// remembered on the scheme (quotients inherit it) because the finiteness
// identity is a statement about words of exactly that length.
template <typename K>
struct CartanScheme {
    struct Object {
        Mat2<K> cartan;
        std::array<int, 2> rho;   // rho[0], rho[1]: targets under rho_1, rho_2
        std::vector<int> members; // original cycle vertices; singleton on base schemes
    };

    int n = 0;
    std::vector<Object> objects;

    int size() const { return static_cast<int>(objects.size()); }

    int rho(int gen, int obj) const {
        return objects.at(static_cast<std::size_t>(obj)).rho.at(static_cast<std::size_t>(gen - 1));
    }
    const K& c12(int obj) const { return objects.at(static_cast<std::size_t>(obj)).cartan.a12; }
    const K& c21(int obj) const { return objects.at(static_cast<std::size_t>(obj)).cartan.a21; }
};

// sigma_i^a, the morphism a -> rho_i(a), as its action on root coordinates:
//   sigma_1^a = ((-1, -c12), (0, 1)) = eta(-c12) * tau
//   sigma_2^a = ((1, 0), (-c21, -1)) = tau * eta(-c21)
template <typename K>
Mat2<K> sigma_matrix(const CartanScheme<K>& s, int gen, int obj) {
    K zero = scalar_zero(s.c12(obj)), one = scalar_one(s.c12(obj));
    if (gen == 1)
        return {-one, -s.c12(obj), zero, one};
    if (gen == 2)
        return {one, zero, -s.c21(obj), -one};
    throw error(errc::precondition, "generator must be 1 or 2");
}

// The 2n-cycle scheme over an arbitrary value sequence.  Purely formal: no
// finiteness or positivity is implied (variety points may even carry zero
// coordinates); run check_axioms / check_finiteness on the result.
template <typename K>
CartanScheme<K> scheme_from_cvalues(const std::vector<K>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 3)
        throw error(errc::invalid_scheme,
                    "need at least 3 values, got " + std::to_string(n));

    CartanScheme<K> s;
    s.n = n;
    const int m = 2 * n;
    s.objects.resize(static_cast<std::size_t>(m));
    auto value = [&](int edge) -> const K& {
        return c[static_cast<std::size_t>(((edge % n) + n) % n)];
    };
    K two = scalar_one(c[0]) + scalar_one(c[0]);
    for (int v = 0; v < m; ++v) {
        auto& obj = s.objects[static_cast<std::size_t>(v)];
        int prev = (v + m - 1) % m, next = (v + 1) % m;
        // Even vertices see their generator-2 edge ahead (edge v) and their
        // generator-1 edge behind (edge v-1); odd vertices the reverse.
        K ahead = -value(v), behind = -value(v - 1);
        if (v % 2 == 0) {
            obj.cartan = {two, behind, ahead, two};
            obj.rho = {prev, next};
        } else {
            obj.cartan = {two, ahead, behind, two};
            obj.rho = {next, prev};
        }
        obj.members = {v};
    }
    return s;
}

CartanScheme<BigInt> scheme_from_eta(const EtaSequence& seq);

namespace detail {

// Shape of the object change diagram (edges a -- rho_i(a), loops dropped):
// connected and either a single cycle or a chain.
template <typename K>
ValidityReport diagram_shape(const CartanScheme<K>& s, bool& is_cycle) {
    const int m = s.size();
    int loops = 0;
    for (int a = 0; a < m; ++a)
        loops += (s.rho(1, a) == a) + (s.rho(2, a) == a);
    if (loops != 0 && loops != 2)
        return ValidityReport::fail("diagram", std::to_string(loops) +
                                                   " chain ends (need 0 or 2)");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int g : {1, 2}) {
            int b = s.rho(g, a);
            if (!seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = true;
                ++reached;
                q.push(b);
            }
        }
    }
    if (reached != m)
        return ValidityReport::fail("diagram", "object change diagram is disconnected");
    is_cycle = loops == 0;
    return ValidityReport::pass();
}

} // namespace detail

// Edge-label walk: starting at object a with generator i, read off n values
// c_r = -c^{a_r}_{i_r, j_r}, alternating generators and moving through the
// diagram.  This is the local value sequence seen from (a, i).
template <typename K>
std::vector<K> phi(const CartanScheme<K>& s, int gen, int obj, int length) {
    std::vector<K> out;
    out.reserve(static_cast<std::size_t>(length));
    int cur = obj, g = gen;
    for (int r = 0; r < length; ++r) {
        out.push_back(g == 1 ? -s.c12(cur) : -s.c21(cur));
        cur = s.rho(g, cur);
        g = 3 - g;
    }
    return out;
}

template <typename K>
std::vector<K> phi(const CartanScheme<K>& s, int gen, int obj) {
    return phi(s, gen, obj, s.n);
}

// Axiom suite, first failure wins: diagonal entries 2 ("m1"), off-diagonal
// entries nonpositive and vanishing together ("cartan-sign"), rho
// involutive ("c1"), Cartan rows constant along the corresponding rho edges
// ("c2"), diagram a connected chain or cycle ("diagram"), and the half-turn
// periodicity c_{n+r} = c_r of every length-2n edge-label walk ("cent-sym").
// The walk length is the scheme's word length n, not its object count:
// quotients have fewer objects but satisfy the same periodicity, with the
// walk wrapping around (or bouncing along) the smaller diagram.
template <typename K>
ValidityReport check_axioms(const CartanScheme<K>& s) {
    const int m = s.size();
    if (m == 0)
        return ValidityReport::fail("empty", "scheme has no objects");
    K zero = scalar_zero(s.objects[0].cartan.a11);
    K two = scalar_one(s.objects[0].cartan.a11) + scalar_one(s.objects[0].cartan.a11);
    for (int a = 0; a < m; ++a) {
        const auto& C = s.objects[static_cast<std::size_t>(a)].cartan;
        if (C.a11 != two || C.a22 != two)
            return ValidityReport::fail("m1", "object " + std::to_string(a) +
                                                  " has diagonal " + C.a11.str() + ", " +
                                                  C.a22.str());
        if (C.a12 > zero || C.a21 > zero || (C.a12 == zero) != (C.a21 == zero))
            return ValidityReport::fail("cartan-sign",
                                        "object " + std::to_string(a) +
                                            " has off-diagonal entries " + C.a12.str() +
                                            ", " + C.a21.str());
    }
    for (int a = 0; a < m; ++a)
        for (int g : {1, 2}) {
            int b = s.rho(g, a);
            if (b < 0 || b >= m)
                return ValidityReport::fail("c1", "rho_" + std::to_string(g) +
                                                      " leaves the object set at " +
                                                      std::to_string(a));
            if (s.rho(g, b) != a)
                return ValidityReport::fail("c1", "rho_" + std::to_string(g) +
                                                      " is not involutive at " +
                                                      std::to_string(a));
        }
    for (int a = 0; a < m; ++a)
        for (int g : {1, 2}) {
            int b = s.rho(g, a);
            const K& ca = g == 1 ? s.c12(a) : s.c21(a);
            const K& cb = g == 1 ? s.c12(b) : s.c21(b);
            if (ca != cb)
                return ValidityReport::fail(
                    "c2", "c_" + std::string(g == 1 ? "12" : "21") + " differs between " +
                              std::to_string(a) + " and rho_" + std::to_string(g) + "(" +
                              std::to_string(a) + ")");
        }
    bool is_cycle = false;
    if (auto shape = detail::diagram_shape(s, is_cycle); !shape)
        return shape;
    if (is_cycle && m % 2 != 0)
        return ValidityReport::fail("diagram", "odd cycle"); // unreachable: labels alternate
    if (s.n >= 1) {
        const int n = s.n;
        for (int a = 0; a < m; ++a)
            for (int g : {1, 2}) {
                auto word = phi(s, g, a, 2 * n);
                for (int r = 0; r < n; ++r)
                    if (word[static_cast<std::size_t>(r)] !=
                        word[static_cast<std::size_t>(r + n)])
                        return ValidityReport::fail(
                            "cent-sym", "walk from object " + std::to_string(a) +
                                            ", generator " + std::to_string(g) +
                                            " breaks c_{n+r} = c_r at r = " +
                                            std::to_string(r + 1));
            }
    }
    return ValidityReport::pass();
}

// The finiteness identity: from every object and either starting generator,
// the alternating length-n word of sigma's composes to -tau^n.  This is
// exactly what makes the groupoid finite with 2n positive roots per object
// ... it fails loudly on value sequences that do not come from the finite
// classification (e.g. all-ones of length 4).
template <typename K>
ValidityReport check_finiteness(const CartanScheme<K>& s) {
    const int m = s.size();
    if (m == 0)
        return ValidityReport::fail("empty", "scheme has no objects");
    if (s.n < 1)
        return ValidityReport::fail("length", "scheme does not record its word length");
    for (int a = 0; a < m; ++a)
        for (int g : {1, 2}) {
            int b = s.rho(g, a);
            if (b < 0 || b >= m || s.rho(g, b) != a)
                return ValidityReport::fail("c1", "rho_" + std::to_string(g) +
                                                      " is not involutive at " +
                                                      std::to_string(a));
        }
    Mat2<K> target = -tau_like(s.objects[0].cartan);
    if (s.n % 2 == 0) {
        target = -identity_like(s.objects[0].cartan);
    }
    for (int a = 0; a < m; ++a)
        for (int i : {1, 2}) {
            Mat2<K> prod = identity_like(s.objects[0].cartan);
            int cur = a, g = i;
            for (int step = 0; step < s.n; ++step) {
                prod = sigma_matrix(s, g, cur) * prod;
                cur = s.rho(g, cur);
                g = 3 - g;
            }
            if (prod != target)
                return ValidityReport::fail(
                    "finiteness", "word of length " + std::to_string(s.n) + " from object " +
                                      std::to_string(a) + " starting with sigma_" +
                                      std::to_string(i) + " gives " + prod.to_string());
        }
    return ValidityReport::pass();
}

namespace detail {
struct Mat2Less {
    template <typename K>
    bool operator()(const Mat2<K>& x, const Mat2<K>& y) const {
        if (x.a11 != y.a11) return x.a11 < y.a11;
        if (x.a12 != y.a12) return x.a12 < y.a12;
        if (x.a21 != y.a21) return x.a21 < y.a21;
        return x.a22 < y.a22;
    }
};
} // namespace detail

// All morphisms into `target`, computed as the closure of the identity under
// precomposition with the sigma generators, grouped by source object.  The
// cap bounds the total count; schemes failing finiteness blow past it and
// report non-terminating instead of spinning.
template <typename K>
struct HomClosure {
    int target = 0;
    std::vector<std::vector<Mat2<K>>> hom; // indexed by source object, sorted

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& h : hom)
            t += h.size();
        return t;
    }
};

template <typename K>
HomClosure<K> hom_closure(const CartanScheme<K>& s, int target, std::size_t cap = 0) {
    const int m = s.size();
    if (target < 0 || target >= m)
        throw error(errc::precondition, "object " + std::to_string(target) + " out of range");
    if (cap == 0)
        cap = 16 + 4 * static_cast<std::size_t>(m) *
                       static_cast<std::size_t>(s.n > 0 ? s.n : 1);

    std::vector<std::set<Mat2<K>, detail::Mat2Less>> seen(static_cast<std::size_t>(m));
    std::queue<std::pair<int, Mat2<K>>> work;
    Mat2<K> id = identity_like(s.objects[0].cartan);
    seen[static_cast<std::size_t>(target)].insert(id);
    work.emplace(target, id);
    std::size_t total = 1;
    while (!work.empty()) {
        auto [b, M] = work.front();
        work.pop();
        for (int g : {1, 2}) {
            int src = s.rho(g, b); // sigma_g^src : src -> b
            Mat2<K> comp = M * sigma_matrix(s, g, src);
            if (seen[static_cast<std::size_t>(src)].insert(comp).second) {
                if (++total > cap)
                    throw error(errc::non_terminating,
                                "hom closure exceeded " + std::to_string(cap) +
                                    " morphisms; the scheme is not finite");
                work.emplace(src, comp);
            }
        }
    }
    HomClosure<K> out;
    out.target = target;
    out.hom.reserve(seen.size());
    for (auto& set : seen)
        out.hom.emplace_back(set.begin(), set.end());
    return out;
}

// End(a) structure of the sequence's scheme: the subgroup of the dihedral
// symmetries of the labeled 2n-cycle that lie in H (even rotations, odd
// reflections on vertices).
struct GroupDescriptor {
    std::string name;
    std::vector<DihedralElement> elements;   // sorted
    std::vector<DihedralElement> generators; // a minimal generating set

    int order() const { return static_cast<int>(elements.size()); }
};

// Brute-force stabilizer of the edge labeling inside H.
GroupDescriptor end_group(const EtaSequence& seq);

// Closed-form prediction from (period, symmetry type, parity of the
// primitive block length); the brute-force group must match it.
struct EndGroupPrediction {
    std::string name;
    int order = 1;
    int rotation_order = 1;
    bool has_reflection = false;
};
EndGroupPrediction end_group_table(const EtaSequence& seq);

// Quotient by a subgroup U of the labeled cycle's symmetries.  Objects of
// the quotient are U-orbits (named by their sorted member lists); Cartan
// data and rho descend because U preserves both, which is checked and
// reported as not-a-symmetry otherwise.  Works on quotients of quotients:
// U acts on an object through its member set.
template <typename K>
CartanScheme<K> quotient(const CartanScheme<K>& s,
                         const std::vector<DihedralElement>& generators) {
    const int m = 2 * s.n;
    for (const auto& g : generators)
        if (g.m != m)
            throw error(errc::not_a_symmetry,
                        "generator acts on Z/" + std::to_string(g.m) +
                            ", the cycle has " + std::to_string(m) + " vertices");
    auto U = subgroup_closure(generators, m);

    std::map<std::vector<int>, int> byMembers;
    for (int o = 0; o < s.size(); ++o)
        byMembers.emplace(s.objects[static_cast<std::size_t>(o)].members, o);

    auto act = [&](const DihedralElement& u, int o) {
        std::vector<int> img;
        for (int v : s.objects[static_cast<std::size_t>(o)].members)
            img.push_back(u.apply(v));
        std::sort(img.begin(), img.end());
        auto it = byMembers.find(img);
        if (it == byMembers.end())
            throw error(errc::not_a_symmetry,
                        u.to_string() + " does not permute the objects");
        return it->second;
    };

    // U must act by label-preserving scheme automorphisms.
    for (const auto& u : U)
        for (int o = 0; o < s.size(); ++o) {
            int img = act(u, o);
            if (s.objects[static_cast<std::size_t>(img)].cartan !=
                s.objects[static_cast<std::size_t>(o)].cartan)
                throw error(errc::not_a_symmetry, u.to_string() +
                                                      " moves the Cartan labeling at object " +
                                                      std::to_string(o));
            for (int g : {1, 2})
                if (act(u, s.rho(g, o)) != s.rho(g, img))
                    throw error(errc::not_a_symmetry,
                                u.to_string() + " does not commute with rho_" +
                                    std::to_string(g));
        }

    // Orbits, represented by their least object index.
    std::vector<int> orbitOf(static_cast<std::size_t>(s.size()), -1);
    std::vector<std::vector<int>> orbits;
    for (int o = 0; o < s.size(); ++o) {
        if (orbitOf[static_cast<std::size_t>(o)] != -1)
            continue;
        std::vector<int> orbit;
        for (const auto& u : U) {
            int img = act(u, o);
            if (orbitOf[static_cast<std::size_t>(img)] == -1) {
                orbitOf[static_cast<std::size_t>(img)] = static_cast<int>(orbits.size());
                orbit.push_back(img);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    CartanScheme<K> q;
    q.n = s.n;
    q.objects.resize(orbits.size());
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        int rep = orbits[k][0];
        auto& obj = q.objects[k];
        obj.cartan = s.objects[static_cast<std::size_t>(rep)].cartan;
        for (int g : {1, 2})
            obj.rho[static_cast<std::size_t>(g - 1)] =
                orbitOf[static_cast<std::size_t>(s.rho(g, rep))];
        for (int o : orbits[k])
            for (int v : s.objects[static_cast<std::size_t>(o)].members)
                obj.members.push_back(v);
        std::sort(obj.members.begin(), obj.members.end());
    }
    return q;
}

} // namespace weylgr
