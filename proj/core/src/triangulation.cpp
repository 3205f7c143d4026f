#include "weylgr/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weylgr {

bool is_diagonal(int n, Chord c) {
    if (c.a < 0 || c.b >= n || c.a >= c.b)
        return false;
    int gap = c.b - c.a;
    return gap >= 2 && gap <= n - 2;
}

bool chords_cross(Chord c, Chord d) {
    // Both stored with a < b, so interleaving is a plain interval test.
    return (c.a < d.a && d.a < c.b && c.b < d.b) ||
           (d.a < c.a && c.a < d.b && d.b < c.b);
}

ValidityReport Triangulation::validate(int n, const std::vector<Chord>& diagonals) {
    if (n < 3)
        return ValidityReport::fail("polygon-size", "need n >= 3, got " + std::to_string(n));
    for (const auto& c : diagonals)
        if (!is_diagonal(n, c))
            return ValidityReport::fail("not-a-diagonal",
                                        c.to_string() + " is not a diagonal of the " +
                                            std::to_string(n) + "-gon");
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
            if (diagonals[i] == diagonals[j])
                return ValidityReport::fail("duplicate-diagonal",
                                            diagonals[i].to_string() + " repeated");
            if (chords_cross(diagonals[i], diagonals[j]))
                return ValidityReport::fail("crossing", diagonals[i].to_string() + " and " +
                                                            diagonals[j].to_string() +
                                                            " cross");
        }
    if (diagonals.size() != static_cast<std::size_t>(n - 3))
        return ValidityReport::fail("diagonal-count",
                                    "expected " + std::to_string(n - 3) + " diagonals, got " +
                                        std::to_string(diagonals.size()));
    return ValidityReport::pass();
}

Triangulation Triangulation::checked(int n, std::vector<Chord> diagonals) {
    std::sort(diagonals.begin(), diagonals.end());
    auto report = validate(n, diagonals);
    if (!report)
        throw error(errc::not_a_triangulation, report.code + ": " + report.detail);
    return Triangulation(n, std::move(diagonals));
}

Triangulation Triangulation::fan(int n, int apex) {
    std::vector<Chord> d;
    for (int k = 0; k < n; ++k) {
        Chord c = Chord::sorted(apex, k);
        if (is_diagonal(n, c))
            d.push_back(c);
    }
    return checked(n, std::move(d));
}

bool Triangulation::has_diagonal(Chord c) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), c);
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    // Sides plus diagonals, as a lookup set.
    std::set<Chord> conn(diagonals_.begin(), diagonals_.end());
    for (int v = 0; v < n_; ++v)
        conn.insert(Chord::sorted(v, (v + 1) % n_));
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
            if (!conn.count({a, b}))
                continue;
            for (int c = b + 1; c < n_; ++c)
                if (conn.count({b, c}) && conn.count({a, c}))
                    out.push_back({a, b, c});
        }
    return out;
}

std::vector<int> Triangulation::vertex_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& t : triangles())
        for (int v : t)
            ++deg[static_cast<std::size_t>(v)];
    return deg;
}

namespace {

// Triangulations of the sub-polygon on vertices[lo..hi] (inclusive,
// contiguous in the original labeling), memoized on the interval.  The
// recursion picks the apex of the triangle over the closing edge {lo, hi}.
struct Enumerator {
    int n;
    std::map<std::pair<int, int>, std::vector<std::vector<Chord>>> memo;

    const std::vector<std::vector<Chord>>& run(int lo, int hi) {
        auto key = std::make_pair(lo, hi);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        std::vector<std::vector<Chord>> result;
        if (hi - lo < 2) {
            result.push_back({}); // an edge or a point: nothing to add
        } else {
            for (int k = lo + 1; k < hi; ++k) {
                // Triangle (lo, k, hi); its chords to lo and hi, when they
                // are not polygon sides, become diagonals.
                std::vector<Chord> extra;
                if (is_diagonal(n, {lo, k}))
                    extra.push_back({lo, k});
                if (is_diagonal(n, {k, hi}))
                    extra.push_back({k, hi});
                const auto& left = run(lo, k);
                const auto& right = run(k, hi);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        std::vector<Chord> d = extra;
                        d.insert(d.end(), l.begin(), l.end());
                        d.insert(d.end(), r.begin(), r.end());
                        result.push_back(std::move(d));
                    }
            }
        }
        return memo.emplace(key, std::move(result)).first->second;
    }
};

} // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
    if (n < 3)
        throw error(errc::precondition, "need n >= 3, got " + std::to_string(n));
    Enumerator en{n, {}};
    std::vector<Triangulation> out;
    for (const auto& d : en.run(0, n - 1))
        out.push_back(Triangulation::checked(n, d));
    std::sort(out.begin(), out.end());
    return out;
}

FlipQuad flip_quad(const Triangulation& t, Chord d) {
    if (!t.has_diagonal(d))
        throw error(errc::not_a_diagonal,
                    d.to_string() + " is not a diagonal of this triangulation");
    // The two triangles containing d give the apexes on either side.
    std::vector<int> apexes;
    for (const auto& tri : t.triangles()) {
        bool hasA = false, hasB = false;
        int other = -1;
        for (int v : tri) {
            if (v == d.a)
                hasA = true;
            else if (v == d.b)
                hasB = true;
            else
                other = v;
        }
        if (hasA && hasB)
            apexes.push_back(other);
    }
    if (apexes.size() != 2)
        throw error(errc::not_a_triangulation, "diagonal " + d.to_string() +
                                                   " does not bound two triangles");
    // Quad in cyclic order: d.a, apex inside (d.a, d.b), d.b, apex outside.
    int inner = (d.a < apexes[0] && apexes[0] < d.b) ? apexes[0] : apexes[1];
    int outer = apexes[0] == inner ? apexes[1] : apexes[0];
    return FlipQuad{d, Chord::sorted(inner, outer), {d.a, inner, d.b, outer}};
}

Triangulation flip(const Triangulation& t, Chord d) {
    FlipQuad fq = flip_quad(t, d);
    std::vector<Chord> diag;
    for (const auto& c : t.diagonals())
        if (c != d)
            diag.push_back(c);
    diag.push_back(fq.added);
    return Triangulation::checked(t.n(), std::move(diag));
}

std::vector<BigInt> psi_inverse(const Triangulation& t) {
    std::vector<BigInt> out;
    for (int d : t.vertex_degrees())
        out.push_back(d);
    return out;
}

Triangulation psi(const EtaSequence& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> ring(static_cast<std::size_t>(n));
    std::vector<BigInt> deg = seq.entries();
    for (int v = 0; v < n; ++v)
        ring[static_cast<std::size_t>(v)] = v;

    // Ear cutting: a vertex of degree 1 is the apex of a triangle whose
    // opposite side joins its ring neighbors; record that chord and remove
    // the vertex.  The bijection makes the result independent of which ear
    // is cut, so the leftmost is taken for determinism.
    std::vector<Chord> diagonals;
    while (ring.size() > 3) {
        std::size_t idx = 0;
        while (idx < ring.size() && deg[idx] != 1)
            ++idx;
        if (idx == ring.size())
            throw error(errc::precondition, "no ear in degree sequence");
        std::size_t l = (idx + ring.size() - 1) % ring.size();
        std::size_t r = (idx + 1) % ring.size();
        diagonals.push_back(Chord::sorted(ring[l], ring[r]));
        deg[l] -= 1;
        deg[r] -= 1;
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(idx));
        deg.erase(deg.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Triangulation::checked(n, std::move(diagonals));
}

Triangulation canonical_triangulation(const Triangulation& t) {
    return psi(canonical_form(EtaSequence::checked(psi_inverse(t))));
}

FlipGraph flip_graph(int n) {
    FlipGraph g;
    g.nodes = enumerate_triangulations(n);
    std::map<Triangulation, std::size_t> index;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        index.emplace(g.nodes[i], i);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (const auto& d : g.nodes[i].diagonals()) {
            std::size_t j = index.at(flip(g.nodes[i], d));
            if (i < j)
                g.edges.emplace_back(i, j);
        }
    return g;
}

} // namespace weylgr
