#include "weylgr/cluster.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "weylgr/cartan_scheme.hpp"

namespace weylgr {

Poly psi_poly(int a, int b, int n) {
    if (n < 3 || a < 0 || b <= a || b >= n)
        throw error(errc::index_error, "no chord {" + std::to_string(a) + "," +
                                           std::to_string(b) + "} in the " +
                                           std::to_string(n) + "-gon");
    VarSetPtr vars = var_universe("c", static_cast<std::size_t>(n - 2));
    Mat2<Poly> m = {Poly::constant(vars, 1), Poly::zero(vars), Poly::zero(vars),
                    Poly::constant(vars, 1)};
    for (int k = b - 2; k >= a; --k)
        m = m * eta(Poly::variable(vars, static_cast<std::size_t>(k)));
    return m.a11;
}

ChordLabeling::ChordLabeling(int n) : n_(n) {
    if (n < 3)
        throw error(errc::precondition, "need n >= 3, got " + std::to_string(n));
    values_.resize(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (int v = 0; v < n; ++v)
        set(Chord::sorted(v, (v + 1) % n), Rational(1));
}

std::size_t ChordLabeling::index(Chord c) const {
    if (c.a < 0 || c.b <= c.a || c.b >= n_)
        throw error(errc::index_error, "no chord " + c.to_string() + " in the " +
                                           std::to_string(n_) + "-gon");
    auto a = static_cast<std::size_t>(c.a), b = static_cast<std::size_t>(c.b);
    auto n = static_cast<std::size_t>(n_);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

bool ChordLabeling::has(Chord c) const { return values_[index(c)].has_value(); }

const Rational& ChordLabeling::at(Chord c) const {
    const auto& v = values_[index(c)];
    if (!v)
        throw error(errc::incomplete_labeling, "chord " + c.to_string() + " has no value");
    return *v;
}

void ChordLabeling::set(Chord c, Rational v) { values_[index(c)] = std::move(v); }

bool ChordLabeling::complete() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const auto& v) { return v.has_value(); });
}

std::vector<Chord> ChordLabeling::chords() const {
    std::vector<Chord> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            out.push_back({a, b});
    return out;
}

std::vector<Chord> ChordLabeling::missing() const {
    std::vector<Chord> out;
    for (const auto& c : chords())
        if (!has(c))
            out.push_back(c);
    return out;
}

ChordLabeling ptolemy_complete(const Triangulation& seed,
                               const std::map<Chord, Rational>& values) {
    const int n = seed.n();
    ChordLabeling lab(n);
    for (const auto& [c, v] : values) {
        if (!seed.has_diagonal(c))
            throw error(errc::precondition,
                        c.to_string() + " is not a diagonal of the seed triangulation");
        lab.set(c, v);
    }
    if (values.size() != seed.diagonals().size())
        throw error(errc::precondition, "seed has " +
                                            std::to_string(seed.diagonals().size()) +
                                            " diagonals, got " +
                                            std::to_string(values.size()) + " values");

    // Breadth-first over the flip graph.  Every triangulation enqueued has
    // all its diagonals labeled, so each flip needs one division (by the
    // removed diagonal) and one exchange-relation evaluation.
    std::set<std::vector<Chord>> visited{seed.diagonals()};
    std::vector<Triangulation> queue{seed};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Triangulation t = queue[head];
        for (const auto& d : t.diagonals()) {
            if (lab.at(d) == 0)
                continue; // cannot flip across a zero chord
            FlipQuad fq = flip_quad(t, d);
            const auto& q = fq.quad;
            Rational v = (lab.at(Chord::sorted(q[0], q[1])) * lab.at(Chord::sorted(q[2], q[3])) +
                          lab.at(Chord::sorted(q[1], q[2])) * lab.at(Chord::sorted(q[3], q[0]))) /
                         lab.at(d);
            if (lab.has(fq.added)) {
                if (lab.at(fq.added) != v)
                    throw error(errc::precondition,
                                "exchange relation disagrees on " + fq.added.to_string() +
                                    ": " + to_string(lab.at(fq.added)) + " vs " +
                                    to_string(v));
            } else {
                lab.set(fq.added, v);
            }
            Triangulation next = flip(t, d);
            if (visited.insert(next.diagonals()).second)
                queue.push_back(next);
        }
    }

    if (!lab.complete()) {
        for (const auto& c : lab.chords())
            if (lab.has(c) && lab.at(c) == 0) {
                auto miss = lab.missing();
                throw division_by_zero_error(
                    c, "chord " + c.to_string() + " is zero and blocks completion; " +
                           std::to_string(miss.size()) + " chords unreachable, first " +
                           miss.front().to_string());
            }
        throw error(errc::precondition, "completion stalled without a zero chord");
    }
    return lab;
}

std::vector<Rational> cvalues_from_labeling(const ChordLabeling& lab) {
    if (!lab.complete())
        throw error(errc::incomplete_labeling,
                    std::to_string(lab.missing().size()) + " chords have no value");
    const int n = lab.n();
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        c.push_back(lab.at(Chord::sorted(i, (i + 2) % n)));
    return c;
}

namespace {

Mat2<Poly> scale(const Mat2<Poly>& m, const Poly& f) {
    return {m.a11 * f, m.a12 * f, m.a21 * f, m.a22 * f};
}

IdentityReport check_equal(const std::string& name, int n, const Mat2<Poly>& lhs,
                           const Mat2<Poly>& rhs) {
    IdentityReport r{name, n, lhs == rhs, ""};
    if (!r.pass) {
        const Poly* l[] = {&lhs.a11, &lhs.a12, &lhs.a21, &lhs.a22};
        const Poly* p[] = {&rhs.a11, &rhs.a12, &rhs.a21, &rhs.a22};
        const char* where[] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
        for (int k = 0; k < 4; ++k)
            if (*l[k] != *p[k]) {
                r.detail = "entry " + std::string(where[k]) + " differs by " +
                           (*l[k] - *p[k]).to_string();
                break;
            }
    }
    return r;
}

IdentityReport check_equal(const std::string& name, int n, const Poly& lhs,
                           const Poly& rhs) {
    IdentityReport r{name, n, lhs == rhs, ""};
    if (!r.pass)
        r.detail = "difference " + (lhs - rhs).to_string();
    return r;
}

} // namespace

std::vector<IdentityReport> verify_mu_identities(int n_cycle) {
    std::vector<IdentityReport> out;

    { // mu-assoc: the two-factor contraction of a mu triple
        VarSetPtr u = make_vars({"f1", "f2", "f3", "a", "b", "c", "d"});
        auto v = [&](const char* s) { return Poly::variable(u, s); };
        Poly f1 = v("f1"), f2 = v("f2"), f3 = v("f3"), a = v("a"), b = v("b"),
             c = v("c"), d = v("d");
        Mat2<Poly> lhs = scale(mu(f1, a, b) * mu(f2, b, c) * mu(f3, c, d), f2);
        Mat2<Poly> rhs = mu(f1 * f2 - a * c, a * b, b * f2) * mu(f2 * f3 - b * d, c * f2, c * d);
        out.push_back(check_equal("mu-assoc", 0, lhs, rhs));
    }

    { // eta-entry: corner entries of eta-sandwiched generic matrices
        VarSetPtr u = make_vars({"x", "y", "a11", "a12", "a21", "a22"});
        auto v = [&](const char* s) { return Poly::variable(u, s); };
        Mat2<Poly> A = {v("a11"), v("a12"), v("a21"), v("a22")};
        Mat2<Poly> ex = eta(v("x")), ey = eta(v("y"));
        bool pass = (ex * A).a21 == A.a11 && (A * ey).a12 == -A.a11 &&
                    (ex * A * ey).a22 == -A.a11;
        out.push_back({"eta-entry", 0, pass, pass ? "" : "corner entry mismatch"});
    }

    if (n_cycle >= 3) { // mu-cycle over a generic 2 x n matrix
        const int n = n_cycle;
        std::vector<std::string> names;
        for (int r = 1; r <= 2; ++r)
            for (int i = 1; i <= n; ++i)
                names.push_back("z" + std::to_string(r) + std::to_string(i));
        VarSetPtr u = make_vars(names);
        auto z = [&](int r, int i) { // r in {1,2}, column i mod n, 0-based
            int col = ((i % n) + n) % n;
            return Poly::variable(u, static_cast<std::size_t>((r - 1) * n + col));
        };
        // Symmetrized minor: P(i,j) = P(j,i) = z_det on sorted column pair.
        auto P = [&](int i, int j) {
            int a = ((i % n) + n) % n, b = ((j % n) + n) % n;
            if (a > b)
                std::swap(a, b);
            return z(1, a) * z(2, b) - z(1, b) * z(2, a);
        };
        Mat2<Poly> lhs = {Poly::constant(u, 1), Poly::zero(u), Poly::zero(u),
                          Poly::constant(u, 1)};
        Poly rhsFactor = Poly::constant(u, -1);
        for (int i = 0; i < n; ++i) {
            lhs = lhs * mu(P(i, i + 2), P(i, i + 1), P(i + 1, i + 2));
            rhsFactor *= P(i, i + 1);
        }
        Mat2<Poly> rhs = {rhsFactor, Poly::zero(u), Poly::zero(u), rhsFactor};
        out.push_back(check_equal("mu-cycle", n, lhs, rhs));
    }

    return out;
}

std::vector<IdentityReport> verify_psi_recurrences(int n) {
    if (n < 3)
        throw error(errc::precondition, "need n >= 3, got " + std::to_string(n));
    std::vector<IdentityReport> out;
    VarSetPtr vars = var_universe("c", static_cast<std::size_t>(n - 2));
    Poly zero = Poly::zero(vars), one = Poly::constant(vars, 1);

    // psiP over 1-based paper indices, with the psi(P_{j,j}) = 0 convention.
    auto psiP = [&](int i, int j) { return i == j ? zero : psi_poly(i - 1, j - 1, n); };
    auto cvar = [&](int i) { return Poly::variable(vars, static_cast<std::size_t>(i - 1)); };

    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i < n && pass; ++i)
            if (psiP(i, i + 1) != one) {
                pass = false;
                detail = "psi(P_{" + std::to_string(i) + "," + std::to_string(i + 1) +
                         "}) != 1";
            }
        for (int i = 1; i + 2 <= n && pass; ++i)
            if (psiP(i, i + 2) != cvar(i)) {
                pass = false;
                detail = "psi(P_{" + std::to_string(i) + "," + std::to_string(i + 2) +
                         "}) != c" + std::to_string(i);
            }
        out.push_back({"psi-base", n, pass, detail});
    }
    {
        bool pass = true;
        std::string detail;
        for (int j = 1; j < n && pass; ++j)
            for (int k = j + 1; k < n && pass; ++k)
                if (psiP(j, k + 1) != cvar(k - 1) * psiP(j, k) - psiP(j, k - 1)) {
                    pass = false;
                    detail = "three-term fails at (j,k) = (" + std::to_string(j) + "," +
                             std::to_string(k) + ")";
                }
        out.push_back({"psi-three-term", n, pass, detail});
    }
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i < n && pass; ++i)
            for (int j = i + 1; j < n && pass; ++j)
                for (int k = j; k < n && pass; ++k)
                    if (psiP(i, j) != psiP(i, k) * psiP(j, k + 1) - psiP(j, k) * psiP(i, k + 1)) {
                        pass = false;
                        detail = "product identity fails at (i,j,k) = (" + std::to_string(i) +
                                 "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    }
        out.push_back({"psi-product", n, pass, detail});
    }
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i + 2 <= n && pass; ++i)
            for (int j = i + 2; j <= n && pass; ++j)
                if (psiP(i, j) != psiP(i, i + 2) * psiP(i + 1, j) - psiP(i + 2, j)) {
                    pass = false;
                    detail = "generation fails at (i,j) = (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }
        out.push_back({"psi-generation", n, pass, detail});
    }
    return out;
}

MainTheoremReport verify_main_theorem(int n, int trials, std::uint64_t rng_seed,
                                      int value_range) {
    if (n < 4)
        throw error(errc::precondition,
                    "need n >= 4 (no diagonals to seed below that), got " +
                        std::to_string(n));
    if (value_range < 1)
        throw error(errc::precondition, "value range must be positive");

    MainTheoremReport report;
    report.n = n;
    report.trials = trials;
    report.rng_seed = rng_seed;
    report.value_range = value_range;

    auto tris = enumerate_triangulations(n);
    std::vector<std::pair<Chord, Poly>> psiTable;
    {
        ChordLabeling shape(n); // borrow the chord iteration order
        for (const auto& c : shape.chords())
            psiTable.emplace_back(c, psi_poly(c.a, c.b, n));
    }
    auto assignment = [&](const std::vector<Rational>& cvals) {
        std::map<std::string, Rational> a;
        for (int i = 0; i + 2 < n; ++i)
            a["c" + std::to_string(i + 1)] = cvals[static_cast<std::size_t>(i)];
        return a;
    };
    auto etaIdentityHolds = [&](const std::vector<Rational>& cvals) {
        Mat2<Rational> m = identity<Rational>();
        for (const auto& c : cvals)
            m = eta(c) * m; // descending product eta(c_n)...eta(c_1)
        return m == -identity<Rational>();
    };

    std::mt19937_64 rng(rng_seed);
    auto draw_value = [&](int range) {
        auto mag = static_cast<long>(rng() % static_cast<std::uint64_t>(range)) + 1;
        long num = (rng() % 2 == 0) ? mag : -mag;
        auto den = static_cast<long>(rng() % static_cast<std::uint64_t>(range)) + 1;
        return Rational(num, den);
    };

    for (int trial = 0; trial < trials; ++trial) {
        TrialResult tr;
        tr.trial = trial;
        const auto& seed = tris[static_cast<std::size_t>(rng() % tris.size())];
        std::map<Chord, Rational> values;
        for (const auto& d : seed.diagonals())
            values.emplace(d, draw_value(value_range));
        try {
            ChordLabeling lab = ptolemy_complete(seed, values);
            tr.cvalues = cvalues_from_labeling(lab);
            tr.eta_identity = etaIdentityHolds(tr.cvalues);
            auto scheme = scheme_from_cvalues(tr.cvalues);
            tr.finiteness = static_cast<bool>(check_finiteness(scheme));
            auto assign = assignment(tr.cvalues);
            tr.psi_match = true;
            for (const auto& [chord, poly] : psiTable)
                if (poly.eval(assign) != lab.at(chord)) {
                    tr.psi_match = false;
                    break;
                }
        } catch (const division_by_zero_error& e) {
            tr.skipped = true;
            tr.blocking = e.chord;
        }
        report.results.push_back(std::move(tr));
    }

    // Converse: psi-induced integer labelings of eta-sequences are genuine
    // Grassmannian points, i.e. satisfy every Pluecker relation.
    report.converse_ok = true;
    for (const auto& seq : enumerate_eta_sequences(n)) {
        ++report.converse_sequences;
        std::vector<Rational> cvals;
        for (const auto& e : seq.entries())
            cvals.emplace_back(e);
        auto assign = assignment(cvals);
        std::map<Chord, Rational> val;
        for (const auto& [chord, poly] : psiTable)
            val[chord] = poly.eval(assign);
        for (int a = 0; a < n && report.converse_ok; ++a)
            for (int b = a + 1; b < n && report.converse_ok; ++b)
                for (int c = b + 1; c < n && report.converse_ok; ++c)
                    for (int d = c + 1; d < n && report.converse_ok; ++d)
                        report.converse_ok =
                            val[{a, c}] * val[{b, d}] ==
                            val[{a, b}] * val[{c, d}] + val[{a, d}] * val[{b, c}];
        if (!report.converse_ok)
            break;
    }

    report.ok = report.converse_ok &&
                std::all_of(report.results.begin(), report.results.end(),
                            [](const TrialResult& t) { return t.ok(); });
    return report;
}

} // namespace weylgr
