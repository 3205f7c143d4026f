// Acceptance gate: one self-contained check per shipped guarantee, each
// printed as a single PASS/FAIL line with its runtime.  Exits nonzero if
// any criterion fails.  No test framework on purpose: this binary is the
// release checklist and its output is meant to be read by humans.

#include <weylgr/cartan_scheme.hpp>
#include <weylgr/cluster.hpp>
#include <weylgr/dihedral.hpp>
#include <weylgr/eta_sequence.hpp>
#include <weylgr/root_sequence.hpp>
#include <weylgr/scalar.hpp>
#include <weylgr/triangulation.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace weylgr;

namespace {

// Independent count oracle: the recursive Catalan convolution, memoized.
// Shares nothing with the enumeration code under test.
unsigned long long catalan_oracle(int k) {
    static std::map<int, unsigned long long> memo;
    if (k <= 0)
        return 1;
    if (auto it = memo.find(k); it != memo.end())
        return it->second;
    unsigned long long total = 0;
    for (int i = 0; i < k; ++i)
        total += catalan_oracle(i) * catalan_oracle(k - 1 - i);
    memo[k] = total;
    return total;
}

std::string entries_str(const EtaSequence& s) {
    std::string out;
    for (const auto& e : s.entries()) {
        if (!out.empty())
            out += ",";
        out += e.str();
    }
    return out;
}

EtaSequence seq_of(std::initializer_list<int> xs) {
    std::vector<BigInt> v;
    for (int x : xs)
        v.emplace_back(x);
    return EtaSequence::checked(v);
}

// ---- criterion 1: enumeration counts vs the independent oracle ----------

bool crit_counts(std::string& why) {
    for (int n = 3; n <= 10; ++n) {
        const auto want = catalan_oracle(n - 2);
        auto seqs = enumerate_eta_sequences(n);
        auto tris = enumerate_triangulations(n);
        if (seqs.size() != want || tris.size() != want) {
            std::ostringstream os;
            os << "n=" << n << ": " << seqs.size() << " sequences, " << tris.size()
               << " triangulations, oracle says " << want;
            why = os.str();
            return false;
        }
        std::size_t canonSeq = 0;
        for (const auto& s : seqs)
            if (canonical_form(s).entries() == s.entries())
                ++canonSeq;
        std::size_t canonTri = 0;
        for (const auto& t : tris)
            if (canonical_triangulation(t) == t)
                ++canonTri;
        if (canonSeq != canonTri) {
            std::ostringstream os;
            os << "n=" << n << ": " << canonSeq << " canonical sequences vs " << canonTri
               << " canonical triangulations";
            why = os.str();
            return false;
        }
    }
    return true;
}

// ---- criterion 2: the frozen small root systems --------------------------

bool crit_example_roots(std::string& why) {
    auto expect_everywhere = [&](const EtaSequence& s, const RootSeq& want) {
        auto scheme = scheme_from_eta(s);
        for (std::size_t a = 0; a < scheme.objects.size(); ++a)
            if (roots_from_scheme(scheme, static_cast<int>(a)) != want) {
                why = "object " + std::to_string(a) + " of (" + entries_str(s) +
                      ") has unexpected roots";
                return false;
            }
        return true;
    };

    if (!expect_everywhere(seq_of({1, 1, 1}), {{0, 1}, {1, 1}, {1, 0}}))
        return false;
    // The alternating n=4 labelings: each gives one Cartan matrix at every
    // object, so one root set per labeling and the two sets are mirrors.
    if (!expect_everywhere(seq_of({2, 1, 2, 1}), {{0, 1}, {1, 2}, {1, 1}, {1, 0}}))
        return false;
    if (!expect_everywhere(seq_of({1, 2, 1, 2}), {{0, 1}, {1, 1}, {2, 1}, {1, 0}}))
        return false;

    // The pentagon: five distinct root sets, each at exactly two of the ten
    // objects.
    const std::vector<RootSeq> pentagon = {
        {{0, 1}, {1, 3}, {1, 2}, {1, 1}, {1, 0}},
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {1, 0}},
        {{0, 1}, {1, 2}, {2, 3}, {1, 1}, {1, 0}},
        {{0, 1}, {1, 2}, {1, 1}, {2, 1}, {1, 0}},
        {{0, 1}, {1, 1}, {3, 2}, {2, 1}, {1, 0}},
    };
    auto scheme = scheme_from_eta(seq_of({3, 1, 2, 2, 1}));
    std::map<RootSeq, int> found;
    for (std::size_t a = 0; a < scheme.objects.size(); ++a)
        ++found[roots_from_scheme(scheme, static_cast<int>(a))];
    if (found.size() != pentagon.size()) {
        why = "pentagon scheme has " + std::to_string(found.size()) +
              " distinct root sets, expected 5";
        return false;
    }
    for (const auto& want : pentagon) {
        auto it = found.find(want);
        if (it == found.end() || it->second != 2) {
            why = "pentagon root set starting " + want[1].to_string() +
                  " missing or not at exactly two objects";
            return false;
        }
    }
    return true;
}

// ---- criterion 3: axioms, finiteness, simple connectedness ---------------

bool crit_axioms(std::string& why) {
    for (int n = 3; n <= 10; ++n) {
        for (const auto& s : enumerate_eta_sequences(n)) {
            auto scheme = scheme_from_eta(s);
            if (auto r = check_axioms(scheme); !r.ok) {
                why = "(" + entries_str(s) + ") fails axiom check " + r.code;
                return false;
            }
            if (auto r = check_finiteness(scheme); !r.ok) {
                why = "(" + entries_str(s) + ") fails finiteness check " + r.code;
                return false;
            }
            const auto objects = static_cast<int>(scheme.objects.size());
            for (int target = 0; target < objects; ++target) {
                auto hc = hom_closure(scheme, target);
                for (std::size_t src = 0; src < hc.hom.size(); ++src)
                    if (hc.hom[src].size() != 1) {
                        std::ostringstream os;
                        os << "(" << entries_str(s) << ") Hom(" << src << "," << target
                           << ") has size " << hc.hom[src].size();
                        why = os.str();
                        return false;
                    }
            }
        }
    }
    return true;
}

// ---- criterion 4: root sequence structure at every object ----------------

bool crit_root_properties(std::string& why) {
    for (int n = 3; n <= 10; ++n) {
        for (const auto& s : enumerate_eta_sequences(n)) {
            auto scheme = scheme_from_eta(s);
            for (std::size_t a = 0; a < scheme.objects.size(); ++a) {
                auto rs = roots_from_scheme(scheme, static_cast<int>(a));
                std::ostringstream at;
                at << "(" << entries_str(s) << ") object " << a;
                if (rs.size() != static_cast<std::size_t>(n)) {
                    why = at.str() + ": wrong root count";
                    return false;
                }
                if (rs.front() != RootVec{0, 1} || rs.back() != RootVec{1, 0}) {
                    why = at.str() + ": wrong endpoints";
                    return false;
                }
                for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
                    if (!leq_Q(rs[i], rs[i + 1]) || rs[i] == rs[i + 1]) {
                        why = at.str() + ": not strictly ascending";
                        return false;
                    }
                    if (rs[i].b * rs[i + 1].a - rs[i].a * rs[i + 1].b != 1) {
                        why = at.str() + ": consecutive minor is not 1 at gap " +
                              std::to_string(i);
                        return false;
                    }
                }
                if (auto f = validate_F(rs); !f.ok) {
                    why = at.str() + ": mediant recognizer fails with " + f.code;
                    return false;
                }
                for (const auto& v : rs) {
                    auto dec = sum_of_two(rs, v);
                    const bool isEndpoint = v == rs.front() || v == rs.back();
                    if (dec.simple != isEndpoint) {
                        why = at.str() + ": " + v.to_string() + " misclassified as " +
                              (dec.simple ? "simple" : "non-simple");
                        return false;
                    }
                    if (!dec.simple && rs.at(dec.i) + rs.at(dec.j) != v) {
                        why = at.str() + ": bad decomposition of " + v.to_string();
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// ---- criterion 5: endomorphism groups and quotients -----------------------

bool crit_quotients(std::string& why) {
    for (int n = 3; n <= 10; ++n) {
        for (const auto& s : enumerate_eta_sequences(n)) {
            auto g = end_group(s);
            auto p = end_group_table(s);
            int rotations = 0;
            bool hasReflection = false;
            for (const auto& e : g.elements) {
                if (e.flip)
                    hasReflection = true;
                else
                    ++rotations;
            }
            if (g.name != p.name || g.order() != p.order || rotations != p.rotation_order ||
                hasReflection != p.has_reflection) {
                why = "(" + entries_str(s) + "): brute group " + g.name + " order " +
                      std::to_string(g.order()) + " vs predicted " + p.name + " order " +
                      std::to_string(p.order);
                return false;
            }
            auto scheme = scheme_from_eta(s);
            for (const auto& sub : enumerate_subgroups(g.elements, 2 * n)) {
                auto q = quotient(scheme, sub);
                if (!check_axioms(q).ok || !check_finiteness(q).ok) {
                    why = "(" + entries_str(s) + "): quotient by order-" +
                          std::to_string(sub.size()) + " subgroup fails checks";
                    return false;
                }
                auto hc = hom_closure(q, 0);
                for (const auto& h : hc.hom)
                    if (h.size() != sub.size()) {
                        why = "(" + entries_str(s) + "): quotient hom size " +
                              std::to_string(h.size()) + " != |U| = " +
                              std::to_string(sub.size());
                        return false;
                    }
            }
        }
    }
    // The fully collapsed triangle: one object whose endomorphisms realize
    // the whole order-6 symmetry group.
    auto triangle = seq_of({1, 1, 1});
    auto g = end_group(triangle);
    auto q = quotient(scheme_from_eta(triangle), g.elements);
    if (q.objects.size() != 1 || hom_closure(q, 0).hom.at(0).size() != 6) {
        why = "full triangle quotient: expected 1 object with 6 endomorphisms";
        return false;
    }
    return true;
}

// ---- criterion 6: symbolic matrix and psi identities ----------------------

bool crit_identities(std::string& why) {
    for (int n = 3; n <= 6; ++n)
        for (const auto& r : verify_mu_identities(n))
            if (!r.pass) {
                why = r.name + " fails at n=" + std::to_string(r.n) + ": " + r.detail;
                return false;
            }
    for (int n = 3; n <= 8; ++n)
        for (const auto& r : verify_psi_recurrences(n))
            if (!r.pass) {
                why = r.name + " fails at n=" + std::to_string(r.n) + ": " + r.detail;
                return false;
            }
    return true;
}

// ---- criterion 7: randomized two-way main correspondence ------------------

bool crit_main_theorem(std::string& why) {
    for (int n = 4; n <= 9; ++n) {
        auto rep = verify_main_theorem(n, 100, 1000 + static_cast<std::uint64_t>(n));
        if (!rep.ok || !rep.converse_ok || rep.results.size() != 100 ||
            rep.converse_sequences != catalan_oracle(n - 2)) {
            std::ostringstream os;
            os << "n=" << n << ": ok=" << rep.ok << " converse_ok=" << rep.converse_ok
               << " trials=" << rep.results.size() << " converse=" << rep.converse_sequences;
            why = os.str();
            return false;
        }
        for (const auto& t : rep.results)
            if (!t.skipped && (!t.eta_identity || !t.finiteness || !t.psi_match)) {
                why = "n=" + std::to_string(n) + " trial " + std::to_string(t.trial) +
                      " failed a sub-check";
                return false;
            }
    }
    return true;
}

// ---- criterion 8: Grassmannian point minors -------------------------------

template <typename K>
bool zmatrix_minors_ok(const std::vector<K>& c, std::string& why) {
    const int n = static_cast<int>(c.size());
    auto z = z_matrix(c);
    auto fail = [&](const std::string& which) {
        why = "minor " + which + " wrong for a length-" + std::to_string(n) + " sequence";
        return false;
    };
    for (int i = 0; i + 1 < n; ++i)
        if (z_det(z, i, i + 1) != K(1))
            return fail("(i,i+1)");
    for (int i = 0; i + 2 < n; ++i)
        if (z_det(z, i, i + 2) != c[static_cast<std::size_t>(i)])
            return fail("(i,i+2)");
    if (z_det(z, n - 2, 0) != -c[static_cast<std::size_t>(n) - 2])
        return fail("(n-2,0)");
    if (z_det(z, n - 1, 1) != -c[static_cast<std::size_t>(n) - 1])
        return fail("(n-1,1)");
    if (z_det(z, n - 1, 0) != K(-1))
        return fail("(n-1,0)");
    return true;
}

bool crit_zmatrix(std::string& why) {
    for (int n = 3; n <= 8; ++n)
        for (const auto& s : enumerate_eta_sequences(n))
            if (!zmatrix_minors_ok(s.entries(), why))
                return false;
    std::vector<Rational> rational{4, Rational(1, 2), 4, Rational(1, 2)};
    return zmatrix_minors_ok(rational, why);
}

// ---- criterion 9: rotation periods ----------------------------------------

bool crit_periods(std::string& why) {
    for (int n = 3; n <= 12; ++n)
        for (const auto& s : enumerate_eta_sequences(n)) {
            int r = period(s).second;
            if (r != 1 && r != 2 && r != 3) {
                why = "(" + entries_str(s) + ") has period " + std::to_string(r);
                return false;
            }
        }
    if (period(seq_of({3, 1, 3, 1, 3, 1})).second != 3) {
        why = "(3,1,3,1,3,1) should have period 3";
        return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        double budget_seconds; // 0 means no stated bound
        bool (*body)(std::string&);
    };
    const Criterion criteria[] = {
        {"classification counts", 60, crit_counts},
        {"example root sets", 0, crit_example_roots},
        {"axiom suite", 120, crit_axioms},
        {"root properties", 0, crit_root_properties},
        {"quotient table", 0, crit_quotients},
        {"symbolic identities", 120, crit_identities},
        {"main theorem", 300, crit_main_theorem},
        {"z-matrix minors", 0, crit_zmatrix},
        {"periodicity", 0, crit_periods},
    };

    int failures = 0;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.body(why);
        } catch (const std::exception& e) {
            why = std::string("unexpected exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
            pass = false;
            std::ostringstream os;
            os << "exceeded the " << c.budget_seconds << "s budget";
            why = os.str();
        }
        if (!pass)
            ++failures;
        std::printf("criterion %d %s: %s (%.2fs)%s%s\n", number, c.label,
                    pass ? "PASS" : "FAIL", secs, why.empty() ? "" : " ", why.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %d criteria passed\n",
                    static_cast<int>(sizeof criteria / sizeof criteria[0]));
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
