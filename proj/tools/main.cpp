#include <CLI11.hpp>
#include <json.hpp>

#include <weylgr/cartan_scheme.hpp>
#include <weylgr/cluster.hpp>
#include <weylgr/eta_sequence.hpp>
#include <weylgr/json_io.hpp>
#include <weylgr/root_sequence.hpp>
#include <weylgr/scalar.hpp>
#include <weylgr/triangulation.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using ordered_json = nlohmann::ordered_json;
using namespace weylgr;

namespace {

// Exit codes per the interface contract: 0 success, 1 a verification check
// failed, 2 usage or input errors.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

int enumeration_cap() {
    if (const char* env = std::getenv("WEYLGR_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 3 && v <= 64)
            return static_cast<int>(v);
    }
    return 14;
}

int usage_error(const std::string& code, const std::string& detail) {
    ordered_json j;
    j["error"] = code;
    j["detail"] = detail;
    std::cerr << j.dump() << "\n";
    return kUsage;
}

int check_polygon_size(int n) {
    const int cap = enumeration_cap();
    if (n < 3 || n > cap)
        return usage_error("invalid-position", "n must be between 3 and " +
                                                   std::to_string(cap) + ", got " +
                                                   std::to_string(n));
    return kOk;
}

// --sequence values are comma-separated integers or rationals ("3,1,2,2,1"
// or "4,1/2,4,1/2").
std::vector<Rational> parse_sequence(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(parse_rational(item));
    if (out.empty())
        throw error(errc::parse, "empty sequence");
    return out;
}

bool all_integral(const std::vector<Rational>& values) {
    for (const auto& v : values)
        if (denominator(v) != 1)
            return false;
    return true;
}

std::vector<BigInt> integral_entries(const std::vector<Rational>& values) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(numerator(v));
    return out;
}

ordered_json entries_json(const std::vector<BigInt>& entries) {
    ordered_json a = ordered_json::array();
    for (const auto& e : entries)
        a.push_back(e.convert_to<long long>());
    return a;
}

ordered_json roots_json(const RootSeq& roots) {
    ordered_json a = ordered_json::array();
    for (const auto& r : roots)
        a.push_back({r.a.convert_to<long long>(), r.b.convert_to<long long>()});
    return a;
}

ordered_json check_json(const std::string& name, const ValidityReport& r) {
    ordered_json j;
    j["name"] = name;
    j["pass"] = r.ok;
    j["code"] = r.code;
    j["detail"] = r.detail;
    return j;
}

ordered_json check_json(const std::string& name, bool pass, const std::string& detail) {
    ordered_json j;
    j["name"] = name;
    j["pass"] = pass;
    j["code"] = "";
    j["detail"] = pass ? "" : detail;
    return j;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(int n, bool canonicalOnly, bool withRoots, bool withEndGroups,
                  bool table) {
    if (int rc = check_polygon_size(n))
        return rc;
    auto all = enumerate_eta_sequences(n);
    std::size_t canonicalCount = 0;
    std::size_t shown = 0;
    for (const auto& s : all) {
        bool canonical = canonical_form(s).entries() == s.entries();
        canonicalCount += canonical;
        if (canonicalOnly && !canonical)
            continue;
        ++shown;
        auto [block, r] = period(s);
        int type = static_cast<int>(symmetry_type(s));
        if (table) {
            std::string line;
            for (std::size_t i = 0; i < s.entries().size(); ++i)
                line += (i ? "," : "") + to_string(s.entries()[i]);
            std::cout << line << "  canonical=" << (canonical ? "yes" : "no")
                      << "  r=" << r << "  type=" << type;
            if (withEndGroups)
                std::cout << "  end=" << end_group(s).name;
            std::cout << "\n";
            continue;
        }
        ordered_json j;
        j["entries"] = entries_json(s.entries());
        j["canonical"] = canonical;
        j["period_r"] = r;
        j["symmetry_type"] = type;
        if (withRoots)
            j["roots"] = roots_json(roots_from_scheme(scheme_from_eta(s), 0));
        if (withEndGroups) {
            auto g = end_group(s);
            ordered_json ej;
            ej["name"] = g.name;
            ej["order"] = g.order();
            j["end_group"] = std::move(ej);
        }
        std::cout << j.dump() << "\n";
    }
    if (table) {
        std::cout << "count=" << all.size() << " canonical=" << canonicalCount << "\n";
    } else {
        ordered_json summary;
        summary["n"] = n;
        summary["count"] = all.size();
        summary["canonical_count"] = canonicalCount;
        std::cout << summary.dump() << "\n";
    }
    return kOk;
}

// ------------------------------------------------------------ triangulations

int cmd_triangulations(int n, bool canonicalOnly, bool dot, bool table) {
    if (int rc = check_polygon_size(n))
        return rc;
    if (dot) {
        std::cout << flip_graph_dot(flip_graph(n));
        return kOk;
    }
    auto all = enumerate_triangulations(n);
    std::size_t canonicalCount = 0;
    for (const auto& t : all) {
        bool canonical = canonical_triangulation(t).diagonals() == t.diagonals();
        canonicalCount += canonical;
        if (canonicalOnly && !canonical)
            continue;
        if (table) {
            std::string line;
            for (const auto& d : t.diagonals())
                line += "(" + std::to_string(d.a + 1) + "," + std::to_string(d.b + 1) + ")";
            if (line.empty())
                line = "(none)";
            std::cout << line << "  canonical=" << (canonical ? "yes" : "no") << "\n";
            continue;
        }
        ordered_json j;
        ordered_json diag = ordered_json::array();
        for (const auto& d : t.diagonals())
            diag.push_back({d.a + 1, d.b + 1});
        j["diagonals"] = std::move(diag);
        j["degrees"] = t.vertex_degrees();
        j["canonical"] = canonical;
        std::cout << j.dump() << "\n";
    }
    if (table) {
        std::cout << "count=" << all.size() << " canonical=" << canonicalCount << "\n";
    } else {
        ordered_json summary;
        summary["n"] = n;
        summary["count"] = all.size();
        summary["canonical_count"] = canonicalCount;
        std::cout << summary.dump() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------- roots

int cmd_roots(const std::string& sequence, int object1) {
    auto values = parse_sequence(sequence);
    if (!all_integral(values))
        return usage_error(errc::invalid_sequence, "roots need an integer sequence");
    auto seq = EtaSequence::checked(integral_entries(values));
    auto scheme = scheme_from_eta(seq);
    if (object1 != 0) {
        if (object1 < 1 || object1 > scheme.size())
            return usage_error(errc::precondition,
                               "object must be between 1 and " +
                                   std::to_string(scheme.size()));
        std::cout << roots_to_json(object1, roots_from_scheme(scheme, object1 - 1))
                  << "\n";
        return kOk;
    }
    for (int a = 0; a < scheme.size(); ++a)
        std::cout << roots_to_json(a + 1, roots_from_scheme(scheme, a)) << "\n";
    return kOk;
}

// --------------------------------------------------------------------- verify

template <typename K>
std::pair<ordered_json, bool> closure_check(const CartanScheme<K>& s) {
    try {
        auto cl = hom_closure(s, 0);
        std::size_t want = cl.hom.empty() ? 0 : cl.hom[0].size();
        for (const auto& h : cl.hom)
            if (h.size() != want)
                return {check_json("hom-closure", false,
                                   "morphism counts differ between source objects"),
                        false};
        ordered_json j = check_json("hom-closure", true, "");
        j["detail"] = "morphisms per source object: " + std::to_string(want);
        return {j, true};
    } catch (const error& e) {
        return {check_json("hom-closure", false, e.what()), false};
    }
}

int finish_verify(ordered_json& report, bool allPass) {
    report["ok"] = allPass;
    std::cout << report.dump() << "\n";
    return allPass ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& sequence, const std::string& schemeFile, bool allChecks,
               bool dot) {
    ordered_json report;
    ordered_json checks = ordered_json::array();
    bool allPass = true;
    auto add = [&](ordered_json c) {
        allPass = allPass && c.at("pass").get<bool>();
        checks.push_back(std::move(c));
    };

    if (!schemeFile.empty()) {
        std::ifstream in(schemeFile);
        if (!in)
            return usage_error(errc::parse, "cannot read " + schemeFile);
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto scheme = scheme_from_json(buffer.str());
        report["input"] = ordered_json{{"kind", "scheme"}, {"objects", scheme.size()}};
        if (dot) {
            std::cout << object_diagram_dot(scheme);
            return kOk;
        }
        add(check_json("axioms", check_axioms(scheme)));
        add(check_json("finiteness", check_finiteness(scheme)));
        if (allChecks)
            add(closure_check(scheme).first);
        report["checks"] = std::move(checks);
        return finish_verify(report, allPass);
    }

    auto values = parse_sequence(sequence);
    ordered_json input;
    input["kind"] = "sequence";
    ordered_json ev = ordered_json::array();
    for (const auto& v : values)
        ev.push_back(to_string(v));
    input["entries"] = std::move(ev);
    report["input"] = std::move(input);

    if (all_integral(values)) {
        auto entries = integral_entries(values);
        auto scheme = scheme_from_cvalues(entries);
        if (dot) {
            std::cout << object_diagram_dot(scheme);
            return kOk;
        }
        auto validity = EtaSequence::validate(entries);
        add(check_json("sequence", validity));
        add(check_json("axioms", check_axioms(scheme)));
        add(check_json("finiteness", check_finiteness(scheme)));
        if (allChecks && validity.ok) {
            auto seq = EtaSequence::checked(entries);
            bool rootsOk = true;
            std::string rootsDetail;
            for (int a = 0; a < scheme.size() && rootsOk; ++a) {
                auto f = validate_F(roots_from_scheme(scheme, a));
                if (!f.ok) {
                    rootsOk = false;
                    rootsDetail = "object " + std::to_string(a + 1) + ": " + f.code;
                }
            }
            add(check_json("roots", rootsOk, rootsDetail));
            auto brute = end_group(seq);
            auto predicted = end_group_table(seq);
            bool endOk = brute.name == predicted.name && brute.order() == predicted.order;
            add(check_json("end-group", endOk,
                           "computed " + brute.name + ", table says " + predicted.name));
            add(closure_check(scheme).first);
        }
    } else {
        auto scheme = scheme_from_cvalues(values);
        if (dot) {
            std::cout << object_diagram_dot(scheme);
            return kOk;
        }
        add(check_json("axioms", check_axioms(scheme)));
        add(check_json("finiteness", check_finiteness(scheme)));
        if (allChecks)
            add(closure_check(scheme).first);
    }
    report["checks"] = std::move(checks);
    return finish_verify(report, allPass);
}

// ------------------------------------------------------------------ quotients

int cmd_quotients(const std::string& sequence) {
    auto values = parse_sequence(sequence);
    if (!all_integral(values))
        return usage_error(errc::invalid_sequence, "quotients need an integer sequence");
    auto seq = EtaSequence::checked(integral_entries(values));
    auto scheme = scheme_from_eta(seq);
    auto group = end_group(seq);
    const int m = 2 * static_cast<int>(seq.size());
    bool allPass = true;
    for (const auto& U : enumerate_subgroups(group.elements, m)) {
        auto q = quotient(scheme, U);
        auto axioms = check_axioms(q);
        auto finiteness = check_finiteness(q);
        allPass = allPass && axioms.ok && finiteness.ok;
        ordered_json gens = ordered_json::array();
        for (const auto& e : U)
            if (!e.is_identity())
                gens.push_back(e.to_string());
        ordered_json j;
        j["subgroup"] = ordered_json{{"name", dihedral_group_name(U)},
                                     {"order", U.size()},
                                     {"elements", std::move(gens)}};
        j["objects"] = q.size();
        j["axioms"] = axioms.ok;
        j["finiteness"] = finiteness.ok;
        j["end_order"] = hom_closure(q, 0).hom[0].size();
        std::cout << j.dump() << "\n";
    }
    ordered_json summary;
    summary["group"] = group.name;
    summary["order"] = group.order();
    summary["ok"] = allPass;
    std::cout << summary.dump() << "\n";
    return allPass ? kOk : kCheckFailed;
}

// -------------------------------------------------------------------- cluster

ordered_json identity_json(const IdentityReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

int run_identity_suite(int n, bool& allPass) {
    for (const auto& r : verify_mu_identities(n)) {
        allPass = allPass && r.pass;
        std::cout << identity_json(r).dump() << "\n";
    }
    for (const auto& r : verify_psi_recurrences(n)) {
        allPass = allPass && r.pass;
        std::cout << identity_json(r).dump() << "\n";
    }
    return kOk;
}

ordered_json trial_json(const TrialResult& t) {
    ordered_json j;
    j["trial"] = t.trial;
    j["status"] = t.skipped ? "skipped" : "ok";
    if (t.skipped) {
        j["blocking"] = {t.blocking.a + 1, t.blocking.b + 1};
    } else {
        ordered_json cv = ordered_json::array();
        for (const auto& c : t.cvalues)
            cv.push_back(to_string(c));
        j["cvalues"] = std::move(cv);
        j["eta_identity"] = t.eta_identity;
        j["finiteness"] = t.finiteness;
        j["psi_match"] = t.psi_match;
    }
    return j;
}

int cmd_cluster(int n, int trials, std::uint64_t seed, int range, bool identities,
                const std::string& labelingFile) {
    if (int rc = check_polygon_size(n))
        return rc;
    bool allPass = true;

    if (identities)
        run_identity_suite(n, allPass);

    if (!labelingFile.empty()) {
        // one explicit completion: the valued diagonals are the seed
        std::ifstream in(labelingFile);
        if (!in)
            return usage_error(errc::parse, "cannot read " + labelingFile);
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto lab = labeling_from_json(buffer.str());
        std::map<Chord, Rational> values;
        std::vector<Chord> diagonals;
        for (const auto& c : lab.chords())
            if (lab.has(c) && is_diagonal(lab.n(), c)) {
                values.emplace(c, lab.at(c));
                diagonals.push_back(c);
            }
        auto seedTri = Triangulation::checked(lab.n(), std::move(diagonals));
        TrialResult tr;
        try {
            auto completed = ptolemy_complete(seedTri, values);
            tr.cvalues = cvalues_from_labeling(completed);
            tr.eta_identity = true;
            Mat2<Rational> m = identity<Rational>();
            for (const auto& c : tr.cvalues)
                m = eta(c) * m;
            tr.eta_identity = m == -identity<Rational>();
            tr.finiteness = static_cast<bool>(check_finiteness(scheme_from_cvalues(tr.cvalues)));
            tr.psi_match = true;
            ChordLabeling shape(lab.n());
            std::map<std::string, Rational> assign;
            for (int i = 0; i + 2 < lab.n(); ++i)
                assign["c" + std::to_string(i + 1)] = tr.cvalues[static_cast<std::size_t>(i)];
            for (const auto& c : shape.chords())
                if (psi_poly(c.a, c.b, lab.n()).eval(assign) != completed.at(c)) {
                    tr.psi_match = false;
                    break;
                }
        } catch (const division_by_zero_error& e) {
            tr.skipped = true;
            tr.blocking = e.chord;
        }
        allPass = allPass && tr.ok();
        std::cout << trial_json(tr).dump() << "\n";
        ordered_json summary;
        summary["n"] = lab.n();
        summary["trials"] = 1;
        summary["skipped"] = tr.skipped ? 1 : 0;
        summary["ok"] = allPass;
        std::cout << summary.dump() << "\n";
        return allPass ? kOk : kCheckFailed;
    }

    if (trials > 0) {
        auto report = verify_main_theorem(n, trials, seed, range);
        std::size_t skipped = 0;
        for (const auto& t : report.results) {
            skipped += t.skipped;
            std::cout << trial_json(t).dump() << "\n";
        }
        allPass = allPass && report.ok;
        ordered_json summary;
        summary["n"] = report.n;
        summary["trials"] = report.trials;
        summary["seed"] = report.rng_seed;
        summary["range"] = report.value_range;
        summary["skipped"] = skipped;
        summary["converse_sequences"] = report.converse_sequences;
        summary["converse_ok"] = report.converse_ok;
        summary["ok"] = allPass;
        std::cout << summary.dump() << "\n";
    } else if (identities) {
        ordered_json summary;
        summary["n"] = n;
        summary["ok"] = allPass;
        std::cout << summary.dump() << "\n";
    } else {
        return usage_error(errc::precondition,
                           "nothing to do: pass --trials, --identities or --labeling");
    }
    return allPass ? kOk : kCheckFailed;
}

// ----------------------------------------------------------------- identities

int cmd_identities(int maxN) {
    const int cap = enumeration_cap();
    if (maxN < 3 || maxN > cap)
        return usage_error(errc::precondition, "--max-n must be between 3 and " +
                                                   std::to_string(cap));
    bool allPass = true;
    for (int n = 3; n <= maxN; ++n)
        run_identity_suite(n, allPass);
    ordered_json summary;
    summary["max_n"] = maxN;
    summary["ok"] = allPass;
    std::cout << summary.dump() << "\n";
    return allPass ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite rank-two Weyl groupoids: enumeration, bijections, verification"};
    app.require_subcommand(1);

    int n = 0;
    bool canonical = false, withRoots = false, withEndGroups = false;
    bool table = false, json = false, dot = false, allChecks = false, identities = false;
    int object1 = 0, trials = 0, range = 6, maxN = 6;
    std::uint64_t seed = 0;
    std::string sequence, schemeFile, labelingFile;

    auto* enumCmd = app.add_subcommand("enumerate", "list the valid sequences of length n");
    enumCmd->add_option("n", n, "sequence length / polygon size")->required();
    enumCmd->add_flag("--canonical", canonical, "only dihedral-orbit representatives");
    enumCmd->add_flag("--with-roots", withRoots, "attach the root sequence at object 1");
    enumCmd->add_flag("--with-end-groups", withEndGroups, "attach End(a) name and order");
    auto* enumJson = enumCmd->add_flag("--json", json, "newline-delimited JSON (default)");
    enumCmd->add_flag("--table", table, "human-readable table")->excludes(enumJson);

    auto* triCmd = app.add_subcommand("triangulations", "list triangulations of the n-gon");
    triCmd->add_option("n", n, "polygon size")->required();
    triCmd->add_flag("--canonical", canonical, "only dihedral-orbit representatives");
    auto* triDot = triCmd->add_flag("--dot", dot, "emit the flip graph as DOT");
    auto* triJson = triCmd->add_flag("--json", json, "newline-delimited JSON (default)");
    triCmd->add_flag("--table", table, "human-readable table")
        ->excludes(triJson)
        ->excludes(triDot);

    auto* rootsCmd = app.add_subcommand("roots", "root sequences of a valid sequence");
    rootsCmd->add_option("--sequence", sequence, "comma-separated entries")->required();
    rootsCmd->add_option("--object", object1, "1-based object (default: all)");

    auto* verifyCmd = app.add_subcommand("verify", "run the axiom and finiteness checks");
    auto* verifySeq = verifyCmd->add_option("--sequence", sequence,
                                            "comma-separated integer or rational entries");
    auto* verifyScheme =
        verifyCmd->add_option("--scheme", schemeFile, "scheme JSON file");
    verifySeq->excludes(verifyScheme);
    verifyCmd->add_flag("--all-checks", allChecks,
                        "also validate roots, End(a) and morphism closure");
    verifyCmd->add_flag("--dot", dot, "emit the object change diagram as DOT");

    auto* quotCmd = app.add_subcommand("quotients", "every symmetry-subgroup quotient");
    quotCmd->add_option("--sequence", sequence, "comma-separated entries")->required();

    auto* clusterCmd =
        app.add_subcommand("cluster", "randomized Grassmannian correspondence checks");
    clusterCmd->add_option("n", n, "polygon size")->required();
    clusterCmd->add_option("--trials", trials, "number of random seed labelings");
    clusterCmd->add_option("--seed", seed, "RNG seed (default 0)");
    clusterCmd->add_option("--range", range, "numerator/denominator magnitude bound");
    clusterCmd->add_flag("--identities", identities, "also run the symbolic identities");
    clusterCmd->add_option("--labeling", labelingFile,
                           "chord labeling JSON: complete it once and report");

    auto* idCmd = app.add_subcommand("identities", "symbolic identity suite");
    idCmd->add_option("--max-n", maxN, "largest cycle length (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (enumCmd->parsed())
            return cmd_enumerate(n, canonical, withRoots, withEndGroups, table);
        if (triCmd->parsed())
            return cmd_triangulations(n, canonical, dot, table);
        if (rootsCmd->parsed())
            return cmd_roots(sequence, object1);
        if (verifyCmd->parsed()) {
            if (sequence.empty() && schemeFile.empty())
                return usage_error(errc::precondition,
                                   "pass --sequence or --scheme");
            return cmd_verify(sequence, schemeFile, allChecks, dot);
        }
        if (quotCmd->parsed())
            return cmd_quotients(sequence);
        if (clusterCmd->parsed())
            return cmd_cluster(n, trials, seed, range, identities, labelingFile);
        if (idCmd->parsed())
            return cmd_identities(maxN);
    } catch (const error& e) {
        return usage_error(e.code(), e.what());
    } catch (const std::exception& e) {
        return usage_error("internal", e.what());
    }
    return kUsage;
}
