#include "weylgr/json_io.hpp"

#include <json.hpp>

namespace weylgr {

using ordered_json = nlohmann::ordered_json;

namespace {

long long small_int(const BigInt& x) { return x.convert_to<long long>(); }

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw error(errc::parse, e.what());
    }
}

// Wraps the many ways nlohmann signals a missing/mistyped field.
template <typename F>
auto reading(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        throw error(errc::parse, e.what());
    }
}

template <typename K>
ordered_json scheme_json(const CartanScheme<K>& s) {
    ordered_json j;
    j["n"] = s.n;
    j["objects"] = s.size();
    ordered_json cartan = ordered_json::array();
    for (int a = 0; a < s.size(); ++a) {
        ordered_json entry;
        entry["object"] = a + 1;
        entry["c12"] = to_string(s.c12(a));
        entry["c21"] = to_string(s.c21(a));
        cartan.push_back(std::move(entry));
    }
    j["cartan"] = std::move(cartan);
    ordered_json rho1 = ordered_json::array(), rho2 = ordered_json::array();
    for (int a = 0; a < s.size(); ++a) {
        rho1.push_back(s.rho(1, a) + 1);
        rho2.push_back(s.rho(2, a) + 1);
    }
    j["rho"] = {{"rho1", std::move(rho1)}, {"rho2", std::move(rho2)}};
    bool trivialMembers = true;
    for (const auto& o : s.objects)
        trivialMembers = trivialMembers && o.members.size() == 1;
    if (!trivialMembers) {
        ordered_json members = ordered_json::array();
        for (const auto& o : s.objects) {
            ordered_json m = ordered_json::array();
            for (int v : o.members)
                m.push_back(v + 1);
            members.push_back(std::move(m));
        }
        j["members"] = std::move(members);
    }
    return j;
}

template <typename K>
std::string diagram_dot(const CartanScheme<K>& s) {
    std::string out = "graph objects {\n";
    for (int a = 0; a < s.size(); ++a) {
        out += "  a" + std::to_string(a + 1) + " [label=\"" + std::to_string(a + 1) +
               ": c12=" + to_string(s.c12(a)) + ", c21=" + to_string(s.c21(a)) + "\"];\n";
    }
    for (int a = 0; a < s.size(); ++a)
        for (int g : {1, 2}) {
            int b = s.rho(g, a);
            if (a <= b)
                out += "  a" + std::to_string(a + 1) + " -- a" + std::to_string(b + 1) +
                       " [label=\"" + std::to_string(g) + "\"];\n";
        }
    out += "}\n";
    return out;
}

} // namespace

std::string to_json(const EtaSequence& seq) {
    ordered_json j;
    j["n"] = seq.size();
    ordered_json entries = ordered_json::array();
    for (const auto& e : seq.entries())
        entries.push_back(small_int(e));
    j["entries"] = std::move(entries);
    return j.dump();
}

EtaSequence eta_sequence_from_json(const std::string& text) {
    ordered_json j = parse(text);
    return reading([&] {
        std::vector<BigInt> entries;
        for (const auto& e : j.at("entries"))
            entries.emplace_back(e.get<long long>());
        if (j.at("n").get<std::size_t>() != entries.size())
            throw error(errc::parse, "field n disagrees with the entry count");
        return EtaSequence::checked(std::move(entries));
    });
}

std::string to_json(const Triangulation& t) {
    ordered_json j;
    j["n"] = t.n();
    ordered_json diag = ordered_json::array();
    for (const auto& c : t.diagonals())
        diag.push_back({c.a + 1, c.b + 1});
    j["diagonals"] = std::move(diag);
    return j.dump();
}

Triangulation triangulation_from_json(const std::string& text) {
    ordered_json j = parse(text);
    return reading([&] {
        int n = j.at("n").get<int>();
        std::vector<Chord> diag;
        for (const auto& d : j.at("diagonals")) {
            if (!d.is_array() || d.size() != 2)
                throw error(errc::parse, "diagonal entries must be pairs");
            diag.push_back(Chord::sorted(d.at(0).get<int>() - 1, d.at(1).get<int>() - 1));
        }
        return Triangulation::checked(n, std::move(diag));
    });
}

std::string to_json(const CartanScheme<BigInt>& s) { return scheme_json(s).dump(); }
std::string to_json(const CartanScheme<Rational>& s) { return scheme_json(s).dump(); }

CartanScheme<Rational> scheme_from_json(const std::string& text) {
    ordered_json j = parse(text);
    return reading([&] {
        CartanScheme<Rational> s;
        s.n = j.at("n").get<int>();
        auto count = j.at("objects").get<std::size_t>();
        s.objects.resize(count);
        Rational two(2);
        for (auto& o : s.objects)
            o.cartan = {two, Rational(0), Rational(0), two};
        if (j.at("cartan").size() != count)
            throw error(errc::parse, "cartan list length disagrees with object count");
        for (const auto& entry : j.at("cartan")) {
            auto idx = entry.at("object").get<std::size_t>();
            if (idx < 1 || idx > count)
                throw error(errc::parse, "cartan entry for unknown object");
            auto& o = s.objects[idx - 1];
            o.cartan.a12 = parse_rational(entry.at("c12").get<std::string>());
            o.cartan.a21 = parse_rational(entry.at("c21").get<std::string>());
        }
        const auto& rho = j.at("rho");
        for (int g : {1, 2}) {
            const auto& arr = rho.at(g == 1 ? "rho1" : "rho2");
            if (arr.size() != count)
                throw error(errc::parse, "rho list length disagrees with object count");
            for (std::size_t a = 0; a < count; ++a) {
                auto b = arr.at(a).get<long long>();
                if (b < 1 || b > static_cast<long long>(count))
                    throw error(errc::parse, "rho target out of range");
                s.objects[a].rho[static_cast<std::size_t>(g - 1)] = static_cast<int>(b - 1);
            }
        }
        if (j.contains("members")) {
            const auto& members = j.at("members");
            if (members.size() != count)
                throw error(errc::parse, "members list length disagrees with object count");
            for (std::size_t a = 0; a < count; ++a)
                for (const auto& v : members.at(a))
                    s.objects[a].members.push_back(v.get<int>() - 1);
        } else {
            for (std::size_t a = 0; a < count; ++a)
                s.objects[a].members = {static_cast<int>(a)};
        }
        return s;
    });
}

std::string to_json(const ChordLabeling& lab) {
    ordered_json j;
    j["n"] = lab.n();
    ordered_json chords = ordered_json::array();
    for (const auto& c : lab.chords()) {
        if (!lab.has(c))
            continue;
        ordered_json entry;
        entry["i"] = c.a + 1;
        entry["j"] = c.b + 1;
        entry["value"] = to_string(lab.at(c));
        chords.push_back(std::move(entry));
    }
    j["chords"] = std::move(chords);
    return j.dump();
}

ChordLabeling labeling_from_json(const std::string& text) {
    ordered_json j = parse(text);
    return reading([&] {
        ChordLabeling lab(j.at("n").get<int>());
        for (const auto& entry : j.at("chords"))
            lab.set(Chord::sorted(entry.at("i").get<int>() - 1, entry.at("j").get<int>() - 1),
                    parse_rational(entry.at("value").get<std::string>()));
        return lab;
    });
}

std::string roots_to_json(int object_1based, const RootSeq& roots) {
    ordered_json j;
    j["object"] = object_1based;
    ordered_json list = ordered_json::array();
    for (const auto& r : roots)
        list.push_back({small_int(r.a), small_int(r.b)});
    j["roots"] = std::move(list);
    return j.dump();
}

std::string flip_graph_dot(const FlipGraph& g) {
    std::string out = "graph flips {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        std::string label;
        for (const auto& d : g.nodes[i].diagonals())
            label += "(" + std::to_string(d.a + 1) + "," + std::to_string(d.b + 1) + ")";
        if (label.empty())
            label = "(none)";
        out += "  t" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const auto& [i, j] : g.edges)
        out += "  t" + std::to_string(i) + " -- t" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

std::string object_diagram_dot(const CartanScheme<BigInt>& s) { return diagram_dot(s); }
std::string object_diagram_dot(const CartanScheme<Rational>& s) { return diagram_dot(s); }

} // namespace weylgr
