#include <doctest.h>

#include <weylgr/json_io.hpp>

#include <vector>

using namespace weylgr;

namespace {

EtaSequence seq(std::initializer_list<int> xs) {
    std::vector<BigInt> v;
    for (int x : xs)
        v.emplace_back(x);
    return EtaSequence::checked(std::move(v));
}

} // namespace

TEST_CASE("sequences serialize compactly and round-trip") {
    auto s = seq({2, 1, 2, 1});
    CHECK(to_json(s) == R"({"n":4,"entries":[2,1,2,1]})");
    CHECK(eta_sequence_from_json(to_json(s)).entries() == s.entries());

    CHECK_THROWS_WITH_AS(eta_sequence_from_json("{"), doctest::Contains("parse"), error);
    CHECK_THROWS_WITH_AS(eta_sequence_from_json(R"({"entries":[1,1,1]})"),
                         doctest::Contains("parse"), error);
    CHECK_THROWS_WITH_AS(eta_sequence_from_json(R"({"n":5,"entries":[2,1,2,1]})"),
                         doctest::Contains("disagrees"), error);
    CHECK_THROWS_WITH_AS(eta_sequence_from_json(R"({"n":4,"entries":[1,1,1,1]})"),
                         doctest::Contains("invalid-eta-sequence"), error);
}

TEST_CASE("triangulations serialize 1-based and round-trip") {
    auto t = Triangulation::fan(5, 0);
    CHECK(to_json(t) == R"({"n":5,"diagonals":[[1,3],[1,4]]})");
    CHECK(triangulation_from_json(to_json(t)).diagonals() == t.diagonals());

    // unsorted vertex pairs are accepted and canonicalized
    auto t2 = triangulation_from_json(R"({"n":5,"diagonals":[[4,1],[3,1]]})");
    CHECK(to_json(t2) == to_json(t));

    CHECK_THROWS_WITH_AS(triangulation_from_json(R"({"n":5,"diagonals":[[1,3,4]]})"),
                         doctest::Contains("pairs"), error);
    CHECK_THROWS_WITH_AS(triangulation_from_json(R"({"n":5,"diagonals":[[1,3]]})"),
                         doctest::Contains("not-a-triangulation"), error);
    CHECK_THROWS_WITH_AS(triangulation_from_json(R"({"n":5,"diagonals":[[1,3],[2,4]]})"),
                         doctest::Contains("not-a-triangulation"), error);
}

TEST_CASE("schemes serialize with 1-based objects and round-trip bytewise") {
    auto s = scheme_from_eta(seq({1, 1, 1}));
    std::string j = to_json(s);
    CHECK(j ==
          R"({"n":3,"objects":6,)"
          R"("cartan":[{"object":1,"c12":"-1","c21":"-1"},{"object":2,"c12":"-1","c21":"-1"},)"
          R"({"object":3,"c12":"-1","c21":"-1"},{"object":4,"c12":"-1","c21":"-1"},)"
          R"({"object":5,"c12":"-1","c21":"-1"},{"object":6,"c12":"-1","c21":"-1"}],)"
          R"("rho":{"rho1":[6,3,2,5,4,1],"rho2":[2,1,4,3,6,5]}})");

    auto parsed = scheme_from_json(j);
    CHECK(to_json(parsed) == j);
    CHECK(parsed.size() == 6);
    CHECK(parsed.c12(0) == Rational(-1));
    CHECK(check_axioms(parsed).ok);
    CHECK(check_finiteness(parsed).ok);

    SUBCASE("quotients carry their member lists") {
        auto q = quotient(s, {DihedralElement::rotation(6, 2)});
        std::string qj = to_json(q);
        CHECK(qj.find(R"("members":[[1,3,5],[2,4,6]])") != std::string::npos);
        CHECK(to_json(scheme_from_json(qj)) == qj);
    }

    SUBCASE("rational schemes keep exact fraction text") {
        std::vector<Rational> c{4, Rational(1, 2), 4, Rational(1, 2)};
        auto r = scheme_from_cvalues(c);
        std::string rj = to_json(r);
        CHECK(rj.find(R"("c12":"-1/2")") != std::string::npos);
        auto back = scheme_from_json(rj);
        CHECK(to_json(back) == rj);
        CHECK(back.c12(0) == Rational(-1, 2));
    }

    SUBCASE("structural parse failures") {
        CHECK_THROWS_WITH_AS(scheme_from_json("not json"), doctest::Contains("parse"),
                             error);
        CHECK_THROWS_WITH_AS(
            scheme_from_json(
                R"({"n":3,"objects":1,"cartan":[{"object":1,"c12":"-1","c21":"-1"}],)"
                R"("rho":{"rho1":[2],"rho2":[1]}})"),
            doctest::Contains("rho target out of range"), error);
        CHECK_THROWS_WITH_AS(
            scheme_from_json(R"({"n":3,"objects":2,"cartan":[],"rho":{}})"),
            doctest::Contains("cartan list length"), error);
    }
}

TEST_CASE("chord labelings list only valued chords") {
    ChordLabeling lab(4);
    lab.set(Chord{0, 2}, Rational(2, 5));
    CHECK(to_json(lab) ==
          R"({"n":4,"chords":[{"i":1,"j":2,"value":"1"},{"i":1,"j":3,"value":"2/5"},)"
          R"({"i":1,"j":4,"value":"1"},{"i":2,"j":3,"value":"1"},{"i":3,"j":4,"value":"1"}]})");

    auto back = labeling_from_json(to_json(lab));
    CHECK(to_json(back) == to_json(lab));
    CHECK(back.at(Chord{0, 2}) == Rational(2, 5));
    CHECK(!back.has(Chord{1, 3}));

    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"n":4,"chords":[{"i":1,"j":1,"value":"1"}]})"),
                         doctest::Contains("index-error"), error);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"n":4,"chords":[{"i":1,"j":3,"value":"x"}]})"),
                         doctest::Contains("parse"), error);
}

TEST_CASE("root sequences serialize with their object") {
    auto roots = roots_from_scheme(scheme_from_eta(seq({1, 1, 1})), 0);
    CHECK(roots_to_json(1, roots) == R"({"object":1,"roots":[[0,1],[1,1],[1,0]]})");
}

TEST_CASE("the flip graph renders as DOT") {
    auto dot = flip_graph_dot(flip_graph(4));
    CHECK(dot.find("graph flips {") == 0);
    CHECK(dot.find("(1,3)") != std::string::npos);
    CHECK(dot.find("(2,4)") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
    CHECK(dot.back() == '\n');

    CHECK(flip_graph_dot(flip_graph(3)).find("(none)") != std::string::npos);
}

TEST_CASE("the object change diagram renders as DOT") {
    auto s = scheme_from_eta(seq({1, 1, 1}));
    auto dot = object_diagram_dot(s);
    CHECK(dot.find("graph objects {") == 0);
    CHECK(dot.find("a1 [label=\"1: c12=-1, c21=-1\"]") != std::string::npos);
    CHECK(dot.find("a1 -- a6 [label=\"1\"];") != std::string::npos);
    CHECK(dot.find("a1 -- a2 [label=\"2\"];") != std::string::npos);

    // chain quotients show their loop ends as self-edges
    auto chain = quotient(s, {DihedralElement::reflection(6, 1)});
    auto cdot = object_diagram_dot(chain);
    CHECK(cdot.find("a1 -- a1") != std::string::npos);
}
