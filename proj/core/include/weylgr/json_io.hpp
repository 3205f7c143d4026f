#pragma once

#include <string>

#include "weylgr/cartan_scheme.hpp"
#include "weylgr/cluster.hpp"
#include "weylgr/eta_sequence.hpp"
#include "weylgr/root_sequence.hpp"
#include "weylgr/triangulation.hpp"

namespace weylgr {

// Serialized forms of the library types.  This is the one place where the
// 1-based external convention meets the 0-based internal one: vertices,
// objects and sequence positions are 1-based in JSON and in DOT labels.
// Keys appear in a fixed order and scalars use canonical text ("p" or
// "p/q"), so equal inputs serialize byte-identically.  Parse failures throw
// error with code "parse".

// {"n": 4, "entries": [2, 1, 2, 1]}
std::string to_json(const EtaSequence& seq);
EtaSequence eta_sequence_from_json(const std::string& text);

// {"n": 5, "diagonals": [[1, 3], [1, 4]]}
std::string to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

// {"n": 3, "objects": 6,
//  "cartan": [{"object": 1, "c12": "-1", "c21": "-1"}, ...],
//  "rho": {"rho1": [2, 1, ...], "rho2": [...]},
//  "members": [[1], [2], ...]}        (members only when nontrivial)
std::string to_json(const CartanScheme<BigInt>& s);
std::string to_json(const CartanScheme<Rational>& s);
// Parses into the Rational kind, which subsumes the integer one.
CartanScheme<Rational> scheme_from_json(const std::string& text);

// {"n": 4, "chords": [{"i": 1, "j": 2, "value": "1"}, ...]}; only chords
// that have values are listed.
std::string to_json(const ChordLabeling& lab);
ChordLabeling labeling_from_json(const std::string& text);

// {"object": 1, "roots": [[0, 1], [1, 1], [1, 0]]}
std::string roots_to_json(int object_1based, const RootSeq& roots);

// Undirected DOT graph of triangulations connected by flips; node labels
// list diagonals.
std::string flip_graph_dot(const FlipGraph& g);

// Undirected DOT graph of objects connected by rho edges labeled with the
// generator; loops mark chain ends.
std::string object_diagram_dot(const CartanScheme<BigInt>& s);
std::string object_diagram_dot(const CartanScheme<Rational>& s);

} // namespace weylgr
