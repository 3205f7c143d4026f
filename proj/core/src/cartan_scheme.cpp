#include "weylgr/cartan_scheme.hpp"

namespace weylgr {

CartanScheme<BigInt> scheme_from_eta(const EtaSequence& seq) {
    return scheme_from_cvalues(seq.entries());
}

namespace {

// H consists of the symmetries of the 2n-cycle compatible with the
// alternating generator labels: even rotations and reflections through odd
// anchors (on vertices).  An element fixes the scheme iff it also preserves
// the value labeling on edges; edge p carries c_{p mod n}.
bool rotation_fixes(const EtaSequence& seq, int t) {
    const long n = static_cast<long>(seq.size());
    for (long p = 0; p < n; ++p)
        if (seq.cyclic(p + t) != seq.cyclic(p))
            return false;
    return true;
}

bool reflection_fixes(const EtaSequence& seq, int t) {
    // Vertex reflection v -> t - v sends edge p to edge t - 1 - p.
    const long n = static_cast<long>(seq.size());
    for (long p = 0; p < n; ++p)
        if (seq.cyclic(t - 1 - p) != seq.cyclic(p))
            return false;
    return true;
}

} // namespace

GroupDescriptor end_group(const EtaSequence& seq) {
    const int m = 2 * static_cast<int>(seq.size());
    GroupDescriptor g;
    for (int t = 0; t < m; t += 2)
        if (rotation_fixes(seq, t))
            g.elements.push_back(DihedralElement::rotation(m, t));
    for (int t = 1; t < m; t += 2)
        if (reflection_fixes(seq, t))
            g.elements.push_back(DihedralElement::reflection(m, t));
    std::sort(g.elements.begin(), g.elements.end());

    for (const auto& e : g.elements) {
        if (!e.flip && e.shift > 0) {
            g.generators.push_back(e); // least positive rotation generates them all
            break;
        }
    }
    for (const auto& e : g.elements)
        if (e.flip) {
            g.generators.push_back(e);
            break;
        }
    g.name = dihedral_group_name(g.elements);
    return g;
}

EndGroupPrediction end_group_table(const EtaSequence& seq) {
    auto [block, r] = period(seq);
    const bool block_even = block.size() % 2 == 0;
    const bool type1 = symmetry_type(seq) == SymmetryType::type1;

    EndGroupPrediction p;
    p.rotation_order = block_even ? 2 * r : r;
    p.has_reflection = type1;
    p.order = type1 ? 2 * p.rotation_order : p.rotation_order;
    if (!type1) {
        p.name = p.rotation_order == 1 ? "1" : "Z" + std::to_string(p.rotation_order);
    } else {
        switch (p.rotation_order) {
        case 1:  p.name = "Z2"; break;
        case 2:  p.name = "Z2 x Z2"; break;
        default: p.name = "D" + std::to_string(p.rotation_order); break;
        }
    }
    return p;
}

} // namespace weylgr
