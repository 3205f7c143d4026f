#include "weylgr/eta_sequence.hpp"

#include <algorithm>
#include <set>

#include "weylgr/triangulation.hpp"

namespace weylgr {

ValidityReport EtaSequence::validate(const std::vector<BigInt>& entries) {
    const std::size_t n = entries.size();
    if (n < 3)
        return ValidityReport::fail("length", "need at least 3 entries, got " +
                                                  std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        if (entries[i] < 1)
            return ValidityReport::fail("positivity",
                                        "entry " + std::to_string(i + 1) + " is " +
                                            entries[i].str());

    // Ascending product eta(c_1)...eta(c_n); partials checked afterwards so
    // the product condition is reported first.
    std::vector<Mat2<BigInt>> partials;
    partials.reserve(n);
    Mat2<BigInt> m = identity<BigInt>();
    for (const auto& c : entries) {
        m = m * eta(c);
        partials.push_back(m);
    }
    if (m != -identity<BigInt>())
        return ValidityReport::fail("eta-product", "product is " + m.to_string() +
                                                       ", expected -identity");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (partials[i].a11 < 0 || partials[i].a21 < 0)
            return ValidityReport::fail(
                "partial-positivity",
                "partial product through entry " + std::to_string(i + 1) +
                    " has first column (" + partials[i].a11.str() + ", " +
                    partials[i].a21.str() + ")");
    return ValidityReport::pass();
}

EtaSequence EtaSequence::checked(std::vector<BigInt> entries) {
    auto report = validate(entries);
    if (!report)
        throw error(errc::invalid_sequence, report.code + ": " + report.detail);
    return EtaSequence(std::move(entries));
}

EtaSequence expand(const EtaSequence& seq, std::size_t gap) {
    const std::size_t n = seq.size();
    if (gap >= n)
        throw error(errc::invalid_position,
                    "gap " + std::to_string(gap) + " out of range for length " +
                        std::to_string(n));
    std::vector<BigInt> e = seq.entries();
    e[gap] += 1;
    e[(gap + 1) % n] += 1;
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(gap) + 1, BigInt(1));
    return EtaSequence::checked(std::move(e));
}

EtaSequence contract(const EtaSequence& seq, std::size_t pos) {
    const std::size_t n = seq.size();
    if (pos >= n)
        throw error(errc::invalid_position,
                    "position " + std::to_string(pos) + " out of range for length " +
                        std::to_string(n));
    if (n == 3)
        throw error(errc::not_contractible, "(1,1,1) is the base sequence");
    if (seq.at(pos) != 1)
        throw error(errc::not_contractible, "entry at position " + std::to_string(pos) +
                                                " is " + seq.at(pos).str() + ", not 1");
    std::vector<BigInt> e = seq.entries();
    e[(pos + n - 1) % n] -= 1;
    e[(pos + 1) % n] -= 1;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(pos));
    return EtaSequence::checked(std::move(e));
}

std::vector<ReduceStep> reduce_to_base(const EtaSequence& seq) {
    std::vector<ReduceStep> steps;
    EtaSequence cur = seq;
    while (cur.size() > 3) {
        // A valid sequence of length >= 4 has an entry 1 with both neighbors
        // >= 2, so contracting the leftmost 1 always succeeds.
        std::size_t pos = 0;
        while (pos < cur.size() && cur.at(pos) != 1)
            ++pos;
        if (pos == cur.size())
            throw error(errc::precondition, "no entry 1 in a sequence of length " +
                                                std::to_string(cur.size()));
        steps.push_back({pos});
        cur = contract(cur, pos);
    }
    return steps;
}

EtaSequence canonical_form(const EtaSequence& seq) {
    const std::size_t n = seq.size();
    std::vector<BigInt> best = seq.entries();
    std::vector<BigInt> rev(best.rbegin(), best.rend());
    for (const auto* base : {&best, &rev}) {
        std::vector<BigInt> rot = *base;
        for (std::size_t k = 0; k < n; ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best)
                best = rot;
        }
    }
    return EtaSequence::checked(std::move(best));
}

std::vector<EtaSequence> enumerate_eta_sequences(int n, bool canonical_only) {
    std::set<EtaSequence> out;
    for (const auto& t : enumerate_triangulations(n)) {
        EtaSequence s = EtaSequence::checked(psi_inverse(t));
        out.insert(canonical_only ? canonical_form(s) : s);
    }
    return {out.begin(), out.end()};
}

std::pair<std::vector<BigInt>, int> period(const EtaSequence& seq) {
    const std::size_t n = seq.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = seq.at(i) == seq.at(i % p);
        if (periodic) {
            std::vector<BigInt> block(seq.entries().begin(),
                                      seq.entries().begin() + static_cast<std::ptrdiff_t>(p));
            return {std::move(block), static_cast<int>(n / p)};
        }
    }
    return {seq.entries(), 1}; // unreachable: p = n always matches
}

SymmetryType symmetry_type(const EtaSequence& seq) {
    const long n = static_cast<long>(seq.size());
    for (long s = 0; s < n; ++s) {
        if (n % 2 == 0 && s % 2 != 0)
            continue; // even n only admits axes through even anchors
        bool symmetric = true;
        for (long p = 0; p < n && symmetric; ++p)
            symmetric = seq.cyclic(s - p) == seq.cyclic(p);
        if (symmetric)
            return SymmetryType::type1;
    }
    return SymmetryType::type2;
}

} // namespace weylgr
