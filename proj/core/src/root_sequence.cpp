#include "weylgr/root_sequence.hpp"

#include <algorithm>
#include <set>

namespace weylgr {

RootSeq mediant_insert(const RootSeq& rs, std::size_t gap) {
    if (gap + 1 >= rs.size())
        throw error(errc::invalid_position,
                    "gap " + std::to_string(gap) + " out of range for length " +
                        std::to_string(rs.size()));
    RootSeq out = rs;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap) + 1, rs[gap] + rs[gap + 1]);
    return out;
}

FValidity validate_F(const RootSeq& rs) {
    auto fail = [](std::string code, std::string detail) {
        FValidity r;
        r.ok = false;
        r.code = std::move(code);
        r.detail = std::move(detail);
        return r;
    };

    if (rs.size() < 3)
        return fail("length", "need at least 3 roots, got " + std::to_string(rs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs[i].a < 0 || rs[i].b < 0)
            return fail("negative-entry",
                        "root " + std::to_string(i) + " is " + rs[i].to_string());
    if (rs.front() != RootVec{0, 1})
        return fail("endpoints", "first root is " + rs.front().to_string() +
                                     ", expected (0,1)");
    if (rs.back() != RootVec{1, 0})
        return fail("endpoints",
                    "last root is " + rs.back().to_string() + ", expected (1,0)");

    FValidity result;
    RootSeq cur = rs;
    while (cur.size() > 3) {
        // The most recently inserted mediant has strictly larger component
        // sum than both of its neighbors, so any interior element of maximal
        // sum must equal its neighbors' sum if the sequence is genuine.
        std::size_t best = 1;
        BigInt bestSum = cur[1].a + cur[1].b;
        for (std::size_t i = 2; i + 1 < cur.size(); ++i) {
            BigInt s = cur[i].a + cur[i].b;
            if (s > bestSum) {
                best = i;
                bestSum = s;
            }
        }
        if (cur[best] != cur[best - 1] + cur[best + 1])
            return fail("not-a-mediant",
                        "element " + std::to_string(best) + " = " +
                            cur[best].to_string() + " is not the mediant of its neighbors " +
                            cur[best - 1].to_string() + ", " + cur[best + 1].to_string());
        result.removal_order.push_back(best);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best));
    }
    if (cur[1] != RootVec{1, 1})
        return fail("base", "irreducible core has middle root " + cur[1].to_string() +
                                ", expected (1,1)");
    return result;
}

RootSeq roots_from_scheme(const CartanScheme<BigInt>& scheme, int object) {
    auto closure = hom_closure(scheme, object);
    std::set<RootVec> all;
    for (const auto& homs : closure.hom)
        for (const auto& M : homs) {
            all.insert({M.a11, M.a21}); // image of alpha_1
            all.insert({M.a12, M.a22}); // image of alpha_2
        }
    RootSeq out;
    for (const auto& v : all)
        if (v.a >= 0 && v.b >= 0)
            out.push_back(v);
    std::sort(out.begin(), out.end(),
              [](const RootVec& x, const RootVec& y) { return x.a * y.b < y.a * x.b; });
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].a * out[i + 1].b == out[i + 1].a * out[i].b)
            throw error(errc::comparison_tie, out[i].to_string() + " and " +
                                                  out[i + 1].to_string() +
                                                  " have equal slope");
    for (const auto& v : out)
        if (gcd(v.a, v.b) != 1)
            throw error(errc::not_a_root, "non-primitive root " + v.to_string());
    return out;
}

SumOfTwo sum_of_two(const RootSeq& rs, const RootVec& v) {
    if (std::find(rs.begin(), rs.end(), v) == rs.end())
        throw error(errc::not_a_root, v.to_string() + " is not in the root sequence");
    if (v == RootVec{0, 1} || v == RootVec{1, 0})
        return {true, 0, 0};
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i; j < rs.size(); ++j)
            if (rs[i] + rs[j] == v)
                return {false, i, j};
    throw error(errc::not_a_root, v.to_string() + " has no two-root decomposition");
}

} // namespace weylgr
