#pragma once

// Exact arithmetic substrate. Everything in this library computes over
// arbitrary-precision integers and rationals; no floating point is used
// anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qring {

using Int = boost::multiprecision::cpp_int;

// Canonical rational: reduced, denominator > 0 (maintained by the backend).
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }
inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int int_pow(Int base, std::uint32_t e) {
    Int result = 1;
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

inline Rat rat_pow(const Rat& base, std::uint32_t e) {
    return Rat(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

/// All positive divisors of |v|, ascending. Trial division; `step_limit`
/// caps the number of candidate divisors probed. Returns empty when v == 0
/// or the limit is hit (the caller must treat that as "unknown").
inline std::vector<Int> positive_divisors(Int v, std::uint64_t step_limit = 2'000'000) {
    std::vector<Int> small, large;
    if (v == 0) return {};
    if (v < 0) v = -v;
    Int d = 1;
    std::uint64_t steps = 0;
    while (d * d <= v) {
        if (++steps > step_limit) return {};
        if (v % d == 0) {
            small.push_back(d);
            Int q = v / d;
            if (q != d) large.push_back(q);
        }
        ++d;
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace qring
