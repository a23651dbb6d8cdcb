#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclesat {

// Exact rational on 64-bit parts (128-bit intermediates), always reduced
// with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    long long floor() const;
    long long ceil() const;
    std::string str() const;
};

// The piecewise-linear rate g on (0,1]:
//   1 + x/2            on [1/2, 1],
//   1 + kx/2           on (1/(2k), 2/(4k-3)],
//   2 - (3k-3)x/2      on (2/(4k-3), 1/(2k-2)]      for k >= 2.
// Exact; throws outside (0,1].
Rational g_value(const Rational& x);

// (r-1)(n-1)/2, the edge maximum for graphs with no cycle of length >= r.
Rational erdos_gallai_bound(long long n, long long r);

struct SatBound {
    long long n = 0, r = 0;
    long long lower = 0;
    std::string lower_source;
    std::optional<long long> upper;
    std::string upper_source;
    std::optional<long long> exact;
    std::string exact_source;
    std::vector<std::string> notes;
};

// Sharpest applicable bracket for the minimum size of a saturated graph:
// exact closed forms for r = 3,4,5,6 and for 56 <= r <= n <= 2r; elsewhere
// the best proven lower bound paired with the construction's edge count.
SatBound sat_bounds(long long n, long long r);

// Reference table for single-cycle saturation numbers (r in {3,4,5} and
// r = n), nullopt outside the proven ranges.
std::optional<long long> known_single_cycle_sat(long long n, long long r);

}  // namespace cyclesat
