#pragma once

#include <gmpxx.h>

#include <string>

namespace jacklab {

// Exact rational scalar. GMP keeps values canonical (reduced fraction,
// positive denominator), which is what every consumer below relies on.
using Rat = mpq_class;

// Parses "p/q" or "p" with optional sign; throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& x);

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

// mpq_class lacks a long long constructor; every integer statistic in this
// project fits a signed long.
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

// The two-argument mpq_class constructor does not canonicalize; this one
// does. Always build fractions through here.
inline Rat rat_frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace jacklab
