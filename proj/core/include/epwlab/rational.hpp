#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace epwlab {

// Exact arithmetic over Q. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q" or a plain integer string.
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline long rat_long(const Rat& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw std::domain_error("rat_long: not a small integer");
    return q.get_num().get_si();
}

} // namespace epwlab
