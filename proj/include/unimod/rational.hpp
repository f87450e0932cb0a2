#ifndef UNIMOD_RATIONAL_HPP
#define UNIMOD_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace unimod {

using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" in lowest terms; integers render without the "/1".
inline std::string rat_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

inline Rational pow2(long e) {
    Rational q;
    if (e >= 0) {
        mpz_ui_pow_ui(mpq_numref(q.get_mpq_t()), 2, static_cast<unsigned long>(e));
    } else {
        mpz_set_ui(mpq_numref(q.get_mpq_t()), 1);
        mpz_ui_pow_ui(mpq_denref(q.get_mpq_t()), 2, static_cast<unsigned long>(-e));
    }
    return q;
}

inline double rat_to_double(const Rational& q) { return q.get_d(); }

}  // namespace unimod

#endif
