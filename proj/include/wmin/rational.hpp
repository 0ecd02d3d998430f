#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wmin {

using Rational = mpq_class;
using Integer = mpz_class;

// Error hierarchy shared across the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct CatalogError : Error {
    using Error::Error;
};
struct ArithmeticError : Error {
    using Error::Error;
};
struct ResourceError : Error {
    using Error::Error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r)) throw PreconditionError("expected an integer, got " + r.get_str());
    return r.get_num();
}

inline Integer floor_q(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil_q(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long long to_ll(const Integer& z) {
    if (!z.fits_slong_p()) throw ResourceError("integer out of machine range: " + z.get_str());
    return z.get_si();
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw PreconditionError("empty rational literal");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw PreconditionError("bad rational literal: " + s);
    }
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

} // namespace wmin
