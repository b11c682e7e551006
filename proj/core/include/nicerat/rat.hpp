#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nicerat {

// The universal scalar: arbitrary-precision rationals, always kept in
// canonical form (reduced, positive denominator, zero as 0/1).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline const Int& numer(const Rat& q) { return q.get_num(); }
inline const Int& denom(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return denom(q) == 1; }

// Throws unless q is an integer.
inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int: " + q.get_str() + " is not an integer");
    return numer(q);
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), numer(q).get_mpz_t(), denom(q).get_mpz_t());
    return f;
}

inline Int ceil_rat(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), numer(q).get_mpz_t(), denom(q).get_mpz_t());
    return c;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // base canonical => base^e canonical
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Exact k-th root of v, if v is a perfect k-th power (negative v allowed for
// odd k). No floating point involved.
inline std::optional<Int> perfect_kth_root(const Int& v, unsigned k) {
    if (k == 0) throw std::invalid_argument("perfect_kth_root: k = 0");
    if (k % 2 == 0 && v < 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), k);
    if (exact) return r;
    return std::nullopt;
}

// Rational square root: p/q in lowest terms is a square iff p and q both are.
inline std::optional<Rat> sqrt_rat(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto n = perfect_kth_root(numer(q), 2);
    if (!n) return std::nullopt;
    auto d = perfect_kth_root(denom(q), 2);
    if (!d) return std::nullopt;
    return make_rat(*n, *d);
}

// "p/q" (or plain "p") with optional whitespace; exact parse.
Rat rat_from_string(std::string_view text);

// Canonical text form: "p" for integers, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Fixed-point decimal rendering (round half away from zero), e.g.
// decimal_string(-81461/1000, 3) == "-81.461". Used only for the labeled
// approximations of irrational values; never for equality.
std::string decimal_string(const Rat& value, int digits);

// The unique simplest rational strictly inside the open interval (lo, hi),
// where "simplest" means minimal denominator, ties by minimal |numerator|.
// Stern-Brocot / continued-fraction descent; exact.
Rat simplest_rat_between(const Rat& lo, const Rat& hi);

}  // namespace nicerat
