#include "nicerat/rat.hpp"

#include <algorithm>
#include <cctype>

namespace nicerat {

Rat rat_from_string(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty input");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string decimal_string(const Rat& value, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
    Int scale = pow_int(10, static_cast<unsigned long>(digits));
    Int num = numer(value) * scale;
    const Int& den = denom(value);
    // round half away from zero
    Int scaled, rem;
    Int n_abs = abs(num);
    mpz_fdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), n_abs.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) scaled += 1;
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<size_t>(digits))
            body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<size_t>(digits), ".");
    }
    if (sgn(value) < 0 && scaled != 0) body.insert(0, "-");
    return body;
}

namespace {

// Simplest rational in the open interval (lo, hi) with 0 <= lo < hi.
Rat simplest_nonneg(const Rat& lo, const Rat& hi) {
    // smallest integer strictly greater than lo
    Int n = is_integer(lo) ? Int(numer(lo) + 1) : ceil_rat(lo);
    if (Rat(n) < hi) return Rat(n);
    // No integer inside: lo, hi share the integer part fl and hi <= fl+1.
    // x in (lo, hi) <=> x = fl + 1/y with y in (1/(hi-fl), 1/(lo-fl)),
    // the upper bound read as +infinity when lo = fl.
    Int fl = floor_rat(lo);
    Rat frac_lo = lo - Rat(fl);
    Rat frac_hi = hi - Rat(fl);
    Rat y_lo = Rat(1) / frac_hi;
    Rat y = (frac_lo == 0) ? Rat(floor_rat(y_lo) + 1)
                           : simplest_nonneg(y_lo, Rat(1) / frac_lo);
    return Rat(fl) + Rat(1) / y;
}

}  // namespace

Rat simplest_rat_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rat_between: empty interval");
    if (lo < 0 && hi > 0) return Rat(0);
    if (lo >= 0) return simplest_nonneg(lo, hi);
    return -simplest_nonneg(-hi, -lo);
}

}  // namespace nicerat
