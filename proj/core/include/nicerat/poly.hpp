#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nicerat/rat.hpp"

namespace nicerat {

// Dense univariate polynomial with exact rational coefficients, stored
// low-to-high. Invariant: the leading entry is nonzero; the zero polynomial
// is the empty list (degree -1). Immutable value semantics.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) { coeffs_.push_back(c); trim(); }
    Poly(std::initializer_list<Rat> low_to_high) : coeffs_(low_to_high) { trim(); }

    static Poly from_coeffs(std::vector<Rat> low_to_high);
    static Poly constant(const Rat& c) { return Poly(c); }
    static Poly variable();                       // x
    static Poly monomial(int power, const Rat& c = Rat(1));
    static Poly from_roots(std::span<const Rat> roots);  // prod (x - r_i)

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(int power) const;                   // 0 beyond the degree
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;           // Horner, exact

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, Poly p);
    friend Poly operator*(Poly p, const Rat& s) { return s * std::move(p); }
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly derivative() const;

    // p(a x + b), expanded exactly.
    Poly compose_linear(const Rat& a, const Rat& b) const;

    // Exact division over Q: returns (quotient, remainder), divisor nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator/(const Poly& divisor) const { return divmod(divisor).first; }
    Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }

    // Monic greatest common divisor; errors if both inputs are zero.
    static Poly gcd(const Poly& a, const Poly& b);

    Poly monic() const;                           // errors on zero
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool integer_coeffs() const;

    // Positive rational c such that p/c has coprime integer coefficients.
    Rat content() const;                          // errors on zero
    // Integer coefficients, content 1, positive leading coefficient. This is
    // the display/comparison normal form for reported equation polynomials.
    Poly primitive() const;

    Poly squarefree_part() const;                 // p / gcd(p, p')
    // Yun decomposition: list of (squarefree factor, multiplicity) with
    // multiplicities ascending; product of factor^mult = monic(p).
    std::vector<std::pair<Poly, int>> squarefree_decomposition() const;

    // Human-readable form, e.g. "x^2-5x+4"; rational coefficients appear
    // as "p/q".
    std::string str(std::string_view var = "x") const;

    // Accepts both the coefficient-list format "[4, -5, 1]" (entries may be
    // quoted exact strings such as "1/2") and the human form "x^2-5x+4".
    static Poly parse(std::string_view text, std::string_view var = "x");

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace nicerat
