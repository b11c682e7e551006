#include "nicerat/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nicerat {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Rat> low_to_high) {
    Poly p;
    p.coeffs_ = std::move(low_to_high);
    p.trim();
    return p;
}

Poly Poly::variable() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::monomial(int power, const Rat& c) {
    if (power < 0) throw std::invalid_argument("Poly::monomial: negative power");
    if (c == 0) return Poly();
    std::vector<Rat> cs(static_cast<size_t>(power) + 1, Rat(0));
    cs.back() = c;
    return from_coeffs(std::move(cs));
}

Poly Poly::from_roots(std::span<const Rat> roots) {
    Poly p(Rat(1));
    for (const Rat& r : roots) p = p * Poly{-r, Rat(1)};
    return p;
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::invalid_argument("Poly::leading: zero polynomial");
    return coeffs_.back();
}

Rat Poly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(power)];
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly::from_coeffs(std::move(out));
}

Poly operator*(const Rat& s, Poly p) {
    if (s == 0) return Poly();
    for (Rat& c : p.coeffs_) c *= s;
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    return from_coeffs(std::move(out));
}

Poly Poly::compose_linear(const Rat& a, const Rat& b) const {
    // p(ax + b) via Horner in the polynomial (ax + b)
    Poly lin{b, a};
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    Poly rem = *this;
    int dd = divisor.degree();
    if (rem.degree() < dd) return {Poly(), rem};
    std::vector<Rat> quot(static_cast<size_t>(rem.degree() - dd) + 1, Rat(0));
    const Rat& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rat factor = rem.leading() / lead;
        quot[static_cast<size_t>(shift)] = factor;
        // rem -= factor * x^shift * divisor
        for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rem.coeffs_[static_cast<size_t>(shift) + i] -= factor * divisor.coeffs_[i];
        rem.trim();
    }
    return {from_coeffs(std::move(quot)), rem};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("Poly::gcd: both inputs are zero");
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = f % g;
        // primitive-normalize to keep coefficient growth in check
        if (!r.is_zero()) r = r.primitive();
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("Poly::monic: zero polynomial");
    return (Rat(1) / leading()) * (*this);
}

bool Poly::integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

Rat Poly::content() const {
    if (is_zero()) throw std::invalid_argument("Poly::content: zero polynomial");
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const Rat& c : coeffs_) {
        num_gcd = gcd_int(num_gcd, numer(c));
        den_lcm = lcm_int(den_lcm, denom(c));
    }
    return make_rat(num_gcd, den_lcm);
}

Poly Poly::primitive() const {
    if (is_zero()) throw std::invalid_argument("Poly::primitive: zero polynomial");
    Rat c = content();
    if (sgn(leading()) < 0) c = -c;
    return (Rat(1) / c) * (*this);
}

Poly Poly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("Poly::squarefree_part: zero polynomial");
    if (degree() == 0) return Poly(Rat(1));
    Poly g = gcd(*this, derivative());
    return (*this / g).monic();
}

std::vector<std::pair<Poly, int>> Poly::squarefree_decomposition() const {
    if (is_zero())
        throw std::invalid_argument("Poly::squarefree_decomposition: zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    Poly f = monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f / a;
    Poly c = fp / a;
    Poly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), mult);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

}  // namespace nicerat
