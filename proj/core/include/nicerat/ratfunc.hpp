#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nicerat/poly.hpp"

namespace nicerat {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Strict { off, on };

// Reduced rational function num/den. Construction cancels any common
// polynomial factor and scales so den is primitive with positive leading
// coefficient (monic integer inputs come through unchanged). Strict mode
// additionally enforces the working assumptions for the function families:
// nonconstant num and den, no common factor in the inputs, and a squarefree
// numerator.
class RatFunc {
public:
    RatFunc() : num_(Rat(0)), den_(Rat(1)) {}
    static RatFunc make(Poly num, Poly den, Strict strict = Strict::off);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Rat operator()(const Rat& x) const;  // throws pole_error at poles

    RatFunc reciprocal(Strict strict = Strict::off) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(std::string_view var = "x") const;

private:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

// Advisory notes about assumptions the input does not meet (poles in place
// of the strict-mode errors). Emitted by the CLI in permissive mode.
std::vector<std::string> assumption_warnings(const RatFunc& f);

// Numerator of f' with any factor common to the squared denominator
// cancelled; its zero set is exactly the critical set of f. Sign/content are
// whatever the cancellation produces; use Poly::primitive() for display.
Poly deriv_numerator(const RatFunc& f);

// Numerator of f'' fully reduced against den^3; zero set = inflexion
// candidates.
Poly second_deriv_numerator(const RatFunc& f);

// Substitutes x <- z - n, i.e. shift(f, n)(z) = f(z - n): every distinguished
// point of f moves up by n.
RatFunc shift(const RatFunc& f, const Rat& n);

// The one-parameter family f(z - n) with n symbolic: coefficient of z^j is
// an exact integer polynomial in n.
struct ShiftedFamily {
    RatFunc base;
    std::string symbol = "n";
    std::vector<Poly> num_z;  // index = power of z, entries are polys in n
    std::vector<Poly> den_z;

    RatFunc instantiate(const Rat& n) const { return shift(base, n); }
    std::string str() const;    // "(z^2-(2n+5)z+n^2+5n+4)/(z-n)"
    std::string latex() const;  // "\frac{...}{...}"
};

ShiftedFamily shifted_family(const RatFunc& base, std::string symbol = "n");

}  // namespace nicerat
