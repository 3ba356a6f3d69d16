#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fanorat/finite_field.hpp"
#include "fanorat/rng.hpp"

namespace fanorat {

// Univariate polynomial over an FqField, little-endian coefficients.
// The zero polynomial is the empty vector; trimmed form has a nonzero
// leading coefficient.
using FqPoly = std::vector<FqElem>;

namespace fqp {

void trim(const FqField& f, FqPoly& a);
int deg(const FqField& f, const FqPoly& a);  // -1 for the zero polynomial
bool is_zero(const FqField& f, const FqPoly& a);

FqPoly add(const FqField& f, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FqField& f, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FqField& f, const FqPoly& a, const FqPoly& b);
FqPoly scale(const FqField& f, FqElem c, const FqPoly& a);
FqPoly monic(const FqField& f, const FqPoly& a);

// Quotient and remainder; the divisor must be nonzero.
std::pair<FqPoly, FqPoly> divmod(const FqField& f, const FqPoly& a, const FqPoly& b);
FqPoly mod(const FqField& f, const FqPoly& a, const FqPoly& b);

// Monic greatest common divisor (zero polynomial if both inputs are zero).
FqPoly gcd(const FqField& f, FqPoly a, FqPoly b);

FqElem eval(const FqField& f, const FqPoly& a, FqElem x);

// base^e mod m by repeated squaring; m must have degree >= 1.
FqPoly modpow(const FqField& f, FqPoly base, std::uint64_t e, const FqPoly& m);

// All distinct roots of a nonzero polynomial in the field itself, sorted by
// element index. Splitting uses seeded equal-degree splitting in odd
// characteristic and an exhaustive scan when the field has characteristic 2.
std::vector<FqElem> roots(const FqField& f, const FqPoly& a, Rng& rng);

// Whether the polynomial has at least one root in the field (gcd with x^q - x).
bool has_root(const FqField& f, const FqPoly& a);

}  // namespace fqp
}  // namespace fanorat
