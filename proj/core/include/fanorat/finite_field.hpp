#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fanorat/ints.hpp"
#include "fanorat/rng.hpp"

namespace fanorat {

// Element of F_{p^d}, stored as the base-p packed index of the coefficient
// vector of its residue polynomial. All arithmetic goes through the owning
// FqField. Indexes from different fields must never be mixed; the field
// object is passed explicitly everywhere.
struct FqElem {
  std::uint32_t v = 0;
  auto operator<=>(const FqElem&) const = default;
};

// F_{p^d} with multiplication via discrete log tables. Construction certifies
// the modulus: p is checked prime by trial division, and the monic modulus of
// degree d (found by exhaustive search in index order) is certified
// irreducible by trial division against every monic polynomial of degree
// <= d/2 over F_p.
class FqField {
 public:
  using Elem = FqElem;

  static constexpr std::uint64_t kDefaultCardinalityBound = 1ull << 21;

  // Shared registry; fields are built once per (p, d) and never destroyed.
  static const FqField& get(std::uint32_t p, std::uint32_t d,
                            std::uint64_t bound = kDefaultCardinalityBound);

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }
  std::uint64_t q() const { return q_; }
  // Monic modulus coefficients c_0..c_d (c_d = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  bool is_zero(Elem a) const { return a.v == 0; }
  bool eq(Elem a, Elem b) const { return a.v == b.v; }

  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;
  std::vector<std::uint32_t> digits(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    std::uint64_t k = log_[a.v] + log_[b.v];
    if (k >= q_ - 1) k -= q_ - 1;
    return {exp_[k]};
  }
  Elem inv(Elem a) const {
    if (a.v == 0) throw MathError("inverse of zero");
    std::uint64_t k = log_[a.v];
    return {exp_[k == 0 ? 0 : q_ - 1 - k]};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    if (a.v == 0) return e == 0 ? one() : zero();
    std::uint64_t k = (static_cast<std::uint64_t>(log_[a.v]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
    return {exp_[k]};
  }
  Elem frobenius(Elem a) const { return pow(a, p_); }

  Elem random(Rng& rng) const { return {static_cast<std::uint32_t>(rng.below(q_))}; }
  Elem random_nonzero(Rng& rng) const { return {static_cast<std::uint32_t>(rng.below(q_ - 1) + 1)}; }

  std::string to_string(Elem a) const;
  Elem parse(const std::string& s) const;

  std::string name() const;
  std::uint32_t characteristic() const { return p_; }

  // Every element exactly once, in index order.
  std::vector<Elem> all_elements() const;

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

 private:
  FqField(std::uint32_t p, std::uint32_t d, std::uint64_t bound);

  std::uint32_t p_ = 0, d_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = index of g^k, 0 <= k < q-1
  std::vector<std::uint32_t> log_;  // log_[idx] for idx != 0
  std::vector<std::uint64_t> ppow_; // p^0..p^d
};

// Enumerates F_{p^d}; refuses fields beyond the cardinality bound.
std::vector<FqElem> enumerate_field(std::uint32_t p, std::uint32_t d,
                                    std::uint64_t bound = FqField::kDefaultCardinalityBound);

// Canonical inclusion of a prime field into an extension of the same
// characteristic. Only degree-one sources are accepted: between two proper
// extensions built independently there is no distinguished embedding.
inline FqElem embed_prime_field(const FqField& src, const FqField& dst, FqElem a) {
  if (src.d() != 1) throw MathError("embedding source must be a prime field");
  if (src.p() != dst.p()) throw MathError("embedding requires equal characteristic");
  return dst.from_int(static_cast<long long>(a.v));
}

// The rationals presented through the same field interface, so that code
// generic over the working field runs over Q and over F_{p^d} unchanged.
class RationalField {
 public:
  using Elem = Rational;

  static const RationalField& get();

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(long long n) const { return Elem(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw MathError("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const;
  // Small random value, numerator in [-9, 9], denominator in [1, 9].
  Elem random(Rng& rng) const;
  Elem random_nonzero(Rng& rng) const;
  std::string to_string(const Elem& a) const { return format_rational(a); }
  Elem parse(const std::string& s) const { return parse_rational(s); }
  std::string name() const { return "Q"; }
  std::uint32_t characteristic() const { return 0; }
};

}  // namespace fanorat
