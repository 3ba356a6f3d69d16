#include "fanorat/fq_poly.hpp"

#include <algorithm>

namespace fanorat {
namespace fqp {

void trim(const FqField& f, FqPoly& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

int deg(const FqField& f, const FqPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!f.is_zero(a[static_cast<std::size_t>(i)])) return i;
  return -1;
}

bool is_zero(const FqField& f, const FqPoly& a) { return deg(f, a) < 0; }

FqPoly add(const FqField& f, const FqPoly& a, const FqPoly& b) {
  FqPoly c(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.add(c[i], b[i]);
  trim(f, c);
  return c;
}

FqPoly sub(const FqField& f, const FqPoly& a, const FqPoly& b) {
  FqPoly c(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
  trim(f, c);
  return c;
}

FqPoly mul(const FqField& f, const FqPoly& a, const FqPoly& b) {
  int da = deg(f, a), db = deg(f, b);
  if (da < 0 || db < 0) return {};
  FqPoly c(static_cast<std::size_t>(da + db + 1), f.zero());
  for (int i = 0; i <= da; ++i) {
    if (f.is_zero(a[static_cast<std::size_t>(i)])) continue;
    for (int j = 0; j <= db; ++j)
      c[static_cast<std::size_t>(i + j)] = f.add(
          c[static_cast<std::size_t>(i + j)],
          f.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
  }
  return c;
}

FqPoly scale(const FqField& f, FqElem c, const FqPoly& a) {
  if (f.is_zero(c)) return {};
  FqPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  trim(f, r);
  return r;
}

FqPoly monic(const FqField& f, const FqPoly& a) {
  int d = deg(f, a);
  if (d < 0) return {};
  FqPoly r(a.begin(), a.begin() + d + 1);
  return scale(f, f.inv(r.back()), r);
}

std::pair<FqPoly, FqPoly> divmod(const FqField& f, const FqPoly& a, const FqPoly& b) {
  int db = deg(f, b);
  if (db < 0) throw MathError("polynomial division by zero");
  FqPoly rem = a;
  trim(f, rem);
  int dr = deg(f, rem);
  if (dr < db) return {{}, rem};
  FqPoly quo(static_cast<std::size_t>(dr - db + 1), f.zero());
  FqElem lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  while ((dr = deg(f, rem)) >= db) {
    FqElem c = f.mul(rem[static_cast<std::size_t>(dr)], lead_inv);
    int shift = dr - db;
    quo[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(i + shift)] =
          f.sub(rem[static_cast<std::size_t>(i + shift)],
                f.mul(c, b[static_cast<std::size_t>(i)]));
  }
  trim(f, rem);
  return {quo, rem};
}

FqPoly mod(const FqField& f, const FqPoly& a, const FqPoly& b) {
  return divmod(f, a, b).second;
}

FqPoly gcd(const FqField& f, FqPoly a, FqPoly b) {
  trim(f, a);
  trim(f, b);
  while (!is_zero(f, b)) {
    FqPoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

FqElem eval(const FqField& f, const FqPoly& a, FqElem x) {
  FqElem acc = f.zero();
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    acc = f.add(f.mul(acc, x), a[static_cast<std::size_t>(i)]);
  return acc;
}

FqPoly modpow(const FqField& f, FqPoly base, std::uint64_t e, const FqPoly& m) {
  if (deg(f, m) < 1) throw MathError("modpow modulus must have degree >= 1");
  FqPoly result{f.one()};
  base = mod(f, base, m);
  while (e > 0) {
    if (e & 1) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

namespace {

// Product of the distinct degree-one factors: gcd(a, x^q - x).
FqPoly linear_part(const FqField& f, const FqPoly& a) {
  FqPoly m = monic(f, a);
  if (deg(f, m) < 1) return m;
  FqPoly x{f.zero(), f.one()};
  FqPoly xq = modpow(f, x, f.q(), m);
  return gcd(f, sub(f, xq, x), m);
}

void split_linear(const FqField& f, const FqPoly& a, Rng& rng,
                  std::vector<FqElem>& out) {
  int d = deg(f, a);
  if (d <= 0) return;
  if (d == 1) {
    // monic: x + c0
    out.push_back(f.neg(a[0]));
    return;
  }
  if (f.p() == 2) {
    for (FqElem x : f.all_elements())
      if (f.is_zero(eval(f, a, x))) out.push_back(x);
    return;
  }
  std::uint64_t half = (f.q() - 1) / 2;
  for (;;) {
    FqPoly shifted{f.random(rng), f.one()};
    FqPoly pow = modpow(f, shifted, half, a);
    FqPoly g = gcd(f, sub(f, pow, FqPoly{f.one()}), a);
    int dg = deg(f, g);
    if (dg <= 0 || dg >= d) continue;
    split_linear(f, g, rng, out);
    split_linear(f, divmod(f, a, g).first, rng, out);
    return;
  }
}

}  // namespace

std::vector<FqElem> roots(const FqField& f, const FqPoly& a, Rng& rng) {
  if (is_zero(f, a)) throw MathError("roots of the zero polynomial");
  std::vector<FqElem> out;
  split_linear(f, linear_part(f, a), rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_root(const FqField& f, const FqPoly& a) {
  if (is_zero(f, a)) throw MathError("roots of the zero polynomial");
  return deg(f, linear_part(f, a)) >= 1;
}

}  // namespace fqp
}  // namespace fanorat
