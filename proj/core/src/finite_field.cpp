#include "fanorat/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace fanorat {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

using PPoly = std::vector<std::uint32_t>;  // coefficients mod p, little endian

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
  ptrim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(b[i]) * lead % p;
        std::uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<std::uint32_t>((cur + p - t) % p);
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() <= db) break;
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return pmod(std::move(r), m, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint32_t p) {
  PPoly r = {1};
  base = pmod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

// Exhaustive irreducibility certificate: no monic divisor of degree <= d/2.
bool is_irreducible_exhaustive(const PPoly& cand, std::uint32_t p, std::uint32_t d) {
  if (d == 1) return true;
  for (std::uint32_t k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;  // p^k monic divisors of degree k
    PPoly div(k + 1, 0);
    div[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < k; ++i) {
        div[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (pmod(cand, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      fs.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

FqField::FqField(std::uint32_t p, std::uint32_t d, std::uint64_t bound) : p_(p), d_(d) {
  if (!is_prime_u32(p)) throw MathError("characteristic " + std::to_string(p) + " is not prime");
  if (d < 1) throw MathError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= p;
    if (q > bound) {
      throw ResourceError("field F_{" + std::to_string(p) + "^" + std::to_string(d) +
                          "} exceeds the cardinality bound " + std::to_string(bound));
    }
  }
  q_ = q;
  ppow_.resize(d + 1);
  ppow_[0] = 1;
  for (std::uint32_t i = 1; i <= d; ++i) ppow_[i] = ppow_[i - 1] * p;

  // Exhaustive modulus search in index order over monic degree-d candidates.
  PPoly cand(d + 1, 0);
  cand[d] = 1;
  bool found = false;
  for (std::uint64_t idx = 0; idx < ppow_[d]; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < d; ++i) {
      cand[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible_exhaustive(cand, p, d)) {
      found = true;
      break;
    }
  }
  if (!found) throw MathError("no irreducible modulus found");  // cannot happen
  modulus_.assign(cand.begin(), cand.end());

  // Multiplicative generator, certified by checking order q-1 against every
  // prime factor of q-1.
  const auto factors = prime_factors(q_ - 1);
  PPoly gen;
  for (std::uint64_t idx = 1; idx < q_; ++idx) {
    PPoly g;
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < d; ++i) {
      g.push_back(static_cast<std::uint32_t>(t % p));
      t /= p;
    }
    ptrim(g);
    bool ok = true;
    for (std::uint64_t f : factors) {
      PPoly e = ppowmod(g, (q_ - 1) / f, cand, p);
      if (e.size() == 1 && e[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (gen.empty() && q_ > 2) throw MathError("no generator found");  // cannot happen

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  PPoly cur = {1};
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    std::uint64_t idx = 0;
    for (std::size_t i = cur.size(); i-- > 0;) idx = idx * p + cur[i];
    exp_[k] = static_cast<std::uint32_t>(idx);
    log_[idx] = static_cast<std::uint32_t>(k);
    if (k + 1 < q_ - 1) cur = pmulmod(cur, gen, cand, p);
  }
}

const FqField& FqField::get(std::uint32_t p, std::uint32_t d, std::uint64_t bound) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, const FqField*> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, d);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  const FqField* f = new FqField(p, d, bound);  // lives for the whole process
  registry.emplace(key, f);
  return *f;
}

FqElem FqField::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > d_) {
    for (std::size_t i = d_; i < digits.size(); ++i)
      if (digits[i] % p_ != 0) throw MathError("digit vector longer than extension degree");
  }
  std::uint64_t idx = 0;
  for (std::size_t i = std::min<std::size_t>(digits.size(), d_); i-- > 0;)
    idx = idx * p_ + digits[i] % p_;
  return {static_cast<std::uint32_t>(idx)};
}

std::vector<std::uint32_t> FqField::digits(FqElem a) const {
  std::vector<std::uint32_t> out(d_);
  std::uint64_t t = a.v;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out[i] = static_cast<std::uint32_t>(t % p_);
    t /= p_;
  }
  return out;
}

FqElem FqField::add(FqElem a, FqElem b) const {
  std::uint64_t ta = a.v, tb = b.v, idx = 0;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint64_t da = ta % p_, db = tb % p_;
    ta /= p_;
    tb /= p_;
    std::uint64_t s = da + db;
    if (s >= p_) s -= p_;
    idx += s * ppow_[i];
  }
  return {static_cast<std::uint32_t>(idx)};
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::neg(FqElem a) const {
  std::uint64_t ta = a.v, idx = 0;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint64_t da = ta % p_;
    ta /= p_;
    idx += (da == 0 ? 0 : p_ - da) * ppow_[i];
  }
  return {static_cast<std::uint32_t>(idx)};
}

std::string FqField::to_string(FqElem a) const {
  if (d_ == 1) return std::to_string(a.v);
  if (a.v == 0) return "0";
  const auto dg = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (dg[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << dg[i];
    } else {
      os << dg[i] << "*t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FqElem FqField::parse(const std::string& s) const {
  std::vector<std::uint32_t> dg(d_, 0);
  std::size_t pos = 0;
  if (s.empty()) throw MathError("empty field element string");
  while (pos < s.size()) {
    std::size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term.empty()) throw MathError("malformed field element string");
    long long coeff = 0;
    std::uint32_t power = 0;
    std::size_t star = term.find('*');
    std::string cpart = star == std::string::npos ? term : term.substr(0, star);
    coeff = std::stoll(cpart);
    if (star != std::string::npos) {
      std::string tpart = term.substr(star + 1);
      if (tpart == "t") {
        power = 1;
      } else if (tpart.rfind("t^", 0) == 0) {
        power = static_cast<std::uint32_t>(std::stoul(tpart.substr(2)));
      } else {
        throw MathError("malformed field element term: " + term);
      }
    }
    if (power >= d_) throw MathError("term power exceeds extension degree");
    long long r = coeff % static_cast<long long>(p_);
    if (r < 0) r += p_;
    dg[power] = static_cast<std::uint32_t>((dg[power] + r) % p_);
  }
  return from_digits(dg);
}

std::string FqField::name() const {
  if (d_ == 1) return "F" + std::to_string(p_);
  return "F" + std::to_string(p_) + "^" + std::to_string(d_);
}

std::vector<FqElem> FqField::all_elements() const {
  std::vector<FqElem> out(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out[i] = {static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<FqElem> enumerate_field(std::uint32_t p, std::uint32_t d, std::uint64_t bound) {
  return FqField::get(p, d, bound).all_elements();
}

const RationalField& RationalField::get() {
  static RationalField f;
  return f;
}

Rational RationalField::pow(const Rational& a, std::uint64_t e) const {
  Rational r(1), b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational RationalField::random(Rng& rng) const {
  return Rational(Int(rng.range(-9, 9)), Int(rng.range(1, 9)));
}

Rational RationalField::random_nonzero(Rng& rng) const {
  Rational r = random(rng);
  while (r == 0) r = random(rng);
  return r;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw MathError("empty rational string");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw MathError("zero denominator in: " + s);
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw MathError("malformed rational string: " + s);
  }
}

std::string format_rational(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

}  // namespace fanorat
