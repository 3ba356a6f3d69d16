#include "fanorat/chow.hpp"

#include <algorithm>

namespace fanorat {

DivClass div_add(const DivClass& a, const DivClass& b) {
  if (a.basis != b.basis || a.coeffs.size() != b.coeffs.size())
    throw MathError("divisor class basis mismatch");
  DivClass r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

DivClass div_scale(long long c, const DivClass& a) {
  DivClass r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

std::string div_to_string(const DivClass& a, const std::vector<std::string>& names) {
  if (names.size() != a.coeffs.size()) throw MathError("basis name count mismatch");
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    long long c = a.coeffs[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += std::to_string(c) + "*";
    } else {
      out += c > 0 ? " + " : " - ";
      long long ac = c > 0 ? c : -c;
      if (ac != 1) out += std::to_string(ac) + "*";
    }
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

ProductChowRing::ProductChowRing(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw MathError("product ring needs at least one factor");
  for (int n : dims_) {
    if (n < 1) throw MathError("factor dimension must be positive");
    top_degree_ += n;
  }
}

ProductChowRing::Elt ProductChowRing::one() const {
  return {{std::vector<int>(dims_.size(), 0), Int(1)}};
}

ProductChowRing::Elt ProductChowRing::divisor(const std::vector<long long>& coeffs) const {
  if (coeffs.size() != dims_.size()) throw MathError("divisor coefficient count mismatch");
  Elt r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(dims_.size(), 0);
    e[i] = 1;
    r[std::move(e)] = Int(coeffs[i]);
  }
  return r;
}

ProductChowRing::Elt ProductChowRing::add(const Elt& a, const Elt& b) const {
  Elt r = a;
  for (const auto& [e, c] : b) {
    auto it = r.find(e);
    if (it == r.end()) {
      r[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

ProductChowRing::Elt ProductChowRing::mul(const Elt& a, const Elt& b) const {
  Elt r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(dims_.size());
      bool truncated = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > dims_[i]) {
          truncated = true;
          break;
        }
      }
      if (truncated) continue;
      Int c = ca * cb;
      auto it = r.find(e);
      if (it == r.end()) {
        r[std::move(e)] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

ProductChowRing::Elt ProductChowRing::pow(const Elt& a, int e) const {
  if (e < 0) throw MathError("negative power in Chow ring");
  Elt r = one();
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

Int ProductChowRing::point_coefficient(const Elt& a) const {
  std::vector<int> point(dims_.begin(), dims_.end());
  auto it = a.find(point);
  return it == a.end() ? Int(0) : it->second;
}

Int ProductChowRing::top_intersection(const std::vector<DivClass>& classes) const {
  if (static_cast<int>(classes.size()) != top_degree_)
    throw MathError("top intersection needs degree " + std::to_string(top_degree_) +
                    ", got " + std::to_string(classes.size()) + " divisor factors");
  Elt acc = one();
  for (const auto& cls : classes) {
    if (cls.basis != "H") throw MathError("top intersection expects basis H");
    acc = mul(acc, divisor(cls.coeffs));
  }
  return point_coefficient(acc);
}

CiDegreeResult ci_anticanonical_degree(const std::vector<int>& dims,
                                       const std::vector<std::vector<long long>>& divisors) {
  ProductChowRing ring(dims);
  int ambient_dim = ring.top_degree();
  if (ambient_dim - static_cast<int>(divisors.size()) != 3)
    throw MathError("complete intersection is not three-dimensional");

  CiDegreeResult res;
  res.minus_k.assign(dims.size(), 0);
  for (std::size_t i = 0; i < dims.size(); ++i) res.minus_k[i] = dims[i] + 1;
  for (const auto& d : divisors) {
    if (d.size() != dims.size()) throw MathError("divisor multidegree length mismatch");
    for (std::size_t i = 0; i < dims.size(); ++i) res.minus_k[i] -= d[i];
  }
  res.minus_k_positive =
      std::all_of(res.minus_k.begin(), res.minus_k.end(), [](long long c) { return c > 0; });

  std::vector<DivClass> factors(3, DivClass{"H", res.minus_k});
  for (const auto& d : divisors) factors.push_back(DivClass{"H", d});
  res.degree = ring.top_intersection(factors);
  return res;
}

BlowupTriple divisor_blowup_triple(long long d_cubed, long long d_dot_c,
                                   long long minus_k_dot_c, long long genus_c) {
  return {d_cubed, 0, -d_dot_c, 2 - 2 * genus_c - minus_k_dot_c};
}

BlowupTriple curve_blowup_products(long long minus_k_cubed, long long minus_k_dot_c,
                                   long long genus_c) {
  return divisor_blowup_triple(minus_k_cubed, minus_k_dot_c, minus_k_dot_c, genus_c);
}

BlowupTriple hhe_products(long long g, long long m) {
  if (m != 1 && m != 2)
    throw MathError("uniform blowup triple defined only for m = 1 or m = 2");
  return {2 * g - 2, 0, 2 * (m - 2), m - 1};
}

long long cube_on_blowup(const BlowupTriple& t, long long a, long long b) {
  return a * a * a * t.h3 + 3 * a * a * b * t.h2e + 3 * a * b * b * t.he2 + b * b * b * t.e3;
}

X44Numerology x44_link_numerology(long long g, long long m) {
  X44Numerology r;
  r.anticanonical_cube = 2 * (g - m - 3);
  r.a_square_times_k = 2 * (g - m - 8);
  r.would_be_surface_degree = 7 - m;
  r.deg_b = 8 - 2 * m;
  r.m_in_range = (m == 1 || m == 2);
  return r;
}

DivClass blowup_anticanonical_class() { return {"H,E", {1, -1}}; }
DivClass mobile_class(long long m) { return {"H,E", {1, -(m + 1)}}; }
DivClass residual_class(long long m) { return {"H,E", {1, -(m + 2)}}; }

}  // namespace fanorat
