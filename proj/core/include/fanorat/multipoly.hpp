#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanorat/ints.hpp"

namespace fanorat {

// Variables grouped into named, ordered blocks, e.g. {("w1", 3), ("w2", 3)}.
// Multidegrees and homogeneity are tracked per block.
class BlockStructure {
 public:
  BlockStructure() = default;
  explicit BlockStructure(std::vector<std::pair<std::string, int>> blocks)
      : blocks_(std::move(blocks)) {
    for (const auto& [name, size] : blocks_) {
      if (size <= 0) throw MathError("block size must be positive");
      offsets_.push_back(total_);
      total_ += size;
    }
  }

  int total_vars() const { return total_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::string& block_name(int b) const { return blocks_[static_cast<std::size_t>(b)].first; }
  int block_size(int b) const { return blocks_[static_cast<std::size_t>(b)].second; }
  int offset(int b) const { return offsets_[static_cast<std::size_t>(b)]; }
  int var_index(int b, int j) const { return offset(b) + j; }

  int block_of(int var) const {
    for (int b = block_count() - 1; b >= 0; --b)
      if (var >= offset(b)) return b;
    throw MathError("variable index out of range");
  }

  std::string var_name(int var) const {
    int b = block_of(var);
    if (block_size(b) == 1) return block_name(b);
    return block_name(b) + std::to_string(var - offset(b));
  }

  bool operator==(const BlockStructure& o) const { return blocks_ == o.blocks_; }
  bool operator!=(const BlockStructure& o) const { return !(*this == o); }

 private:
  std::vector<std::pair<std::string, int>> blocks_;
  std::vector<int> offsets_;
  int total_ = 0;
};

using ExpVec = std::vector<std::uint16_t>;

// Sparse multivariate polynomial over a field context, terms ordered
// lexicographically by exponent vector. Stored coefficients are nonzero.
template <class F>
class MultiPoly {
 public:
  using Elem = typename F::Elem;
  using TermMap = std::map<ExpVec, Elem>;

  MultiPoly() = default;
  explicit MultiPoly(BlockStructure vars) : vars_(std::move(vars)) {}

  static MultiPoly zero(const BlockStructure& vars) { return MultiPoly(vars); }

  static MultiPoly constant(const F& f, const BlockStructure& vars, const Elem& c) {
    MultiPoly p(vars);
    if (!f.is_zero(c)) p.terms_[ExpVec(static_cast<std::size_t>(vars.total_vars()), 0)] = c;
    return p;
  }

  static MultiPoly variable(const F& f, const BlockStructure& vars, int var) {
    if (var < 0 || var >= vars.total_vars()) throw MathError("variable index out of range");
    MultiPoly p(vars);
    ExpVec e(static_cast<std::size_t>(vars.total_vars()), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.terms_[std::move(e)] = f.one();
    return p;
  }

  static MultiPoly monomial(const F& f, const BlockStructure& vars, const Elem& c,
                            const ExpVec& e) {
    if (static_cast<int>(e.size()) != vars.total_vars())
      throw MathError("exponent vector length mismatch");
    MultiPoly p(vars);
    if (!f.is_zero(c)) p.terms_[e] = c;
    return p;
  }

  const BlockStructure& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Elem coefficient(const F& f, const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? f.zero() : it->second;
  }

  void add_term(const F& f, const ExpVec& e, const Elem& c) {
    if (static_cast<int>(e.size()) != vars_.total_vars())
      throw MathError("exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!f.is_zero(c)) terms_[e] = c;
      return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) terms_.erase(it);
  }

  MultiPoly add(const F& f, const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(f, e, c);
    return r;
  }

  MultiPoly sub(const F& f, const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(f, e, f.neg(c));
    return r;
  }

  MultiPoly neg(const F& f) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = f.neg(c);
    return r;
  }

  MultiPoly scale(const F& f, const Elem& c) const {
    MultiPoly r(vars_);
    if (f.is_zero(c)) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = f.mul(c, v);
    return r;
  }

  MultiPoly mul(const F& f, const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r(vars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        ExpVec e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(f, e, f.mul(ca, cb));
      }
    return r;
  }

  MultiPoly pow(const F& f, int e) const {
    if (e < 0) throw MathError("negative polynomial power");
    MultiPoly r = constant(f, vars_, f.one());
    for (int i = 0; i < e; ++i) r = r.mul(f, *this);
    return r;
  }

  // d/dx_var; in characteristic p the exponent is reduced through the field,
  // so p-th powers differentiate to zero.
  MultiPoly partial_derivative(const F& f, int var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      std::uint16_t k = e[static_cast<std::size_t>(var)];
      if (k == 0) continue;
      Elem c2 = f.mul(c, f.from_int(k));
      if (f.is_zero(c2)) continue;
      ExpVec e2 = e;
      e2[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k - 1);
      r.add_term(f, e2, c2);
    }
    return r;
  }

  Elem evaluate(const F& f, const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != vars_.total_vars())
      throw MathError("evaluation point length mismatch");
    Elem acc = f.zero();
    for (const auto& [e, c] : terms_) {
      Elem t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint16_t k = 0; k < e[i]; ++k) t = f.mul(t, point[i]);
      acc = f.add(acc, t);
    }
    return acc;
  }

  // Substitutes constants for the variables with engaged values; the result
  // lives in the same variable space with those exponents forced to zero.
  MultiPoly partial_evaluate(const F& f,
                             const std::vector<std::optional<Elem>>& values) const {
    if (static_cast<int>(values.size()) != vars_.total_vars())
      throw MathError("evaluation point length mismatch");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Elem t = c;
      ExpVec e2 = e;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!values[i].has_value()) continue;
        for (std::uint16_t k = 0; k < e[i]; ++k) t = f.mul(t, *values[i]);
        e2[i] = 0;
      }
      r.add_term(f, e2, t);
    }
    return r;
  }

  // Full composition: variable i of this polynomial is replaced by subs[i],
  // all of which live in the target variable space.
  MultiPoly substitute(const F& f, const BlockStructure& target,
                       const std::vector<MultiPoly>& subs) const {
    if (static_cast<int>(subs.size()) != vars_.total_vars())
      throw MathError("substitution list length mismatch");
    for (const auto& s : subs)
      if (s.vars() != target) throw MathError("substitution variable space mismatch");
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(f, target, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t = t.mul(f, subs[i].pow(f, e[i]));
      r = r.add(f, t);
    }
    return r;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto k : e) s += k;
      d = std::max(d, s);
    }
    return d;  // -1 for the zero polynomial
  }

  int degree_in_block(const ExpVec& e, int b) const {
    int s = 0;
    for (int j = 0; j < vars_.block_size(b); ++j)
      s += e[static_cast<std::size_t>(vars_.var_index(b, j))];
    return s;
  }

  // Per-block degree vector when the polynomial is homogeneous in every
  // block; nullopt otherwise. The zero polynomial is homogeneous of any
  // multidegree and reports all zeros.
  std::optional<std::vector<int>> block_multidegree() const {
    std::vector<int> deg(static_cast<std::size_t>(vars_.block_count()), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int b = 0; b < vars_.block_count(); ++b) {
        int s = degree_in_block(e, b);
        if (first)
          deg[static_cast<std::size_t>(b)] = s;
        else if (deg[static_cast<std::size_t>(b)] != s)
          return std::nullopt;
      }
      first = false;
    }
    return deg;
  }

  std::string to_string(const F& f) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_.var_name(static_cast<int>(i));
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += f.to_string(c);
      } else if (f.eq(c, f.one())) {
        out += mono;
      } else {
        out += f.to_string(c) + "*" + mono;
      }
    }
    return out;
  }

  bool eq(const F& f, const MultiPoly& o) const {
    if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (e != it->first || !f.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw MathError("polynomial variable space mismatch");
  }

  BlockStructure vars_;
  TermMap terms_;
};

// Determinant of a square matrix of polynomials by cofactor expansion along
// rows, memoized on the set of still-unused columns.
template <class F>
MultiPoly<F> poly_det(const F& f, const std::vector<std::vector<MultiPoly<F>>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw MathError("determinant of empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw MathError("determinant of non-square matrix");
  const BlockStructure& vars = m[0][0].vars();
  std::map<std::uint32_t, MultiPoly<F>> memo;

  auto rec = [&](auto&& self, std::uint32_t mask) -> MultiPoly<F> {
    if (mask == 0) return MultiPoly<F>::constant(f, vars, f.one());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(mask);
    MultiPoly<F> acc(vars);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
        MultiPoly<F> sub = self(self, mask & ~(1u << col));
        MultiPoly<F> contrib =
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].mul(f, sub);
        acc = sign > 0 ? acc.add(f, contrib) : acc.sub(f, contrib);
      }
      sign = -sign;
    }
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, (n == 32 ? 0xffffffffu : (1u << n) - 1));
}

}  // namespace fanorat
