#include "fanorat/toric_link.hpp"

#include <algorithm>
#include <numeric>

namespace fanorat {

LinkDims::LinkDims(std::vector<int> dims) : n(std::move(dims)) {
  if (n.size() < 2) throw MathError("the link needs at least two factors");
  // Factor order carries no content, so inputs are canonicalized to the
  // nonincreasing order the basis conventions assume.
  std::stable_sort(n.begin(), n.end(), std::greater<int>());
  r = static_cast<int>(n.size());
  for (int i = 0; i < r; ++i) {
    if (n[static_cast<std::size_t>(i)] < 1) throw MathError("factor dimensions must be positive");
    if (n[static_cast<std::size_t>(i)] >= 2) p = i + 1;
  }
  q = r - p;
  total = std::accumulate(n.begin(), n.end(), 0);
}

DivisorClassMap::DivisorClassMap(const LinkDims& dims) : r_(dims.r), p_(dims.p) {
  const int m = r_ + 1;
  fwd_ = IntMatrix(m, m);
  // row i: coefficient a_i minus the sum s = a_1 + ... + a_r + b
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < m; ++j) fwd_.at(i, j) = (i == j ? 1 : 0) - 1;
  for (int j = 0; j < m; ++j) fwd_.at(r_, j) = 1;

  bwd_ = IntMatrix(m, m);
  for (int k = 0; k < r_; ++k) {
    bwd_.at(k, k) = 1;   // h_k or e_k pulls back H_k ...
    bwd_.at(r_, k) = -1; // ... minus E
  }
  for (int i = 0; i < r_; ++i) bwd_.at(i, r_) = 1;
  bwd_.at(r_, r_) = -(r_ - 1);

  if (!(fwd_.mul(bwd_) == IntMatrix::identity(m)) ||
      !(bwd_.mul(fwd_) == IntMatrix::identity(m)))
    throw MathError("divisor class bases are not inverse to each other");
  Int d = fwd_.det();
  if (d != 1 && d != -1) throw MathError("class map is not unimodular");
}

namespace {

std::vector<long long> apply(const IntMatrix& m, const std::vector<long long>& v) {
  std::vector<long long> out(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = static_cast<long long>(acc);
  }
  return out;
}

}  // namespace

DivClass DivisorClassMap::forward(const DivClass& c) const {
  if (c.basis != "H,E") throw MathError("forward expects basis H,E");
  if (static_cast<int>(c.coeffs.size()) != r_ + 1)
    throw MathError("class coefficient length mismatch");
  return {"h,e,h", apply(fwd_, c.coeffs)};
}

DivClass DivisorClassMap::backward(const DivClass& c) const {
  if (c.basis != "h,e,h") throw MathError("backward expects basis h,e,h");
  if (static_cast<int>(c.coeffs.size()) != r_ + 1)
    throw MathError("class coefficient length mismatch");
  return {"H,E", apply(bwd_, c.coeffs)};
}

bool canonical_class_check(const LinkDims& dims) {
  const int r = dims.r;
  DivisorClassMap map(dims);

  std::vector<long long> k_src(static_cast<std::size_t>(r + 1), 0);
  for (int i = 0; i < r; ++i)
    k_src[static_cast<std::size_t>(i)] = -(dims.n[static_cast<std::size_t>(i)] + 1);
  k_src[static_cast<std::size_t>(r)] = dims.total - 1;
  DivClass forwarded = map.forward({"H,E", k_src});

  // Target side, assembled from scratch. Base: product of the complement
  // projective spaces of the first p factors.
  std::vector<long long> k_tgt(static_cast<std::size_t>(r + 1), 0);
  for (int i = 0; i < dims.p; ++i)
    k_tgt[static_cast<std::size_t>(i)] = -dims.n[static_cast<std::size_t>(i)];

  // First Chern class of the bundle: one line-bundle summand per index set
  // of size >= r-1, each contributing minus the hyperplanes of its members
  // among the first p factors.
  std::vector<long long> c1(static_cast<std::size_t>(r + 1), 0);
  int rank = 0;
  for (int k = 0; k <= r; ++k) {  // k = 0 is the full set, else drop factor k
    ++rank;
    for (int i = 0; i < dims.p; ++i)
      if (i + 1 != k) c1[static_cast<std::size_t>(i)] -= 1;
  }
  for (int i = 0; i <= r; ++i)
    k_tgt[static_cast<std::size_t>(i)] -= c1[static_cast<std::size_t>(i)];
  k_tgt[static_cast<std::size_t>(r)] -= rank;  // relative part: -(rank) h

  // Blowing up the q sections, each of codimension rank - 1 = r.
  for (int j = dims.p; j < r; ++j) k_tgt[static_cast<std::size_t>(j)] += r - 1;

  return forwarded.coeffs == k_tgt;
}

bool ampleness_certificate(const LinkDims& dims) {
  const int r = dims.r;
  DivisorClassMap map(dims);
  auto expect = [&](const std::vector<long long>& tgt, const std::vector<long long>& src) {
    return map.backward({"h,e,h", tgt}).coeffs == src;
  };

  std::vector<long long> sum_h(static_cast<std::size_t>(r + 1), 0);
  std::vector<long long> want_h(static_cast<std::size_t>(r + 1), 0);
  for (int i = 0; i < dims.p; ++i) {
    sum_h[static_cast<std::size_t>(i)] = 1;
    want_h[static_cast<std::size_t>(i)] = 1;
  }
  want_h[static_cast<std::size_t>(r)] = -dims.p;

  std::vector<long long> just_h(static_cast<std::size_t>(r + 1), 0);
  just_h[static_cast<std::size_t>(r)] = 1;
  std::vector<long long> want_hh(static_cast<std::size_t>(r + 1), 1);
  want_hh[static_cast<std::size_t>(r)] = -(r - 1);

  std::vector<long long> sum_e(static_cast<std::size_t>(r + 1), 0);
  std::vector<long long> want_e(static_cast<std::size_t>(r + 1), 0);
  for (int j = dims.p; j < r; ++j) {
    sum_e[static_cast<std::size_t>(j)] = 1;
    want_e[static_cast<std::size_t>(j)] = 1;
  }
  want_e[static_cast<std::size_t>(r)] = -dims.q;

  return expect(sum_h, want_h) && expect(just_h, want_hh) && expect(sum_e, want_e);
}

std::string StratumLabel::to_string() const {
  auto subset_text = [&]() {
    std::string s = "[";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(subset[static_cast<std::size_t>(i)]);
    }
    return s + "]";
  };
  if (kind == "interior") return "Y" + subset_text();
  if (kind == "exceptional") return "E" + subset_text();
  if (kind == "open") return "Y+";
  if (kind == "sub") return "Y+" + subset_text();
  if (kind == "section") return "E_" + std::to_string(subset.at(0));
  throw MathError("unknown stratum kind: " + kind);
}

}  // namespace fanorat
