#include "fanorat/cohomology.hpp"

#include <algorithm>
#include <map>

namespace fanorat {

GroupTable GroupTable::from_perm_group(const PermGroup& g) {
  const auto& els = g.elements();
  const int n = static_cast<int>(els.size());
  const Perm id = perm_identity(g.degree());
  if (els[0] != id) throw MathError("identity is not the first group element");
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || *it != p) throw MathError("product escaped the group");
    return static_cast<int>(it - els.begin());
  };
  GroupTable t;
  t.order = n;
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.inv.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      t.mul[static_cast<std::size_t>(a) * n + b] =
          index_of(perm_compose(els[static_cast<std::size_t>(a)], els[static_cast<std::size_t>(b)]));
    t.inv[static_cast<std::size_t>(a)] = index_of(perm_inverse(els[static_cast<std::size_t>(a)]));
  }
  return t;
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw MathError("cyclic group order must be positive");
  GroupTable t;
  t.order = n;
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.inv.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    t.inv[static_cast<std::size_t>(a)] = (n - a) % n;
  }
  return t;
}

GModule::GModule(GroupTable group, int rank, std::vector<IntMatrix> action)
    : group_(std::move(group)), rank_(rank), action_(std::move(action)) {
  if (rank_ < 1) throw MathError("module rank must be positive");
  if (static_cast<int>(action_.size()) != group_.order)
    throw MathError("action must list one matrix per group element");
  for (const auto& m : action_) {
    if (m.rows() != rank_ || m.cols() != rank_) throw MathError("action matrix shape mismatch");
    Int d = m.det();
    if (d != 1 && d != -1) throw MathError("action matrix is not unimodular");
  }
  if (!(action_[0] == IntMatrix::identity(rank_)))
    throw MathError("identity must act trivially");
  for (int a = 0; a < group_.order; ++a)
    for (int b = 0; b < group_.order; ++b) {
      IntMatrix prod = action_[static_cast<std::size_t>(a)].mul(action_[static_cast<std::size_t>(b)]);
      if (!(prod == action_[static_cast<std::size_t>(group_.times(a, b))]))
        throw MathError("action is not a homomorphism");
    }
}

GModule trivial_module(const GroupTable& g) {
  std::vector<IntMatrix> act(static_cast<std::size_t>(g.order), IntMatrix::identity(1));
  return GModule(g, 1, std::move(act));
}

GModule permutation_module(const PermGroup& g) {
  GroupTable t = GroupTable::from_perm_group(g);
  const auto& els = g.elements();
  std::vector<IntMatrix> act;
  act.reserve(els.size());
  for (const auto& p : els) {
    IntMatrix m(g.degree(), g.degree());
    for (int i = 0; i < g.degree(); ++i) m.at(p[static_cast<std::size_t>(i)], i) = 1;
    act.push_back(std::move(m));
  }
  return GModule(t, g.degree(), std::move(act));
}

long long cochain_rank(const GModule& m, int n) {
  long long r = m.rank();
  for (int i = 0; i < n; ++i) r *= m.group().order;
  return r;
}

namespace {

// Column index of the basis cochain at (tuple, coordinate j).
long long slot_index(const GModule& m, const std::vector<int>& tuple, int j) {
  long long idx = 0;
  for (int g : tuple) idx = idx * m.group().order + g;
  return idx * m.rank() + j;
}

void build_row(const GModule& m, int n, const std::vector<int>& out_tuple, int i,
               std::map<long long, long long>& acc) {
  acc.clear();
  const int r = m.rank();
  // Action term: g_1 . f(g_2, ..., g_{n+1}).
  std::vector<int> rest(out_tuple.begin() + 1, out_tuple.end());
  const IntMatrix& mat = m.act(out_tuple[0]);
  for (int j = 0; j < r; ++j) {
    const Int& e = mat.at(i, j);
    if (e == 0) continue;
    if (e > Int(INT64_MAX / 4) || e < Int(INT64_MIN / 4))
      throw ResourceError("action entry too large for sparse coboundary");
    acc[slot_index(m, rest, j)] += static_cast<long long>(e);
  }
  // Merge terms: (-1)^k f(..., g_k g_{k+1}, ...).
  std::vector<int> merged(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    for (int s = 0, t = 0; s <= n; ++s) {
      if (s == k - 1) continue;  // slot k-1 and k fuse below
      merged[static_cast<std::size_t>(t++)] =
          (s == k) ? m.group().times(out_tuple[static_cast<std::size_t>(k - 1)],
                                     out_tuple[static_cast<std::size_t>(k)])
                   : out_tuple[static_cast<std::size_t>(s)];
    }
    acc[slot_index(m, merged, i)] += (k % 2 == 0) ? 1 : -1;
  }
  // Final term: (-1)^{n+1} f(g_1, ..., g_n).
  std::vector<int> head(out_tuple.begin(), out_tuple.end() - 1);
  acc[slot_index(m, head, i)] += (n % 2 == 0) ? -1 : 1;
}

}  // namespace

void for_each_coboundary_row(const GModule& m, int n,
                             const std::function<void(long long, const SparseIntRow&)>& cb) {
  if (n < 0) throw MathError("coboundary degree must be nonnegative");
  const int q = m.group().order;
  const int r = m.rank();
  std::vector<int> tuple(static_cast<std::size_t>(n + 1), 0);
  std::map<long long, long long> acc;
  SparseIntRow row;
  long long row_index = 0;
  for (;;) {
    for (int i = 0; i < r; ++i) {
      build_row(m, n, tuple, i, acc);
      row.clear();
      for (const auto& [col, val] : acc)
        if (val != 0) row.emplace_back(static_cast<int>(col), val);
      cb(row_index++, row);
    }
    int pos = n;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == q - 1)
      tuple[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
}

std::vector<SparseIntRow> coboundary_rows(const GModule& m, int n) {
  std::vector<SparseIntRow> rows;
  rows.reserve(static_cast<std::size_t>(cochain_rank(m, n + 1)));
  for_each_coboundary_row(m, n, [&](long long, const SparseIntRow& row) { rows.push_back(row); });
  return rows;
}

bool coboundary_composite_is_zero(const GModule& m, int n) {
  std::vector<SparseIntRow> inner = coboundary_rows(m, n);
  bool ok = true;
  std::map<long long, long long> acc;
  for_each_coboundary_row(m, n + 1, [&](long long, const SparseIntRow& row) {
    if (!ok) return;
    acc.clear();
    for (const auto& [mid, c1] : row)
      for (const auto& [col, c2] : inner[static_cast<std::size_t>(mid)]) acc[col] += c1 * c2;
    for (const auto& [col, val] : acc)
      if (val != 0) {
        ok = false;
        return;
      }
  });
  return ok;
}

namespace {

int sparse_rank(const std::vector<SparseIntRow>& rows, int ncols) {
  return static_cast<int>(invariant_factors_sparse(rows, ncols).size());
}

}  // namespace

CohomologyResult cohomology(const GModule& m, int n) {
  if (n < 0 || n > 3) throw MathError("cohomology implemented for degrees 0..3");
  if (m.group().order > 24) throw MathError("group order above 24 not supported");
  CohomologyResult res;
  res.degree = n;
  if (n == 0) {
    auto d0 = coboundary_rows(m, 0);
    int fixed_rank = m.rank() - sparse_rank(d0, m.rank());
    res.factors.assign(static_cast<std::size_t>(fixed_rank), Int(0));
    res.composite_checked = coboundary_composite_is_zero(m, 0);
    return res;
  }
  auto prev = coboundary_rows(m, n - 1);
  auto factors = invariant_factors_sparse(prev, static_cast<int>(cochain_rank(m, n - 1)));
  for (const auto& f : factors)
    if (f > 1) res.factors.push_back(f);
  res.composite_checked = coboundary_composite_is_zero(m, n - 1);
  if (!res.composite_checked) throw MathError("coboundary composite is nonzero");
  return res;
}

std::vector<Int> cohomology_via_kernel_quotient(const GModule& m, int n) {
  if (n < 0 || n > 3) throw MathError("cohomology implemented for degrees 0..3");
  const long long rows_n = cochain_rank(m, n + 1);
  const long long cols_n = cochain_rank(m, n);
  if (rows_n > 6000 || cols_n > 1024)
    throw ResourceError("kernel-quotient route limited to small groups");

  IntMatrix dn(static_cast<int>(rows_n), static_cast<int>(cols_n));
  for_each_coboundary_row(m, n, [&](long long i, const SparseIntRow& row) {
    for (const auto& [col, val] : row) dn.at(static_cast<int>(i), col) = val;
  });
  IntMatrix kern = kernel_basis(dn);
  std::vector<Int> out;
  if (n == 0) {
    out.assign(static_cast<std::size_t>(kern.cols()), Int(0));
    return out;
  }
  if (kern.cols() == 0) return out;

  const long long cols_prev = cochain_rank(m, n - 1);
  IntMatrix dprev(static_cast<int>(cols_n), static_cast<int>(cols_prev));
  for_each_coboundary_row(m, n - 1, [&](long long i, const SparseIntRow& row) {
    for (const auto& [col, val] : row) dprev.at(static_cast<int>(i), col) = val;
  });
  IntMatrix w = express_in_lattice(kern, dprev);
  auto factors = invariant_factors(w);
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  int free_rank = kern.cols() - static_cast<int>(factors.size());
  for (int i = 0; i < free_rank; ++i) out.push_back(Int(0));
  return out;
}

bool norm_one_obstruction(const PermGroup& g) {
  if (g.degree() != 4) throw MathError("norm-one obstruction needs a degree-4 action");
  if (!g.is_transitive()) throw MathError("norm-one obstruction needs a transitive action");
  GModule m = trivial_module(GroupTable::from_perm_group(g));
  CohomologyResult h3 = cohomology(m, 3);
  for (const auto& f : h3.factors)
    if (f > 1) return true;
  return false;
}

}  // namespace fanorat
