#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fanorat/galois.hpp"
#include "fanorat/int_matrix.hpp"
#include "fanorat/ints.hpp"

namespace fanorat {

// Finite group as a dense multiplication table; element 0 is the identity.
struct GroupTable {
  int order = 1;
  std::vector<int> mul;  // order x order, row-major
  std::vector<int> inv;

  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }

  static GroupTable from_perm_group(const PermGroup& g);
  static GroupTable cyclic(int n);
};

// Action of a finite group on Z^rank by unimodular matrices. Construction
// checks the identity, every pairwise product, and unimodularity.
class GModule {
 public:
  GModule(GroupTable group, int rank, std::vector<IntMatrix> action);

  const GroupTable& group() const { return group_; }
  int rank() const { return rank_; }
  const IntMatrix& act(int g) const { return action_[static_cast<std::size_t>(g)]; }

 private:
  GroupTable group_;
  int rank_ = 0;
  std::vector<IntMatrix> action_;
};

GModule trivial_module(const GroupTable& g);

// Z^degree with the group permuting the coordinates.
GModule permutation_module(const PermGroup& g);

// Cochain spaces of the inhomogeneous bar complex: C^n = maps G^n -> M,
// of rank |G|^n * rank(M). Rows of the coboundary d^n : C^n -> C^{n+1}
// are streamed to the callback in output-index order; each row has at most
// rank + n + 1 entries.
long long cochain_rank(const GModule& m, int n);
void for_each_coboundary_row(const GModule& m, int n,
                             const std::function<void(long long, const SparseIntRow&)>& cb);
std::vector<SparseIntRow> coboundary_rows(const GModule& m, int n);

// Exact check that d^{n+1} after d^n is the zero map, by streaming the rows
// of d^{n+1} and combining rows of d^n.
bool coboundary_composite_is_zero(const GModule& m, int n);

// H^n(G, M) for n <= 3, reported as invariant factors: entries > 1 are
// torsion orders (in divisibility order), trailing zeros are free summands.
// H^0 is the kernel of d^0. For n >= 1 the group is finite (annihilated by
// |G| via restriction-corestriction to the trivial subgroup) and the kernel
// of an integer matrix is a saturated sublattice, so H^n equals the torsion
// of coker d^{n-1}; that torsion is read off the Smith normal form of
// d^{n-1}, and the inclusion im d^{n-1} <= ker d^n is certified by the
// composite check, which always runs.
struct CohomologyResult {
  int degree = 0;
  std::vector<Int> factors;
  bool composite_checked = false;
};

CohomologyResult cohomology(const GModule& m, int n);

// Literal route for cross-checking: saturated kernel basis of d^n, image of
// d^{n-1} expressed in that basis, Smith normal form of the coordinate
// matrix. Only for small groups; oversized inputs raise ResourceError.
std::vector<Int> cohomology_via_kernel_quotient(const GModule& m, int n);

// Whether the obstruction group attached to a transitive degree-4 action is
// nonzero. The obstruction H^1(G, Pic) of a smooth compactification of the
// norm-one torus of the corresponding quartic etale algebra is evaluated
// through the classical identification with H^3(G, Z) (Voskresenskii,
// "Algebraic Groups and Their Birational Invariants"); building an explicit
// compactification is out of scope, while H^3(G, Z) is a finite exact
// computation.
bool norm_one_obstruction(const PermGroup& g);

}  // namespace fanorat
