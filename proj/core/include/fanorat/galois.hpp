#pragma once

#include <string>
#include <vector>

#include "fanorat/ints.hpp"

namespace fanorat {

// Permutation of {0..r-1} given by its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
std::string perm_to_cycles(const Perm& a);  // 1-based cycle notation
Perm perm_from_cycles(int degree, const std::string& text);

// Permutation group closed under composition. Construction computes the
// closure of the generators and verifies inverse-closure and Lagrange
// divisibility of the order.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }

  bool contains(const Perm& p) const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  // Multiset of cycle types, each type a partition of the degree sorted
  // descending, listed in element order. Used to separate conjugacy classes.
  std::vector<std::vector<int>> cycle_type_census() const;

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
};

// Rank of the fixed sublattice of the permutation action on Z^degree,
// which equals the number of orbits.
int invariant_rank(const PermGroup& g);

// Conjugacy-class label of a transitive degree-4 group, decided by order
// and the double-transposition / four-cycle census. Intransitive groups
// report "not transitive".
std::string classify_transitive_s4(const PermGroup& g);

// Whether all three double transpositions lie in the group.
bool contains_klein(const PermGroup& g);

// Every subgroup of the full symmetric group on 4 letters, one per element
// set (30 in total), found by closing all two-element generating sets.
std::vector<PermGroup> all_subgroups_s4();

// The six deformation families, keyed by the multidegree tag.
enum class FanoTag { x33, x1111, x44, x222, x22, x111 };

struct FanoType {
  FanoTag tag;
  std::string name;  // e.g. "(3,3)"
  int index = 0;     // Fano index
  int rho_bar = 0;   // geometric Picard rank
  int degree = 0;    // anticanonical degree
  int genus = 0;
  int h12 = 0;
};

const std::vector<FanoType>& fano_table();
const FanoType& fano_type(FanoTag tag);
// Accepts "(3,3)" or "3,3"; unknown tags are rejected.
FanoTag parse_fano_tag(const std::string& text);

// Component counts of the Hilbert schemes of low-degree rational curves on
// an index-1 type: lines (the geometric Picard rank many), conics, and
// twisted cubics through a general point. Index-2 types are not covered.
struct HilbertCounts {
  int lines_components = 0;
  int conics_components = 0;
  int cubics_through_point_components = 0;
};

HilbertCounts hilbert_component_counts(const FanoType& t);

// Length of the scheme of lines through a rational point of an index-1
// type: zero when no line passes, otherwise the full count rho_bar.
int lines_through_point_length(const FanoType& t, bool any_line_through_x);

enum class TriState { yes, no, open };
std::string tristate_name(TriState s);

// Rationality and unirationality over the ground field, assuming Picard
// rank 1 over the ground field (certified by the caller through
// invariant_rank). The rational field is three-valued because one family
// has conjectural but unproven irrationality.
struct Verdict {
  bool unirational = false;
  TriState rational = TriState::no;
  std::string reason;
};

Verdict verdict(const FanoType& t, bool has_k_point);

}  // namespace fanorat
