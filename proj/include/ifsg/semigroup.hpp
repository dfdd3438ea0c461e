#ifndef IFSG_SEMIGROUP_HPP
#define IFSG_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ifsg {

/// Finite semigroup on elements 0..n-1 given by its Cayley table.
/// Construction validates entry ranges and associativity.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int order, std::vector<int> table);

  int order() const noexcept { return n_; }
  int product(int x, int y) const { return table_[x * n_ + y]; }
  const std::vector<int>& table() const noexcept { return table_; }

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  int n_;
  std::vector<int> table_;
};

/// Subset of a semigroup's carrier, tied to a specific semigroup object.
struct CrispSubset {
  const FiniteSemigroup* carrier = nullptr;
  std::vector<bool> members;

  static CrispSubset whole(const FiniteSemigroup& s);
  static CrispSubset none(const FiniteSemigroup& s);
  static CrispSubset of(const FiniteSemigroup& s, std::vector<int> elements);
  static CrispSubset from_mask(const FiniteSemigroup& s, std::uint64_t mask);

  bool contains(int x) const { return members[x]; }
  int size() const;
  bool empty() const;
  std::uint64_t mask() const;
  std::vector<int> elements() const;

  bool operator==(const CrispSubset& o) const {
    return carrier == o.carrier && members == o.members;
  }
};

CrispSubset product_of_subsets(const FiniteSemigroup& s, const CrispSubset& x,
                               const CrispSubset& y);
CrispSubset subset_union(const CrispSubset& x, const CrispSubset& y);
CrispSubset subset_intersection(const CrispSubset& x, const CrispSubset& y);
bool subset_leq(const CrispSubset& x, const CrispSubset& y);

enum class CrispKind {
  subsemigroup,
  interior_ideal,
  bi_ideal,
  left_ideal,
  right_ideal,
  ideal,
};

/// Empty subsets fail every kind.
bool classify_crisp(const FiniteSemigroup& s, const CrispSubset& i, CrispKind kind);

/// Stable dashed name, e.g. "interior-ideal".
std::string crisp_kind_name(CrispKind kind);

constexpr CrispKind all_crisp_kinds[] = {
    CrispKind::subsemigroup, CrispKind::interior_ideal, CrispKind::bi_ideal,
    CrispKind::left_ideal,   CrispKind::right_ideal,    CrispKind::ideal,
};

/// Elementwise conditions on an ideal: x*x in I => x in I, and
/// x*y in I => x in I or y in I. Both return false unless i is an ideal.
bool is_semiprime_elementwise(const FiniteSemigroup& s, const CrispSubset& i);
bool is_prime_elementwise(const FiniteSemigroup& s, const CrispSubset& i);

/// Quantify over all ideals A (and B): A*A <= I => A <= I, resp.
/// A*B <= I => A <= I or B <= I. Enumerates 2^n subsets; guarded by cap.
bool is_semiprime_idealwise(const FiniteSemigroup& s, const CrispSubset& i,
                            int max_enum_order = 16);
bool is_prime_idealwise(const FiniteSemigroup& s, const CrispSubset& i,
                        int max_enum_order = 16);

bool is_regular(const FiniteSemigroup& s);
bool is_intra_regular(const FiniteSemigroup& s);

/// Outcome of sweeping every left ideal L and right ideal R of s:
/// does L&R land inside L*R, and does R&L equal R*L.
struct IdealProductSweep {
  bool regular = false;
  bool intra_regular = false;
  bool intersection_below_product = true;  // L&R <= L*R for all L, R
  bool intersection_equals_product = true; // R&L == R*L for all L, R
  long long pairs_checked = 0;
  // first failing (L, R) masks, if any
  std::optional<std::pair<std::uint64_t, std::uint64_t>> below_witness;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> equals_witness;
};

IdealProductSweep sweep_ideal_products(const FiniteSemigroup& s,
                                       int max_enum_order = 12);

}  // namespace ifsg

#endif
