#ifndef IFSG_IFS_HPP
#define IFSG_IFS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ifsg/degree.hpp"
#include "ifsg/semigroup.hpp"

namespace ifsg {

/// Intuitionistic fuzzy subset of a semigroup: per element a membership
/// grade mu(x) and a non-membership grade nu(x), both numerators over one
/// shared resolution D, with mu(x) + nu(x) <= 1.
class IFSubset {
 public:
  static IFSubset make(const FiniteSemigroup& s, int resolution,
                       std::vector<std::pair<int, int>> numerators);
  /// mu = 0, nu = 1 everywhere.
  static IFSubset empty(const FiniteSemigroup& s, int resolution);
  /// mu = 1, nu = 0 everywhere.
  static IFSubset whole(const FiniteSemigroup& s, int resolution);
  /// (1, 0) on i, (0, 1) off i.
  static IFSubset characteristic(const CrispSubset& i, int resolution);

  const FiniteSemigroup* carrier() const noexcept { return carrier_; }
  int resolution() const noexcept { return d_; }

  int mu_num(int x) const { return nums_[x].first; }
  int nu_num(int x) const { return nums_[x].second; }
  Degree mu(int x) const { return Degree(nums_[x].first, d_); }
  Degree nu(int x) const { return Degree(nums_[x].second, d_); }
  DegreePair value(int x) const { return DegreePair(mu(x), nu(x)); }

  bool operator==(const IFSubset& o) const {
    return carrier_ == o.carrier_ && d_ == o.d_ && nums_ == o.nums_;
  }

 private:
  IFSubset(const FiniteSemigroup* s, int d, std::vector<std::pair<int, int>> nums)
      : carrier_(s), d_(d), nums_(std::move(nums)) {}

  const FiniteSemigroup* carrier_ = nullptr;
  int d_ = 1;
  std::vector<std::pair<int, int>> nums_;  // (mu_num, nu_num) per element
};

/// max of mu, min of nu.
IFSubset ifs_union(const IFSubset& a, const IFSubset& b);
/// min of mu, max of nu.
IFSubset ifs_intersection(const IFSubset& a, const IFSubset& b);

/// Sup-min / inf-max convolution over factorizations x = u*v.
/// Elements with no factorization get mu = 0, nu = 1.
IFSubset compose(const IFSubset& a, const IFSubset& b);

/// a <= b pointwise: mu_a <= mu_b and nu_a >= nu_b.
bool ifs_leq(const IFSubset& a, const IFSubset& b);

/// Some element has mu > 0 or nu < 1.
bool ifs_nonempty(const IFSubset& a);

/// Every element with mu = 0 has nu = 1.
bool ifs_consistent(const IFSubset& a);

enum class IfsKind {
  subsemigroup,
  interior_ideal,
  bi_ideal,
  left_ideal,
  right_ideal,
  ideal,
  ideal_alt,  // mu(xy) >= max, nu(xy) <= min, two-sided in one condition
  semiprime,  // ideal with mu(x) >= mu(x*x), nu(x) <= nu(x*x)
  prime,      // ideal with mu(xy) == max, nu(xy) == min
};

/// Empty subsets fail every kind. interior_ideal and bi_ideal require the
/// subsemigroup inequalities; semiprime and prime require the ideal ones.
bool classify_ifs(const IFSubset& a, IfsKind kind);

/// Stable dashed name, e.g. "interior-ideal".
std::string ifs_kind_name(IfsKind kind);

constexpr IfsKind all_ifs_kinds[] = {
    IfsKind::subsemigroup, IfsKind::interior_ideal, IfsKind::bi_ideal,
    IfsKind::left_ideal,   IfsKind::right_ideal,    IfsKind::ideal,
    IfsKind::ideal_alt,    IfsKind::semiprime,      IfsKind::prime,
};

}  // namespace ifsg

#endif
