#ifndef IFSG_POINTS_HPP
#define IFSG_POINTS_HPP

#include <vector>

#include "ifsg/degree.hpp"
#include "ifsg/ifs.hpp"
#include "ifsg/semigroup.hpp"

namespace ifsg {

/// Fuzzy point x_(mu,nu): an element carrying grades with mu > 0 and nu < 1.
struct FuzzyPoint {
  int element = 0;
  DegreePair value;

  bool operator==(const FuzzyPoint&) const = default;
};

FuzzyPoint make_fuzzy_point(const FiniteSemigroup& s, int element, DegreePair value);

/// x_(a,b) * y_(c,d) = (xy)_(min(a,c), max(b,d)).
FuzzyPoint point_product(const FiniteSemigroup& s, const FuzzyPoint& p,
                         const FuzzyPoint& q);

/// All grade pairs with numerators over D that a point may carry:
/// mu >= 1/D, nu <= (D-1)/D, mu + nu <= 1, ordered lexicographically.
std::vector<DegreePair> grid_pairs(int resolution);

/// The semigroup of all fuzzy points of a base semigroup whose grades lie on
/// the resolution-D grid, materialized as an ordinary FiniteSemigroup so the
/// crisp machinery applies to its subsets unchanged.
class PointSemigroup {
 public:
  static PointSemigroup materialize(const FiniteSemigroup& base, int resolution,
                                    int max_points = 512);

  const FiniteSemigroup* base() const noexcept { return base_; }
  const FiniteSemigroup& table() const noexcept { return table_; }
  int resolution() const noexcept { return d_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  int pairs_per_element() const noexcept { return pairs_per_element_; }

  const FuzzyPoint& point(int idx) const { return points_[idx]; }
  int index_of(int element, const DegreePair& value) const;

 private:
  PointSemigroup(const FiniteSemigroup* base, int d, std::vector<FuzzyPoint> pts,
                 int per_element, FiniteSemigroup table)
      : base_(base), d_(d), points_(std::move(pts)),
        pairs_per_element_(per_element), table_(std::move(table)) {}

  const FiniteSemigroup* base_ = nullptr;
  int d_ = 1;
  std::vector<FuzzyPoint> points_;
  int pairs_per_element_ = 0;
  FiniteSemigroup table_;
};

/// Subset of a point semigroup.
struct PointSet {
  const PointSemigroup* host = nullptr;
  std::vector<bool> members;

  static PointSet none(const PointSemigroup& p);
  static PointSet whole(const PointSemigroup& p);

  bool contains(int idx) const { return members[idx]; }
  int size() const;
  bool empty() const;

  bool operator==(const PointSet& o) const {
    return host == o.host && members == o.members;
  }
};

/// All points x_(a,b) with a <= mu(x) and b >= nu(x).
PointSet underline(const IFSubset& a, const PointSemigroup& p);

PointSet pointset_product(const PointSet& x, const PointSet& y);
PointSet pointset_union(const PointSet& x, const PointSet& y);
PointSet pointset_intersection(const PointSet& x, const PointSet& y);
bool pointset_leq(const PointSet& x, const PointSet& y);

/// View a point set as a crisp subset of the materialized table.
CrispSubset as_crisp(const PointSet& x);

/// Ideal tests on point sets. The prime variant quantifies over pairs of
/// points carrying one common grade pair; products that mix two different
/// grade pairs are outside the tested condition (see is_prime_elementwise
/// for the unrestricted test).
bool is_pointset_ideal(const PointSet& i);
bool is_pointset_semiprime_ideal(const PointSet& i);
bool is_pointset_prime_ideal(const PointSet& i);

/// x -> x_(value) for every element; returns point indices. The map is
/// injective and multiplicative by construction; both are re-checked.
std::vector<int> embed_elements(const PointSemigroup& p, const DegreePair& value);

}  // namespace ifsg

#endif
