#ifndef IFSG_ENUMERATE_HPP
#define IFSG_ENUMERATE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ifsg/ifs.hpp"
#include "ifsg/semigroup.hpp"

namespace ifsg {

/// Thrown when an exhaustive sweep would exceed its examination budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lexicographically minimal Cayley table over all relabelings of s.
std::vector<int> canonical_table(const FiniteSemigroup& s);
bool is_canonical(const FiniteSemigroup& s);

/// All associative tables of the given order in lexicographic order;
/// with up_to_iso, only canonical representatives. The budget bounds the
/// number of tables examined (order^(order^2)), which confines exhaustive
/// enumeration to order <= 3 at the default.
std::vector<FiniteSemigroup> enumerate_semigroups(int order, bool up_to_iso,
                                                  long long budget = 2'000'000);

/// All grade assignments over the resolution-D grid, lexicographic,
/// including the empty one. consistent_only keeps assignments where
/// mu(x) = 0 forces nu(x) = 1.
std::vector<IFSubset> enumerate_ifs(const FiniteSemigroup& s, int resolution,
                                    bool consistent_only,
                                    long long budget = 2'000'000);

/// `count` assignments drawn element-wise uniformly over the valid grid
/// pairs, reproducible from the seed.
std::vector<IFSubset> sample_ifs(const FiniteSemigroup& s, int resolution,
                                 std::uint64_t seed, int count);

}  // namespace ifsg

#endif
