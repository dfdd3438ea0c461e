#include "ifsg/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ifsg/points.hpp"
#include "ifsg/rng.hpp"

namespace ifsg {

std::vector<int> canonical_table(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> relabeled(static_cast<std::size_t>(n) * n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relabeled[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
            perm[s.product(i, j)];
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_canonical(const FiniteSemigroup& s) {
  return s.table() == canonical_table(s);
}

namespace {

bool associative(int n, const std::vector<int>& t) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ij = t[i * n + j];
      for (int k = 0; k < n; ++k)
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) return false;
    }
  return true;
}

long long tables_to_examine(int order) {
  long long v = 1;
  for (int i = 0; i < order * order; ++i) {
    if (v > 4'000'000'000LL / order) return -1;  // overflow sentinel
    v *= order;
  }
  return v;
}

}  // namespace

std::vector<FiniteSemigroup> enumerate_semigroups(int order, bool up_to_iso,
                                                  long long budget) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const long long total = tables_to_examine(order);
  if (total < 0 || total > budget)
    throw BudgetError("exhaustive table enumeration at order " +
                      std::to_string(order) + " exceeds the budget of " +
                      std::to_string(budget) + " tables");

  std::vector<FiniteSemigroup> out;
  std::vector<int> t(static_cast<std::size_t>(order) * order, 0);
  for (long long step = 0;; ++step) {
    if (associative(order, t)) {
      FiniteSemigroup s(order, t);
      if (!up_to_iso || is_canonical(s)) out.push_back(std::move(s));
    }
    int pos = order * order - 1;
    while (pos >= 0 && t[pos] == order - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

std::vector<IFSubset> enumerate_ifs(const FiniteSemigroup& s, int resolution,
                                    bool consistent_only, long long budget) {
  if (resolution < 1) throw std::invalid_argument("resolution must be at least 1");
  std::vector<std::pair<int, int>> pairs;
  for (int mu = 0; mu <= resolution; ++mu)
    for (int nu = 0; nu + mu <= resolution; ++nu)
      if (!consistent_only || mu > 0 || nu == resolution)
        pairs.emplace_back(mu, nu);

  const int n = s.order();
  double count = std::pow(static_cast<double>(pairs.size()), n);
  if (count > static_cast<double>(budget))
    throw BudgetError("grade assignment enumeration exceeds the budget of " +
                      std::to_string(budget));

  std::vector<IFSubset> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> odo(n, 0);
  for (;;) {
    std::vector<std::pair<int, int>> nums(n);
    for (int x = 0; x < n; ++x) nums[x] = pairs[odo[x]];
    out.push_back(IFSubset::make(s, resolution, std::move(nums)));
    int pos = n - 1;
    while (pos >= 0 && odo[pos] == pairs.size() - 1) odo[pos--] = 0;
    if (pos < 0) break;
    ++odo[pos];
  }
  return out;
}

std::vector<IFSubset> sample_ifs(const FiniteSemigroup& s, int resolution,
                                 std::uint64_t seed, int count) {
  if (count < 0) throw std::invalid_argument("sample count must be non-negative");
  std::vector<std::pair<int, int>> pairs;
  for (int mu = 0; mu <= resolution; ++mu)
    for (int nu = 0; nu + mu <= resolution; ++nu) pairs.emplace_back(mu, nu);

  SplitMix64 rng(seed);
  std::vector<IFSubset> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<int, int>> nums(s.order());
    for (int x = 0; x < s.order(); ++x) nums[x] = pairs[rng.bounded(pairs.size())];
    out.push_back(IFSubset::make(s, resolution, std::move(nums)));
  }
  return out;
}

}  // namespace ifsg
