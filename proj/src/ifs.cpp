#include "ifsg/ifs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ifsg {

IFSubset IFSubset::make(const FiniteSemigroup& s, int resolution,
                        std::vector<std::pair<int, int>> numerators) {
  if (resolution < 1) throw std::invalid_argument("resolution must be at least 1");
  if (numerators.size() != static_cast<std::size_t>(s.order()))
    throw std::invalid_argument("one grade pair per element required");
  for (const auto& [mu, nu] : numerators) {
    if (mu < 0 || nu < 0 || mu > resolution || nu > resolution)
      throw std::invalid_argument("grade numerator out of range");
    if (mu + nu > resolution)
      throw std::invalid_argument("grade pair with mu + nu > 1");
  }
  return IFSubset(&s, resolution, std::move(numerators));
}

IFSubset IFSubset::empty(const FiniteSemigroup& s, int resolution) {
  return make(s, resolution,
              std::vector<std::pair<int, int>>(s.order(), {0, resolution}));
}

IFSubset IFSubset::whole(const FiniteSemigroup& s, int resolution) {
  return make(s, resolution,
              std::vector<std::pair<int, int>>(s.order(), {resolution, 0}));
}

IFSubset IFSubset::characteristic(const CrispSubset& i, int resolution) {
  if (i.carrier == nullptr) throw std::invalid_argument("subset without carrier");
  std::vector<std::pair<int, int>> nums;
  nums.reserve(i.members.size());
  for (bool in : i.members)
    nums.emplace_back(in ? resolution : 0, in ? 0 : resolution);
  return make(*i.carrier, resolution, std::move(nums));
}

namespace {

void require_compatible(const IFSubset& a, const IFSubset& b) {
  if (a.carrier() == nullptr || a.carrier() != b.carrier())
    throw std::invalid_argument("carrier mismatch");
  if (a.resolution() != b.resolution())
    throw std::invalid_argument("resolution mismatch");
}

}  // namespace

IFSubset ifs_union(const IFSubset& a, const IFSubset& b) {
  require_compatible(a, b);
  const FiniteSemigroup& s = *a.carrier();
  std::vector<std::pair<int, int>> nums(s.order());
  for (int x = 0; x < s.order(); ++x)
    nums[x] = {std::max(a.mu_num(x), b.mu_num(x)),
               std::min(a.nu_num(x), b.nu_num(x))};
  return IFSubset::make(s, a.resolution(), std::move(nums));
}

IFSubset ifs_intersection(const IFSubset& a, const IFSubset& b) {
  require_compatible(a, b);
  const FiniteSemigroup& s = *a.carrier();
  std::vector<std::pair<int, int>> nums(s.order());
  for (int x = 0; x < s.order(); ++x)
    nums[x] = {std::min(a.mu_num(x), b.mu_num(x)),
               std::max(a.nu_num(x), b.nu_num(x))};
  return IFSubset::make(s, a.resolution(), std::move(nums));
}

IFSubset compose(const IFSubset& a, const IFSubset& b) {
  require_compatible(a, b);
  const FiniteSemigroup& s = *a.carrier();
  const int d = a.resolution();
  std::vector<std::pair<int, int>> nums(s.order(), {0, d});
  std::vector<bool> factorizable(s.order(), false);
  for (int u = 0; u < s.order(); ++u)
    for (int v = 0; v < s.order(); ++v) {
      const int x = s.product(u, v);
      const int mu = std::min(a.mu_num(u), b.mu_num(v));
      const int nu = std::max(a.nu_num(u), b.nu_num(v));
      if (!factorizable[x]) {
        factorizable[x] = true;
        nums[x] = {mu, nu};
      } else {
        nums[x].first = std::max(nums[x].first, mu);
        nums[x].second = std::min(nums[x].second, nu);
      }
    }
  return IFSubset::make(s, d, std::move(nums));
}

bool ifs_leq(const IFSubset& a, const IFSubset& b) {
  require_compatible(a, b);
  for (int x = 0; x < a.carrier()->order(); ++x)
    if (a.mu_num(x) > b.mu_num(x) || a.nu_num(x) < b.nu_num(x)) return false;
  return true;
}

bool ifs_nonempty(const IFSubset& a) {
  for (int x = 0; x < a.carrier()->order(); ++x)
    if (a.mu_num(x) > 0 || a.nu_num(x) < a.resolution()) return true;
  return false;
}

bool ifs_consistent(const IFSubset& a) {
  for (int x = 0; x < a.carrier()->order(); ++x)
    if (a.mu_num(x) == 0 && a.nu_num(x) != a.resolution()) return false;
  return true;
}

namespace {

bool ifs_subsemigroup(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const int xy = s.product(x, y);
      if (a.mu_num(xy) < std::min(a.mu_num(x), a.mu_num(y))) return false;
      if (a.nu_num(xy) > std::max(a.nu_num(x), a.nu_num(y))) return false;
    }
  return true;
}

bool ifs_left(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const int xy = s.product(x, y);
      if (a.mu_num(xy) < a.mu_num(y) || a.nu_num(xy) > a.nu_num(y)) return false;
    }
  return true;
}

bool ifs_right(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const int xy = s.product(x, y);
      if (a.mu_num(xy) < a.mu_num(x) || a.nu_num(xy) > a.nu_num(x)) return false;
    }
  return true;
}

bool ifs_interior(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int m = 0; m < s.order(); ++m) {
      const int xm = s.product(x, m);
      for (int y = 0; y < s.order(); ++y) {
        const int xmy = s.product(xm, y);
        if (a.mu_num(xmy) < a.mu_num(m) || a.nu_num(xmy) > a.nu_num(m))
          return false;
      }
    }
  return true;
}

bool ifs_bi(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int m = 0; m < s.order(); ++m) {
      const int xm = s.product(x, m);
      for (int y = 0; y < s.order(); ++y) {
        const int xmy = s.product(xm, y);
        if (a.mu_num(xmy) < std::min(a.mu_num(x), a.mu_num(y))) return false;
        if (a.nu_num(xmy) > std::max(a.nu_num(x), a.nu_num(y))) return false;
      }
    }
  return true;
}

bool ifs_ideal_alt(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const int xy = s.product(x, y);
      if (a.mu_num(xy) < std::max(a.mu_num(x), a.mu_num(y))) return false;
      if (a.nu_num(xy) > std::min(a.nu_num(x), a.nu_num(y))) return false;
    }
  return true;
}

bool ifs_semiprime(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x) {
    const int xx = s.product(x, x);
    if (a.mu_num(x) < a.mu_num(xx) || a.nu_num(x) > a.nu_num(xx)) return false;
  }
  return true;
}

bool ifs_prime(const FiniteSemigroup& s, const IFSubset& a) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const int xy = s.product(x, y);
      if (a.mu_num(xy) != std::max(a.mu_num(x), a.mu_num(y))) return false;
      if (a.nu_num(xy) != std::min(a.nu_num(x), a.nu_num(y))) return false;
    }
  return true;
}

}  // namespace

bool classify_ifs(const IFSubset& a, IfsKind kind) {
  const FiniteSemigroup& s = *a.carrier();
  if (!ifs_nonempty(a)) return false;
  switch (kind) {
    case IfsKind::subsemigroup:
      return ifs_subsemigroup(s, a);
    case IfsKind::interior_ideal:
      return ifs_subsemigroup(s, a) && ifs_interior(s, a);
    case IfsKind::bi_ideal:
      return ifs_subsemigroup(s, a) && ifs_bi(s, a);
    case IfsKind::left_ideal:
      return ifs_left(s, a);
    case IfsKind::right_ideal:
      return ifs_right(s, a);
    case IfsKind::ideal:
      return ifs_left(s, a) && ifs_right(s, a);
    case IfsKind::ideal_alt:
      return ifs_ideal_alt(s, a);
    case IfsKind::semiprime:
      return ifs_left(s, a) && ifs_right(s, a) && ifs_semiprime(s, a);
    case IfsKind::prime:
      return ifs_left(s, a) && ifs_right(s, a) && ifs_prime(s, a);
  }
  return false;
}

std::string ifs_kind_name(IfsKind kind) {
  switch (kind) {
    case IfsKind::subsemigroup: return "subsemigroup";
    case IfsKind::interior_ideal: return "interior-ideal";
    case IfsKind::bi_ideal: return "bi-ideal";
    case IfsKind::left_ideal: return "left-ideal";
    case IfsKind::right_ideal: return "right-ideal";
    case IfsKind::ideal: return "ideal";
    case IfsKind::ideal_alt: return "ideal-alt";
    case IfsKind::semiprime: return "semiprime-ideal";
    case IfsKind::prime: return "prime-ideal";
  }
  return "unknown";
}

}  // namespace ifsg
