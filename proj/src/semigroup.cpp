#include "ifsg/semigroup.hpp"

#include <stdexcept>
#include <string>

namespace ifsg {

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> table)
    : n_(order), table_(std::move(table)) {
  if (n_ < 1) throw std::invalid_argument("semigroup order must be at least 1");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("table size does not match order");
  for (int v : table_)
    if (v < 0 || v >= n_)
      throw std::invalid_argument("table entry out of range: " + std::to_string(v));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const int ij = table_[i * n_ + j];
      for (int k = 0; k < n_; ++k)
        if (table_[ij * n_ + k] != table_[i * n_ + table_[j * n_ + k]])
          throw std::invalid_argument(
              "not associative at (" + std::to_string(i) + ", " +
              std::to_string(j) + ", " + std::to_string(k) + ")");
    }
}

CrispSubset CrispSubset::whole(const FiniteSemigroup& s) {
  return {&s, std::vector<bool>(s.order(), true)};
}

CrispSubset CrispSubset::none(const FiniteSemigroup& s) {
  return {&s, std::vector<bool>(s.order(), false)};
}

CrispSubset CrispSubset::of(const FiniteSemigroup& s, std::vector<int> elements) {
  CrispSubset out = none(s);
  for (int x : elements) {
    if (x < 0 || x >= s.order())
      throw std::invalid_argument("subset element out of range");
    out.members[x] = true;
  }
  return out;
}

CrispSubset CrispSubset::from_mask(const FiniteSemigroup& s, std::uint64_t mask) {
  if (s.order() < 64 && (mask >> s.order()) != 0)
    throw std::invalid_argument("subset mask out of range");
  CrispSubset out = none(s);
  for (int x = 0; x < s.order(); ++x)
    if (mask & (std::uint64_t{1} << x)) out.members[x] = true;
  return out;
}

int CrispSubset::size() const {
  int c = 0;
  for (bool b : members) c += b;
  return c;
}

bool CrispSubset::empty() const { return size() == 0; }

std::uint64_t CrispSubset::mask() const {
  std::uint64_t m = 0;
  for (std::size_t x = 0; x < members.size() && x < 64; ++x)
    if (members[x]) m |= std::uint64_t{1} << x;
  return m;
}

std::vector<int> CrispSubset::elements() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < members.size(); ++x)
    if (members[x]) out.push_back(static_cast<int>(x));
  return out;
}

namespace {

void require_carrier(const FiniteSemigroup& s, const CrispSubset& x) {
  if (x.carrier != &s) throw std::invalid_argument("subset carrier mismatch");
}

void require_same_carrier(const CrispSubset& x, const CrispSubset& y) {
  if (x.carrier == nullptr || x.carrier != y.carrier)
    throw std::invalid_argument("subset carrier mismatch");
}

}  // namespace

CrispSubset product_of_subsets(const FiniteSemigroup& s, const CrispSubset& x,
                               const CrispSubset& y) {
  require_carrier(s, x);
  require_carrier(s, y);
  CrispSubset out = CrispSubset::none(s);
  for (int a = 0; a < s.order(); ++a) {
    if (!x.members[a]) continue;
    for (int b = 0; b < s.order(); ++b)
      if (y.members[b]) out.members[s.product(a, b)] = true;
  }
  return out;
}

CrispSubset subset_union(const CrispSubset& x, const CrispSubset& y) {
  require_same_carrier(x, y);
  CrispSubset out = x;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    out.members[i] = out.members[i] || y.members[i];
  return out;
}

CrispSubset subset_intersection(const CrispSubset& x, const CrispSubset& y) {
  require_same_carrier(x, y);
  CrispSubset out = x;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    out.members[i] = out.members[i] && y.members[i];
  return out;
}

bool subset_leq(const CrispSubset& x, const CrispSubset& y) {
  require_same_carrier(x, y);
  for (std::size_t i = 0; i < x.members.size(); ++i)
    if (x.members[i] && !y.members[i]) return false;
  return true;
}

namespace {

bool crisp_subsemigroup(const FiniteSemigroup& s, const CrispSubset& i) {
  for (int x = 0; x < s.order(); ++x) {
    if (!i.members[x]) continue;
    for (int y = 0; y < s.order(); ++y)
      if (i.members[y] && !i.members[s.product(x, y)]) return false;
  }
  return true;
}

bool crisp_left_ideal(const FiniteSemigroup& s, const CrispSubset& i) {
  for (int a = 0; a < s.order(); ++a)
    for (int x = 0; x < s.order(); ++x)
      if (i.members[x] && !i.members[s.product(a, x)]) return false;
  return true;
}

bool crisp_right_ideal(const FiniteSemigroup& s, const CrispSubset& i) {
  for (int x = 0; x < s.order(); ++x) {
    if (!i.members[x]) continue;
    for (int a = 0; a < s.order(); ++a)
      if (!i.members[s.product(x, a)]) return false;
  }
  return true;
}

bool crisp_interior(const FiniteSemigroup& s, const CrispSubset& i) {
  for (int a = 0; a < s.order(); ++a)
    for (int x = 0; x < s.order(); ++x) {
      if (!i.members[x]) continue;
      const int ax = s.product(a, x);
      for (int b = 0; b < s.order(); ++b)
        if (!i.members[s.product(ax, b)]) return false;
    }
  return true;
}

bool crisp_bi(const FiniteSemigroup& s, const CrispSubset& i) {
  for (int x = 0; x < s.order(); ++x) {
    if (!i.members[x]) continue;
    for (int a = 0; a < s.order(); ++a) {
      const int xa = s.product(x, a);
      for (int y = 0; y < s.order(); ++y)
        if (i.members[y] && !i.members[s.product(xa, y)]) return false;
    }
  }
  return true;
}

}  // namespace

bool classify_crisp(const FiniteSemigroup& s, const CrispSubset& i, CrispKind kind) {
  require_carrier(s, i);
  if (i.empty()) return false;
  switch (kind) {
    case CrispKind::subsemigroup:
      return crisp_subsemigroup(s, i);
    case CrispKind::interior_ideal:
      return crisp_subsemigroup(s, i) && crisp_interior(s, i);
    case CrispKind::bi_ideal:
      return crisp_subsemigroup(s, i) && crisp_bi(s, i);
    case CrispKind::left_ideal:
      return crisp_left_ideal(s, i);
    case CrispKind::right_ideal:
      return crisp_right_ideal(s, i);
    case CrispKind::ideal:
      return crisp_left_ideal(s, i) && crisp_right_ideal(s, i);
  }
  return false;
}

std::string crisp_kind_name(CrispKind kind) {
  switch (kind) {
    case CrispKind::subsemigroup: return "subsemigroup";
    case CrispKind::interior_ideal: return "interior-ideal";
    case CrispKind::bi_ideal: return "bi-ideal";
    case CrispKind::left_ideal: return "left-ideal";
    case CrispKind::right_ideal: return "right-ideal";
    case CrispKind::ideal: return "ideal";
  }
  return "unknown";
}

bool is_semiprime_elementwise(const FiniteSemigroup& s, const CrispSubset& i) {
  if (!classify_crisp(s, i, CrispKind::ideal)) return false;
  for (int x = 0; x < s.order(); ++x)
    if (i.members[s.product(x, x)] && !i.members[x]) return false;
  return true;
}

bool is_prime_elementwise(const FiniteSemigroup& s, const CrispSubset& i) {
  if (!classify_crisp(s, i, CrispKind::ideal)) return false;
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (i.members[s.product(x, y)] && !i.members[x] && !i.members[y])
        return false;
  return true;
}

namespace {

std::vector<CrispSubset> all_ideals(const FiniteSemigroup& s, int max_enum_order) {
  if (s.order() > max_enum_order)
    throw std::invalid_argument("order too large for subset enumeration");
  std::vector<CrispSubset> out;
  const std::uint64_t top = std::uint64_t{1} << s.order();
  for (std::uint64_t m = 1; m < top; ++m) {
    CrispSubset c = CrispSubset::from_mask(s, m);
    if (classify_crisp(s, c, CrispKind::ideal)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool is_semiprime_idealwise(const FiniteSemigroup& s, const CrispSubset& i,
                            int max_enum_order) {
  if (!classify_crisp(s, i, CrispKind::ideal)) return false;
  for (const CrispSubset& a : all_ideals(s, max_enum_order))
    if (subset_leq(product_of_subsets(s, a, a), i) && !subset_leq(a, i))
      return false;
  return true;
}

bool is_prime_idealwise(const FiniteSemigroup& s, const CrispSubset& i,
                        int max_enum_order) {
  if (!classify_crisp(s, i, CrispKind::ideal)) return false;
  const std::vector<CrispSubset> ideals = all_ideals(s, max_enum_order);
  for (const CrispSubset& a : ideals)
    for (const CrispSubset& b : ideals)
      if (subset_leq(product_of_subsets(s, a, b), i) && !subset_leq(a, i) &&
          !subset_leq(b, i))
        return false;
  return true;
}

bool is_regular(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    bool found = false;
    for (int x = 0; x < s.order() && !found; ++x)
      found = s.product(s.product(a, x), a) == a;
    if (!found) return false;
  }
  return true;
}

bool is_intra_regular(const FiniteSemigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    const int xx = s.product(x, x);
    bool found = false;
    for (int a = 0; a < s.order() && !found; ++a) {
      const int axx = s.product(a, xx);
      for (int b = 0; b < s.order() && !found; ++b)
        found = s.product(axx, b) == x;
    }
    if (!found) return false;
  }
  return true;
}

IdealProductSweep sweep_ideal_products(const FiniteSemigroup& s, int max_enum_order) {
  if (s.order() > max_enum_order)
    throw std::invalid_argument("order too large for subset enumeration");
  IdealProductSweep result;
  result.regular = is_regular(s);
  result.intra_regular = is_intra_regular(s);

  std::vector<CrispSubset> lefts, rights;
  const std::uint64_t top = std::uint64_t{1} << s.order();
  for (std::uint64_t m = 1; m < top; ++m) {
    CrispSubset c = CrispSubset::from_mask(s, m);
    if (classify_crisp(s, c, CrispKind::left_ideal)) lefts.push_back(c);
    if (classify_crisp(s, c, CrispKind::right_ideal)) rights.push_back(std::move(c));
  }

  for (const CrispSubset& l : lefts)
    for (const CrispSubset& r : rights) {
      ++result.pairs_checked;
      const CrispSubset meet = subset_intersection(l, r);
      if (result.intersection_below_product &&
          !subset_leq(meet, product_of_subsets(s, l, r))) {
        result.intersection_below_product = false;
        result.below_witness = {{l.mask(), r.mask()}};
      }
      if (result.intersection_equals_product &&
          meet != product_of_subsets(s, r, l)) {
        result.intersection_equals_product = false;
        result.equals_witness = {{l.mask(), r.mask()}};
      }
      if (!result.intersection_below_product && !result.intersection_equals_product)
        return result;
    }
  return result;
}

}  // namespace ifsg
