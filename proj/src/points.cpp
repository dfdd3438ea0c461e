#include "ifsg/points.hpp"

#include <stdexcept>
#include <string>

#include "ifsg/enumerate.hpp"

namespace ifsg {

namespace {

void require_point_value(const DegreePair& value) {
  if (value.mu.num <= 0) throw std::invalid_argument("point needs mu > 0");
  if (value.nu.num >= value.nu.den)
    throw std::invalid_argument("point needs nu < 1");
}

}  // namespace

FuzzyPoint make_fuzzy_point(const FiniteSemigroup& s, int element, DegreePair value) {
  if (element < 0 || element >= s.order())
    throw std::invalid_argument("point element out of range");
  require_point_value(value);
  return {element, value};
}

FuzzyPoint point_product(const FiniteSemigroup& s, const FuzzyPoint& p,
                         const FuzzyPoint& q) {
  if (p.value.mu.den != q.value.mu.den)
    throw std::invalid_argument("resolution mismatch");
  return {s.product(p.element, q.element),
          DegreePair(dmin(p.value.mu, q.value.mu), dmax(p.value.nu, q.value.nu))};
}

std::vector<DegreePair> grid_pairs(int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be at least 1");
  std::vector<DegreePair> out;
  for (int a = 1; a <= resolution; ++a)
    for (int b = 0; b <= resolution - a && b <= resolution - 1; ++b)
      out.emplace_back(a, b, resolution);
  return out;
}

PointSemigroup PointSemigroup::materialize(const FiniteSemigroup& base,
                                           int resolution, int max_points) {
  const std::vector<DegreePair> pairs = grid_pairs(resolution);
  const int per = static_cast<int>(pairs.size());
  const long long total = static_cast<long long>(base.order()) * per;
  if (total > max_points)
    throw BudgetError("point semigroup would have " + std::to_string(total) +
                      " points, cap is " + std::to_string(max_points));

  std::vector<FuzzyPoint> points;
  points.reserve(total);
  for (int x = 0; x < base.order(); ++x)
    for (const DegreePair& v : pairs) points.push_back({x, v});

  // rank of each grid pair by its numerators, for product lookups
  std::vector<int> rank((resolution + 1) * (resolution + 1), -1);
  for (int r = 0; r < per; ++r)
    rank[pairs[r].mu.num * (resolution + 1) + pairs[r].nu.num] = r;

  const int n = static_cast<int>(total);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const FuzzyPoint& p = points[i];
      const FuzzyPoint& q = points[j];
      const int elem = base.product(p.element, q.element);
      const int mu = std::min(p.value.mu.num, q.value.mu.num);
      const int nu = std::max(p.value.nu.num, q.value.nu.num);
      table[static_cast<std::size_t>(i) * n + j] =
          elem * per + rank[mu * (resolution + 1) + nu];
    }

  return PointSemigroup(&base, resolution, std::move(points), per,
                        FiniteSemigroup(n, std::move(table)));
}

int PointSemigroup::index_of(int element, const DegreePair& value) const {
  if (element < 0 || element >= base_->order())
    throw std::invalid_argument("point element out of range");
  for (int r = 0; r < pairs_per_element_; ++r)
    if (points_[element * pairs_per_element_ + r].value == value)
      return element * pairs_per_element_ + r;
  throw std::invalid_argument("grade pair not on the point grid");
}

PointSet PointSet::none(const PointSemigroup& p) {
  return {&p, std::vector<bool>(p.size(), false)};
}

PointSet PointSet::whole(const PointSemigroup& p) {
  return {&p, std::vector<bool>(p.size(), true)};
}

int PointSet::size() const {
  int c = 0;
  for (bool b : members) c += b;
  return c;
}

bool PointSet::empty() const { return size() == 0; }

namespace {

void require_same_host(const PointSet& x, const PointSet& y) {
  if (x.host == nullptr || x.host != y.host)
    throw std::invalid_argument("point set host mismatch");
}

}  // namespace

PointSet underline(const IFSubset& a, const PointSemigroup& p) {
  if (a.carrier() != p.base()) throw std::invalid_argument("carrier mismatch");
  if (a.resolution() != p.resolution())
    throw std::invalid_argument("resolution mismatch");
  PointSet out = PointSet::none(p);
  for (int i = 0; i < p.size(); ++i) {
    const FuzzyPoint& pt = p.point(i);
    out.members[i] = pt.value.mu <= a.mu(pt.element) &&
                     pt.value.nu >= a.nu(pt.element);
  }
  return out;
}

PointSet pointset_product(const PointSet& x, const PointSet& y) {
  require_same_host(x, y);
  const FiniteSemigroup& t = x.host->table();
  PointSet out = PointSet::none(*x.host);
  for (int i = 0; i < t.order(); ++i) {
    if (!x.members[i]) continue;
    for (int j = 0; j < t.order(); ++j)
      if (y.members[j]) out.members[t.product(i, j)] = true;
  }
  return out;
}

PointSet pointset_union(const PointSet& x, const PointSet& y) {
  require_same_host(x, y);
  PointSet out = x;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    out.members[i] = out.members[i] || y.members[i];
  return out;
}

PointSet pointset_intersection(const PointSet& x, const PointSet& y) {
  require_same_host(x, y);
  PointSet out = x;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    out.members[i] = out.members[i] && y.members[i];
  return out;
}

bool pointset_leq(const PointSet& x, const PointSet& y) {
  require_same_host(x, y);
  for (std::size_t i = 0; i < x.members.size(); ++i)
    if (x.members[i] && !y.members[i]) return false;
  return true;
}

CrispSubset as_crisp(const PointSet& x) {
  if (x.host == nullptr) throw std::invalid_argument("point set without host");
  return {&x.host->table(), x.members};
}

bool is_pointset_ideal(const PointSet& i) {
  return classify_crisp(i.host->table(), as_crisp(i), CrispKind::ideal);
}

bool is_pointset_semiprime_ideal(const PointSet& i) {
  // squaring a point keeps its grade pair, so the unrestricted elementwise
  // test already quantifies over one grade pair at a time
  return is_semiprime_elementwise(i.host->table(), as_crisp(i));
}

bool is_pointset_prime_ideal(const PointSet& i) {
  if (!is_pointset_ideal(i)) return false;
  const PointSemigroup& p = *i.host;
  const FiniteSemigroup& t = p.table();
  const int per = p.pairs_per_element();
  const int n = p.base()->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int r = 0; r < per; ++r) {
        const int px = x * per + r;
        const int py = y * per + r;
        if (i.members[t.product(px, py)] && !i.members[px] && !i.members[py])
          return false;
      }
  return true;
}

std::vector<int> embed_elements(const PointSemigroup& p, const DegreePair& value) {
  require_point_value(value);
  std::vector<int> image(p.base()->order());
  for (int x = 0; x < p.base()->order(); ++x) image[x] = p.index_of(x, value);
  for (int x = 0; x < p.base()->order(); ++x)
    for (int y = 0; y < p.base()->order(); ++y) {
      const int xy = p.base()->product(x, y);
      if (p.table().product(image[x], image[y]) != image[xy])
        throw std::logic_error("embedding is not multiplicative");
    }
  for (std::size_t x = 0; x + 1 < image.size(); ++x)
    for (std::size_t y = x + 1; y < image.size(); ++y)
      if (image[x] == image[y]) throw std::logic_error("embedding is not injective");
  return image;
}

}  // namespace ifsg
