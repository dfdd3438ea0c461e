#ifndef IFSG_DEGREE_HPP
#define IFSG_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace ifsg {

/// Exact membership grade num/den with 0 <= num <= den.
struct Degree {
  int num = 0;
  int den = 1;

  constexpr Degree() = default;
  constexpr Degree(int n, int d) : num(n), den(d) {
    if (d <= 0 || n < 0 || n > d)
      throw std::invalid_argument("degree out of range");
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return static_cast<std::int64_t>(a.num) * b.den
        == static_cast<std::int64_t>(b.num) * a.den;
  }

  friend constexpr std::weak_ordering operator<=>(Degree a, Degree b) {
    return static_cast<std::int64_t>(a.num) * b.den
       <=> static_cast<std::int64_t>(b.num) * a.den;
  }
};

constexpr Degree dmin(Degree a, Degree b) { return b < a ? b : a; }
constexpr Degree dmax(Degree a, Degree b) { return a < b ? b : a; }

/// Membership/non-membership grades over one denominator, mu + nu <= 1.
struct DegreePair {
  Degree mu{0, 1};
  Degree nu{1, 1};

  constexpr DegreePair() = default;
  constexpr DegreePair(Degree m, Degree n) : mu(m), nu(n) {
    if (mu.den != nu.den)
      throw std::invalid_argument("degree pair with mixed denominators");
    if (mu.num + nu.num > mu.den)
      throw std::invalid_argument("degree pair with mu + nu > 1");
  }
  constexpr DegreePair(int mu_num, int nu_num, int den)
      : DegreePair(Degree(mu_num, den), Degree(nu_num, den)) {}

  friend constexpr bool operator==(const DegreePair& a, const DegreePair& b) {
    return a.mu == b.mu && a.nu == b.nu;
  }
};

}  // namespace ifsg

#endif
