#ifndef IFSG_IO_HPP
#define IFSG_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ifsg/ifs.hpp"
#include "ifsg/points.hpp"
#include "ifsg/semigroup.hpp"

namespace ifsg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Table format: first line the order n, then n lines of n entries.
/// Lines starting with '#' are comments; blank lines are skipped.
FiniteSemigroup parse_semigroup(const std::string& text);
std::string serialize_semigroup(const FiniteSemigroup& s);

/// Grade format: first line "D n", then one line "x mu_num nu_num" per
/// element. Same comment and blank-line rules.
IFSubset parse_ifs(const std::string& text, const FiniteSemigroup& carrier);
std::string serialize_ifs(const IFSubset& a);

/// Sidecar index for an exported point semigroup:
/// one line "point_id element mu_num nu_num D" per point.
std::string serialize_point_index(const PointSemigroup& p);

/// One path per line; '#' comments and blank lines are skipped.
std::vector<std::string> parse_manifest(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ifsg

#endif
