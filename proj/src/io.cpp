#include "ifsg/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace ifsg {

namespace {

// significant lines with their 1-based numbers; comments and blanks dropped
std::vector<std::pair<int, std::string>> significant_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<long long> parse_ints(const std::pair<int, std::string>& line,
                                  std::size_t expected) {
  std::istringstream in(line.second);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  std::string rest;
  if (!in.eof() && in.fail()) {
    in.clear();
    in >> rest;
    throw ParseError("line " + std::to_string(line.first) +
                     ": expected integers, got '" + rest + "'");
  }
  if (out.size() != expected)
    throw ParseError("line " + std::to_string(line.first) + ": expected " +
                     std::to_string(expected) + " integers, got " +
                     std::to_string(out.size()));
  return out;
}

}  // namespace

FiniteSemigroup parse_semigroup(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty table file");
  const long long n = parse_ints(lines[0], 1)[0];
  if (n < 1 || n > 4096) throw ParseError("line " + std::to_string(lines[0].first) +
                                          ": unreasonable order");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                     std::to_string(lines.size() - 1));
  std::vector<int> table;
  table.reserve(n * n);
  for (long long r = 0; r < n; ++r)
    for (long long v : parse_ints(lines[r + 1], n)) {
      if (v < 0 || v >= n)
        throw ParseError("line " + std::to_string(lines[r + 1].first) +
                         ": entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<int>(v));
    }
  return FiniteSemigroup(static_cast<int>(n), std::move(table));
}

std::string serialize_semigroup(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j) out << ' ';
      out << s.product(i, j);
    }
    out << "\n";
  }
  return out.str();
}

IFSubset parse_ifs(const std::string& text, const FiniteSemigroup& carrier) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty grade file");
  const auto header = parse_ints(lines[0], 2);
  const long long d = header[0], n = header[1];
  if (d < 1) throw ParseError("line " + std::to_string(lines[0].first) +
                              ": resolution must be at least 1");
  if (n != carrier.order())
    throw ParseError("grade file is for order " + std::to_string(n) +
                     ", carrier has order " + std::to_string(carrier.order()));
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError("expected " + std::to_string(n) + " grade rows, got " +
                     std::to_string(lines.size() - 1));
  std::vector<std::pair<int, int>> nums(n, {-1, -1});
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto row = parse_ints(lines[r], 3);
    const long long x = row[0], mu = row[1], nu = row[2];
    if (x < 0 || x >= n)
      throw ParseError("line " + std::to_string(lines[r].first) +
                       ": element out of range");
    if (nums[x].first >= 0)
      throw ParseError("line " + std::to_string(lines[r].first) +
                       ": duplicate element " + std::to_string(x));
    if (mu < 0 || nu < 0 || mu + nu > d)
      throw ParseError("line " + std::to_string(lines[r].first) +
                       ": grades must satisfy 0 <= mu, nu and mu + nu <= " +
                       std::to_string(d));
    nums[x] = {static_cast<int>(mu), static_cast<int>(nu)};
  }
  return IFSubset::make(carrier, static_cast<int>(d), std::move(nums));
}

std::string serialize_ifs(const IFSubset& a) {
  std::ostringstream out;
  out << a.resolution() << ' ' << a.carrier()->order() << "\n";
  for (int x = 0; x < a.carrier()->order(); ++x)
    out << x << ' ' << a.mu_num(x) << ' ' << a.nu_num(x) << "\n";
  return out.str();
}

std::string serialize_point_index(const PointSemigroup& p) {
  std::ostringstream out;
  out << "# point_id element mu_num nu_num D\n";
  for (int i = 0; i < p.size(); ++i) {
    const FuzzyPoint& pt = p.point(i);
    out << i << ' ' << pt.element << ' ' << pt.value.mu.num << ' '
        << pt.value.nu.num << ' ' << p.resolution() << "\n";
  }
  return out.str();
}

std::vector<std::string> parse_manifest(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& [number, line] : significant_lines(text)) {
    const auto first = line.find_first_not_of(" \t\r");
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace ifsg
