#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ifsg/enumerate.hpp"
#include "ifsg/harness.hpp"
#include "ifsg/ifs.hpp"
#include "ifsg/io.hpp"
#include "ifsg/points.hpp"
#include "ifsg/semigroup.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

const char* yn(bool b) { return b ? "yes" : "no"; }

std::pair<int, int> parse_orders(const std::string& text) {
  const auto split = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (split == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, split));
      hi = std::stoi(text.substr(split + 2));
    }
  } catch (const std::exception&) {
    throw std::runtime_error("--orders expects N or A..B, got '" + text + "'");
  }
  if (lo < 1 || hi < lo)
    throw std::runtime_error("--orders range must satisfy 1 <= A <= B, got '" +
                             text + "'");
  return {lo, hi};
}

int run_classify(const std::string& table_path, const std::string& ifs_path,
                 int max_points) {
  const ifsg::FiniteSemigroup s = ifsg::parse_semigroup(ifsg::read_file(table_path));
  std::cout << "order: " << s.order() << "\n";
  std::cout << "regular: " << yn(ifsg::is_regular(s)) << "\n";
  std::cout << "intra-regular: " << yn(ifsg::is_intra_regular(s)) << "\n";
  if (ifs_path.empty()) return kExitOk;

  const ifsg::IFSubset a = ifsg::parse_ifs(ifsg::read_file(ifs_path), s);
  const int d = a.resolution();
  std::cout << "resolution: " << d << "\n";
  std::cout << "consistent: " << yn(ifsg::ifs_consistent(a)) << "\n";
  std::cout << "empty: " << yn(!ifsg::ifs_nonempty(a)) << "\n";
  for (ifsg::IfsKind kind : ifsg::all_ifs_kinds)
    std::cout << ifsg::ifs_kind_name(kind) << ": " << yn(ifsg::classify_ifs(a, kind))
              << "\n";

  const ifsg::PointSemigroup p = ifsg::PointSemigroup::materialize(s, d, max_points);
  const ifsg::PointSet cut = ifsg::underline(a, p);
  std::cout << "points: " << p.size() << "\n";
  std::cout << "cut size: " << cut.size() << "\n";
  for (ifsg::CrispKind kind : ifsg::all_crisp_kinds)
    std::cout << "cut " << ifsg::crisp_kind_name(kind) << ": "
              << yn(ifsg::classify_crisp(p.table(), ifsg::as_crisp(cut), kind))
              << "\n";
  std::cout << "cut semiprime-ideal: " << yn(ifsg::is_pointset_semiprime_ideal(cut))
            << "\n";
  std::cout << "cut prime-ideal: " << yn(ifsg::is_pointset_prime_ideal(cut)) << "\n";
  return kExitOk;
}

int run_materialize(const std::string& table_path, int resolution,
                    const std::string& out_path, int max_points) {
  const ifsg::FiniteSemigroup s = ifsg::parse_semigroup(ifsg::read_file(table_path));
  const ifsg::PointSemigroup p =
      ifsg::PointSemigroup::materialize(s, resolution, max_points);
  const std::string table_text = ifsg::serialize_semigroup(p.table());
  const std::string index_text = ifsg::serialize_point_index(p);
  if (out_path.empty()) {
    std::cout << table_text << "\n" << index_text;
  } else {
    ifsg::write_file(out_path, table_text);
    ifsg::write_file(out_path + ".points", index_text);
    std::cout << "wrote " << out_path << " (order " << p.size() << ") and "
              << out_path << ".points\n";
  }
  return kExitOk;
}

int run_enumerate(const std::string& orders_text, bool raw,
                  const std::string& out_path, long long budget) {
  const auto [lo, hi] = parse_orders(orders_text);
  std::string out;
  for (int order = lo; order <= hi; ++order) {
    const std::vector<ifsg::FiniteSemigroup> sgs =
        ifsg::enumerate_semigroups(order, !raw, budget);
    out += "# order " + std::to_string(order) + ": " + std::to_string(sgs.size()) +
           (raw ? " associative tables" : " semigroups up to isomorphism") + "\n";
    for (std::size_t i = 0; i < sgs.size(); ++i) {
      out += "# " + std::to_string(order) + "/" + std::to_string(i) + "\n";
      out += ifsg::serialize_semigroup(sgs[i]);
      out += "\n";
    }
  }
  if (out_path.empty())
    std::cout << out;
  else
    ifsg::write_file(out_path, out);
  return kExitOk;
}

int run_verify(const std::string& orders_text, const std::string& manifest_path,
               int resolution, const std::string& policy_text, std::uint64_t seed,
               int count, const std::string& out_path, int max_points) {
  ifsg::SuiteConfig config;
  config.resolution = resolution;
  config.max_points = max_points;
  config.policy.seed = seed;
  config.policy.count = count;
  if (policy_text == "exhaustive-consistent")
    config.policy.mode = ifsg::SuitePolicy::Mode::exhaustive_consistent;
  else if (policy_text == "exhaustive-all")
    config.policy.mode = ifsg::SuitePolicy::Mode::exhaustive_all;
  else
    config.policy.mode = ifsg::SuitePolicy::Mode::sampled;

  std::vector<ifsg::VerificationReport> reports;
  if (!manifest_path.empty()) {
    const std::vector<std::string> paths =
        ifsg::parse_manifest(ifsg::read_file(manifest_path));
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const ifsg::FiniteSemigroup s =
          ifsg::parse_semigroup(ifsg::read_file(paths[i]));
      const std::string tag =
          "table=" + paths[i] + " D=" + std::to_string(resolution);
      std::vector<ifsg::VerificationReport> batch =
          ifsg::run_battery(s, config, tag, 0x4000000000000000ULL + i);
      for (ifsg::VerificationReport& r : batch) reports.push_back(std::move(r));
    }
  } else {
    const auto [lo, hi] = parse_orders(orders_text);
    config.min_order = lo;
    config.max_order = hi;
    reports = ifsg::run_suite(config);
  }

  const std::string lines = ifsg::to_json_lines(reports);
  if (out_path.empty()) {
    std::cout << lines;
    std::cerr << ifsg::summarize(reports);
  } else {
    ifsg::write_file(out_path, lines);
    std::cout << ifsg::summarize(reports);
  }

  if (!ifsg::all_confirmed(reports)) return kExitCounterexample;
  for (const ifsg::VerificationReport& r : reports)
    if (r.outcome == ifsg::Outcome::skipped &&
        r.notes.find("budget") != std::string::npos)
      return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact tools for finite semigroups, graded subsets, and point semigroups"};
  app.require_subcommand(1);

  std::string cl_table, cl_ifs;
  int cl_max_points = 512;
  CLI::App* classify =
      app.add_subcommand("classify", "classify a table and optionally a graded subset");
  classify->add_option("--table", cl_table, "semigroup table file (.sg)")->required();
  classify->add_option("--ifs", cl_ifs, "graded subset file (.ifs)");
  classify->add_option("--max-points", cl_max_points, "cap on materialized points");

  std::string mat_table, mat_out;
  int mat_resolution = 2, mat_max_points = 512;
  CLI::App* materialize =
      app.add_subcommand("materialize", "export the point semigroup of a table");
  materialize->add_option("--table", mat_table, "semigroup table file (.sg)")
      ->required();
  materialize->add_option("--resolution", mat_resolution, "grid denominator D")
      ->check(CLI::PositiveNumber);
  materialize->add_option("--out", mat_out, "output table path; sidecar gets .points");
  materialize->add_option("--max-points", mat_max_points, "cap on materialized points");

  std::string en_orders = "1..3", en_out;
  bool en_raw = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list associative tables");
  enumerate->add_option("--orders", en_orders, "order range A..B (default 1..3)");
  enumerate->add_flag("--raw", en_raw, "every table, not one per isomorphism class");
  enumerate->add_option("--out", en_out, "write listing here instead of stdout");

  std::string v_orders = "1..3", v_manifest, v_policy = "exhaustive-consistent", v_out;
  int v_resolution = 2, v_count = 200, v_max_points = 512;
  std::uint64_t v_seed = 42;
  CLI::App* verify = app.add_subcommand("verify", "run the full check suite");
  verify->add_option("--orders", v_orders, "order range A..B (default 1..3)");
  verify->add_option("--manifest", v_manifest,
                     "file listing table paths, one per line, instead of --orders");
  verify->add_option("--resolution", v_resolution, "grid denominator D (default 2)")
      ->check(CLI::PositiveNumber);
  verify
      ->add_option("--policy", v_policy,
                   "grade sweep: exhaustive-consistent, exhaustive-all, or sampled")
      ->check(CLI::IsMember({"exhaustive-consistent", "exhaustive-all", "sampled"}));
  verify->add_option("--seed", v_seed, "seed for the sampled policy");
  verify->add_option("--count", v_count, "samples per semigroup under sampled policy")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", v_out, "write JSON-lines report here; summary to stdout");
  verify->add_option("--max-points", v_max_points, "cap on materialized points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return run_classify(cl_table, cl_ifs, cl_max_points);
    if (*materialize)
      return run_materialize(mat_table, mat_resolution, mat_out, mat_max_points);
    if (*enumerate) return run_enumerate(en_orders, en_raw, en_out, 2'000'000);
    if (*verify)
      return run_verify(v_orders, v_manifest, v_resolution, v_policy, v_seed,
                        v_count, v_out, v_max_points);
  } catch (const ifsg::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ifsg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
