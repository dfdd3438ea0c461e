#ifndef IFSG_HARNESS_HPP
#define IFSG_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifsg/degree.hpp"
#include "ifsg/ifs.hpp"
#include "ifsg/points.hpp"
#include "ifsg/semigroup.hpp"

namespace ifsg {

enum class Outcome { confirmed, counterexample, skipped };

/// One checked correspondence. A counterexample whose notes carry the
/// "informational" marker records a boundary of the claim (inputs outside
/// the consistent class) rather than a failure; exit codes ignore it.
struct VerificationReport {
  std::string check_id;
  long long instances_checked = 0;
  Outcome outcome = Outcome::confirmed;
  nlohmann::ordered_json witness;  // null when absent
  std::string notes;

  bool informational() const { return notes.find("informational") != std::string::npos; }
  bool binding_counterexample() const {
    return outcome == Outcome::counterexample && !informational();
  }
};

std::string outcome_name(Outcome o);
std::string to_json_line(const VerificationReport& r);
std::string to_json_lines(const std::vector<VerificationReport>& reports);

/// classify_ifs(a, kind) against the crisp classification of the point cut
/// underline(a) inside the materialized point semigroup.
VerificationReport verify_underline_correspondence(const FiniteSemigroup& s,
                                                   int resolution,
                                                   const IFSubset& a, IfsKind kind);

/// The cut map A -> underline(A): preserves union and intersection exactly,
/// and the product of cuts lands inside the cut of the composition.
VerificationReport verify_underline_algebra(const FiniteSemigroup& s, int resolution,
                                            const IFSubset& a, const IFSubset& b);

/// is_regular(S) == is_regular(point semigroup), same for intra-regular.
VerificationReport verify_regular_transfer(const FiniteSemigroup& s, int resolution);
VerificationReport verify_intra_regular_transfer(const FiniteSemigroup& s,
                                                 int resolution);

enum class CollapseMode { regular, intra_regular };

/// On a regular (resp. intra-regular) semigroup, the two-sided fuzzy ideal
/// property collapses onto the interior-ideal property of the cut.
VerificationReport verify_interior_ideal_collapse(const FiniteSemigroup& s,
                                                  int resolution, const IFSubset& a,
                                                  CollapseMode mode);

enum class IfsClass { consistent, all };

/// Biconditionals tying is_regular / is_intra_regular to universally
/// quantified product identities over fuzzy left/right ideal pairs, checked
/// exhaustively over the grid class, plus "every fuzzy ideal is semiprime".
VerificationReport verify_ideal_product_characterization(const FiniteSemigroup& s,
                                                         int resolution,
                                                         IfsClass cls);

/// For every grid pair (a, b), x -> x_(a,b) is an injective homomorphism
/// into the point semigroup.
VerificationReport verify_embedding(const FiniteSemigroup& s, int resolution);

/// Crisp companion fact: L&R <= L*R for all left/right ideals iff
/// intra-regular, and R&L == R*L iff regular.
VerificationReport verify_crisp_ideal_products(const FiniteSemigroup& s);

struct SuitePolicy {
  enum class Mode { exhaustive_consistent, exhaustive_all, sampled };
  Mode mode = Mode::exhaustive_consistent;
  std::uint64_t seed = 42;
  int count = 200;  // samples per semigroup under sampled mode
};

struct SuiteConfig {
  int min_order = 1;
  int max_order = 3;
  int resolution = 2;
  SuitePolicy policy;
  int max_points = 512;
  long long budget = 2'000'000;
};

/// Every check for one semigroup at one resolution, aggregated per check.
/// tag prefixes each report's notes; sample_salt diversifies the sampled
/// policy's seed between semigroups.
std::vector<VerificationReport> run_battery(const FiniteSemigroup& s,
                                            const SuiteConfig& config,
                                            const std::string& tag,
                                            std::uint64_t sample_salt);

/// Run every check over every canonical semigroup in the order range,
/// aggregated per semigroup and check, in enumeration order.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// Human-readable rollup of a report list.
std::string summarize(const std::vector<VerificationReport>& reports);

/// True when no binding counterexample is present.
bool all_confirmed(const std::vector<VerificationReport>& reports);

}  // namespace ifsg

#endif
