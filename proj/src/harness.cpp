#include "ifsg/harness.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "ifsg/enumerate.hpp"
#include "ifsg/io.hpp"
#include "ifsg/rng.hpp"

namespace ifsg {

using nlohmann::ordered_json;

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::confirmed: return "confirmed";
    case Outcome::counterexample: return "counterexample";
    case Outcome::skipped: return "skipped";
  }
  return "unknown";
}

std::string to_json_line(const VerificationReport& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["instances_checked"] = r.instances_checked;
  j["outcome"] = outcome_name(r.outcome);
  j["witness"] = r.witness;
  j["notes"] = r.notes;
  return j.dump();
}

std::string to_json_lines(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const VerificationReport& r : reports) {
    out += to_json_line(r);
    out += '\n';
  }
  return out;
}

namespace {

constexpr const char* kInformational = "informational";

std::string kind_slug(IfsKind kind) { return ifs_kind_name(kind); }

ordered_json instance_witness(const FiniteSemigroup& s, int resolution) {
  ordered_json w;
  w["semigroup"] = serialize_semigroup(s);
  w["resolution"] = resolution;
  return w;
}

bool crisp_cut_classification(const PointSemigroup& p, const PointSet& cut,
                              IfsKind kind) {
  switch (kind) {
    case IfsKind::subsemigroup:
      return classify_crisp(p.table(), as_crisp(cut), CrispKind::subsemigroup);
    case IfsKind::interior_ideal:
      return classify_crisp(p.table(), as_crisp(cut), CrispKind::interior_ideal);
    case IfsKind::bi_ideal:
      return classify_crisp(p.table(), as_crisp(cut), CrispKind::bi_ideal);
    case IfsKind::left_ideal:
      return classify_crisp(p.table(), as_crisp(cut), CrispKind::left_ideal);
    case IfsKind::right_ideal:
      return classify_crisp(p.table(), as_crisp(cut), CrispKind::right_ideal);
    case IfsKind::ideal:
    case IfsKind::ideal_alt:
      return classify_crisp(p.table(), as_crisp(cut), CrispKind::ideal);
    case IfsKind::semiprime:
      return is_pointset_semiprime_ideal(cut);
    case IfsKind::prime:
      return is_pointset_prime_ideal(cut);
  }
  return false;
}

VerificationReport underline_correspondence_on(const FiniteSemigroup& s,
                                               const PointSemigroup& p,
                                               const IFSubset& a, IfsKind kind) {
  VerificationReport r;
  r.check_id = "underline-" + kind_slug(kind);
  if (!ifs_nonempty(a)) {
    r.outcome = Outcome::skipped;
    r.notes = "empty grade assignment";
    return r;
  }
  const bool fuzzy = classify_ifs(a, kind);
  const PointSet cut = underline(a, p);
  const bool crisp = crisp_cut_classification(p, cut, kind);
  r.instances_checked = 1;
  if (fuzzy == crisp) return r;
  r.outcome = Outcome::counterexample;
  r.witness = instance_witness(s, p.resolution());
  r.witness["ifs"] = serialize_ifs(a);
  r.witness["kind"] = kind_slug(kind);
  r.witness["fuzzy"] = fuzzy;
  r.witness["crisp_cut"] = crisp;
  if (!ifs_consistent(a))
    r.notes = std::string(kInformational) + ": input outside the consistent class";
  return r;
}

VerificationReport underline_algebra_on(const FiniteSemigroup& s,
                                        const PointSemigroup& p, const IFSubset& a,
                                        const IFSubset& b) {
  VerificationReport r;
  r.check_id = "underline-algebra";
  r.instances_checked = 1;
  const PointSet ua = underline(a, p);
  const PointSet ub = underline(b, p);

  const char* part = nullptr;
  if (!(underline(ifs_union(a, b), p) == pointset_union(ua, ub)))
    part = "union";
  else if (!(underline(ifs_intersection(a, b), p) == pointset_intersection(ua, ub)))
    part = "intersection";
  else {
    const PointSet prod = pointset_product(ua, ub);
    const PointSet composed = underline(compose(a, b), p);
    if (!pointset_leq(prod, composed))
      part = "product";
    else if (!(prod == composed))
      r.notes = "product inclusion strict";
  }
  if (part != nullptr) {
    r.outcome = Outcome::counterexample;
    r.witness = instance_witness(s, p.resolution());
    r.witness["ifs_a"] = serialize_ifs(a);
    r.witness["ifs_b"] = serialize_ifs(b);
    r.witness["part"] = part;
    if (!ifs_consistent(a) || !ifs_consistent(b))
      r.notes = std::string(kInformational) + ": input outside the consistent class";
  }
  return r;
}

VerificationReport transfer_on(const FiniteSemigroup& s, const PointSemigroup& p,
                               bool intra) {
  VerificationReport r;
  r.check_id = intra ? "transfer-intra-regular" : "transfer-regular";
  r.instances_checked = 1;
  const bool base = intra ? is_intra_regular(s) : is_regular(s);
  const bool points =
      intra ? is_intra_regular(p.table()) : is_regular(p.table());
  if (base != points) {
    r.outcome = Outcome::counterexample;
    r.witness = instance_witness(s, p.resolution());
    r.witness["base"] = base;
    r.witness["points"] = points;
  }
  return r;
}

VerificationReport collapse_on(const FiniteSemigroup& s, const PointSemigroup& p,
                               const IFSubset& a, CollapseMode mode) {
  VerificationReport r;
  r.check_id = mode == CollapseMode::regular
                   ? "interior-ideal-collapse-regular"
                   : "interior-ideal-collapse-intra-regular";
  const bool pre = mode == CollapseMode::regular ? is_regular(s) : is_intra_regular(s);
  if (!pre) {
    r.outcome = Outcome::skipped;
    r.notes = mode == CollapseMode::regular ? "semigroup not regular"
                                            : "semigroup not intra-regular";
    return r;
  }
  if (!ifs_nonempty(a)) {
    r.outcome = Outcome::skipped;
    r.notes = "empty grade assignment";
    return r;
  }
  r.instances_checked = 1;
  const bool fuzzy = classify_ifs(a, IfsKind::ideal);
  const bool crisp = classify_crisp(p.table(), as_crisp(underline(a, p)),
                                    CrispKind::interior_ideal);
  if (fuzzy == crisp) return r;
  r.outcome = Outcome::counterexample;
  r.witness = instance_witness(s, p.resolution());
  r.witness["ifs"] = serialize_ifs(a);
  r.witness["fuzzy_ideal"] = fuzzy;
  r.witness["crisp_interior_cut"] = crisp;
  if (!ifs_consistent(a))
    r.notes = std::string(kInformational) + ": input outside the consistent class";
  return r;
}

VerificationReport embedding_on(const FiniteSemigroup& s, const PointSemigroup& p,
                                const DegreePair& value) {
  VerificationReport r;
  r.check_id = "embedding";
  std::vector<int> image(s.order());
  for (int x = 0; x < s.order(); ++x) image[x] = p.index_of(x, value);

  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      ++r.instances_checked;
      const bool multiplicative =
          p.table().product(image[x], image[y]) == image[s.product(x, y)];
      const bool injective = x == y || image[x] != image[y];
      if (multiplicative && injective) continue;
      r.outcome = Outcome::counterexample;
      r.witness = instance_witness(s, p.resolution());
      r.witness["mu"] = value.mu.num;
      r.witness["nu"] = value.nu.num;
      r.witness["x"] = x;
      r.witness["y"] = y;
      r.witness["failed"] = multiplicative ? "injective" : "multiplicative";
      return r;
    }
  return r;
}

struct CharacterizationScan {
  bool intra = false;
  bool regular = false;
  bool point_inclusion = true;   // cut(A) & cut(B) inside cut(A) * cut(B)
  bool ifs_inclusion = true;     // A & B below A o B
  bool point_equality = true;    // cut(B) & cut(A) equals cut(B) * cut(A)
  bool ifs_equality = true;      // B & A equals B o A
  bool ideals_semiprime = true;
  long long pairs = 0;
  long long ideals = 0;
  ordered_json first_violation;  // of the universally quantified side
};

CharacterizationScan scan_ideal_products(const FiniteSemigroup& s,
                                         const PointSemigroup& p,
                                         const std::vector<IFSubset>& candidates) {
  CharacterizationScan scan;
  scan.intra = is_intra_regular(s);
  scan.regular = is_regular(s);

  std::vector<const IFSubset*> lefts, rights;
  for (const IFSubset& a : candidates) {
    if (classify_ifs(a, IfsKind::left_ideal)) lefts.push_back(&a);
    if (classify_ifs(a, IfsKind::right_ideal)) rights.push_back(&a);
  }

  auto note_violation = [&](const char* identity, const IFSubset& a,
                            const IFSubset& b) {
    if (!scan.first_violation.is_null()) return;
    scan.first_violation = ordered_json();
    scan.first_violation["identity"] = identity;
    scan.first_violation["ifs_a"] = serialize_ifs(a);
    scan.first_violation["ifs_b"] = serialize_ifs(b);
  };

  for (const IFSubset* a : lefts) {
    const PointSet ua = underline(*a, p);
    for (const IFSubset* b : rights) {
      ++scan.pairs;
      const PointSet ub = underline(*b, p);
      if (scan.point_inclusion &&
          !pointset_leq(pointset_intersection(ua, ub), pointset_product(ua, ub))) {
        scan.point_inclusion = false;
        note_violation("cut-intersection-below-cut-product", *a, *b);
      }
      if (scan.ifs_inclusion && !ifs_leq(ifs_intersection(*a, *b), compose(*a, *b))) {
        scan.ifs_inclusion = false;
        note_violation("intersection-below-composition", *a, *b);
      }
      if (scan.point_equality &&
          !(pointset_intersection(ub, ua) == pointset_product(ub, ua))) {
        scan.point_equality = false;
        note_violation("cut-intersection-equals-cut-product", *b, *a);
      }
      if (scan.ifs_equality && !(ifs_intersection(*b, *a) == compose(*b, *a))) {
        scan.ifs_equality = false;
        note_violation("intersection-equals-composition", *b, *a);
      }
    }
  }

  for (const IFSubset& a : candidates) {
    if (!classify_ifs(a, IfsKind::ideal)) continue;
    ++scan.ideals;
    if (scan.ideals_semiprime && !classify_ifs(a, IfsKind::semiprime)) {
      scan.ideals_semiprime = false;
      note_violation("ideal-semiprime", a, a);
    }
  }
  return scan;
}

VerificationReport characterization_report(const FiniteSemigroup& s,
                                           const PointSemigroup& p,
                                           const CharacterizationScan& scan,
                                           const std::string& class_note) {
  VerificationReport r;
  r.check_id = "ideal-product-characterization";
  r.instances_checked = scan.pairs + scan.ideals;

  const bool agree = scan.point_inclusion == scan.intra &&
                     scan.ifs_inclusion == scan.intra &&
                     scan.point_equality == scan.regular &&
                     scan.ifs_equality == scan.regular &&
                     scan.ideals_semiprime == scan.intra;

  ordered_json flags;
  flags["intra_regular"] = scan.intra;
  flags["regular"] = scan.regular;
  flags["cut_intersection_below_product"] = scan.point_inclusion;
  flags["intersection_below_composition"] = scan.ifs_inclusion;
  flags["cut_intersection_equals_product"] = scan.point_equality;
  flags["intersection_equals_composition"] = scan.ifs_equality;
  flags["every_ideal_semiprime"] = scan.ideals_semiprime;

  r.witness = instance_witness(s, p.resolution());
  r.witness["flags"] = flags;
  if (!scan.first_violation.is_null())
    r.witness["violating_pair"] = scan.first_violation;

  if (!agree) r.outcome = Outcome::counterexample;
  r.notes = class_note;
  return r;
}

/// Merge per-instance reports for one check over one semigroup.
VerificationReport aggregate(const std::string& check_id,
                             const std::vector<VerificationReport>& parts,
                             const std::string& tag) {
  VerificationReport out;
  out.check_id = check_id;
  long long skipped = 0, informational = 0, strict = 0;
  ordered_json first_informational;
  for (const VerificationReport& part : parts) {
    out.instances_checked += part.instances_checked;
    if (part.outcome == Outcome::skipped) {
      ++skipped;
      continue;
    }
    if (part.notes.find("strict") != std::string::npos) ++strict;
    if (part.outcome == Outcome::counterexample) {
      if (part.informational()) {
        ++informational;
        if (first_informational.is_null()) first_informational = part.witness;
      } else if (out.outcome != Outcome::counterexample) {
        out.outcome = Outcome::counterexample;
        out.witness = part.witness;
      }
    }
  }

  std::ostringstream notes;
  notes << tag;
  if (skipped > 0) notes << " skipped=" << skipped;
  if (strict > 0) notes << " strict=" << strict;
  if (out.outcome != Outcome::counterexample) {
    if (informational > 0) {
      out.outcome = Outcome::counterexample;
      out.witness = first_informational;
      notes << " " << kInformational << "-mismatches=" << informational
            << " (inputs outside the consistent class)";
    } else if (!parts.empty() &&
               skipped == static_cast<long long>(parts.size())) {
      out.outcome = Outcome::skipped;
    }
  } else if (informational > 0) {
    notes << " " << kInformational << "-mismatches=" << informational;
  }
  out.notes = notes.str();
  return out;
}

VerificationReport tagged(VerificationReport r, const std::string& tag) {
  r.notes = r.notes.empty() ? tag : tag + " " + r.notes;
  return r;
}

constexpr IfsKind kCorrespondenceKinds[] = {
    IfsKind::subsemigroup, IfsKind::bi_ideal,    IfsKind::interior_ideal,
    IfsKind::left_ideal,   IfsKind::right_ideal, IfsKind::ideal,
    IfsKind::semiprime,    IfsKind::prime,
};

VerificationReport crisp_ideal_products_report(const FiniteSemigroup& s) {
  VerificationReport r;
  r.check_id = "ideal-intersection-vs-product";
  IdealProductSweep sweep;
  try {
    sweep = sweep_ideal_products(s);
  } catch (const std::invalid_argument& e) {
    r.outcome = Outcome::skipped;
    r.notes = e.what();
    return r;
  }
  r.instances_checked = sweep.pairs_checked;
  const bool agree = sweep.intersection_below_product == sweep.intra_regular &&
                     sweep.intersection_equals_product == sweep.regular;
  r.witness = ordered_json();
  r.witness["semigroup"] = serialize_semigroup(s);
  r.witness["intra_regular"] = sweep.intra_regular;
  r.witness["regular"] = sweep.regular;
  r.witness["intersection_below_product"] = sweep.intersection_below_product;
  r.witness["intersection_equals_product"] = sweep.intersection_equals_product;
  if (sweep.below_witness) {
    r.witness["below_witness_left_mask"] = sweep.below_witness->first;
    r.witness["below_witness_right_mask"] = sweep.below_witness->second;
  }
  if (sweep.equals_witness) {
    r.witness["equals_witness_left_mask"] = sweep.equals_witness->first;
    r.witness["equals_witness_right_mask"] = sweep.equals_witness->second;
  }
  if (!agree) r.outcome = Outcome::counterexample;
  return r;
}

}  // namespace

VerificationReport verify_underline_correspondence(const FiniteSemigroup& s,
                                                   int resolution,
                                                   const IFSubset& a, IfsKind kind) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  return underline_correspondence_on(s, p, a, kind);
}

VerificationReport verify_underline_algebra(const FiniteSemigroup& s, int resolution,
                                            const IFSubset& a, const IFSubset& b) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  return underline_algebra_on(s, p, a, b);
}

VerificationReport verify_regular_transfer(const FiniteSemigroup& s, int resolution) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  return transfer_on(s, p, false);
}

VerificationReport verify_intra_regular_transfer(const FiniteSemigroup& s,
                                                 int resolution) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  return transfer_on(s, p, true);
}

VerificationReport verify_interior_ideal_collapse(const FiniteSemigroup& s,
                                                  int resolution, const IFSubset& a,
                                                  CollapseMode mode) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  return collapse_on(s, p, a, mode);
}

VerificationReport verify_ideal_product_characterization(const FiniteSemigroup& s,
                                                         int resolution,
                                                         IfsClass cls) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  const std::vector<IFSubset> candidates =
      enumerate_ifs(s, resolution, cls == IfsClass::consistent);
  const CharacterizationScan scan = scan_ideal_products(s, p, candidates);
  return characterization_report(
      s, p, scan,
      cls == IfsClass::consistent ? "class=consistent" : "class=all");
}

VerificationReport verify_embedding(const FiniteSemigroup& s, int resolution) {
  const PointSemigroup p = PointSemigroup::materialize(s, resolution);
  std::vector<VerificationReport> parts;
  for (const DegreePair& value : grid_pairs(resolution))
    parts.push_back(embedding_on(s, p, value));
  return aggregate("embedding", parts, "");
}

VerificationReport verify_crisp_ideal_products(const FiniteSemigroup& s) {
  return crisp_ideal_products_report(s);
}

std::vector<VerificationReport> run_battery(const FiniteSemigroup& s,
                                            const SuiteConfig& config,
                                            const std::string& tag,
                                            std::uint64_t sample_salt) {
  std::vector<VerificationReport> reports;
  const int d = config.resolution;

  reports.push_back(tagged(verify_crisp_ideal_products(s), tag));

  std::optional<PointSemigroup> materialized;
  try {
    materialized = PointSemigroup::materialize(s, d, config.max_points);
  } catch (const BudgetError& e) {
    VerificationReport r;
    r.check_id = "materialization";
    r.outcome = Outcome::skipped;
    r.notes = tag + " budget exceeded: " + e.what();
    reports.push_back(std::move(r));
    return reports;
  }
  const PointSemigroup& p = *materialized;

  reports.push_back(tagged(transfer_on(s, p, false), tag));
  reports.push_back(tagged(transfer_on(s, p, true), tag));

  {
    std::vector<VerificationReport> parts;
    for (const DegreePair& value : grid_pairs(d))
      parts.push_back(embedding_on(s, p, value));
    reports.push_back(aggregate("embedding", parts, tag));
  }

  // grade assignments for the instance sweeps
  std::vector<IFSubset> sweep;
  switch (config.policy.mode) {
    case SuitePolicy::Mode::exhaustive_consistent:
      sweep = enumerate_ifs(s, d, true, config.budget);
      break;
    case SuitePolicy::Mode::exhaustive_all:
      sweep = enumerate_ifs(s, d, false, config.budget);
      break;
    case SuitePolicy::Mode::sampled: {
      const std::uint64_t derived =
          config.policy.seed ^ (0x9e3779b97f4a7c15ULL * sample_salt);
      sweep = sample_ifs(s, d, derived, config.policy.count);
      break;
    }
  }

  for (IfsKind kind : kCorrespondenceKinds) {
    std::vector<VerificationReport> parts;
    for (const IFSubset& a : sweep)
      parts.push_back(underline_correspondence_on(s, p, a, kind));
    reports.push_back(aggregate("underline-" + kind_slug(kind), parts, tag));
  }

  for (CollapseMode mode : {CollapseMode::regular, CollapseMode::intra_regular}) {
    std::vector<VerificationReport> parts;
    for (const IFSubset& a : sweep) parts.push_back(collapse_on(s, p, a, mode));
    reports.push_back(aggregate(mode == CollapseMode::regular
                                    ? "interior-ideal-collapse-regular"
                                    : "interior-ideal-collapse-intra-regular",
                                parts, tag));
  }

  {
    std::vector<VerificationReport> parts;
    if (config.policy.mode == SuitePolicy::Mode::sampled) {
      // pair the sampled assignments (a_i, a_j) with j striding oddly
      for (std::size_t i = 0; i < sweep.size(); ++i) {
        const std::size_t j = (i * 7 + 3) % sweep.size();
        parts.push_back(underline_algebra_on(s, p, sweep[i], sweep[j]));
      }
    } else {
      for (const IFSubset& a : sweep)
        for (const IFSubset& b : sweep)
          parts.push_back(underline_algebra_on(s, p, a, b));
    }
    reports.push_back(aggregate("underline-algebra", parts, tag));
  }

  if (config.policy.mode == SuitePolicy::Mode::sampled) {
    // a sample cannot witness the universally quantified sides, so only
    // the forward implications of the characterization are asserted
    const CharacterizationScan scan = scan_ideal_products(s, p, sweep);
    VerificationReport r;
    r.check_id = "ideal-product-characterization";
    r.instances_checked = scan.pairs + scan.ideals;
    const bool forward_ok =
        (!scan.intra ||
         (scan.point_inclusion && scan.ifs_inclusion && scan.ideals_semiprime)) &&
        (!scan.regular || (scan.point_equality && scan.ifs_equality));
    if (!forward_ok) {
      r.outcome = Outcome::counterexample;
      r.witness = instance_witness(s, d);
      r.witness["violating_pair"] = scan.first_violation;
    }
    r.notes = tag + " sampled: forward implications only";
    reports.push_back(std::move(r));
  } else {
    const std::string cls_note = config.policy.mode == SuitePolicy::Mode::exhaustive_all
                                     ? "class=all"
                                     : "class=consistent";
    const CharacterizationScan scan = scan_ideal_products(s, p, sweep);
    reports.push_back(tagged(characterization_report(s, p, scan, cls_note), tag));
  }
  return reports;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  std::vector<VerificationReport> reports;

  for (int order = config.min_order; order <= config.max_order; ++order) {
    std::vector<FiniteSemigroup> sgs;
    try {
      sgs = enumerate_semigroups(order, true, config.budget);
    } catch (const BudgetError& e) {
      VerificationReport r;
      r.check_id = "enumeration";
      r.outcome = Outcome::skipped;
      r.notes = "order=" + std::to_string(order) + " budget exceeded: " + e.what();
      reports.push_back(std::move(r));
      continue;
    }

    for (std::size_t si = 0; si < sgs.size(); ++si) {
      const std::string tag = "order=" + std::to_string(order) +
                              " sg=" + std::to_string(si) +
                              " D=" + std::to_string(config.resolution);
      std::vector<VerificationReport> batch = run_battery(
          sgs[si], config, tag, static_cast<std::uint64_t>(order) * 4096 + si);
      for (VerificationReport& r : batch) reports.push_back(std::move(r));
    }
  }
  return reports;
}

std::string summarize(const std::vector<VerificationReport>& reports) {
  long long confirmed = 0, binding = 0, informational = 0, skipped = 0;
  std::map<std::string, long long> binding_by_check;
  for (const VerificationReport& r : reports) {
    switch (r.outcome) {
      case Outcome::confirmed: ++confirmed; break;
      case Outcome::skipped: ++skipped; break;
      case Outcome::counterexample:
        if (r.informational()) {
          ++informational;
        } else {
          ++binding;
          ++binding_by_check[r.check_id];
        }
        break;
    }
  }
  std::ostringstream out;
  out << "reports: " << reports.size() << "  confirmed: " << confirmed
      << "  counterexamples: " << binding << "  informational: " << informational
      << "  skipped: " << skipped << "\n";
  for (const auto& [check, count] : binding_by_check)
    out << "  counterexamples in " << check << ": " << count << "\n";
  return out.str();
}

bool all_confirmed(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports)
    if (r.binding_counterexample()) return false;
  return true;
}

}  // namespace ifsg
