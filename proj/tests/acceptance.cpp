#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ifsg/enumerate.hpp"
#include "ifsg/harness.hpp"
#include "ifsg/ifs.hpp"
#include "ifsg/io.hpp"
#include "ifsg/points.hpp"
#include "ifsg/semigroup.hpp"

using namespace ifsg;

namespace {

struct Criterion {
  bool ok = false;
  std::string label;
  std::string detail;
};

constexpr IfsKind kKinds[] = {
    IfsKind::subsemigroup, IfsKind::bi_ideal,    IfsKind::interior_ideal,
    IfsKind::left_ideal,   IfsKind::right_ideal, IfsKind::ideal,
    IfsKind::semiprime,    IfsKind::prime,
};

bool crisp_cut_has(const PointSemigroup& p, const PointSet& cut, IfsKind kind) {
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

// 1. Exhaustive agreement between the nine fuzzy classifications and the
//    crisp classification of the point cut, consistent class, D=2.
Criterion underline_correspondence() {
  long long instances = 0, mismatches = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      const auto p = PointSemigroup::materialize(s, 2);
      for (const auto& a : enumerate_ifs(s, 2, true)) {
        if (!ifs_nonempty(a)) continue;
        const auto cut = underline(a, p);
        for (IfsKind kind : kKinds) {
          ++instances;
          if (classify_ifs(a, kind) != crisp_cut_has(p, cut, kind)) ++mismatches;
        }
      }
    }
  }
  Criterion c;
  c.label = "underline correspondence, exhaustive consistent class";
  c.ok = mismatches == 0 && instances == 12720;
  c.detail = std::to_string(instances) + " instances, " +
             std::to_string(mismatches) + " mismatches";
  return c;
}

struct AlgebraTally {
  long long pairs = 0;
  long long violations = 0;
  long long strict_consistent = 0;

  void check_pair(const PointSemigroup& p, const IFSubset& a, const IFSubset& b,
                  const PointSet& ca, const PointSet& cb) {
    ++pairs;
    const bool cons = ifs_consistent(a) && ifs_consistent(b);

    const auto joined = underline(ifs_union(a, b), p);
    const auto parts = pointset_union(ca, cb);
    if (!pointset_leq(parts, joined)) ++violations;
    if (cons && !(joined == parts)) ++violations;

    if (!(underline(ifs_intersection(a, b), p) == pointset_intersection(ca, cb)))
      ++violations;

    const auto prod = pointset_product(ca, cb);
    const auto comp = underline(compose(a, b), p);
    if (!pointset_leq(prod, comp)) ++violations;
    if (cons && !(prod == comp)) ++strict_consistent;
  }
};

// 2. The cut map preserves union and intersection and bounds the product,
//    exhaustively at order <= 2 over all assignments, sampled at 500 pairs
//    per semigroup up to order 3, with the product inclusion's strictness
//    pinned: never proper on the consistent class at D=2, proper witnesses
//    exist once inconsistent assignments are allowed.
Criterion cut_algebra() {
  AlgebraTally tally;

  for (int order = 1; order <= 2; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      const auto p = PointSemigroup::materialize(s, 2);
      const auto sweep = enumerate_ifs(s, 2, false);
      std::vector<PointSet> cuts;
      cuts.reserve(sweep.size());
      for (const auto& a : sweep) cuts.push_back(underline(a, p));
      for (std::size_t i = 0; i < sweep.size(); ++i)
        for (std::size_t j = 0; j < sweep.size(); ++j)
          tally.check_pair(p, sweep[i], sweep[j], cuts[i], cuts[j]);
    }
  }

  long long sampled_pairs = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (std::size_t si = 0; si < sgs.size(); ++si) {
      const auto p = PointSemigroup::materialize(sgs[si], 2);
      const auto xs =
          sample_ifs(sgs[si], 2, 0x5EED0000ULL + order * 64 + si, 1000);
      for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        tally.check_pair(p, xs[k], xs[k + 1], underline(xs[k], p),
                         underline(xs[k + 1], p));
        ++sampled_pairs;
      }
    }
  }

  // exhaustive strictness scan over the consistent class at orders <= 3
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      const auto p = PointSemigroup::materialize(s, 2);
      const auto sweep = enumerate_ifs(s, 2, true);
      std::vector<PointSet> cuts;
      cuts.reserve(sweep.size());
      for (const auto& a : sweep) cuts.push_back(underline(a, p));
      for (std::size_t i = 0; i < sweep.size(); ++i)
        for (std::size_t j = 0; j < sweep.size(); ++j) {
          if (!(pointset_product(cuts[i], cuts[j]) ==
                underline(compose(sweep[i], sweep[j]), p)))
            ++tally.strict_consistent;
        }
    }
  }

  // a proper inclusion exists outside the consistent class
  FiniteSemigroup null2(2, {0, 0, 0, 0});
  const auto p2 = PointSemigroup::materialize(null2, 2);
  const auto a = IFSubset::make(null2, 2, {{1, 1}, {0, 0}});
  const auto cut = underline(a, p2);
  const auto prod = pointset_product(cut, cut);
  const auto comp = underline(compose(a, a), p2);
  const bool witness_strict = pointset_leq(prod, comp) && !(prod == comp);

  Criterion c;
  c.label = "cut algebra: union, intersection, product bound";
  c.ok = tally.violations == 0 && tally.strict_consistent == 0 &&
         witness_strict && sampled_pairs >= 500 * 30;
  c.detail = std::to_string(tally.pairs) + " pairs (" +
             std::to_string(sampled_pairs) + " sampled), " +
             std::to_string(tally.violations) + " violations, " +
             std::to_string(tally.strict_consistent) +
             " proper inclusions on the consistent class, strict witness " +
             (witness_strict ? "found" : "missing");
  return c;
}

// 3. Regularity and intra-regularity transfer between a semigroup and its
//    point semigroup at D in {1, 2}.
Criterion regularity_transfer() {
  long long checks = 0, bad = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      for (int d = 1; d <= 2; ++d) {
        const auto p = PointSemigroup::materialize(s, d);
        ++checks;
        if (is_regular(s) != is_regular(p.table())) ++bad;
        ++checks;
        if (is_intra_regular(s) != is_intra_regular(p.table())) ++bad;
      }
    }
  }
  Criterion c;
  c.label = "regularity transfer to the point semigroup";
  c.ok = bad == 0 && checks == 120;
  c.detail = std::to_string(checks) + " checks, " + std::to_string(bad) +
             " disagreements";
  return c;
}

// 4. Ideal-product biconditionals for regular / intra-regular, exhaustive
//    over consistent assignments, with witness pairs on the failing side.
Criterion ideal_product_characterization() {
  long long semigroups = 0, bad = 0, non_intra = 0, missing_witness = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      ++semigroups;
      const auto r = verify_ideal_product_characterization(s, 2, IfsClass::consistent);
      if (r.outcome != Outcome::confirmed) ++bad;
      if (!is_intra_regular(s)) {
        ++non_intra;
        if (!r.witness.contains("violating_pair")) ++missing_witness;
      }
    }
  }
  Criterion c;
  c.label = "ideal product characterization of regularity";
  c.ok = bad == 0 && missing_witness == 0 && non_intra > 0 && semigroups == 30;
  c.detail = std::to_string(semigroups) + " semigroups, " +
             std::to_string(non_intra) + " non-intra-regular with witness pairs, " +
             std::to_string(bad) + " failures";
  return c;
}

// 5. Crisp companion: the left/right ideal product sweep matches the
//    regularity flags on every associative table, all subsets enumerated.
Criterion crisp_ideal_products() {
  long long tables = 0, bad = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, false);
    for (const auto& s : sgs) {
      ++tables;
      if (verify_crisp_ideal_products(s).outcome != Outcome::confirmed) ++bad;
    }
  }
  Criterion c;
  c.label = "crisp ideal intersection vs product sweep";
  c.ok = bad == 0 && tables == 122;
  c.detail = std::to_string(tables) + " tables, " + std::to_string(bad) +
             " failures";
  return c;
}

// 6. Composition identities: associativity and monotonicity on seeded
//    triples, the two ideal definitions coincide, and right o left sits
//    below the intersection for every one-sided ideal pair.
Criterion composition_identities() {
  long long triples = 0, bad_triples = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int order = 1; order <= 3; ++order) {
      const auto sgs = enumerate_semigroups(order, true);
      for (std::size_t si = 0; si < sgs.size(); ++si) {
        const auto xs =
            sample_ifs(sgs[si], d, 0x7E1E5000ULL + d * 1024 + order * 64 + si, 252);
        for (std::size_t k = 0; k + 2 < xs.size(); k += 3) {
          ++triples;
          const auto& a = xs[k];
          const auto& b = xs[k + 1];
          const auto& cc = xs[k + 2];
          if (!(compose(compose(a, b), cc) == compose(a, compose(b, cc))))
            ++bad_triples;
          const auto bigger = ifs_union(a, b);
          if (!ifs_leq(compose(a, cc), compose(bigger, cc))) ++bad_triples;
          if (!ifs_leq(compose(cc, a), compose(cc, bigger))) ++bad_triples;
        }
      }
    }
  }

  long long assignments = 0, split_definitions = 0, pair_count = 0,
            escaped_pairs = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      const auto sweep = enumerate_ifs(s, 2, false);
      std::vector<const IFSubset*> lefts, rights;
      for (const auto& a : sweep) {
        ++assignments;
        if (classify_ifs(a, IfsKind::ideal) != classify_ifs(a, IfsKind::ideal_alt))
          ++split_definitions;
        if (classify_ifs(a, IfsKind::left_ideal)) lefts.push_back(&a);
        if (classify_ifs(a, IfsKind::right_ideal)) rights.push_back(&a);
      }
      for (const auto* r : rights)
        for (const auto* l : lefts) {
          ++pair_count;
          if (!ifs_leq(compose(*r, *l), ifs_intersection(*r, *l)))
            ++escaped_pairs;
        }
    }
  }

  Criterion c;
  c.label = "composition identities and one-sided ideal bounds";
  c.ok = triples >= 10000 && bad_triples == 0 && split_definitions == 0 &&
         escaped_pairs == 0;
  c.detail = std::to_string(triples) + " triples (" +
             std::to_string(bad_triples) + " bad), " +
             std::to_string(assignments) + " assignments (" +
             std::to_string(split_definitions) + " definition splits), " +
             std::to_string(pair_count) + " ideal pairs (" +
             std::to_string(escaped_pairs) + " escapes)";
  return c;
}

// 7. Element embedding x -> x_(a,b) is an injective homomorphism for every
//    grid pair at D <= 3.
Criterion embedding() {
  long long embeddings = 0, bad = 0;
  for (int order = 1; order <= 3; ++order) {
    const auto sgs = enumerate_semigroups(order, true);
    for (const auto& s : sgs) {
      for (int d = 1; d <= 3; ++d) {
        const auto p = PointSemigroup::materialize(s, d);
        if (verify_embedding(s, d).outcome != Outcome::confirmed) ++bad;
        for (const auto& v : grid_pairs(d)) {
          ++embeddings;
          std::vector<int> img;
          try {
            img = embed_elements(p, v);
          } catch (const std::exception&) {
            ++bad;
            continue;
          }
          for (int x = 0; x < s.order(); ++x)
            for (int y = 0; y < s.order(); ++y) {
              if (p.table().product(img[x], img[y]) != img[s.product(x, y)]) ++bad;
              if (x != y && img[x] == img[y]) ++bad;
            }
        }
      }
    }
  }
  Criterion c;
  c.label = "point embedding of every element";
  c.ok = bad == 0 && embeddings == 300;
  c.detail = std::to_string(embeddings) + " embeddings, " + std::to_string(bad) +
             " failures";
  return c;
}

// 8. Frozen enumeration counts.
Criterion enumeration_counts() {
  const long long raw2 = static_cast<long long>(enumerate_semigroups(2, false).size());
  const long long iso2 = static_cast<long long>(enumerate_semigroups(2, true).size());
  const long long raw3 = static_cast<long long>(enumerate_semigroups(3, false).size());
  const long long iso3 = static_cast<long long>(enumerate_semigroups(3, true).size());
  Criterion c;
  c.label = "enumeration counts match the frozen oracle";
  c.ok = raw2 == 8 && iso2 == 5 && raw3 == 113 && iso3 == 24;
  c.detail = "order 2: " + std::to_string(raw2) + " raw / " + std::to_string(iso2) +
             " iso, order 3: " + std::to_string(raw3) + " raw / " +
             std::to_string(iso3) + " iso (want 8/5, 113/24)";
  return c;
}

// 9. Two identical CLI verify runs produce byte-identical reports.
Criterion deterministic_cli(const std::string& cli) {
  Criterion c;
  c.label = "deterministic verify output";
  const auto dir = std::filesystem::temp_directory_path();
  const std::string out1 = (dir / "ifsg_acceptance_run1.jsonl").string();
  const std::string out2 = (dir / "ifsg_acceptance_run2.jsonl").string();
  const std::string sum1 = (dir / "ifsg_acceptance_sum1.txt").string();
  const std::string sum2 = (dir / "ifsg_acceptance_sum2.txt").string();

  const std::string flags =
      " verify --orders 1..3 --resolution 2 --policy exhaustive-consistent"
      " --seed 42 --out ";
  const std::string cmd1 = "\"" + cli + "\"" + flags + out1 + " > " + sum1 + " 2>&1";
  const std::string cmd2 = "\"" + cli + "\"" + flags + out2 + " > " + sum2 + " 2>&1";

  const int st1 = std::system(cmd1.c_str());
  const int st2 = std::system(cmd2.c_str());
  const bool exited_ok = st1 != -1 && st2 != -1 && WIFEXITED(st1) &&
                         WIFEXITED(st2) && WEXITSTATUS(st1) == 0 &&
                         WEXITSTATUS(st2) == 0;
  if (!exited_ok) {
    c.detail = "verify runs did not both exit 0";
    return c;
  }

  const std::string r1 = read_file(out1);
  const std::string r2 = read_file(out2);
  const long long lines = std::count(r1.begin(), r1.end(), '\n');
  c.ok = !r1.empty() && r1 == r2 && read_file(sum1) == read_file(sum2) &&
         lines == 480;
  c.detail = std::to_string(lines) + " report lines, byte-identical: " +
             (r1 == r2 ? "yes" : "no");
  for (const auto& f : {out1, out2, sum1, sum2}) std::filesystem::remove(f);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }

  std::vector<Criterion> results;
  results.push_back(underline_correspondence());
  results.push_back(cut_algebra());
  results.push_back(regularity_transfer());
  results.push_back(ideal_product_characterization());
  results.push_back(crisp_ideal_products());
  results.push_back(composition_identities());
  results.push_back(embedding());
  results.push_back(enumeration_counts());
  results.push_back(deterministic_cli(argv[1]));

  bool all_ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all_ok = all_ok && r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << r.label
              << ": " << r.detail << "\n";
  }
  return all_ok ? 0 : 1;
}
