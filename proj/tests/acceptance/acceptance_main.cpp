// Acceptance suite: every exit criterion in one binary, one PASS/FAIL line
// each, nonzero exit if anything fails. Time limits are wall-clock and
// enforced where a criterion carries one.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "classeq/classeq.hpp"
#include "support/oracles.hpp"

using namespace classeq;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  double limit_seconds = 0;  // 0 = no limit
};

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  std::printf("[%s] %s (%.2fs%s)%s%s\n", ok ? "PASS" : "FAIL", c.label.c_str(),
              secs,
              c.limit_seconds > 0
                  ? (" < " + std::to_string(c.limit_seconds).substr(0, 4) + "s limit").c_str()
                  : "",
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.size() < 500) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
  return cond;
}

FiniteGroup random_permutation_group(std::mt19937& rng) {
  std::uniform_int_distribution<int> degree_dist(2, 5);
  std::uniform_int_distribution<int> count_dist(1, 3);
  PermutationGenerators gens;
  gens.degree = degree_dist(rng);
  for (int i = 0, n = count_dist(rng); i < n; ++i) {
    Permutation p(static_cast<std::size_t>(gens.degree));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    gens.generators.push_back(std::move(p));
  }
  return from_permutations(gens);
}

}  // namespace

int main() {
  const auto catalog = default_catalog();

  // 1. m-values of the consistently-classified groups, exact.
  run({"criterion 1: m-values match the consistent classification", 1.0},
      [&](std::string& detail) {
        bool ok = true;
        const std::map<std::string, int> expected = {
            {"C2", 1},  {"E2^1", 1}, {"E2^2", 1}, {"E2^3", 1}, {"E2^4", 1},
            {"C3", 2},  {"S3", 2},   {"C4", 3}};
        for (const auto& [name, want] : expected) {
          const int got = m_invariant(build(name)).m;
          ok &= expect(got == want,
                       name + ": m=" + std::to_string(got) + " want " +
                           std::to_string(want),
                       detail);
        }
        // C2xC2 is also published under m = 3; that conflicts with its
        // elementary abelian classification, so the computed 1 must carry
        // the discrepancy flag (criterion 4 mechanism) rather than a pass.
        const TheoremReport v4 = verify_theorem2(build("E2^2"));
        ok &= expect(v4.m == 1 && v4.paper_claimed_m && *v4.paper_claimed_m == 3 &&
                         v4.paper_discrepancy,
                     "C2xC2 conflict not flagged", detail);
        return ok;
      });

  // 2. The main theorem across the catalog, single-threaded.
  std::vector<TheoremReport> reports;
  run({"criterion 2: m = 1 or m = k-1 on the full catalog, single-threaded",
       30.0},
      [&](std::string& detail) {
        bool ok = expect(catalog.size() >= 25, "catalog too small", detail);
        for (const auto& [name, g] : catalog) {
          ok &= expect(g.order() <= 120, name + " order too large", detail);
        }
        reports = run_verification(catalog, VerifyOptions{1});
        int verified = 0;
        for (const auto& r : reports) {
          if (r.degenerate()) continue;  // the trivial group is recorded, skipped
          ++verified;
          ok &= expect(r.theorem2_pass,
                       r.name + ": m=" + std::to_string(r.m) + " k=" +
                           std::to_string(r.k),
                       detail);
        }
        ok &= expect(verified >= 25, "not enough verified groups", detail);
        return ok;
      });

  // 3. m = 1 exactly on the elementary abelian 2-groups, catalog-wide.
  run({"criterion 3: m = 1 iff elementary abelian 2-group", 0},
      [&](std::string& detail) {
        bool ok = true;
        for (const auto& r : reports) {
          if (r.degenerate()) continue;
          ok &= expect(r.m1_biconditional_pass, r.name + " biconditional", detail);
        }
        return ok;
      });

  // 4. The D4/A5 discrepancy is documented, in both output formats.
  run({"criterion 4: computed m(D4), m(A5) reported beside the published 3",
       0},
      [&](std::string& detail) {
        bool ok = true;
        for (const auto& name : {std::string("D4"), std::string("A5")}) {
          const auto it = std::find_if(
              reports.begin(), reports.end(),
              [&](const TheoremReport& r) { return r.name == name; });
          ok &= expect(it != reports.end(), name + " missing", detail);
          if (it == reports.end()) continue;
          ok &= expect(it->paper_claimed_m && *it->paper_claimed_m == 3,
                       name + " claim not recorded", detail);
          ok &= expect(it->paper_discrepancy, name + " not flagged", detail);
          ok &= expect(it->m == 4, name + " computed m", detail);
        }
        const std::string text = render_text(reports);
        const std::string json = render_json(reports);
        ok &= expect(text.find("[paper_discrepancy]") != std::string::npos,
                     "text flag missing", detail);
        ok &= expect(json.find("\"paper_discrepancy\": true") != std::string::npos,
                     "json flag missing", detail);
        return ok;
      });

  // 5. The unit-fraction identity of every catalog class equation, exact.
  run({"criterion 5: sum 1/m_i = 1 exactly for every catalog group", 0},
      [&](std::string& detail) {
        bool ok = true;
        for (const auto& [name, g] : catalog) {
          const ClassEquation eq = class_equation(g);  // asserts internally
          oracle::Frac sum{0, 1};
          for (const std::int64_t m : eq.indices) {
            sum.num = sum.num * m + sum.den;
            sum.den *= m;
            const long long gg = oracle::frac_gcd(sum.num, sum.den);
            sum.num /= gg;
            sum.den /= gg;
          }
          ok &= expect(sum.num == 1 && sum.den == 1, name + " identity", detail);
        }
        return ok;
      });

  // 6. Enumeration vs the independent oracle through k = 5.
  run({"criterion 6: solution counts 1, 1, 3, 14, 147 and the k=3 set", 5.0},
      [&](std::string& detail) {
        bool ok = true;
        const std::size_t expected[] = {1, 1, 3, 14, 147};
        for (int k = 1; k <= 5; ++k) {
          const auto mine = landau_solutions(k);
          const auto oracle_set = oracle::unit_fraction_solutions(k);
          ok &= expect(mine.size() == expected[k - 1],
                       "count k=" + std::to_string(k), detail);
          ok &= expect(oracle_set.size() == expected[k - 1],
                       "oracle count k=" + std::to_string(k), detail);
          std::set<std::vector<long long>> mine_set;
          for (const auto& s : mine) {
            mine_set.insert(
                std::vector<long long>(s.denominators.begin(), s.denominators.end()));
          }
          ok &= expect(mine_set == oracle_set, "set k=" + std::to_string(k),
                       detail);
        }
        const std::set<std::vector<long long>> k3 = {
            {3, 3, 3}, {4, 4, 2}, {6, 3, 2}};
        ok &= expect(oracle::unit_fraction_solutions(3) == k3, "k=3 set", detail);
        return ok;
      });

  // 7. Order bound from the class count.
  run({"criterion 7: |G| <= max_order_bound(k(G)) for every catalog group", 0},
      [&](std::string& detail) {
        bool ok = true;
        int with_three_classes = 0;
        for (const auto& [name, g] : catalog) {
          const int k = decompose(g).k;
          if (k <= kDefaultLandauTermCap) {
            ok &= expect(g.order() <= max_order_bound(k), name + " bound", detail);
          } else {
            // enumeration is infeasible past the cap; the closed-form bound
            // (validated against enumeration below) decides it
            const OrderBound b = sylvester_order_bound(k);
            ok &= expect(static_cast<std::uint64_t>(g.order()) <= b.value,
                         name + " bound", detail);
          }
          if (k == 3) {
            ++with_three_classes;
            ok &= expect(g.order() <= 6, name + " exceeds the k=3 bound", detail);
          }
        }
        ok &= expect(max_order_bound(3) == 6, "k=3 bound is 6", detail);
        ok &= expect(with_three_classes == 2, "expected exactly C3 and S3 at k=3",
                     detail);
        for (int k = 1; k <= 6; ++k) {
          ok &= expect(sylvester_order_bound(k).value ==
                           static_cast<std::uint64_t>(max_order_bound(k)),
                       "closed form k=" + std::to_string(k), detail);
        }
        return ok;
      });

  // 8. Structure checks on every applicable (rational, abelian Sylow-2) group.
  run({"criterion 8: structure checks pass on every applicable group", 0},
      [&](std::string& detail) {
        bool ok = true;
        bool s3_applicable = false;
        for (const auto& [name, g] : catalog) {
          const Prop1Report r = verify_proposition1(g);
          if (!r.applicable) continue;
          ok &= expect(r.pass, name + " structure check", detail);
          if (name == "S3") s3_applicable = r.pass;
        }
        ok &= expect(s3_applicable, "S3 must be applicable and pass", detail);
        return ok;
      });

  // 9. The proof-step chain on the order-6 nonabelian group.
  run({"criterion 9: proof-step suite on S3", 0}, [&](std::string& detail) {
    const FiniteGroup s3 = build("S3");
    const auto dec = decompose(s3);
    bool ok = expect(conjugate_to_all_nontrivial_powers(s3, dec),
                     "power conjugacy", detail);
    ok &= expect(all_elements_prime_order(s3), "prime orders", detail);
    const Subgroup derived = derived_subgroup(s3);
    const SplitReport split = find_complement(s3, derived);
    ok &= expect(split.splits, "no complement", detail);
    if (split.splits) {
      for (Element h : split.complement->elements()) {
        if (h == kIdentity) continue;
        const RestrictedConjugation phi = conjugation_on(s3, h, derived);
        ok &= expect(automorphism_order(phi) == 2, "order 2", detail);
        ok &= expect(is_fixed_point_free(phi), "fixed point free", detail);
        ok &= expect(is_inversion(s3, phi), "inversion", detail);
      }
    }
    const CheckedPredicate c = class_size_two_in_derived(s3, dec);
    ok &= expect(c.applicable && c.holds, "class size two", detail);
    ok &= expect(s3.order() == 2 * 3, "|G| = 2 * 3^1", detail);
    return ok;
  });

  // 10. Property suites: randomized axioms, partitions, subgroup outputs,
  // abelian unions, deterministic parallel reports.
  run({"criterion 10: property suites (>= 200 cases each)", 0},
      [&](std::string& detail) {
        bool ok = true;
        std::mt19937 rng(987654321);
        for (int trial = 0; trial < 200; ++trial) {
          const FiniteGroup g = random_permutation_group(rng);
          try {
            validate_group_axioms(g);
          } catch (const std::exception& e) {
            ok &= expect(false, std::string("axioms: ") + e.what(), detail);
            continue;
          }
          const auto dec = decompose(g);
          int total = 0;
          for (const auto& cls : dec.classes) total += cls.size();
          ok &= expect(total == g.order(), "partition", detail);
          const Element x = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
          const int cls = dec.class_of[static_cast<std::size_t>(x)];
          ok &= expect(static_cast<int>(centralizer(g, x).size()) *
                               dec.classes[static_cast<std::size_t>(cls)].size() ==
                           g.order(),
                       "orbit-stabilizer", detail);
          const Subgroup der = derived_subgroup(g);
          ok &= expect(is_subgroup(g, der), "derived subgroup", detail);
          const Subgroup syl = sylow_subgroup(g, 2);
          ok &= expect(is_subgroup(g, syl) && syl.size() == p_part(g.order(), 2),
                       "sylow output", detail);
        }

        // abelian class unions: |union| = |s| + 1
        std::vector<FiniteGroup> abelian;
        for (const auto& [name, g] : catalog) {
          if (g.order() >= 2 && is_abelian(g)) abelian.push_back(g);
        }
        int cases = 0;
        while (cases < 200) {
          const FiniteGroup& g = abelian[std::uniform_int_distribution<std::size_t>(
              0, abelian.size() - 1)(rng)];
          const auto dec = decompose(g);
          ClassSubset s;
          for (int c = 1; c < dec.k; ++c) {
            if (std::bernoulli_distribution(0.4)(rng)) s.indices.push_back(c);
          }
          if (s.indices.empty()) continue;
          ok &= expect(union_with_identity(dec, s).size() ==
                           static_cast<int>(s.indices.size()) + 1,
                       "abelian union cardinality", detail);
          ++cases;
        }

        // determinism: reruns and parallel runs are byte-identical
        const auto rerun = run_verification(catalog, VerifyOptions{1});
        const auto parallel = run_verification(catalog, VerifyOptions{4});
        ok &= expect(render_text(reports) == render_text(rerun), "rerun bytes",
                     detail);
        ok &= expect(render_text(reports) == render_text(parallel),
                     "parallel text bytes", detail);
        ok &= expect(render_json(reports) == render_json(parallel),
                     "parallel json bytes", detail);
        return ok;
      });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
