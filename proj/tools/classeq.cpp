// Command-line front end: group info, batch theorem verification, the m
// invariant with witnesses, unit-fraction enumeration, and the rational-group
// structure checks, with text or JSON output.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classeq/classeq.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "text";
  int closure_cap = classeq::kDefaultClosureCap;
  int threads = 1;
};

bool use_json(const GlobalOptions& opts) { return opts.format == "json"; }

std::vector<std::pair<std::string, classeq::FiniteGroup>> build_all(
    const std::vector<std::string>& specs, const GlobalOptions& opts) {
  std::vector<std::pair<std::string, classeq::FiniteGroup>> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    out.emplace_back(s, classeq::build(s, opts.closure_cap));
  }
  return out;
}

int cmd_info(const std::vector<std::string>& specs, const GlobalOptions& opts) {
  ordered_json arr = ordered_json::array();
  for (const auto& [name, g] : build_all(specs, opts)) {
    const auto dec = classeq::decompose(g);
    const auto eq = classeq::class_equation(g, dec);
    ordered_json j;
    j["name"] = name;
    j["order"] = g.order();
    j["k"] = dec.k;
    j["abelian"] = classeq::is_abelian(g);
    j["rational"] = classeq::is_rational(g, dec);
    j["class_sizes"] = eq.sizes;
    j["landau_indices"] = eq.indices;
    if (g.order() >= 2) {
      j["m"] = classeq::m_invariant(g, dec).m;
    } else {
      j["m"] = nullptr;
    }
    if (use_json(opts)) {
      arr.push_back(std::move(j));
      continue;
    }
    std::printf("group %s  order=%d  k=%d\n", name.c_str(), g.order(), dec.k);
    std::string sizes, indices;
    for (std::size_t i = 0; i < eq.sizes.size(); ++i) {
      if (i) {
        sizes += ' ';
        indices += ' ';
      }
      sizes += std::to_string(eq.sizes[i]);
      indices += std::to_string(eq.indices[i]);
    }
    std::printf("  class sizes: %s\n", sizes.c_str());
    std::printf("  landau indices m_i: %s\n", indices.c_str());
    std::printf("  abelian=%s rational=%s\n",
                j["abelian"].get<bool>() ? "true" : "false",
                j["rational"].get<bool>() ? "true" : "false");
    if (j["m"].is_null()) {
      std::printf("  m: undefined (trivial group)\n");
    } else {
      std::printf("  m=%d\n", j["m"].get<int>());
    }
  }
  if (use_json(opts)) std::printf("%s\n", arr.dump(2).c_str());
  return 0;
}

int cmd_verify(const std::vector<std::string>& specs, bool catalog,
               const GlobalOptions& opts) {
  std::vector<std::pair<std::string, classeq::FiniteGroup>> groups;
  if (catalog) {
    groups = classeq::default_catalog(opts.closure_cap);
  }
  for (auto& g : build_all(specs, opts)) groups.push_back(std::move(g));
  if (groups.empty()) {
    std::fprintf(stderr, "verify: no groups given (use specifiers or --catalog)\n");
    return 2;
  }
  classeq::VerifyOptions vopts;
  vopts.threads = opts.threads;
  const auto reports = classeq::run_verification(groups, vopts);
  if (use_json(opts)) {
    std::fputs(classeq::render_json(reports).c_str(), stdout);
  } else {
    std::fputs(classeq::render_text(reports).c_str(), stdout);
  }
  return classeq::all_pass(reports) ? 0 : 1;
}

int cmd_m(const std::string& spec, bool witnesses, const GlobalOptions& opts) {
  const classeq::FiniteGroup g = classeq::build(spec, opts.closure_cap);
  const auto dec = classeq::decompose(g);
  const auto res = classeq::m_invariant(g, dec);
  if (use_json(opts)) {
    ordered_json j;
    j["name"] = spec;
    j["order"] = g.order();
    j["k"] = res.k;
    j["m"] = res.m;
    if (witnesses) {
      ordered_json w;
      for (const auto& [n, subset] : res.counterexamples) {
        w[std::to_string(n)] = subset.indices;
      }
      j["witnesses"] = std::move(w);
    }
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  std::printf("group %s  order=%d  k=%d  m=%d\n", spec.c_str(), g.order(), res.k,
              res.m);
  if (witnesses) {
    for (const auto& [n, subset] : res.counterexamples) {
      std::string cls;
      for (std::size_t i = 0; i < subset.indices.size(); ++i) {
        if (i) cls += ' ';
        cls += std::to_string(subset.indices[i]);
      }
      const auto u = classeq::union_with_identity(dec, subset);
      std::printf("  n=%d fails: classes {%s} give a union of size %d\n", n,
                  cls.c_str(), u.size());
    }
  }
  return 0;
}

int cmd_prop1(const std::string& spec, const GlobalOptions& opts) {
  const classeq::FiniteGroup g = classeq::build(spec, opts.closure_cap);
  const auto r = classeq::verify_proposition1(g);
  if (use_json(opts)) {
    ordered_json j;
    j["name"] = spec;
    j["rational"] = r.rational;
    j["sylow2_abelian"] = r.sylow2_abelian;
    j["sylow2_elementary"] = r.sylow2_elementary;
    j["splits_over_derived"] = r.splits_over_derived;
    j["derived_is_3group"] = r.derived_is_3group;
    j["applicable"] = r.applicable;
    if (r.applicable) {
      j["pass"] = r.pass;
    } else {
      j["pass"] = nullptr;
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("group %s\n", spec.c_str());
    std::printf("  rational=%s sylow2_abelian=%s\n", r.rational ? "true" : "false",
                r.sylow2_abelian ? "true" : "false");
    std::printf("  sylow2_elementary=%s splits_over_derived=%s derived_is_3group=%s\n",
                r.sylow2_elementary ? "true" : "false",
                r.splits_over_derived ? "true" : "false",
                r.derived_is_3group ? "true" : "false");
    if (!r.applicable) {
      std::printf("  verdict: inapplicable\n");
    } else {
      std::printf("  verdict: %s\n", r.pass ? "PASS" : "FAIL");
    }
  }
  return (r.applicable && !r.pass) ? 1 : 0;
}

int cmd_landau(int terms, int term_cap, bool count_only, bool csv,
               const GlobalOptions& opts) {
  const auto sols = classeq::landau_solutions(terms, term_cap);
  if (count_only && !csv) {
    if (use_json(opts)) {
      ordered_json j;
      j["k"] = terms;
      j["count"] = sols.size();
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::printf("%zu\n", sols.size());
    }
    return 0;
  }
  if (csv) {
    for (const auto& s : sols) {
      std::string line;
      for (std::size_t i = 0; i < s.denominators.size(); ++i) {
        if (i) line += ',';
        line += std::to_string(s.denominators[i]);
      }
      std::printf("%s\n", line.c_str());
    }
    return 0;
  }
  if (use_json(opts)) {
    ordered_json j;
    j["k"] = terms;
    j["count"] = sols.size();
    ordered_json arr = ordered_json::array();
    for (const auto& s : sols) arr.push_back(s.denominators);
    j["solutions"] = std::move(arr);
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  std::printf("k=%d: %zu solutions\n", terms, sols.size());
  for (const auto& s : sols) {
    std::string line;
    for (std::size_t i = 0; i < s.denominators.size(); ++i) {
      if (i) line += ' ';
      line += std::to_string(s.denominators[i]);
    }
    std::printf("  %s\n", line.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group class-equation toolkit: conjugacy classes, the m "
               "invariant, unit-fraction enumeration, theorem verification"};
  app.require_subcommand(1);

  GlobalOptions opts;
  try {
    opts.closure_cap = classeq::closure_cap_from_env();
  } catch (const classeq::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--closure-cap", opts.closure_cap,
                 "cap on constructed group order")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--threads", opts.threads, "worker threads for batch verify")
      ->check(CLI::Range(1, 256));

  auto* info = app.add_subcommand("info", "order, class equation, k, m, rationality");
  std::vector<std::string> info_specs;
  info->add_option("spec", info_specs, "group specifiers (C12, E2^3, D4, S4, A5, Q8, C2xC3, file:path.cay)")
      ->required();

  auto* verify = app.add_subcommand("verify", "per-group theorem report");
  std::vector<std::string> verify_specs;
  bool verify_catalog = false;
  verify->add_option("spec", verify_specs, "group specifiers");
  verify->add_flag("--catalog", verify_catalog, "verify the built-in catalog");

  auto* m_cmd = app.add_subcommand("m", "the m invariant of one group");
  std::string m_spec;
  bool m_witnesses = false;
  m_cmd->add_option("spec", m_spec, "group specifier")->required();
  m_cmd->add_flag("--witnesses", m_witnesses, "print one failing subset per n < m");

  auto* prop1 = app.add_subcommand("prop1", "rational-group structure checks");
  std::string prop1_spec;
  prop1->add_option("spec", prop1_spec, "group specifier")->required();

  auto* landau = app.add_subcommand("landau", "k-term unit-fraction solutions");
  int landau_terms = 0;
  int landau_cap = classeq::kDefaultLandauTermCap;
  bool landau_count_only = false;
  bool landau_csv = false;
  landau->add_option("--terms", landau_terms, "term count k")->required();
  landau->add_option("--term-cap", landau_cap, "enumeration cap on k")
      ->check(CLI::Range(1, 9));
  landau->add_flag("--count-only", landau_count_only, "print only the count");
  landau->add_flag("--csv", landau_csv, "one solution per line, comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(info_specs, opts);
    if (verify->parsed()) return cmd_verify(verify_specs, verify_catalog, opts);
    if (m_cmd->parsed()) return cmd_m(m_spec, m_witnesses, opts);
    if (prop1->parsed()) return cmd_prop1(prop1_spec, opts);
    if (landau->parsed()) {
      return cmd_landau(landau_terms, landau_cap, landau_count_only, landau_csv,
                        opts);
    }
  } catch (const classeq::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 2;
}
