#include "wcx/commands.hpp"

#include <sstream>

#include "wcx/errors.hpp"
#include "wcx/serialize.hpp"
#include "wcx/verify.hpp"

namespace wcx {

namespace {

GroupSignature signature(const CommandOptions& opt) {
  if (opt.p == 0 || opt.q == 0) throw InputError("--p and --q are required");
  return GroupSignature(opt.p, opt.q);
}

RunConfig config(const CommandOptions& opt) {
  RunConfig cfg = opt.config ? RunConfig::load(*opt.config, opt.strict) : RunConfig{};
  cfg.strict = cfg.strict || opt.strict;
  if (opt.format) {
    if (*opt.format == "json") cfg.format = OutputFormat::Json;
    else if (*opt.format == "tsv") cfg.format = OutputFormat::Tsv;
    else throw InputError("--format must be json or tsv");
  }
  return cfg;
}

WeightVector lambda(const CommandOptions& opt, const GroupSignature& sig) {
  if (!opt.lambda) throw InputError("--lambda is required");
  auto w = parse_weight(*opt.lambda);
  if (static_cast<int>(w.size()) != sig.n())
    throw InputError("--lambda needs " + std::to_string(sig.n()) + " entries, got " + std::to_string(w.size()));
  if (!dominant_for(BlockComposition({sig.n()}), w)) throw InputError("lambda " + to_string(w) + " is not dominant");
  return w;
}

WeightProfile profile(const CommandOptions& opt, const GroupSignature& sig) {
  if (opt.ic && opt.profile) throw InputError("give either --profile or --ic, not both");
  if (opt.ic) return ic_profiles(sig).first;
  if (!opt.profile) throw InputError("one of --profile or --ic is required");
  auto prof = parse_profile(*opt.profile);
  validate_profile(sig, prof);
  return prof;
}

// "[s=K:]x1,...,xk;c": k = n gives the element itself, k = n-2s the middle
// part of an element of the boundary group of stratum s.
std::map<int, TorusElement> gamma0s(const CommandOptions& opt, const GroupSignature& sig) {
  std::map<int, TorusElement> out;
  std::optional<TorusElement> every;
  for (const auto& text : opt.gamma0) {
    std::string_view body = text;
    std::optional<int> s;
    if (body.starts_with("s=")) {
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) throw InputError("--gamma0 '" + text + "': expected s=K:entries");
      s = std::stoi(std::string(body.substr(2, colon - 2)));
      if (*s < 0 || *s > sig.q) throw InputError("--gamma0 '" + text + "': s out of range");
      body = body.substr(colon + 1);
    }
    auto x = parse_torus(body);
    if (static_cast<int>(x.size()) != sig.n()) {
      if (!s || static_cast<int>(x.size()) != sig.n() - 2 * *s)
        throw InputError("--gamma0 '" + text + "': wrong number of entries");
      x = embed_boundary(sig, *s, x.entries, x.sim);
    }
    if (s) {
      if (out.count(*s)) throw InputError("--gamma0 given twice for s=" + std::to_string(*s));
      out[*s] = x;
    } else {
      if (every) throw InputError("--gamma0 without s= given twice");
      every = x;
    }
  }
  if (every)
    for (int s = 0; s <= sig.q; ++s) out.emplace(s, *every);
  return out;
}

std::string render(const RunConfig& cfg, const Json& doc, const std::string& tsv) {
  return cfg.format == OutputFormat::Json ? dump(doc) : tsv;
}

CommandResult cmd_info(const CommandOptions& opt) {
  const auto sig = signature(opt);
  const auto cfg = config(opt);
  const auto [t, s] = ic_profiles(sig);
  Json rows = Json::array();
  std::ostringstream tsv;
  tsv << "r\tdim\tgroup\tt\ts\n";
  for (const auto& st : strata(sig)) {
    rows.push_back({{"r", st.r}, {"dim", st.dim}, {"group", st.group_desc}, {"t", to_json(t[st.r])}, {"s", to_json(s[st.r])}});
    tsv << st.r << "\t" << st.dim << "\t" << st.group_desc << "\t" << t[st.r].to_string() << "\t" << s[st.r].to_string()
        << "\n";
  }
  const bool dual_ok = dual_profile(sig, t) == s && dual_profile(sig, s) == t;
  tsv << "# dual_check\t" << (dual_ok ? "ok" : "FAILED") << "\n";
  Json payload{{"strata", rows}, {"ic_t", to_json(t)}, {"ic_s", to_json(s)}, {"dual_check", dual_ok}};
  return {kExitOk, render(cfg, envelope("info", sig, t, cfg, payload), tsv.str()), ""};
}

CommandResult cmd_kostant(const CommandOptions& opt) {
  const auto sig = signature(opt);
  const auto cfg = config(opt);
  const auto lam = lambda(opt, sig);
  const Subset S = parse_subset(opt.subset.value_or(""));
  const auto vm = kostant_cohomology(sig, S, lam);

  Json payload{{"subset", S}, {"lambda", to_json(lam)}, {"module", to_json(vm)}};
  Json sw = Json::array();
  for (const auto& t : vm.terms()) {
    Json row = Json::object();
    for (int r : S) row[std::to_string(r)] = s_weight(r, t.weight);
    sw.push_back(row);
  }
  payload["s_weights"] = sw;
  std::string tsv = tsv_module(vm, S);
  int code = kExitOk;
  std::string err;
  if (opt.oracle) {
    const auto rep = chevalley_eilenberg(sig, S, lam);
    VirtualLeviModule diff = vm;
    diff.add(rep.cohomology, -1);
    payload["oracle"] = {{"module_dim", rep.module_dim},
                         {"cochain_dims", rep.cochain_dims},
                         {"cohomology_dims", rep.cohomology_dims},
                         {"diff", to_json(diff)["terms"]},
                         {"agree", diff.empty()}};
    tsv += "# oracle\t" + std::string(diff.empty() ? "agree" : "DIFFER") + "\n";
    if (!diff.empty()) {
      code = kExitVerifyFailed;
      err = "oracle disagrees with the Kostant computation\n";
    }
  } else {
    payload["oracle"] = nullptr;
  }
  return {code, render(cfg, envelope("kostant", sig, std::nullopt, cfg, payload), tsv), err};
}

CommandResult cmd_restrict(const CommandOptions& opt) {
  const auto sig = signature(opt);
  const auto cfg = config(opt);
  const auto lam = lambda(opt, sig);
  const auto prof = profile(opt, sig);
  const int r = opt.stratum.value_or(1);

  Json payload;
  std::string tsv;
  StratumClass sc;
  if (opt.ic) {
    const auto cmp = restrict_ic(sig, lam, r, cfg);
    sc = cmp.t_class;
    payload["comparison"] = {{"level", to_string(cmp.level)}, {"report", cmp.report}, {"s_class", to_json(cmp.s_class)}};
    tsv = tsv_class(sc) + "# comparison\t" + to_string(cmp.level) + "\t" + cmp.report + "\n";
  } else {
    sc = restrict_weighted(sig, lam, prof, r, cfg);
    payload["comparison"] = nullptr;
    tsv = tsv_class(sc);
  }
  payload["class"] = to_json(sc);
  payload["evaluated"] = to_json(evaluate_class(sc, cfg));
  return {kExitOk, render(cfg, envelope("stratum_class", sig, prof, cfg, payload), tsv), ""};
}

CommandResult cmd_trace(const CommandOptions& opt) {
  const auto sig = signature(opt);
  const auto cfg = config(opt);
  const auto lam = lambda(opt, sig);
  const auto prof = profile(opt, sig);
  const auto terms = assemble_terms(sig, lam, prof, gamma0s(opt, sig), cfg);

  Json jterms = Json::array();
  Json expansions = Json::array();
  bool ok = true;
  for (const auto& t : terms) {
    jterms.push_back(to_json(t));
    Json subs = Json::array();
    if (!t.S.empty()) {
      const auto ex = inclusion_exclusion_expand(t);
      ok = ok && signed_sum(ex) == t.computed_trace;
      for (const auto& s : ex) subs.push_back(to_json(s));
    }
    expansions.push_back(subs);
  }
  Json payload{{"lambda", to_json(lam)}, {"terms", jterms}, {"expansions", expansions}, {"expansion_check", ok}};
  std::string tsv = tsv_trace(terms) + "# expansion_check\t" + (ok ? "ok" : "FAILED") + "\n";
  return {ok ? kExitOk : kExitVerifyFailed, render(cfg, envelope("trace_terms", sig, prof, cfg, payload), tsv),
          ok ? "" : "inclusion-exclusion identity failed\n"};
}

CommandResult cmd_verify(const CommandOptions& opt) {
  std::vector<std::string> names;
  if (opt.suite == "all") names = suite_names();
  else names.push_back(opt.suite);
  CommandResult res;
  std::ostringstream os;
  for (const auto& name : names) {
    const auto r = run_suite(name);
    os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (!r.passed) res.exit_code = kExitVerifyFailed;
  }
  res.out = os.str();
  return res;
}

}  // namespace

CommandResult run_command(const std::string& name, const CommandOptions& opt) {
  try {
    if (name == "info") return cmd_info(opt);
    if (name == "kostant") return cmd_kostant(opt);
    if (name == "restrict") return cmd_restrict(opt);
    if (name == "trace") return cmd_trace(opt);
    if (name == "verify") return cmd_verify(opt);
    return {kExitUsage, "", "unknown command '" + name + "'\n"};
  } catch (const InternalError& e) {
    return {kExitVerifyFailed, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace wcx
