#include "wcx/serialize.hpp"

#include <sstream>

#include "wcx/characters.hpp"
#include "wcx/errors.hpp"

namespace wcx {

namespace {

template <class T, class F>
std::vector<T> list_from(const Json& j, F f) {
  if (!j.is_array()) throw InputError("expected a JSON array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(f(e));
  return out;
}

std::vector<int> ints(const Json& j) {
  return list_from<int>(j, [](const Json& e) {
    if (!e.is_number_integer()) throw InputError("expected an integer");
    return e.get<int>();
  });
}

Json bounds_to_json(const std::map<int, ExtInt>& m) {
  Json j = Json::object();
  for (auto [k, v] : m) j[std::to_string(k)] = to_json(v);
  return j;
}

std::map<int, ExtInt> bounds_from_json(const Json& j) {
  std::map<int, ExtInt> m;
  for (auto& [k, v] : j.items()) m[std::stoi(k)] = ext_int_from_json(v);
  return m;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Json to_json(const WeightVector& w) { return Json{{"entries", w.entries}, {"sim", w.sim}}; }

Json to_json(ExtInt v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

Json to_json(const WeightProfile& prof) {
  Json j = Json::array();
  for (auto v : prof.t) j.push_back(to_json(v));
  return j;
}

Json to_json(const BlockComposition& comp) { return comp.blocks(); }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Laurent& x) {
  Json j = Json::object();
  for (const auto& [m, c] : x.terms()) j[to_string(m)] = to_string(c);
  return j;
}

Json to_json(const TorusElement& x) {
  Json entries = Json::array();
  for (const auto& e : x.entries) entries.push_back(to_json(e));
  return Json{{"entries", entries}, {"sim", to_json(x.sim)}};
}

Json to_json(const VirtualLeviModule& vm) {
  Json terms = Json::array();
  for (const auto& t : vm.terms()) terms.push_back({{"degree", t.degree}, {"weight", to_json(t.weight)}, {"mult", t.mult}});
  return Json{{"levi", to_json(vm.levi())}, {"terms", terms}};
}

Json to_json(const TruncationSpec& spec) {
  return Json{{"at_least", bounds_to_json(spec.at_least)}, {"below", bounds_to_json(spec.below)}};
}

Json to_json(const CosetToken& token) {
  Json j{{"label", token.label}};
  j["cardinality"] = token.cardinality ? Json(*token.cardinality) : Json(nullptr);
  return j;
}

Json to_json(const StratumTerm& term) {
  Json pairs = Json::array();
  for (const auto& sp : term.split_pairs) pairs.push_back({{"hermitian", to_json(sp.hermitian)}, {"linear", to_json(sp.linear)}});
  Json j{{"S", term.S},
         {"sign", term.sign},
         {"coset", to_json(term.coset)},
         {"module", to_json(term.module)},
         {"split_pairs", pairs},
         {"truncation", to_json(term.truncation)},
         {"gamma_factor", term.gamma_tag},
         {"ind_tag", term.ind_tag}};
  j["gamma_euler"] = term.gamma_euler ? to_json(*term.gamma_euler) : Json(nullptr);
  return j;
}

Json to_json(const StratumClass& sc) {
  Json terms = Json::array();
  for (const auto& t : sc.terms) terms.push_back(to_json(t));
  return Json{{"signature", {sc.sig.p, sc.sig.q}},
              {"r", sc.r},
              {"lambda", to_json(sc.lambda)},
              {"profile", to_json(sc.profile)},
              {"central_weight", sc.central},
              {"dualized", sc.dualized},
              {"shift", sc.shift},
              {"twist", sc.twist},
              {"terms", terms}};
}

Json to_json(const TraceTerm& term) {
  Json orbitals = Json::array();
  for (const auto& o : term.placeholders.orbital_sum)
    orbitals.push_back({{"token", o.token}, {"orbital", o.orbital}, {"volume", o.volume}});
  return Json{{"S", term.S},
              {"s", term.s},
              {"gamma0", to_json(term.gamma0)},
              {"truncation", to_json(term.truncation)},
              {"cohomology", to_json(term.cohomology)},
              {"computed_trace", to_json(term.computed_trace)},
              {"placeholders",
               {{"c_factor", term.placeholders.c_factor},
                {"euler_chi", term.placeholders.euler_chi},
                {"twisted_orbital", term.placeholders.twisted_orbital},
                {"orbital_sum", orbitals}}}};
}

Json to_json(const TraceSubTerm& sub) {
  return Json{{"J", sub.J}, {"sign", sub.sign}, {"truncation", to_json(sub.truncation)},
              {"computed_trace", to_json(sub.computed_trace)}};
}

WeightVector weight_from_json(const Json& j) { return WeightVector{ints(j.at("entries")), j.at("sim").get<int>()}; }

ExtInt ext_int_from_json(const Json& j) {
  if (j.is_number_integer()) return ExtInt(j.get<long long>());
  if (j.is_string()) return ExtInt::parse(j.get<std::string>());
  throw InputError("expected an integer or \"inf\"/\"-inf\"");
}

WeightProfile profile_from_json(const Json& j) { return WeightProfile{list_from<ExtInt>(j, ext_int_from_json)}; }

BlockComposition composition_from_json(const Json& j) { return BlockComposition(ints(j)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a monomial -> coefficient object");
  Laurent x;
  for (auto& [m, c] : j.items()) x += Laurent::monomial(parse_monomial(m), rational_from_json(c));
  return x;
}

TorusElement torus_from_json(const Json& j) {
  TorusElement x;
  x.entries = list_from<Laurent>(j.at("entries"), laurent_from_json);
  x.sim = laurent_from_json(j.at("sim"));
  return x;
}

VirtualLeviModule module_from_json(const Json& j) {
  std::vector<LeviTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({weight_from_json(t.at("weight")), t.at("degree").get<int>(), t.at("mult").get<long long>()});
  return VirtualLeviModule(composition_from_json(j.at("levi")), terms);
}

TruncationSpec truncation_from_json(const Json& j) {
  return TruncationSpec{bounds_from_json(j.at("at_least")), bounds_from_json(j.at("below"))};
}

CosetToken token_from_json(const Json& j) {
  CosetToken t{j.at("label").get<std::string>(), std::nullopt};
  if (!j.at("cardinality").is_null()) t.cardinality = j.at("cardinality").get<long long>();
  return t;
}

StratumTerm stratum_term_from_json(const Json& j) {
  StratumTerm t;
  t.S = ints(j.at("S"));
  t.sign = j.at("sign").get<int>();
  t.coset = token_from_json(j.at("coset"));
  t.module = module_from_json(j.at("module"));
  for (const auto& sp : j.at("split_pairs"))
    t.split_pairs.push_back({weight_from_json(sp.at("hermitian")), weight_from_json(sp.at("linear"))});
  t.truncation = truncation_from_json(j.at("truncation"));
  t.gamma_tag = j.at("gamma_factor").get<std::string>();
  if (!j.at("gamma_euler").is_null()) t.gamma_euler = rational_from_json(j.at("gamma_euler"));
  t.ind_tag = j.at("ind_tag").get<std::string>();
  return t;
}

StratumClass class_from_json(const Json& j) {
  StratumClass sc;
  const auto sig = ints(j.at("signature"));
  if (sig.size() != 2) throw InputError("signature must be [p,q]");
  sc.sig = GroupSignature(sig[0], sig[1]);
  sc.r = j.at("r").get<int>();
  sc.lambda = weight_from_json(j.at("lambda"));
  sc.profile = profile_from_json(j.at("profile"));
  sc.central = j.at("central_weight").get<int>();
  sc.dualized = j.at("dualized").get<bool>();
  sc.shift = j.at("shift").get<int>();
  sc.twist = j.at("twist").get<int>();
  sc.terms = list_from<StratumTerm>(j.at("terms"), stratum_term_from_json);
  return sc;
}

TraceTerm trace_term_from_json(const Json& j) {
  TraceTerm t;
  t.S = ints(j.at("S"));
  t.s = j.at("s").get<int>();
  t.gamma0 = torus_from_json(j.at("gamma0"));
  t.truncation = truncation_from_json(j.at("truncation"));
  t.cohomology = module_from_json(j.at("cohomology"));
  t.computed_trace = laurent_from_json(j.at("computed_trace"));
  const auto& ph = j.at("placeholders");
  t.placeholders.c_factor = ph.at("c_factor").get<std::string>();
  t.placeholders.euler_chi = ph.at("euler_chi").get<std::string>();
  t.placeholders.twisted_orbital = ph.at("twisted_orbital").get<std::string>();
  for (const auto& o : ph.at("orbital_sum"))
    t.placeholders.orbital_sum.push_back(
        {o.at("token").get<std::string>(), o.at("orbital").get<std::string>(), o.at("volume").get<std::string>()});
  return t;
}

TraceSubTerm sub_term_from_json(const Json& j) {
  TraceSubTerm s;
  s.J = ints(j.at("J"));
  s.sign = j.at("sign").get<int>();
  s.truncation = truncation_from_json(j.at("truncation"));
  s.computed_trace = laurent_from_json(j.at("computed_trace"));
  return s;
}

Json envelope(const std::string& kind, const GroupSignature& sig, const std::optional<WeightProfile>& prof,
              const RunConfig& cfg, Json payload) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", kind},
              {"signature", {sig.p, sig.q}},
              {"profile", prof ? to_json(*prof) : Json(nullptr)},
              {"config_digest", cfg.digest()},
              {"payload", std::move(payload)}};
}

const Json& open_envelope(const Json& doc, const std::string& kind) {
  if (!doc.is_object() || !doc.contains("schema_version") || doc.at("schema_version") != kSchemaVersion)
    throw InputError("unsupported or missing schema_version");
  if (doc.at("kind") != kind) throw InputError("expected a '" + kind + "' document");
  return doc.at("payload");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string tsv_module(const VirtualLeviModule& vm, const std::vector<int>& strata) {
  std::ostringstream os;
  os << "degree\tweight\tmult\tdim";
  for (int r : strata) os << "\ts" << r;
  os << "\n";
  for (const auto& t : vm.terms()) {
    os << t.degree << "\t" << to_string(t.weight) << "\t" << t.mult << "\t" << weyl_dim(vm.levi(), t.weight);
    for (int r : strata) os << "\t" << s_weight(r, t.weight);
    os << "\n";
  }
  return os.str();
}

std::string tsv_class(const StratumClass& sc) {
  std::ostringstream os;
  os << "# r=" << sc.r << " lambda=" << to_string(sc.lambda) << " profile=" << to_string(sc.profile)
     << " m=" << sc.central << " dualized=" << (sc.dualized ? 1 : 0) << " shift=" << sc.shift << " twist=" << sc.twist
     << "\n";
  os << "S\ttoken\tcardinality\tsign\tdegree\tweight\tmult\thermitian\tlinear\ts" << sc.r << "\n";
  for (const auto& term : sc.terms) {
    const auto card = term.coset.cardinality ? std::to_string(*term.coset.cardinality) : std::string("?");
    for (std::size_t i = 0; i < term.module.terms().size(); ++i) {
      const auto& t = term.module.terms()[i];
      os << to_string(term.S) << "\t" << term.coset.label << "\t" << card << "\t" << term.sign << "\t" << t.degree << "\t"
         << to_string(t.weight) << "\t" << t.mult << "\t" << to_string(term.split_pairs[i].hermitian) << "\t"
         << join(term.split_pairs[i].linear.entries) << "\t" << s_weight(sc.r, t.weight) << "\n";
    }
  }
  return os.str();
}

std::string tsv_trace(const std::vector<TraceTerm>& terms) {
  std::ostringstream os;
  os << "S\ts\tgamma0\ttruncation\tcomputed_trace\tc_factor\teuler_chi\ttwisted_orbital\torbital_sum\n";
  for (const auto& t : terms) {
    std::string orbit;
    for (const auto& o : t.placeholders.orbital_sum) orbit += (orbit.empty() ? "" : " + ") + o.volume + "*" + o.orbital;
    os << to_string(t.S) << "\t" << t.s << "\t" << to_string(t.gamma0) << "\t" << to_string(t.truncation) << "\t"
       << t.computed_trace.to_string() << "\t" << t.placeholders.c_factor << "\t" << t.placeholders.euler_chi << "\t"
       << t.placeholders.twisted_orbital << "\t" << orbit << "\n";
  }
  return os.str();
}

}  // namespace wcx
