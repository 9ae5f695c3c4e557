// ospx: batch front end for the orthosymplectic checks.
//
//   ospx verify   --suite S --m M --n N (--preset ID | --config FILE) [--out FILE]
//   ospx homology --functor {hd1,hdt,hc1,rrr,z} (--preset ID | --config FILE)
//   ospx h2       --m M --n N (--preset ID | --config FILE)
//   ospx presets
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 invalid input.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ospx/cehomology.hpp"
#include "ospx/steinberg.hpp"

using json = nlohmann::ordered_json;
using namespace ospx;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string suite;
  std::string functor;
  std::size_t m = 2, n = 1;
  std::string preset, config, out;
  std::string family;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_catalog() {
  static const std::vector<std::string> s = {
      "algebra", "section2", "sto",           "kernel",        "tridec",       "derived",
      "kp",      "lmd34",    "lmd_kp",        "h_rln",         "hatosp12_h",   "lemmas",
      "z",       "assumption", "cocycle-alpha", "cocycle-beta", "cocycle-osp12"};
  return s;
}

AlgebraPtr load(const Options& o) {
  if (o.preset.empty() == o.config.empty()) throw InvalidInput("give exactly one of --preset and --config");
  return o.preset.empty() ? algebra_from_file(o.config) : preset_algebra(o.preset);
}

std::string source(const Options& o) { return o.preset.empty() ? o.config : o.preset; }

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json check_json(const Check& c) {
  json j;
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
  json d = json::object();
  for (const auto& [k, v] : c.dims) d[k] = v;
  j["dims"] = d;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

void emit(const json& j, const Options& o) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidInput("cannot write " + o.out);
  f << text;
}

bool one_one(const Options& o) { return o.m == 1 && o.n == 1; }

void need_shape(const Options& o, std::size_t m, std::size_t n, const char* what) {
  if (o.m != m || o.n != n)
    throw InvalidShape(std::string(what) + " is defined for (m,n) = (" + std::to_string(m) + "," +
                       std::to_string(n) + ")");
}

// Lemma suites run on the sto model lifts, or on the hat model for (1,1).
GeneratorFamily lemma_family(const Options& o, const AlgebraPtr& R) {
  std::string fam = o.family.empty() ? (one_one(o) ? "hat" : "model") : o.family;
  if (fam == "osp") return osp_family(build_osp(o.m, o.n, R));
  if (fam == "model") return model_family(sto_model(o.m, o.n, R));
  if (fam == "hat") {
    need_shape(o, 1, 1, "the hat family");
    return hat_osp12_family(hat_osp12(R));
  }
  throw InvalidInput("unknown family '" + fam + "'");
}

Report cocycle_report(const Cocycle& c) {
  Report r;
  r.merge(verify_cocycle(c), "cocycle");
  if (r.all_pass()) r.merge(check_central_extension(central_extension(c, false)), "extension");
  return r;
}

Report run_suite(const Options& o, const AlgebraPtr& R) {
  const std::string& s = o.suite;
  Report r;
  if (s == "algebra") return verify_superalgebra(*R);
  if (s == "section2") return check_section2(build_osp(o.m, o.n, R));
  if (s == "sto") {
    r.merge(verify_sto_relations(osp_family(build_osp(o.m, o.n, R)), o.samples, o.seed), "osp");
    if (!one_one(o)) r.merge(verify_sto_relations(model_family(sto_model(o.m, o.n, R)), o.samples, o.seed), "model");
    return r;
  }
  if (s == "kernel") {
    if (one_one(o)) {
      HatOsp12 H = hat_osp12(R);
      r.merge(check_hat_osp12(H), "hat");
      r.merge(kernel_structure(hat_osp12_family(H), H.kernel, H.hdt.homology.dim), "lambda");
      return r;
    }
    StoModel S = sto_model(o.m, o.n, R);
    r.merge(check_sto_model(S), "model");
    r.merge(kernel_structure(model_family(S), S.kernel, S.hd.homology.dim), "lambda");
    return r;
  }
  if (s == "tridec") return tridec_check(lemma_family(o, R));
  if (s == "derived") return derived_elements(lemma_family(o, R));
  if (auto which = parse_lemma_suite(s)) return lemma_suite(lemma_family(o, R), *which);
  if (s == "lemmas") {
    GeneratorFamily F = lemma_family(o, R);
    if (one_one(o)) {
      for (LemmaSuite w : {LemmaSuite::kp, LemmaSuite::hatosp12_h}) r.merge(lemma_suite(F, w), lemma_suite_name(w));
    } else {
      for (LemmaSuite w : {LemmaSuite::kp, LemmaSuite::lmd34, LemmaSuite::lmd_kp, LemmaSuite::h_rln})
        r.merge(lemma_suite(F, w), lemma_suite_name(w));
    }
    return r;
  }
  if (s == "z") return check_pi_identities(i3_and_z(R));
  if (s == "assumption") {
    AssumptionResult a = assumption_checker(*R);
    Check& c = r.add("assumption", a.holds, a.holds ? std::string() : a.detail);
    c.dims.emplace_back("search_space", static_cast<long long>(a.search_space_dim));
    if (a.holds) c.note = "unit " + vec_str(a.witness);
    return r;
  }
  if (s == "cocycle-alpha") return cocycle_report(alpha_gl(build_osp(o.m, o.n, R), hd1_minus(R).quotient));
  if (s == "cocycle-beta") {
    need_shape(o, 2, 1, "cocycle-beta");
    Sto22Beta B = beta_sto22(R);
    r.merge(B.report, "beta");
    if (B.report.all_pass()) r.merge(check_hat_sto22(hat_sto22(R)), "hat");
    return r;
  }
  if (s == "cocycle-osp12") {
    need_shape(o, 1, 1, "cocycle-osp12");
    Uosp12 U = uosp12(R);
    const std::string chosen = std::string(ttsign_name(U.hat.tt)) + "." + jsign_name(U.hat.sign) + ".";
    std::string others;
    for (const auto& c : U.hat.alpha_report.checks) {
      if (c.name.rfind(chosen, 0) == 0) {
        Check k = c;
        k.name = "alpha." + c.name.substr(chosen.size());
        r.checks.push_back(k);
      } else if (!c.pass) {
        others += (others.empty() ? "" : "; ") + c.name + " fails at " + c.witness;
      }
    }
    r.add("alpha.reading", true).note = "using " + chosen.substr(0, chosen.size() - 1) +
                                        (others.empty() ? std::string() : "; other readings: " + others);
    r.merge(check_hat_osp12(U.hat), "hat");
    r.merge(check_uosp12(U), "uosp");
    return r;
  }
  throw InvalidInput("unknown suite '" + s + "'");
}

json header(const Options& o, const std::string& suite) {
  json j;
  j["tool_version"] = kVersion;
  j["suite"] = suite;
  j["shape"] = {{"m", o.m}, {"n", o.n}};
  j["algebra"] = source(o);
  return j;
}

int cmd_verify(const Options& o) {
  AlgebraPtr R = load(o);
  Report rep;
  try {
    rep = run_suite(o, R);
  } catch (const InvalidInput&) {
    throw;
  } catch (const InvalidShape&) {
    throw;
  } catch (const MixedShapes&) {
    throw;
  } catch (const Error& e) {
    rep.add("construction", false, e.what());
  }
  json j = header(o, o.suite);
  json checks = json::array();
  for (const auto& c : rep.sorted()) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["pass"] = rep.all_pass();
  j["timestamp"] = timestamp();
  emit(j, o);
  return rep.all_pass() ? 0 : 1;
}

int cmd_homology(const Options& o) {
  AlgebraPtr R = load(o);
  json j;
  j["tool_version"] = kVersion;
  j["functor"] = o.functor;
  j["algebra"] = source(o);
  HomologyModule mod;
  if (o.functor == "hd1") {
    mod = hd1_minus(R).homology;
  } else if (o.functor == "hdt") {
    mod = hd1_tilde(R).homology;
  } else if (o.functor == "hc1") {
    mod = hc1(R).homology;
  } else if (o.functor == "rrr") {
    mod = as_module("R/([R,R]R)", quotient_rrr(R).Q);
  } else if (o.functor == "z") {
    I3Data z = i3_and_z(R);
    mod = as_module("R/I3", z.quotient.Q);
    mod.name = "z";
    mod.dim = z.z_dim();
    j["quotient_dim"] = z.quotient.Q.dim();
  } else {
    throw InvalidInput("unknown functor '" + o.functor + "'");
  }
  j["dim"] = mod.dim;
  json basis = json::array();
  for (const auto& b : mod.basis) basis.push_back(vec_str(b));
  j["basis"] = basis;
  j["timestamp"] = timestamp();
  emit(j, o);
  return 0;
}

int cmd_h2(const Options& o) {
  AlgebraPtr R = load(o);
  H2Comparison c = h2_compare(o.m, o.n, R);
  json j = header(o, "h2");
  j["oracle"] = c.oracle;
  if (c.formula) {
    j["formula"] = *c.formula;
    j["formula_side"] = c.formula_name;
    j["match"] = c.match();
  }
  j["assumption"] = c.assumption;
  j["complex"] = {{"dim", c.ce.dim},         {"h1", c.ce.h1},         {"wedge2", c.ce.wedge2},
                  {"wedge3", c.ce.wedge3},   {"rank_d2", c.ce.rank_d2}, {"rank_d3", c.ce.rank_d3},
                  {"weight_reduced", c.ce.weight_reduced}, {"torus", c.ce.torus_used}};
  j["timestamp"] = timestamp();
  emit(j, o);
  return !c.formula || c.match() ? 0 : 1;
}

void algebra_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "preset id name:field[:params]");
  cmd->add_option("--config", o.config, "algebra config JSON");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

void shape_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "orthogonal rank m")->check(CLI::Range(1, 8));
  cmd->add_option("--n", o.n, "symplectic rank n")->check(CLI::Range(1, 8));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthosymplectic Lie superalgebra checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto* verify = app.add_subcommand("verify", "run a check suite");
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_catalog()));
  verify->add_option("--family", o.family, "generator family for lemma suites")
      ->check(CLI::IsMember({"osp", "model", "hat"}));
  verify->add_option("--samples", o.samples, "random samples for the sto suite");
  verify->add_option("--seed", o.seed, "sampling seed");
  shape_flags(verify, o);
  algebra_flags(verify, o);

  auto* homology = app.add_subcommand("homology", "dimension and basis of a homology functor");
  homology->add_option("--functor", o.functor, "hd1, hdt, hc1, rrr or z")
      ->required()
      ->check(CLI::IsMember({"hd1", "hdt", "hc1", "rrr", "z"}));
  algebra_flags(homology, o);

  auto* h2 = app.add_subcommand("h2", "H_2 of osp by Chevalley-Eilenberg against the homology formula");
  shape_flags(h2, o);
  algebra_flags(h2, o);

  auto* presets = app.add_subcommand("presets", "list preset ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*homology) return cmd_homology(o);
    if (*h2) return cmd_h2(o);
    if (*presets) {
      for (const auto& id : preset_catalog()) std::cout << id << "\n";
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const InvalidShape& e) {
    std::cerr << "invalid shape: " << e.what() << "\n";
    return 2;
  } catch (const MixedShapes& e) {
    std::cerr << "mixed shapes: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
