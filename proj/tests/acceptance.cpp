// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.
// `acceptance N` runs criterion N only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ospx/cehomology.hpp"
#include "ospx/steinberg.hpp"

using namespace ospx;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double worst = 0;  // slowest single case, seconds
  std::string worst_case;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void require(const Report& r, const std::string& where) {
    for (const auto& c : r.sorted())
      if (!c.pass) {
        fail(where + ": " + c.name + " at " + c.witness);
        return;
      }
    if (r.checks.empty()) fail(where + ": empty report");
  }
  // Runs body, records the time and turns exceptions into failures.
  void timed(const std::string& label, double budget, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      fail(label + ": " + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > worst) {
      worst = s;
      worst_case = label;
    }
    if (s > budget) fail(label + " took " + std::to_string(s) + " s");
  }
};

struct Shape {
  std::size_t m, n;
};

std::string tag(const std::string& p, Shape s) {
  return p + " (" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
}

const std::vector<std::string> kAllPresets = {
    "ground_field_id:Q", "ground_field_id:F3", "ground_field_id:F5", "dual_numbers_id:Q",
    "grassmann_id:Q",    "matrix_prp:Q:1",     "matrix_osp:Q:1,2",   "matrix_transpose:Q:2",
    "s_plus_sop:Q",      "s_plus_sop:Q:dual",  "s_plus_sop:Q:M2",    "adjoin_i:Q"};

const std::vector<Shape> kShapes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}};

std::vector<std::string> presets_up_to(std::size_t d) {
  std::vector<std::string> out;
  for (const auto& p : kAllPresets)
    if (preset_algebra(p)->dim() <= d) out.push_back(p);
  return out;
}

bool one_one(Shape s) { return s.m == 1 && s.n == 1; }

Outcome criterion1() {
  Outcome o;
  for (const auto& p : kAllPresets)
    o.timed(p, 1.0, [&] { o.require(verify_superalgebra(*preset_algebra(p)), p); });
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& p : presets_up_to(8))
    for (Shape s : kShapes)
      o.timed(tag(p, s), 30.0, [&] {
        Report r = check_section2(build_osp(s.m, s.n, preset_algebra(p)));
        o.require(r, tag(p, s));
        for (const char* name : {"perfect", "generation", "exact_sequence.dims"}) {
          bool seen = false;
          for (const auto& c : r.checks) seen = seen || c.name.find(name) != std::string::npos;
          o.require(seen, tag(p, s) + ": no check named like " + name);
        }
      });
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& p : presets_up_to(8))
    for (Shape s : kShapes)
      o.timed(tag(p, s), 60.0, [&] {
        AlgebraPtr R = preset_algebra(p);
        o.require(verify_sto_relations(osp_family(build_osp(s.m, s.n, R))), tag(p, s) + " osp");
        if (!one_one(s)) o.require(verify_sto_relations(model_family(sto_model(s.m, s.n, R))), tag(p, s) + " model");
      });
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& p : presets_up_to(8))
    for (Shape s : kShapes)
      o.timed(tag(p, s) + " alpha_gl", 300.0, [&] {
        AlgebraPtr R = preset_algebra(p);
        o.require(verify_cocycle(alpha_gl(build_osp(s.m, s.n, R), hd1_minus(R).quotient)), tag(p, s) + " alpha_gl");
      });
  for (const auto& p : presets_up_to(8))
    o.timed(p + " beta_sto22", 300.0, [&] {
      Sto22Beta B = beta_sto22(preset_algebra(p));
      o.require(B.report, p + " beta_sto22");
      std::size_t cases = 0;
      for (const auto& c : B.report.checks) cases += c.name.rfind("lemma_case.", 0) == 0;
      o.require(cases == 8, p + ": expected 8 case families, saw " + std::to_string(cases));
    });
  for (const auto& p : presets_up_to(4))
    o.timed(p + " osp12", 300.0, [&] {
      Uosp12 U = uosp12(preset_algebra(p));
      o.require(verify_cocycle(U.hat.ext.cocycle), p + " alpha_osp12");
      o.require(verify_cocycle(U.beta), p + " beta_hat_osp12");
    });
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& p : kAllPresets) {
    for (Shape s : kShapes) {
      if (one_one(s)) continue;
      o.timed(tag(p, s), 600.0, [&] {
        AlgebraPtr R = preset_algebra(p);
        StoModel S = sto_model(s.m, s.n, R);
        std::size_t hd = hd1_minus(R).homology.dim;
        o.require(S.kernel.size() == hd, tag(p, s) + ": ker " + std::to_string(S.kernel.size()) + " vs HD " +
                                             std::to_string(hd));
        o.require(kernel_dim(S.projection) == hd, tag(p, s) + ": rank count of the projection");
      });
    }
    o.timed(p + " hat", 600.0, [&] {
      AlgebraPtr R = preset_algebra(p);
      HatOsp12 H = hat_osp12(R);
      std::size_t hdt = hd1_tilde(R).homology.dim;
      o.require(H.kernel.size() == hdt, p + ": hat ker " + std::to_string(H.kernel.size()) + " vs HDt " +
                                            std::to_string(hdt));
      o.require(kernel_dim(H.projection) == hdt, p + ": rank count of the hat projection");
    });
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto expect = [&](const std::string& p, Shape s, std::optional<std::size_t> frozen) {
    o.timed(tag(p, s), 900.0, [&] {
      H2Comparison c = h2_compare(s.m, s.n, preset_algebra(p));
      o.require(c.formula.has_value(), tag(p, s) + ": formula side missing");
      o.require(c.match(), tag(p, s) + ": oracle " + std::to_string(c.oracle) + " vs " + c.formula_name + " " +
                               (c.formula ? std::to_string(*c.formula) : "-"));
      if (frozen) o.require(c.oracle == *frozen, tag(p, s) + ": oracle " + std::to_string(c.oracle));
    });
  };
  for (const auto& p : kAllPresets)
    for (Shape s : {Shape{2, 2}, Shape{3, 1}, Shape{1, 2}}) expect(p, s, p == "ground_field_id:Q" ? 0 : std::optional<std::size_t>{});
  expect("s_plus_sop:Q", {2, 1}, 2);
  expect("adjoin_i:Q", {2, 1}, {});
  for (const auto& p : kAllPresets) {
    if (p == "s_plus_sop:Q" || p == "adjoin_i:Q") continue;
    if (assumption_checker(*preset_algebra(p)).holds) expect(p, {2, 1}, {});
  }
  for (const auto& p : kAllPresets) {
    std::optional<std::size_t> frozen;
    if (p == "ground_field_id:Q") frozen = 0;
    if (p == "ground_field_id:F3") frozen = 2;
    expect(p, {1, 1}, frozen);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t corrected = 0;
  auto count_notes = [&](const Report& r) {
    for (const auto& c : r.checks) corrected += c.note.find("printed") != std::string::npos;
  };
  for (const auto& p : presets_up_to(4)) {
    for (Shape s : {Shape{2, 1}, Shape{3, 1}, Shape{1, 2}}) {
      GeneratorFamily F = model_family(sto_model(s.m, s.n, preset_algebra(p)));
      for (LemmaSuite w : {LemmaSuite::kp, LemmaSuite::lmd34, LemmaSuite::lmd_kp, LemmaSuite::h_rln})
        o.timed(tag(p, s) + " " + lemma_suite_name(w), 120.0, [&] {
          Report r = lemma_suite(F, w);
          o.require(r, tag(p, s) + " " + lemma_suite_name(w));
          count_notes(r);
        });
    }
    GeneratorFamily H = hat_osp12_family(hat_osp12(preset_algebra(p)));
    for (LemmaSuite w : {LemmaSuite::kp, LemmaSuite::hatosp12_h})
      o.timed(tag(p, {1, 1}) + " " + lemma_suite_name(w), 120.0, [&] {
        Report r = lemma_suite(H, w);
        o.require(r, tag(p, {1, 1}) + " " + lemma_suite_name(w));
        count_notes(r);
        if (w == LemmaSuite::hatosp12_h) o.require(r.find("three_j") != nullptr, p + ": 3J check missing");
      });
  }
  o.require(corrected > 0, "no corrected reading was reported");
  if (o.pass) o.detail = std::to_string(corrected) + " checks report a printed reading";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& p : kAllPresets) {
    AlgebraPtr R = preset_algebra(p);
    if (R->field().characteristic() == 3) continue;
    o.timed(p, 60.0, [&] {
      std::size_t hd = hd1_minus(R).homology.dim, hdt = hd1_tilde(R).homology.dim;
      o.require(hd == hdt, p + ": HD " + std::to_string(hd) + " vs HDt " + std::to_string(hdt));
    });
  }
  for (std::string s : {"ground", "dual", "grassmann", "M2"}) {
    for (const Field& F : {Field::rationals(), Field::prime(3)}) {
      std::string label = "S+S^op " + s + " over " + F.name();
      o.timed(label, 60.0, [&] {
        AlgebraPtr S = plain_algebra(s, F);
        AlgebraPtr R = sum_with_opposite(*S);
        std::size_t hdt = hd1_tilde(R).homology.dim, hc = hc1(S).homology.dim;
        o.require(hdt == hc, label + ": HDt " + std::to_string(hdt) + " vs HC1 " + std::to_string(hc));
        o.require(subspace(*R, Subspace::minus_plus_minus_sq).size() == R->dim(), label + ": R_- + R_-R_- != R");
        o.require(i3_and_z(R).z_dim() == 0, label + ": z != 0");
      });
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.timed("corrupted sl2", 10.0, [&] {
    LiePtr L = sl2(Field::rationals());
    LieSuperAlgebra bad = L->with_constant(0, 1, 0, Field::rationals().one());
    Report r = verify_lie(bad);
    const Check* j = r.find("jacobi");
    o.require(j && !j->pass && !j->witness.empty(), "corrupted sl2 passes Jacobi");
  });
  o.timed("corrupted osp", 30.0, [&] {
    OspAlgebra A = build_osp(2, 1, preset_algebra("dual_numbers_id:Q"));
    const LieSuperAlgebra& L = A.osp.lie();
    std::size_t i = 0, j = 0;
    while (L.bracket_basis(i, j).empty()) (++j == L.dim()) ? (j = 0, ++i) : 0;
    auto [k, c] = L.bracket_basis(i, j).front();
    Report r = verify_lie(L.with_constant(i, j, k, c + c));
    const Check* jac = r.find("jacobi");
    o.require(jac && !jac->pass, "corrupted osp constant passes Jacobi");
  });
  o.timed("sign-flipped alpha", 60.0, [&] {
    OspAlgebra A = build_osp(2, 1, preset_algebra("grassmann_id:Q"));
    Cocycle a = alpha_gl(A, hd1_minus(A.R).quotient);
    std::string first;
    for (int round = 0; round < 2; ++round) {
      std::size_t d = a.source->dim();
      std::optional<Cocycle> bad;
      for (std::size_t i = 0; i < d && !bad; ++i)
        for (std::size_t j = 0; j < d && !bad; ++j)
          if (!is_zero(a.value(i, j))) bad = a.with_pair_negated(i, j);
      o.require(bad.has_value(), "alpha vanishes identically");
      if (!bad) return;
      Report r = verify_cocycle(*bad);
      const Check* cc2 = r.find("CC2");
      o.require(cc2 && !cc2->pass && !cc2->witness.empty(), "sign-flipped alpha passes CC2");
      if (!cc2) return;
      if (round == 0) first = cc2->witness;
      else o.require(first == cc2->witness, "CC2 witness not deterministic");
    }
    o.detail = "CC2 witness " + first;
  });
  o.timed("(Q,id) assumption", 1.0, [&] {
    o.require(!assumption_checker(*preset_algebra("ground_field_id:Q")).holds, "(Q,id) satisfies the assumption");
  });
  o.timed("swapped f/g", 60.0, [&] {
    Report r = verify_sto_relations(swap_fg(osp_family(build_osp(2, 2, preset_algebra("ground_field_id:Q")))));
    for (const char* n : {"STO27", "STO28"}) {
      const Check* c = r.find(n);
      o.require(c && !c->pass, std::string("swapped f/g passes ") + n);
    }
  });
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "superinvolution axioms on every preset", criterion1},
    {2, "osp structure: perfect, generated, codimension", criterion2},
    {3, "all 28 sto relations, osp and model", criterion3},
    {4, "cocycle conditions for alpha_gl, beta_sto22, alpha/beta on osp_{1|2}", criterion4},
    {5, "kernel dimensions equal HD and HDt", criterion5},
    {6, "H2 oracle against the homology formula", criterion6},
    {7, "lemma identity suites", criterion7},
    {8, "degeneration: HDt = HD, HDt = HC1, z = 0", criterion8},
    {9, "negative controls", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    Outcome o = c.run();
    all = all && o.pass;
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title;
    char t[64];
    std::snprintf(t, sizeof t, "%.2f", o.worst);
    line << "  [slowest " << t << " s: " << o.worst_case << "]";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
