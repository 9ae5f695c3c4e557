#include "ospx/steinberg.hpp"

#include <random>

namespace ospx {

namespace {

using K = GenKind;

Scalar sgn(const Field& F, int e) { return (e & 1) ? F.make(-1) : F.one(); }

int deg(const SuperAlgebra& R, const Vec& a) { return R.degree(a).value_or(0); }

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

struct Elem {
  Vec v;
  int p;
  std::string label;
};

std::vector<Elem> basis_domain(const SuperAlgebra& R) {
  std::vector<Elem> d;
  for (std::size_t s = 0; s < R.dim(); ++s) d.push_back({R.basis(s), R.parity(s), std::to_string(s)});
  return d;
}

// Distinct nonzero supercommutators of basis elements.
std::vector<Elem> commutator_domain(const SuperAlgebra& R) {
  std::vector<Elem> d;
  for (std::size_t s = 0; s < R.dim(); ++s)
    for (std::size_t t = 0; t < R.dim(); ++t) {
      Vec c = R.bracket_basis(s, t);
      if (is_zero(c)) continue;
      bool seen = false;
      for (const auto& e : d) seen = seen || e.v == c;
      if (!seen) d.push_back({c, R.parity(s) ^ R.parity(t), "[" + std::to_string(s) + "," + std::to_string(t) + "]"});
    }
  return d;
}

std::vector<Elem> random_domain(const SuperAlgebra& R, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<Elem> d;
  for (std::size_t c = 0; c < count; ++c) {
    const int p = static_cast<int>(c & 1);
    Vec v = R.zero();
    for (std::size_t s = 0; s < R.dim(); ++s)
      if (R.parity(s) == p) v[s] = R.field().make(coef(rng));
    if (!is_zero(v)) d.push_back({v, p, "r" + std::to_string(c)});
  }
  return d;
}

struct Ctx {
  const GeneratorFamily& F;
  const SuperAlgebra& R;
  Field Fk;
  std::size_t m, n;
  std::string where;
  std::string witness, alt_witness;
  long long count = 0;

  Ctx(const GeneratorFamily& f) : F(f), R(*f.algebra()), Fk(f.algebra()->field()), m(f.m()), n(f.n()) {}

  Vec G(K k, std::size_t i, std::size_t j, const Vec& a) const { return F.gen(k, i, j, a); }
  Vec br(const Vec& x, const Vec& y) const { return F.bracket(x, y); }
  Vec zero() const { return F.target()->zero(); }
  Scalar s(int e) const { return sgn(Fk, e); }
  Vec mul(const Vec& a, const Vec& b) const { return R.mul(a, b); }
  Vec mul(const Vec& a, const Vec& b, const Vec& c) const { return R.mul(R.mul(a, b), c); }
  Vec bar(const Vec& a) const { return R.bar(a); }
  Vec one() const { return R.unit(); }

  void expect(const Vec& lhs, const Vec& rhs, std::initializer_list<std::size_t> idx) {
    ++count;
    if (witness.empty() && lhs != rhs) witness = tuple_str(idx) + ";" + where;
  }
  void expect_alt(const Vec& lhs, const Vec& rhs, std::initializer_list<std::size_t> idx) {
    if (alt_witness.empty() && lhs != rhs) alt_witness = tuple_str(idx) + ";" + where;
  }
};

using Args = std::vector<const Elem*>;
using Body = std::function<void(Ctx&, const Args&)>;

struct Identity {
  std::string name;
  std::size_t arity;
  Body body;
  std::string alt;  // description of the printed reading, when it differs
};

Check& run_identity(Report& rep, const GeneratorFamily& F, const Identity& id, const std::vector<Elem>& dom) {
  Ctx c(F);
  const std::size_t d = dom.size();
  std::vector<std::size_t> pos(id.arity, 0);
  bool done = d == 0 && id.arity > 0;
  while (!done) {
    Args xs;
    c.where = "(";
    for (std::size_t r = 0; r < id.arity; ++r) {
      xs.push_back(&dom[pos[r]]);
      c.where += (r ? "," : "") + dom[pos[r]].label;
    }
    c.where += ")";
    id.body(c, xs);
    if (!c.witness.empty() && (id.alt.empty() || !c.alt_witness.empty())) break;
    std::size_t r = id.arity;
    while (r > 0) {
      if (++pos[r - 1] < d) break;
      pos[r - 1] = 0;
      --r;
    }
    done = r == 0;
  }
  auto& chk = rep.add(id.name, c.witness.empty(), c.witness);
  chk.dims = {{"instances", c.count}};
  if (c.count == 0) chk.note = "vacuous for this shape";
  if (!id.alt.empty())
    chk.note = id.alt + ": " + (c.alt_witness.empty() ? "holds" : "fails at " + c.alt_witness);
  return chk;
}

void run_all(Report& rep, const GeneratorFamily& F, const std::vector<Identity>& ids, const std::vector<Elem>& dom) {
  for (const auto& id : ids) run_identity(rep, F, id, dom);
}

// ---------------------------------------------------------------------------
// STO01..STO28

std::vector<Identity> sto_relations() {
  std::vector<Identity> r;
  r.push_back({"STO01", 1, [](Ctx& c, const Args& x) {
                 const Vec& a = x[0]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     if (i != j) c.expect(c.G(K::t, i, j, a), scale(c.s(1), c.G(K::t, j, i, c.bar(a))), {i, j});
               }, {}});
  r.push_back({"STO02", 1, [](Ctx& c, const Args& x) {
                 const Vec& a = x[0]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     if (k != l) {
                       c.expect(c.G(K::v, k, l, a), c.G(K::v, l, k, c.bar(a)), {k, l, 0});
                       c.expect(c.G(K::w, k, l, a), c.G(K::w, l, k, c.bar(a)), {k, l, 1});
                     }
               }, {}});
  r.push_back({"STO03", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t ip = 1; ip <= c.m; ++ip)
                     for (std::size_t j = 1; j <= c.m; ++j)
                       if (i != ip && ip != j && i != j)
                         c.expect(c.br(c.G(K::t, i, ip, a), c.G(K::t, ip, j, b)), c.G(K::t, i, j, c.mul(a, b)),
                                  {i, ip, j});
               }, {}});
  r.push_back({"STO04", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t ip = 1; ip <= c.m; ++ip)
                       for (std::size_t jp = 1; jp <= c.m; ++jp)
                         if (i != j && i != ip && i != jp && j != ip && j != jp && ip != jp)
                           c.expect(c.br(c.G(K::t, i, j, a), c.G(K::t, ip, jp, b)), c.zero(), {i, j, ip, jp});
               }, {}});
  r.push_back({"STO05", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         if (i != j && k != l) {
                           Vec t = c.G(K::t, i, j, a);
                           c.expect(c.br(t, c.G(K::u, k, l, b)), c.zero(), {i, j, k, l, 0});
                           c.expect(c.br(t, c.G(K::v, k, l, b)), c.zero(), {i, j, k, l, 1});
                           c.expect(c.br(t, c.G(K::w, k, l, b)), c.zero(), {i, j, k, l, 2});
                         }
               }, {}});
  r.push_back({"STO06", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t kp = 1; kp <= c.n; ++kp)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != kp && kp != l && k != l)
                         c.expect(c.br(c.G(K::u, k, kp, a), c.G(K::u, kp, l, b)), c.G(K::u, k, l, c.mul(a, b)),
                                  {k, kp, l});
               }, {}});
  r.push_back({"STO07", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t kp = 1; kp <= c.n; ++kp)
                       for (std::size_t lp = 1; lp <= c.n; ++lp)
                         if (k != l && l != kp && kp != lp && lp != k)
                           c.expect(c.br(c.G(K::u, k, l, a), c.G(K::u, kp, lp, b)), c.zero(), {k, l, kp, lp});
               }, {}});
  r.push_back({"STO08", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t kp = 1; kp <= c.n; ++kp)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != kp && kp != l && k != l)
                         c.expect(c.br(c.G(K::u, k, kp, a), c.G(K::v, kp, l, b)), c.G(K::v, k, l, c.mul(a, b)),
                                  {k, kp, l});
               }, {}});
  r.push_back({"STO09", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t kp = 1; kp <= c.n; ++kp)
                       for (std::size_t lp = 1; lp <= c.n; ++lp)
                         if (k != l && l != kp && kp != lp && lp != l)
                           c.expect(c.br(c.G(K::u, k, l, a), c.G(K::v, kp, lp, b)), c.zero(), {k, l, kp, lp});
               }, {}});
  r.push_back({"STO10", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t kp = 1; kp <= c.n; ++kp)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != kp && kp != l && k != l)
                         c.expect(c.br(c.G(K::w, l, kp, a), c.G(K::u, kp, k, b)), c.G(K::w, l, k, c.mul(a, b)),
                                  {k, kp, l});
               }, {}});
  r.push_back({"STO11", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t kp = 1; kp <= c.n; ++kp)
                       for (std::size_t lp = 1; lp <= c.n; ++lp)
                         if (k != l && l != kp && kp != lp && lp != l)
                           c.expect(c.br(c.G(K::w, lp, kp, a), c.G(K::u, l, k, b)), c.zero(), {k, l, kp, lp});
               }, {}});
  r.push_back({"STO12", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t kp = 1; kp <= c.n; ++kp)
                       for (std::size_t lp = 1; lp <= c.n; ++lp)
                         if (k != l && kp != lp) {
                           c.expect(c.br(c.G(K::v, k, l, a), c.G(K::v, kp, lp, b)), c.zero(), {k, l, kp, lp, 0});
                           c.expect(c.br(c.G(K::w, k, l, a), c.G(K::w, kp, lp, b)), c.zero(), {k, l, kp, lp, 1});
                         }
               }, {}});
  r.push_back({"STO13", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t kp = 1; kp <= c.n; ++kp)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != kp && kp != l && k != l)
                         c.expect(c.br(c.G(K::v, k, kp, a), c.G(K::w, kp, l, b)), c.G(K::u, k, l, c.mul(a, b)),
                                  {k, kp, l});
               }, {}});
  r.push_back({"STO14", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t kp = 1; kp <= c.n; ++kp)
                       for (std::size_t lp = 1; lp <= c.n; ++lp)
                         if (k != l && k != kp && k != lp && l != kp && l != lp && kp != lp)
                           c.expect(c.br(c.G(K::v, k, l, a), c.G(K::w, kp, lp, b)), c.zero(), {k, l, kp, lp});
               }, {}});
  r.push_back({"STO15", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t ip = 1; ip <= c.m; ++ip)
                       for (std::size_t k = 1; k <= c.n; ++k)
                         if (i != j) {
                           Vec rhs = c.zero();
                           if (ip == j) rhs = add(rhs, c.G(K::f, i, k, c.mul(a, b)));
                           if (ip == i) rhs = sub(rhs, c.G(K::f, j, k, c.mul(c.bar(a), b)));
                           c.expect(c.br(c.G(K::t, i, j, a), c.G(K::f, ip, k, b)), rhs, {i, j, ip, k});
                         }
               }, {}});
  r.push_back({"STO16", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t ip = 1; ip <= c.m; ++ip)
                       for (std::size_t k = 1; k <= c.n; ++k)
                         if (i != j) {
                           Vec rhs = c.zero();
                           if (ip == i) rhs = add(rhs, c.G(K::g, k, j, c.mul(a, b)));
                           if (ip == j) rhs = sub(rhs, c.G(K::g, k, i, c.mul(a, c.bar(b))));
                           c.expect(c.br(c.G(K::g, k, ip, a), c.G(K::t, i, j, b)), rhs, {i, j, ip, k});
                         }
               }, {}});
  r.push_back({"STO17", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       for (std::size_t kp = 1; kp <= c.n; ++kp)
                         if (k != l) {
                           Vec rhs = kp == k ? c.G(K::f, i, l, c.mul(a, b)) : c.zero();
                           c.expect(c.br(c.G(K::f, i, kp, a), c.G(K::u, k, l, b)), rhs, {i, k, l, kp});
                         }
               }, {}});
  r.push_back({"STO18", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       for (std::size_t kp = 1; kp <= c.n; ++kp)
                         if (k != l) {
                           Vec rhs = kp == k ? c.G(K::g, l, i, c.mul(a, b)) : c.zero();
                           c.expect(c.br(c.G(K::u, l, k, a), c.G(K::g, kp, i, b)), rhs, {i, k, l, kp});
                         }
               }, {}});
  r.push_back({"STO19", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 const int pb = x[1]->p;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       for (std::size_t lp = 1; lp <= c.n; ++lp)
                         if (k != l) {
                           Vec rhs = c.zero();
                           if (lp == l) rhs = add(rhs, c.G(K::g, k, i, c.mul(a, c.bar(b))));
                           if (lp == k) rhs = add(rhs, c.G(K::g, l, i, c.mul(c.bar(a), c.bar(b))));
                           c.expect(c.br(c.G(K::v, k, l, a), c.G(K::f, i, lp, b)), scale(c.s(pb), rhs),
                                    {i, k, l, lp});
                         }
               }, {}});
  r.push_back({"STO20", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       for (std::size_t kp = 1; kp <= c.n; ++kp)
                         if (k != l) c.expect(c.br(c.G(K::g, kp, i, a), c.G(K::v, k, l, b)), c.zero(), {i, k, l, kp});
               }, {}});
  r.push_back({"STO21", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       for (std::size_t kp = 1; kp <= c.n; ++kp)
                         if (k != l) c.expect(c.br(c.G(K::w, k, l, a), c.G(K::f, i, kp, b)), c.zero(), {i, k, l, kp});
               }, {}});
  r.push_back({"STO22", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 const int pa = x[0]->p;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       for (std::size_t kp = 1; kp <= c.n; ++kp)
                         if (k != l) {
                           Vec rhs = c.zero();
                           if (kp == k) rhs = add(rhs, c.G(K::f, i, l, c.mul(c.bar(a), b)));
                           if (kp == l) rhs = add(rhs, c.G(K::f, i, k, c.mul(c.bar(a), c.bar(b))));
                           c.expect(c.br(c.G(K::g, kp, i, a), c.G(K::w, k, l, b)), scale(c.s(pa + 1), rhs),
                                    {i, k, l, kp});
                         }
               }, {}});
  r.push_back({"STO23", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 const int pa = x[0]->p;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l)
                         c.expect(c.br(c.G(K::f, i, k, a), c.G(K::f, i, l, b)),
                                  scale(c.s(pa), c.G(K::w, k, l, c.mul(c.bar(a), b))), {i, k, l});
               }, {}});
  r.push_back({"STO24", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         if (i != j) c.expect(c.br(c.G(K::f, i, k, a), c.G(K::f, j, l, b)), c.zero(), {i, j, k, l});
               }, {}});
  r.push_back({"STO25", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 const int pb = x[1]->p;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l)
                         c.expect(c.br(c.G(K::g, k, i, a), c.G(K::g, l, i, b)),
                                  scale(c.s(pb + 1), c.G(K::v, k, l, c.mul(a, c.bar(b)))), {i, k, l});
               }, {}});
  r.push_back({"STO26", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         if (i != j) c.expect(c.br(c.G(K::g, k, i, a), c.G(K::g, l, j, b)), c.zero(), {i, j, k, l});
               }, {}});
  r.push_back({"STO27", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         if (i != j)
                           c.expect(c.br(c.G(K::f, i, k, a), c.G(K::g, l, j, b)),
                                    k == l ? c.G(K::t, i, j, c.mul(a, b)) : c.zero(), {i, j, k, l});
               }, {}});
  r.push_back({"STO28", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l)
                         c.expect(c.br(c.G(K::g, k, i, a), c.G(K::f, i, l, b)), c.G(K::u, k, l, c.mul(a, b)),
                                  {i, k, l});
               }, {}});
  return r;
}

// Admissible (kind, i, j) slots of the presentation.
std::vector<std::tuple<K, std::size_t, std::size_t>> slots(std::size_t m, std::size_t n) {
  std::vector<std::tuple<K, std::size_t, std::size_t>> s;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j) s.emplace_back(K::t, i, j);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = 1; l <= n; ++l)
      if (k != l)
        for (K kind : {K::u, K::v, K::w}) s.emplace_back(kind, k, l);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t k = 1; k <= n; ++k) {
      s.emplace_back(K::f, i, k);
      s.emplace_back(K::g, k, i);
    }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorFamily

GeneratorFamily::GeneratorFamily(std::string label, LiePtr target, MatrixShape shape, AlgebraPtr R, Assign assign,
                                 ToMatrix to_matrix)
    : label_(std::move(label)),
      target_(std::move(target)),
      shape_(shape),
      R_(std::move(R)),
      assign_(std::move(assign)),
      to_matrix_(std::move(to_matrix)),
      cache_(std::make_shared<std::map<Key, std::vector<Vec>>>()) {}

Vec GeneratorFamily::gen(GenKind k, std::size_t i, std::size_t j, const Vec& a) const {
  Key key{static_cast<int>(k), i, j};
  auto it = cache_->find(key);
  if (it == cache_->end()) {
    std::vector<Vec> imgs;
    for (std::size_t s = 0; s < R_->dim(); ++s) imgs.push_back(assign_(k, i, j, R_->basis(s)));
    it = cache_->emplace(key, std::move(imgs)).first;
  }
  Vec r = target_->zero();
  for (std::size_t s = 0; s < a.size(); ++s)
    if (!a[s].is_zero()) axpy(r, a[s], it->second[s]);
  return r;
}

Vec GeneratorFamily::h(std::size_t i, std::size_t k, const Vec& a, const Vec& b) const {
  return bracket(gen(K::f, i, k, a), gen(K::g, k, i, b));
}

Vec GeneratorFamily::vk(std::size_t k, const Vec& a) const {
  return scale(R_->field().make(-1), bracket(gen(K::g, k, 1, a), gen(K::g, k, 1, R_->unit())));
}

Vec GeneratorFamily::wk(std::size_t k, const Vec& a) const {
  return bracket(gen(K::f, 1, k, R_->unit()), gen(K::f, 1, k, a));
}

Vec GeneratorFamily::lambda(const Vec& a, const Vec& b) const {
  const auto& R = *R_;
  return sub(h(1, 1, a, b), scale(sgn(R.field(), deg(R, a) & deg(R, b)), h(1, 1, R.unit(), R.mul(b, a))));
}

GeneratorFamily osp_family(const OspAlgebra& A) {
  auto sp = std::make_shared<OspAlgebra>(A);
  return GeneratorFamily(
      "osp", A.osp.algebra(), A.shape, A.R,
      [sp](K k, std::size_t i, std::size_t j, const Vec& a) {
        return sp->osp.coordinates_or_throw(generator(sp->shape, sp->R, k, i, j, a).flatten(),
                                            "generator outside osp");
      },
      [sp](const Vec& x) { return sp->osp.embed(x); });
}

GeneratorFamily model_family(const StoModel& S) {
  auto sp = std::make_shared<StoModel>(S);
  return GeneratorFamily(
      "sto_model", S.model.algebra(), S.osp.shape, S.osp.R,
      [sp](K k, std::size_t i, std::size_t j, const Vec& a) { return sp->lift(k, i, j, a); },
      [sp](const Vec& x) { return sp->osp.osp.embed(sp->projection.matrix.apply(x)); });
}

GeneratorFamily hat_osp12_family(const HatOsp12& H) {
  auto sp = std::make_shared<HatOsp12>(H);
  return GeneratorFamily(
      "hat_osp12", H.model.algebra(), H.osp.shape, H.osp.R,
      [sp](K k, std::size_t i, std::size_t j, const Vec& a) {
        if (i != 1 || j != 1 || (k != K::f && k != K::g))
          throw InvalidInput(std::string("hat_osp12 family has no ") + kind_name(k));
        return k == K::f ? sp->f(a) : sp->g(a);
      },
      [sp](const Vec& x) { return sp->osp.osp.embed(sp->projection.matrix.apply(x)); });
}

GeneratorFamily swap_fg(const GeneratorFamily& F) {
  GeneratorFamily base = F;
  GeneratorFamily::ToMatrix tm;
  if (F.has_matrix()) tm = [base](const Vec& x) { return base.matrix(x); };
  return GeneratorFamily(
      F.label() + "/swapped", F.target(), F.shape(), F.algebra(),
      [base](K k, std::size_t i, std::size_t j, const Vec& a) {
        if (k == K::f) return base.gen(K::g, j, i, a);
        if (k == K::g) return base.gen(K::f, j, i, a);
        return base.gen(k, i, j, a);
      },
      tm);
}

// ---------------------------------------------------------------------------
// Relations

Report verify_sto_relations(const GeneratorFamily& F, std::size_t samples, std::uint64_t seed) {
  Report rep;
  const SuperAlgebra& R = *F.algebra();

  std::string w;
  long long count = 0;
  for (const auto& [kind, i, j] : slots(F.m(), F.n())) {
    for (std::size_t s = 0; s < R.dim() && w.empty(); ++s)
      for (std::size_t t = s; t < R.dim() && w.empty(); ++t) {
        Vec a = R.basis(s), b = R.basis(t);
        ++count;
        Vec lhs = F.assign(kind, i, j, add(a, b));
        Vec rhs = add(F.assign(kind, i, j, a), F.assign(kind, i, j, b));
        Vec two = F.assign(kind, i, j, scale(R.field().make(2), a));
        if (lhs != rhs || two != scale(R.field().make(2), F.assign(kind, i, j, a)))
          w = std::string(kind_name(kind)) + tuple_str({i, j}) + ";" + tuple_str({s, t});
      }
    if (!w.empty()) break;
  }
  rep.add("STO00", w.empty(), w).dims = {{"instances", count}};

  const auto rels = sto_relations();
  run_all(rep, F, rels, basis_domain(R));

  std::mt19937_64 rng(seed);
  Report sampled;
  run_all(sampled, F, rels, random_domain(R, samples, rng));
  w.clear();
  for (const auto& c : sampled.checks)
    if (!c.pass && w.empty()) w = c.name + ":" + c.witness;
  rep.add("sampling", w.empty(), w).dims = {{"samples", static_cast<long long>(samples)}};
  return rep;
}

Report derived_elements(const GeneratorFamily& F) {
  Report rep;
  const SuperAlgebra& R = *F.algebra();
  const Field& Fk = R.field();
  const std::size_t m = F.m(), n = F.n();
  const auto dom = basis_domain(R);

  if (F.has_matrix()) {
    // psi(h_11(a,b)) = e_11(ab - bar(ab)) - (-1)^{(|a|+1)(|b|+1)} u_11(ba)
    run_identity(rep, F, {"psi_h11", 2, [&](Ctx& c, const Args& x) {
                            const Vec &a = x[0]->v, &b = x[1]->v;
                            const int e = (x[0]->p + 1) * (x[1]->p + 1);
                            Vec ab = R.mul(a, b), ba = R.mul(b, a);
                            SuperMatrix M = matrix_unit(F.shape(), F.algebra(), 1, 1, R.minus(ab));
                            SuperMatrix U = matrix_unit(F.shape(), F.algebra(), m + 1, m + 1, ba) -
                                            matrix_unit(F.shape(), F.algebra(), m + n + 1, m + n + 1, R.bar(ba));
                            M = M - U.scaled(sgn(Fk, e));
                            c.expect(F.matrix(F.h(1, 1, a, b)), M.flatten(), {1, 1});
                          }, {}}, dom);
  }
  run_identity(rep, F, {"vk_bar", 1, [&](Ctx& c, const Args& x) {
                          for (std::size_t k = 1; k <= n; ++k)
                            c.expect(F.vk(k, x[0]->v), F.vk(k, R.bar(x[0]->v)), {k});
                        }, {}}, dom);
  run_identity(rep, F, {"wk_bar", 1, [&](Ctx& c, const Args& x) {
                          for (std::size_t k = 1; k <= n; ++k)
                            c.expect(F.wk(k, x[0]->v), F.wk(k, R.bar(x[0]->v)), {k});
                        }, {}}, dom);
  run_identity(rep, F, {"lambda_1a", 1, [&](Ctx& c, const Args& x) {
                          c.expect(F.lambda(R.unit(), x[0]->v), c.zero(), {});
                        }, {}}, dom);
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma suites

namespace {

std::vector<Identity> kp_identities(bool extra) {
  std::vector<Identity> r;
  // a, b, c are x[0], x[1], x[2] throughout.
  r.push_back({"h_t", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 Vec arg = sub(c.mul(a, b, cc), c.mul(c.bar(c.mul(a, b)), cc));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       if (i != j) c.expect(c.br(c.F.h(i, k, a, b), c.G(K::t, i, j, cc)), c.G(K::t, i, j, arg), {i, j, k});
               }, {}});
  r.push_back({"h_t_zero", 3, [](Ctx& c, const Args& x) {
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t jp = 1; jp <= c.m; ++jp)
                       for (std::size_t k = 1; k <= c.n; ++k)
                         if (i != j && i != jp && j != jp)
                           c.expect(c.br(c.F.h(i, k, x[0]->v, x[1]->v), c.G(K::t, j, jp, x[2]->v)), c.zero(),
                                    {i, j, jp, k});
               }, {}});
  r.push_back({"h_u_kl", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int e = (x[0]->p + 1) * (x[1]->p + 1) + 1;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l)
                         c.expect(c.br(c.F.h(i, k, a, b), c.G(K::u, k, l, cc)),
                                  scale(c.s(e), c.G(K::u, k, l, c.mul(b, a, cc))), {i, k, l});
               }, {}});
  r.push_back({"h_u_lk", 3,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int pa = x[0]->p, pb = x[1]->p, pc = x[2]->p;
                 const int e = (pa + 1) * (pb + 1) + pb * pc + pc * pa;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l) {
                         Vec lhs = c.br(c.F.h(i, k, a, b), c.G(K::u, l, k, cc));
                         Vec rhs = c.G(K::u, l, k, c.mul(cc, b, a));
                         c.expect(lhs, scale(c.s(e), rhs), {i, k, l});
                         c.expect_alt(lhs, scale(c.s(e + 1), rhs), {i, k, l});
                       }
               },
               "printed leading minus sign"});
  for (K kind : {K::u, K::v, K::w}) {
    r.push_back({std::string("h_") + kind_name(kind) + "_zero", 3, [kind](Ctx& c, const Args& x) {
                   for (std::size_t i = 1; i <= c.m; ++i)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         for (std::size_t lp = 1; lp <= c.n; ++lp)
                           if (k != l && k != lp && l != lp)
                             c.expect(c.br(c.F.h(i, k, x[0]->v, x[1]->v), c.G(kind, l, lp, x[2]->v)), c.zero(),
                                      {i, k, l, lp});
                 }, {}});
  }
  r.push_back({"h_v_kl", 3,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int e = (x[0]->p + 1) * (x[1]->p + 1) + 1;
                 Vec bac = c.mul(b, a, cc);
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l) {
                         Vec lhs = c.br(c.F.h(i, k, a, b), c.G(K::v, k, l, cc));
                         c.expect(lhs, scale(c.s(e), c.G(K::v, k, l, bac)), {i, k, l});
                         for (std::size_t lp = 1; lp <= c.n; ++lp)
                           if (lp != l) c.expect_alt(lhs, scale(c.s(e), c.G(K::v, l, lp, bac)), {i, k, l, lp});
                       }
               },
               "printed index pair (l,l') with l' != l"});
  r.push_back({"h_w_kl", 3,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int e = (x[0]->p + 1) * (x[1]->p + 1);
                 Vec arg = c.mul(c.bar(c.mul(b, a)), cc);
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l) {
                         Vec lhs = c.br(c.F.h(i, k, a, b), c.G(K::w, k, l, cc));
                         Vec rhs = c.G(K::w, k, l, arg);
                         c.expect(lhs, scale(c.s(e), rhs), {i, k, l});
                         c.expect_alt(lhs, scale(c.s(e + 1), rhs), {i, k, l});
                       }
               },
               "printed leading minus sign"});
  r.push_back({"h_f_il", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 Vec arg = sub(c.mul(a, b, cc), c.mul(c.bar(c.mul(a, b)), cc));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l) c.expect(c.br(c.F.h(i, k, a, b), c.G(K::f, i, l, cc)), c.G(K::f, i, l, arg), {i, k, l});
               }, {}});
  r.push_back({"h_f_jk", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int pa = x[0]->p, pb = x[1]->p, pc = x[2]->p;
                 const int e = pa * pb + pb * pc + pc * pa + 1;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       if (i != j)
                         c.expect(c.br(c.F.h(i, k, a, b), c.G(K::f, j, k, cc)),
                                  scale(c.s(e), c.G(K::f, j, k, c.mul(cc, b, a))), {i, j, k});
               }, {}});
  r.push_back({"h_f_zero", 3, [](Ctx& c, const Args& x) {
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         if (i != j && k != l)
                           c.expect(c.br(c.F.h(i, k, x[0]->v, x[1]->v), c.G(K::f, j, l, x[2]->v)), c.zero(),
                                    {i, j, k, l});
               }, {}});
  r.push_back({"g_h_li", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 Vec arg = sub(c.mul(a, b, cc), c.mul(a, c.bar(c.mul(b, cc))));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l) c.expect(c.br(c.G(K::g, l, i, a), c.F.h(i, k, b, cc)), c.G(K::g, l, i, arg), {i, k, l});
               }, {}});
  r.push_back({"g_h_kj", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int pa = x[0]->p, pb = x[1]->p, pc = x[2]->p;
                 const int e = pa * pb + pb * pc + pc * pa + 1;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       if (i != j)
                         c.expect(c.br(c.G(K::g, k, j, a), c.F.h(i, k, b, cc)),
                                  scale(c.s(e), c.G(K::g, k, j, c.mul(cc, b, a))), {i, j, k});
               }, {}});
  r.push_back({"g_h_zero", 3, [](Ctx& c, const Args& x) {
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       for (std::size_t l = 1; l <= c.n; ++l)
                         if (i != j && k != l)
                           c.expect(c.br(c.G(K::g, l, j, x[0]->v), c.F.h(i, k, x[1]->v, x[2]->v)), c.zero(),
                                    {i, j, k, l});
               }, {}});
  if (!extra) return r;
  r.push_back({"h_f_ik", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int pa = x[0]->p, pb = x[1]->p, pc = x[2]->p;
                 Vec arg = sub(c.mul(a, b, cc), c.mul(c.bar(c.mul(a, b)), cc));
                 axpy(arg, c.s(pa * pb + pb * pc + pc * pa + 1), c.mul(cc, b, a));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     c.expect(c.br(c.F.h(i, k, a, b), c.G(K::f, i, k, cc)), c.G(K::f, i, k, arg), {i, k});
               }, {}});
  r.push_back({"g_h_ki", 3, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v, &cc = x[2]->v;
                 const int pa = x[0]->p, pb = x[1]->p, pc = x[2]->p;
                 Vec arg = sub(c.mul(cc, a, b), c.mul(cc, c.bar(c.mul(a, b))));
                 axpy(arg, c.s(pa * pb + pb * pc + pc * pa + 1), c.mul(b, a, cc));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     c.expect(c.br(c.G(K::g, k, i, cc), c.F.h(i, k, a, b)), c.G(K::g, k, i, arg), {i, k});
               }, {}});
  return r;
}

std::vector<Identity> lmd34_identities() {
  std::vector<Identity> r;
  r.push_back({"vk_bar", 1, [](Ctx& c, const Args& x) {
                 for (std::size_t k = 1; k <= c.n; ++k) c.expect(c.F.vk(k, x[0]->v), c.F.vk(k, c.bar(x[0]->v)), {k});
               }, {}});
  r.push_back({"wk_bar", 1, [](Ctx& c, const Args& x) {
                 for (std::size_t k = 1; k <= c.n; ++k) c.expect(c.F.wk(k, x[0]->v), c.F.wk(k, c.bar(x[0]->v)), {k});
               }, {}});
  r.push_back({"gg", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     c.expect(c.br(c.G(K::g, k, i, a), c.G(K::g, k, i, b)),
                              scale(c.s(x[1]->p + 1), c.F.vk(k, c.mul(a, c.bar(b)))), {i, k});
               }, {}});
  r.push_back({"ff", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     c.expect(c.br(c.G(K::f, i, k, a), c.G(K::f, i, k, b)),
                              scale(c.s(x[0]->p), c.F.wk(k, c.mul(c.bar(a), b))), {i, k});
               }, {}});
  r.push_back({"vk_t", 2, [](Ctx& c, const Args& x) {
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       if (i != j) {
                         c.expect(c.br(c.F.vk(k, x[0]->v), c.G(K::t, i, j, x[1]->v)), c.zero(), {i, j, k, 0});
                         c.expect(c.br(c.F.wk(k, x[0]->v), c.G(K::t, i, j, x[1]->v)), c.zero(), {i, j, k, 1});
                       }
               }, {}});
  r.push_back({"u_v", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     if (k != l)
                       c.expect(c.br(c.G(K::u, k, l, a), c.G(K::v, l, k, b)), c.F.vk(k, c.mul(a, b)), {k, l});
               }, {}});
  r.push_back({"w_u", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     if (k != l)
                       c.expect(c.br(c.G(K::w, k, l, a), c.G(K::u, l, k, b)), c.F.wk(k, c.mul(a, b)), {k, l});
               }, {}});
  r.push_back({"vk_w", 2,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 Vec arg = c.mul(c.R.plus(a), c.bar(b));
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t lp = 1; lp <= c.n; ++lp)
                       if (l != lp) {
                         Vec lhs = c.br(c.F.vk(k, a), c.G(K::w, l, lp, b));
                         Vec printed = k == lp ? c.G(K::u, k, l, arg) : c.zero();
                         Vec rhs = k == l ? add(printed, c.G(K::u, k, lp, c.mul(c.R.plus(a), b))) : printed;
                         c.expect(lhs, rhs, {k, l, lp});
                         c.expect_alt(lhs, printed, {k, l, lp});
                       }
               },
               "printed without the d_kl u_kl'(a_+ b) term"});
  r.push_back({"v_wk", 2,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 Vec arg = c.mul(c.bar(a), c.R.plus(b));
                 for (std::size_t k = 1; k <= c.n; ++k)
                   for (std::size_t l = 1; l <= c.n; ++l)
                     for (std::size_t lp = 1; lp <= c.n; ++lp)
                       if (k != l) {
                         Vec lhs = c.br(c.G(K::v, k, l, a), c.F.wk(lp, b));
                         Vec rhs = c.zero();
                         if (lp == k) rhs = add(rhs, c.G(K::u, l, k, arg));
                         if (lp == l) rhs = add(rhs, c.G(K::u, k, l, c.mul(a, c.R.plus(b))));
                         c.expect(lhs, rhs, {k, l, lp});
                         c.expect_alt(lhs, k == lp ? c.G(K::u, k, l, arg) : c.zero(), {k, l, lp});
                       }
               },
               "printed d_kl' u_kl(bar(a) b_+)"});
  r.push_back({"vk_f", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 Vec arg = c.mul(c.R.plus(a), c.bar(b));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       c.expect(c.br(c.F.vk(k, a), c.G(K::f, i, l, b)),
                                k == l ? scale(c.s(x[1]->p), c.G(K::g, k, i, arg)) : c.zero(), {i, k, l});
               }, {}});
  r.push_back({"vk_g", 2, [](Ctx& c, const Args& x) {
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       c.expect(c.br(c.F.vk(k, x[0]->v), c.G(K::g, l, i, x[1]->v)), c.zero(), {i, k, l});
               }, {}});
  r.push_back({"wk_f", 2, [](Ctx& c, const Args& x) {
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       c.expect(c.br(c.F.wk(k, x[0]->v), c.G(K::f, i, l, x[1]->v)), c.zero(), {i, k, l});
               }, {}});
  r.push_back({"g_wk", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 Vec arg = c.mul(c.bar(a), c.R.plus(b));
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       c.expect(c.br(c.G(K::g, l, i, a), c.F.wk(k, b)),
                                k == l ? scale(c.s(x[0]->p + 1), c.G(K::f, i, k, arg)) : c.zero(), {i, k, l});
               }, {}});
  return r;
}

std::vector<Identity> lmd_kp_identities() {
  std::vector<Identity> r;
  r.push_back({"t_t", 2,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 Vec ba = c.mul(b, a);
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t j = 1; j <= c.m; ++j)
                     for (std::size_t k = 1; k <= c.n; ++k)
                       if (i != j) {
                         Vec lhs = c.br(c.G(K::t, i, j, a), c.G(K::t, j, i, b));
                         Vec h = c.F.h(i, k, a, b), h1 = c.F.h(j, k, c.one(), ba);
                         c.expect(lhs, sub(h, scale(c.s(x[0]->p * x[1]->p), h1)), {i, j, k});
                         c.expect_alt(lhs, sub(h, h1), {i, j, k});
                       }
               },
               "printed sign (-1)^{|r||s|} read as +1"});
  r.push_back({"u_u", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l)
                         c.expect(c.br(c.G(K::u, k, l, a), c.G(K::u, l, k, b)),
                                  scale(c.s(x[0]->p + x[1]->p + 1),
                                        sub(c.F.h(i, l, a, b), c.F.h(i, k, c.one(), c.mul(a, b)))),
                                  {i, k, l});
               }, {}});
  r.push_back({"v_w", 2,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 const int e = (1 + x[0]->p) * (1 + x[1]->p);
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l)
                       if (k != l) {
                         Vec lhs = c.br(c.G(K::v, k, l, a), c.G(K::w, l, k, b));
                         c.expect(lhs,
                                  scale(c.s(e + 1), add(c.F.h(i, k, b, a), c.F.h(i, l, c.one(), c.bar(c.mul(b, a))))),
                                  {i, k, l});
                         c.expect_alt(lhs,
                                      scale(c.s(e), add(c.F.h(i, k, b, a), c.F.h(i, l, c.one(), c.bar(c.mul(a, b))))),
                                      {i, k, l});
                       }
               },
               "printed sign (-1)^{(1+|a|)(1+|b|)} with bar(ab)"});
  r.push_back({"vk_wl", 2,
               [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 const Scalar s = c.s((x[0]->p + 1) * (x[1]->p + 1) + 1);
                 Vec ap = c.R.plus(a);
                 for (std::size_t i = 1; i <= c.m; ++i)
                   for (std::size_t k = 1; k <= c.n; ++k)
                     for (std::size_t l = 1; l <= c.n; ++l) {
                       Vec rhs = c.zero(), printed = c.zero();
                       if (k == l) {
                         rhs = scale(s, add(c.F.h(i, k, b, ap), c.F.h(i, k, c.one(), c.bar(c.mul(b, ap)))));
                         printed = scale(s, add(c.F.h(i, k, b, c.bar(a)), c.F.h(i, k, c.one(), c.bar(c.mul(b, a)))));
                       }
                       Vec lhs = c.br(c.F.vk(k, a), c.F.wk(l, b));
                       c.expect(lhs, rhs, {i, k, l});
                       c.expect_alt(lhs, printed, {i, k, l});
                     }
               },
               "printed h_ik(b,bar a) + h_ik(1,bar(ba))"});
  return r;
}

// lambda(a,b) with explicit parities, for arguments that are not basis elements.
Vec lam(const Ctx& c, const Vec& a, int pa, const Vec& b, int pb) {
  return sub(c.F.h(1, 1, a, b), scale(c.s(pa * pb), c.F.h(1, 1, c.one(), c.mul(b, a))));
}

// J(a,b,c) = (-1)^{|a||c|} lambda(ab,c) + (-1)^{|b||a|} lambda(bc,a) + (-1)^{|c||b|} lambda(ca,b)
Vec jay(const Ctx& c, const Elem& a, const Elem& b, const Elem& cc) {
  Vec r = scale(c.s(a.p * cc.p), lam(c, c.mul(a.v, b.v), a.p ^ b.p, cc.v, cc.p));
  axpy(r, c.s(b.p * a.p), lam(c, c.mul(b.v, cc.v), b.p ^ cc.p, a.v, a.p));
  axpy(r, c.s(cc.p * b.p), lam(c, c.mul(cc.v, a.v), cc.p ^ a.p, b.v, b.p));
  return r;
}

std::vector<Identity> lambda_identities(bool with_unit_right) {
  std::vector<Identity> r;
  r.push_back({"lambda_unit", 1, [with_unit_right](Ctx& c, const Args& x) {
                 c.expect(c.F.lambda(c.one(), x[0]->v), c.zero(), {0});
                 if (with_unit_right) c.expect(c.F.lambda(x[0]->v, c.one()), c.zero(), {1});
               }, {}});
  r.push_back({"lambda_bar", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 c.expect(c.F.lambda(a, b), c.F.lambda(c.bar(a), c.bar(b)), {});
               }, {}});
  r.push_back({"lambda_antisym", 2, [](Ctx& c, const Args& x) {
                 const Vec &a = x[0]->v, &b = x[1]->v;
                 c.expect(c.F.lambda(a, b), scale(c.s(x[0]->p * x[1]->p + 1), c.F.lambda(b, a)), {});
               }, {}});
  return r;
}

}  // namespace

const char* lemma_suite_name(LemmaSuite s) {
  switch (s) {
    case LemmaSuite::kp: return "kp";
    case LemmaSuite::lmd34: return "lmd34";
    case LemmaSuite::lmd_kp: return "lmd_kp";
    case LemmaSuite::h_rln: return "h_rln";
    case LemmaSuite::hatosp12_h: return "hatosp12_h";
  }
  return "?";
}

std::optional<LemmaSuite> parse_lemma_suite(const std::string& s) {
  for (auto x : {LemmaSuite::kp, LemmaSuite::lmd34, LemmaSuite::lmd_kp, LemmaSuite::h_rln, LemmaSuite::hatosp12_h})
    if (s == lemma_suite_name(x)) return x;
  return std::nullopt;
}

Report lemma_suite(const GeneratorFamily& F, LemmaSuite which) {
  const bool one_one = F.m() == 1 && F.n() == 1;
  if (one_one && which != LemmaSuite::kp && which != LemmaSuite::hatosp12_h)
    throw InvalidShape(std::string(lemma_suite_name(which)) + " needs (m,n) != (1,1)");
  const SuperAlgebra& R = *F.algebra();
  const auto dom = basis_domain(R);
  Report rep;
  switch (which) {
    case LemmaSuite::kp: run_all(rep, F, kp_identities(!one_one), dom); break;
    case LemmaSuite::lmd34: run_all(rep, F, lmd34_identities(), dom); break;
    case LemmaSuite::lmd_kp: run_all(rep, F, lmd_kp_identities(), dom); break;
    case LemmaSuite::h_rln: {
      run_all(rep, F, lambda_identities(true), dom);
      run_identity(rep, F, {"lambda_cyclic", 3, [](Ctx& c, const Args& x) {
                              c.expect(jay(c, *x[0], *x[1], *x[2]), c.zero(), {});
                            }, {}}, dom);
      run_identity(rep, F, {"lambda_any_k", 2, [](Ctx& c, const Args& x) {
                              const Vec &a = x[0]->v, &b = x[1]->v;
                              for (std::size_t k = 2; k <= c.n; ++k)
                                c.expect(c.F.lambda(a, b),
                                         sub(c.F.h(1, k, a, b),
                                             scale(c.s(x[0]->p * x[1]->p), c.F.h(1, k, c.one(), c.mul(b, a)))),
                                         {k});
                            }, {}}, dom);
      break;
    }
    case LemmaSuite::hatosp12_h: {
      run_all(rep, F, lambda_identities(true), dom);
      run_identity(rep, F, {"j_swap_bar", 3, [](Ctx& c, const Args& x) {
                              const Elem &a = *x[0], &b = *x[1], &cc = *x[2];
                              Elem cm{c.R.minus(cc.v), cc.p, cc.label};
                              c.expect(jay(c, b, a, cc),
                                       scale(c.s(a.p * b.p + b.p * cc.p + cc.p * a.p), jay(c, a, b, cm)), {});
                            }, {}}, dom);
      run_identity(rep, F, {"j_commutators", 4, [](Ctx& c, const Args& x) {
                              const Elem &a = *x[0], &b = *x[1], &cc = *x[2], &d = *x[3];
                              Elem cd{c.R.bracket(cc.v, d.v), cc.p ^ d.p, ""};
                              Elem ab{c.R.bracket(a.v, b.v), a.p ^ b.p, ""};
                              c.expect(jay(c, a, b, cd),
                                       scale(c.s(a.p * cc.p + b.p * d.p + 1), jay(c, cc, d, ab)), {});
                            }, {}}, dom);
      run_identity(rep, F, {"j_three_commutators", 3, [](Ctx& c, const Args& x) {
                              c.expect(jay(c, *x[0], *x[1], *x[2]), c.zero(), {});
                            }, {}}, commutator_domain(R));
      run_identity(rep, F, {"j_rotate", 3, [](Ctx& c, const Args& x) {
                              c.expect(jay(c, *x[0], *x[1], *x[2]), jay(c, *x[1], *x[2], *x[0]), {});
                            }, {}}, dom);
      run_identity(rep, F, {"j_bar", 3, [](Ctx& c, const Args& x) {
                              Elem cb{c.bar(x[2]->v), x[2]->p, ""};
                              c.expect(jay(c, *x[0], *x[1], *x[2]), scale(c.s(1), jay(c, *x[0], *x[1], cb)), {});
                            }, {}}, dom);
      run_identity(rep, F, {"j_double_swap", 3, [](Ctx& c, const Args& x) {
                              const Elem &a = *x[0], &b = *x[1], &cc = *x[2];
                              c.expect(jay(c, a, b, cc),
                                       scale(c.s(a.p * b.p + b.p * cc.p + cc.p * a.p) * c.Fk.make(2), jay(c, b, a, cc)),
                                       {});
                            }, {}}, dom);
      run_identity(rep, F, {"three_j", 3, [](Ctx& c, const Args& x) {
                              c.expect(scale(c.Fk.make(3), jay(c, *x[0], *x[1], *x[2])), c.zero(), {});
                            }, {}}, dom);
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Triangular decomposition

namespace {

bool diagonal(const MatrixShape& s, std::size_t d, const Vec& flat) {
  const std::size_t N = s.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j)
        for (std::size_t k = 0; k < d; ++k)
          if (!flat[(i * N + j) * d + k].is_zero()) return false;
  return true;
}

bool zero_diagonal(const MatrixShape& s, std::size_t d, const Vec& flat) {
  const std::size_t N = s.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (!flat[(i * N + i) * d + k].is_zero()) return false;
  return true;
}

}  // namespace

Report tridec_check(const GeneratorFamily& F) {
  Report rep;
  const SuperAlgebra& R = *F.algebra();
  const Field& Fk = R.field();
  const std::size_t m = F.m(), n = F.n(), d = R.dim(), D = F.target()->dim();

  EchelonBasis E0(Fk, D), E1(Fk, D);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) E0.insert(F.h(i, k, R.basis(s), R.basis(t)));
  for (std::size_t s = 0; s < d; ++s) {
    Vec a = R.basis(s);
    for (const auto& [kind, i, j] : slots(m, n))
      if (kind != K::f && kind != K::g) E1.insert(F.gen(kind, i, j, a));
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t k = 1; k <= n; ++k) {
        E1.insert(F.gen(K::f, i, k, a));
        E1.insert(F.gen(K::g, k, i, a));
      }
    for (std::size_t k = 1; k <= n; ++k) {
      E1.insert(F.vk(k, a));
      E1.insert(F.wk(k, a));
    }
  }
  const long long d0 = static_cast<long long>(E0.size()), d1 = static_cast<long long>(E1.size());

  EchelonBasis U = E0;
  for (const auto& r : E1.rows()) U.insert(r);
  const long long du = static_cast<long long>(U.size());
  auto& c1 = rep.add("dims_add_up", d0 + d1 == static_cast<long long>(D),
                     d0 + d1 == static_cast<long long>(D) ? "" : std::to_string(d0 + d1) + " vs " + std::to_string(D));
  c1.dims = {{"sto0", d0}, {"sto1", d1}, {"total", static_cast<long long>(D)}};
  rep.add("intersection_zero", du == d0 + d1, du == d0 + d1 ? "" : "union rank " + std::to_string(du));
  rep.add("sum_is_total", du == static_cast<long long>(D), du == static_cast<long long>(D) ? "" : "union rank " + std::to_string(du));

  std::string w;
  for (std::size_t p = 0; p < E0.size() && w.empty(); ++p)
    for (std::size_t q = 0; q < E1.size(); ++q)
      if (!E1.contains(F.bracket(E0.row(p), E1.row(q)))) {
        w = tuple_str({p, q});
        break;
      }
  rep.add("bracket_sto0_sto1", w.empty(), w);

  w.clear();
  for (std::size_t p = 0; p < E0.size() && w.empty(); ++p)
    for (std::size_t q = p; q < E0.size(); ++q)
      if (!E0.contains(F.bracket(E0.row(p), E0.row(q)))) {
        w = tuple_str({p, q});
        break;
      }
  rep.add("sto0_subalgebra", w.empty(), w);

  if (F.has_matrix()) {
    w.clear();
    for (std::size_t p = 0; p < E0.size() && w.empty(); ++p)
      if (!diagonal(F.shape(), d, F.matrix(E0.row(p)))) w = tuple_str({p});
    rep.add("sto0_diagonal", w.empty(), w);

    w.clear();
    EchelonBasis img(Fk, F.shape().size() * F.shape().size() * d);
    for (std::size_t q = 0; q < E1.size(); ++q) {
      Vec M = F.matrix(E1.row(q));
      if (!zero_diagonal(F.shape(), d, M) && w.empty()) w = tuple_str({q});
      img.insert(M);
    }
    rep.add("sto1_zero_diagonal", w.empty(), w);
    const bool inj = static_cast<long long>(img.size()) == d1;
    rep.add("psi_injective_sto1", inj, inj ? "" : "image rank " + std::to_string(img.size()));
  }
  return rep;
}

Report kernel_structure(const GeneratorFamily& F, const std::vector<Vec>& kernel, std::size_t expected_dim) {
  Report rep;
  const SuperAlgebra& R = *F.algebra();
  const Field& Fk = R.field();
  const std::size_t d = R.dim(), D = F.target()->dim();

  auto& c = rep.add("kernel_dim", kernel.size() == expected_dim,
                    kernel.size() == expected_dim ? ""
                                                  : std::to_string(kernel.size()) + " vs " + std::to_string(expected_dim));
  c.dims = {{"kernel", static_cast<long long>(kernel.size())}, {"expected", static_cast<long long>(expected_dim)}};

  std::string w;
  for (std::size_t k = 0; k < kernel.size() && w.empty(); ++k)
    for (std::size_t i = 0; i < D; ++i)
      if (!is_zero(F.bracket(kernel[k], F.target()->basis(i)))) {
        w = tuple_str({k, i});
        break;
      }
  rep.add("kernel_central", w.empty(), w);

  // Pairs (s,t) with coefficients x_st; condition sum x_st ([b_s,b_t] - bar) = 0.
  Matrix C(Fk, d, d * d);
  std::vector<Vec> lam(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      Vec col = R.minus(R.bracket_basis(s, t));
      for (std::size_t r = 0; r < d; ++r) C.at(r, s * d + t) = col[r];
      lam[s * d + t] = F.lambda(R.basis(s), R.basis(t));
    }
  EchelonBasis L(Fk, D), Kspan(Fk, D);
  for (const auto& x : kernel_basis(C)) {
    Vec v = F.target()->zero();
    for (std::size_t q = 0; q < d * d; ++q)
      if (!x[q].is_zero()) axpy(v, x[q], lam[q]);
    L.insert(v);
  }
  for (const auto& k : kernel) Kspan.insert(k);

  w.clear();
  for (std::size_t k = 0; k < kernel.size() && w.empty(); ++k)
    if (!L.contains(kernel[k])) w = tuple_str({k});
  rep.add("kernel_in_lambda_span", w.empty(), w).dims = {{"lambda_span", static_cast<long long>(L.size())}};
  w.clear();
  for (std::size_t q = 0; q < L.size() && w.empty(); ++q)
    if (!Kspan.contains(L.row(q))) w = tuple_str({q});
  rep.add("lambda_span_in_kernel", w.empty(), w);
  return rep;
}

}  // namespace ospx
