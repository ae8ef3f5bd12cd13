#include "doctest.h"

#include <cmath>
#include <set>

#include "asai/matgroup.hpp"
#include "asai/workspace.hpp"

using namespace asai;

namespace {

Mat from_logs(int n, std::initializer_list<int32_t> lgs) {
  Mat m;
  m.n = n;
  int i = 0;
  for (int32_t l : lgs) m.a[i++] = FieldElem{l};
  return m;
}

}  // namespace

TEST_CASE("gl_order matches the standard product formula") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == 48);
  CHECK(gl_order(4, 2) == 180);
  CHECK(gl_order(9, 2) == 5760);
  CHECK(gl_order(2, 3) == 168);
  CHECK(gl_order(4, 3) == 181440);
}

TEST_CASE("group walks visit each element once, in row-lex order") {
  Tower tw = Tower::build(2, 1, 2);
  for (auto [lv, want] : {std::pair<Level, int64_t>{Level::F, 6},
                          {Level::E, 180}}) {
    int64_t cnt = 0;
    Mat prev;
    bool first = true;
    std::set<MatKey> seen;
    for_each_gl(tw, 2, lv, Tower::kDefaultBudget, [&](const Mat& g) {
      ++cnt;
      CHECK(!mat_det(tw, g).is_zero());
      if (!first) CHECK(lex_less(prev, g));
      prev = g;
      first = false;
      seen.insert(mat_key(g));
    });
    CHECK(cnt == want);
    CHECK((int64_t)seen.size() == want);
  }
  CHECK_THROWS_AS(
      for_each_gl(tw, 2, Level::E, 10, [](const Mat&) {}),
      std::invalid_argument);
}

TEST_CASE("unipotent and mirabolic walks") {
  Tower tw = Tower::build(2, 1, 3);
  int64_t cnt = 0;
  for_each_unipotent(tw, 3, Level::E, [&](const Mat& u) {
    ++cnt;
    CHECK(is_upper_unipotent(u));
  });
  CHECK(cnt == 64);  // Q^3 with Q = 4
  CHECK((int64_t)unipotent_list(tw, 3, Level::E).size() == 64);

  int64_t mir = 0;
  for_each_mirabolic(tw, 3, Level::F, Tower::kDefaultBudget, [&](const Mat& g) {
    ++mir;
    CHECK(g.at(2, 0).is_zero());
    CHECK(g.at(2, 1).is_zero());
    CHECK(g.at(2, 2) == tw.one());
    CHECK(!mat_det(tw, g).is_zero());
  });
  CHECK(mir == 24);  // |GL_2(F_2)| * 2^2
}

TEST_CASE("matrix arithmetic identities") {
  Tower tw = Tower::build(3, 1, 2);
  Workspace ws(tw);
  auto eng = ws.rng(7);
  for (int t = 0; t < 100; ++t) {
    Mat a = ws.random_gl(eng, Level::E);
    Mat b = ws.random_gl(eng, Level::E);
    Mat ab = mat_mul(tw, a, b);
    CHECK(mat_det(tw, ab) == tw.mul(mat_det(tw, a), mat_det(tw, b)));
    CHECK(mat_mul(tw, a, mat_inverse(tw, a)) == identity_mat(2));
    CHECK(mat_mul(tw, mat_inverse(tw, a), a) == identity_mat(2));
    CHECK(mat_transpose(mat_mul(tw, a, b)) ==
          mat_mul(tw, mat_transpose(b), mat_transpose(a)));
    // frobenius is a homomorphism entrywise
    CHECK(mat_frob(tw, ab, 1) ==
          mat_mul(tw, mat_frob(tw, a, 1), mat_frob(tw, b, 1)));
  }
  Mat sing = from_logs(2, {0, 0, 0, 0});
  CHECK_THROWS_AS(mat_inverse(tw, sing), std::invalid_argument);
  CHECK(mat_rank(tw, sing) == 1);
  CHECK(mat_rank(tw, identity_mat(2)) == 2);
}

TEST_CASE("omega, tilde and tau behave as involutions") {
  Tower tw = Tower::build(2, 1, 3);
  Mat om = omega_mat(3);
  CHECK(mat_mul(tw, om, om) == identity_mat(3));
  Workspace ws(tw);
  auto eng = ws.rng(13);
  for (int t = 0; t < 50; ++t) {
    Mat g = ws.random_gl(eng, Level::E);
    CHECK(tilde_arg(tw, tilde_arg(tw, g)) == g);
    // tau is multiplicative and squares to frob^2
    Mat h = ws.random_gl(eng, Level::E);
    CHECK(tau_map(tw, mat_mul(tw, g, h)) ==
          mat_mul(tw, tau_map(tw, g), tau_map(tw, h)));
    CHECK(tau_map(tw, tau_map(tw, g)) == mat_frob(tw, g, 2));
  }
  // on F points tau is transpose-inverse
  auto engF = ws.rng(14);
  for (int t = 0; t < 20; ++t) {
    Mat g = ws.random_gl(engF, Level::F);
    CHECK(tau_map(tw, g) == mat_inverse(tw, mat_transpose(g)));
  }
}

TEST_CASE("psi_N reads the superdiagonal") {
  Tower tw = Tower::build(2, 1, 3);
  auto nilp = unipotent_list(tw, 3, Level::E);
  for (const Mat& u : nilp) {
    FieldElem s = tw.add(u.at(0, 1), u.at(1, 2));
    CHECK(std::abs(psi_N(tw, u, AddChar::PsiE) - tw.psi_E(s)) < 1e-14);
    CHECK(std::abs(psi_N(tw, u, AddChar::PsiE, -1) -
                   std::conj(tw.psi_E(s))) < 1e-14);
  }
  CHECK_THROWS_AS(psi_N(tw, omega_mat(3), AddChar::PsiE),
                  std::invalid_argument);
}

TEST_CASE("coset representatives are canonical and complete") {
  struct Row {
    int64_t p;
    int f, n;
    int64_t want;
  };
  for (Row r : {Row{2, 1, 2, 3}, Row{3, 1, 2, 16}, Row{2, 1, 3, 21}}) {
    Tower tw = Tower::build(r.p, r.f, r.n);
    CosetTable ct = coset_reps(tw, r.n, Level::F, Tower::kDefaultBudget);
    CHECK((int64_t)ct.reps.size() == r.want);
    int64_t nsize = 1;
    for (int i = 1; i < r.n; ++i)
      for (int j = 0; j < i; ++j) nsize *= tw.q();
    CHECK((int64_t)ct.reps.size() * nsize == gl_order(tw.q(), r.n));
    for (const Mat& g : ct.reps) CHECK(nf_canonicalize(tw, g, Level::F) == g);
    for (size_t i = 1; i < ct.reps.size(); ++i)
      CHECK(lex_less(ct.reps[i - 1], ct.reps[i]));
  }
}

TEST_CASE("canonical form is constant on left N orbits") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  auto eng = ws.rng(77);
  for (int t = 0; t < 50; ++t) {
    Mat g = ws.random_gl(eng, Level::E);
    Mat c = nf_canonicalize(tw, g, Level::E);
    Mat u = ws.random_unipotent(eng, Level::E);
    CHECK(nf_canonicalize(tw, mat_mul(tw, u, g), Level::E) == c);
    CHECK((lex_less(c, g) || c == g));
  }
}

TEST_CASE("char poly and classification kinds") {
  Tower tw = Tower::build(2, 1, 2);
  Classifier cls(tw);

  ClassData id = cls.classify(identity_mat(2));
  CHECK(id.kind == ClassData::CentralUnipotent);
  CHECK(id.z == tw.one());
  CHECK(id.blocks == 2);

  Mat u = from_logs(2, {0, 0, -1, 0});  // [[1,1],[0,1]]
  ClassData cu = cls.classify(u);
  CHECK(cu.kind == ClassData::CentralUnipotent);
  CHECK(cu.blocks == 1);

  // diagonal with distinct E eigenvalues is neither central nor elliptic
  Mat d = from_logs(2, {0, -1, -1, 5});
  CHECK(cls.classify(d).kind == ClassData::Other);

  // char poly of g + g^4 companion: irreducible over E, roots g, g^4
  Mat comp;
  comp.n = 2;
  comp.at(0, 0) = tw.zero();
  comp.at(0, 1) = tw.one();
  comp.at(1, 0) = tw.neg(tw.mul(tw.gen(), tw.frob(tw.gen(), 2)));
  comp.at(1, 1) = tw.add(tw.gen(), tw.frob(tw.gen(), 2));
  ClassData el = cls.classify(comp);
  CHECK(el.kind == ClassData::RegularElliptic);
  CHECK(el.alpha == tw.gen());  // smallest log in the orbit {1, 4}

  auto cp = char_poly(tw, identity_mat(2));
  CHECK(cp.size() == 3);
  CHECK(cp[2] == tw.one());   // monic
  CHECK(cp[0] == tw.one());   // det = 1 (char 2 sign)
}

TEST_CASE("classification is a class function and partitions GL_2(F_4)") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  const ClassHistogram& h = ws.hist(Subset::GroupE);
  CHECK(h.total == 180);
  int64_t central = 0, jordan = 0, elliptic = 0, other = 0;
  for (const auto& [k, c] : h.counts) {
    if (k.kind == 0 && k.b == 2) central += c;
    if (k.kind == 0 && k.b == 1) jordan += c;
    if (k.kind == 1) elliptic += c;
    if (k.kind == 2) other += c;
  }
  CHECK(central == 3);
  CHECK(jordan == 45);
  CHECK(elliptic == 72);
  CHECK(other == 60);

  auto eng = ws.rng(99);
  for (int t = 0; t < 200; ++t) {
    Mat g = ws.random_gl(eng, Level::E);
    Mat s = ws.random_gl(eng, Level::E);
    Mat conj = mat_mul(tw, mat_mul(tw, s, g), mat_inverse(tw, s));
    CHECK(ws.classifier().key(g) == ws.classifier().key(conj));
  }
}

TEST_CASE("parabolic radicals have the block sizes of their composition") {
  Tower tw = Tower::build(2, 1, 3);
  auto comps = proper_compositions(3);
  CHECK(comps.size() == 3);  // (1,2), (2,1), (1,1,1)
  for (const auto& c : comps) {
    int64_t cnt = 0;
    int64_t dim = 0;
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) dim += c[i] * c[j];
    for_each_radical(tw, c, Level::E, [&](const Mat& u) {
      ++cnt;
      CHECK(is_upper_unipotent(u));
    });
    int64_t want = 1;
    for (int64_t i = 0; i < dim; ++i) want *= tw.Q();
    CHECK(cnt == want);
  }
}
