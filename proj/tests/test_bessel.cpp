#include "doctest.h"

#include <cmath>

#include "asai/bessel.hpp"
#include "asai/workspace.hpp"

using namespace asai;

TEST_CASE("normalization, support and unipotent values") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  for (const CuspidalRep& r : list_cuspidal(tw)) {
    BesselFn& B = ws.bessel(r, +1);
    CHECK(std::abs(B(identity_mat(2)) - cplx(1.0)) < 1e-12);
    // on N the value is the character itself
    for (const Mat& u : unipotent_list(tw, 2, Level::E))
      CHECK(std::abs(B(u) - psi_N(tw, u, AddChar::PsiE)) < 1e-12);
    // off N the mirabolic part of the support is empty
    for_each_mirabolic(tw, 2, Level::E, ws.budget(), [&](const Mat& g) {
      if (!is_upper_unipotent(g)) CHECK(std::abs(B(g)) < 1e-12);
    });
  }
}

TEST_CASE("central translation multiplies by the central character") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  CuspidalRep r = new_cuspidal(tw, 1);
  BesselFn& B = ws.bessel(r, +1);
  auto eng = ws.rng(3);
  for (int t = 0; t < 40; ++t) {
    Mat g = ws.random_gl(eng, Level::E);
    for (int64_t zl : {5, 10}) {
      FieldElem z = tw.from_log(zl);
      cplx lhs = B(mat_mul(tw, scalar_mat(2, z), g));
      CHECK(std::abs(lhs - tw.theta(r.theta, z) * B(g)) < 1e-10);
    }
  }
}

TEST_CASE("full suite on each orbit of the two smallest towers") {
  for (auto [p, f] : {std::pair<int64_t, int>{2, 1}, {3, 1}}) {
    Tower tw = Tower::build(p, f, 2);
    Workspace ws(tw);
    for (const CuspidalRep& r : list_cuspidal(tw)) {
      BesselReport rp = verify_bessel_suite(ws, r, 500, 11 + r.theta.k);
      CHECK(rp.identity_dev < 1e-10);
      CHECK(rp.equivariance_dev < 1e-8);
      CHECK(rp.support_dev < 1e-10);
      CHECK(rp.conjugation_dev < 1e-8);
      CHECK(rp.triples > 0);
    }
  }
}

TEST_CASE("bessel values are theta-orbit data, not exponent data") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  BesselFn& a = ws.bessel(new_cuspidal(tw, 1), +1);
  BesselFn& b = ws.bessel(new_cuspidal(tw, 4), +1);
  CHECK(&a == &b);  // same orbit, same cache
  auto eng = ws.rng(19);
  for (int t = 0; t < 20; ++t) {
    Mat g = ws.random_gl(eng, Level::E);
    CHECK(a(g) == b(g));
  }
}
