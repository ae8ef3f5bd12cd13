#include "doctest.h"

#include <cmath>
#include <set>

#include "asai/cuspidal.hpp"
#include "asai/workspace.hpp"

using namespace asai;

TEST_CASE("orbit census per tower") {
  struct Row {
    int64_t p;
    int f, n;
    size_t orbits;
    int64_t dim;
  };
  for (Row r : {Row{2, 1, 2, 6, 3}, Row{3, 1, 2, 36, 8},
                Row{2, 1, 3, 20, 45}}) {
    Tower tw = Tower::build(r.p, r.f, r.n);
    auto reps = list_cuspidal(tw);
    CHECK(reps.size() == r.orbits);
    std::set<int64_t> seen;
    for (const CuspidalRep& rep : reps) {
      CHECK(rep.dim == r.dim);
      CHECK((int)rep.orbit.size() == r.n);
      CHECK(rep.theta.k == rep.orbit.front());  // canonical label
      for (int64_t e : rep.orbit) {
        CHECK(!seen.count(e));
        seen.insert(e);
      }
    }
    // orbits are disjoint and cover all regular exponents
    CHECK(seen.size() == r.orbits * r.n);
  }
}

TEST_CASE("non-regular exponents are rejected") {
  Tower tw = Tower::build(2, 1, 2);
  CHECK_THROWS_AS(new_cuspidal(tw, 0), std::invalid_argument);
  CHECK_THROWS_AS(new_cuspidal(tw, 5), std::invalid_argument);
  CHECK(new_cuspidal(tw, 4).orbit == std::vector<int64_t>{1, 4});
}

TEST_CASE("contragredient flips the orbit sign") {
  Tower tw = Tower::build(2, 1, 2);
  CuspidalRep r = new_cuspidal(tw, 1);
  CuspidalRep rt = contragredient(r);
  CHECK(rt.orbit == std::vector<int64_t>{11, 14});
  CHECK(contragredient(rt).orbit == r.orbit);

  Tower t3 = Tower::build(2, 1, 3);
  CHECK(contragredient(new_cuspidal(t3, 7)).orbit ==
        std::vector<int64_t>{14, 35, 56});
}

TEST_CASE("character values on the three kinds") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  CuspidalRep r = new_cuspidal(tw, 1);
  cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI / 15.0));

  CHECK(std::abs(character_value(r, ws.classifier(), identity_mat(2)) -
                 cplx(3.0)) < 1e-12);

  Mat u = identity_mat(2);
  u.at(0, 1) = tw.one();
  CHECK(std::abs(character_value(r, ws.classifier(), u) - cplx(-1.0)) < 1e-12);

  Mat zc = scalar_mat(2, tw.from_log(5));
  CHECK(std::abs(character_value(r, ws.classifier(), zc) -
                 3.0 * std::pow(zeta, 5)) < 1e-12);
  Mat zu = zc;
  zu.at(0, 1) = tw.from_log(5);
  CHECK(std::abs(character_value(r, ws.classifier(), zu) +
                 std::pow(zeta, 5)) < 1e-12);

  const ClassHistogram& h = ws.hist(Subset::GroupE);
  Mat el = h.sample.at(ClassKey{1, 1, 0});  // elliptic with orbit {g, g^4}
  CHECK(std::abs(character_value(r, ws.classifier(), el) +
                 (zeta + std::pow(zeta, 4))) < 1e-12);

  // split regular semisimple and non-central non-unipotent classes vanish
  for (const auto& [k, g] : h.sample)
    if (k.kind == 2)
      CHECK(character_value(r, ws.classifier(), g) == cplx(0.0));
}

TEST_CASE("characters are orthonormal class functions") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  auto reps = list_cuspidal(tw);
  const ClassHistogram& h = ws.hist(Subset::GroupE);
  for (size_t i = 0; i < reps.size(); ++i) {
    CHECK(std::abs(norm_over(reps[i], h) - 1.0) < 1e-10);
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK(std::abs(inner_product(reps[i], reps[j], h)) < 1e-10);
  }
}

TEST_CASE("cuspidality: radical averages vanish") {
  Tower tw = Tower::build(2, 1, 3);
  Workspace ws(tw);
  auto reps = list_cuspidal(tw);
  for (size_t ci = 0; ci < ws.radical_compositions().size(); ++ci)
    for (const CuspidalRep& r : reps)
      CHECK(integer_average(r, ws.radical_hist(ci), 1e-6) == 0);
}

TEST_CASE("mirabolic restrictions") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  for (const CuspidalRep& r : list_cuspidal(tw)) {
    // over E: irreducible restriction; over F: trivial appears exactly once
    CHECK(std::abs(norm_over(r, ws.hist(Subset::MirabolicE)) - 1.0) < 1e-10);
    CHECK(integer_average(r, ws.hist(Subset::MirabolicF), 1e-6) == 1);
    CHECK(integer_average(r, ws.hist(Subset::UnipotentE), 1e-6) == 0);
  }
}

TEST_CASE("integer_average rejects non-integral data") {
  Tower tw = Tower::build(2, 1, 2);
  Workspace ws(tw);
  CuspidalRep r = new_cuspidal(tw, 1);
  // the regular unipotent class alone averages to -1
  ClassHistogram h;
  Mat u = identity_mat(2);
  u.at(0, 1) = tw.one();
  h.insert(ws.classifier().key(u), u);
  CHECK_THROWS_AS(integer_average(r, h, 1e-6), std::runtime_error);
  // and a lone elliptic class has an irrational average
  ClassHistogram h2;
  Mat el = ws.hist(Subset::GroupE).sample.at(ClassKey{1, 1, 0});
  h2.insert(ws.classifier().key(el), el);
  CHECK_THROWS_AS(integer_average(r, h2, 1e-6), std::runtime_error);
}
