#include "asai/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "asai/workspace.hpp"

namespace asai {

BesselFn::BesselFn(const CuspidalRep& rep, Classifier& cls, int psi_sign)
    : rep_(rep), cls_(&cls), sign_(psi_sign) {
  const Tower& tw = *rep_.tower;
  nilp_ = unipotent_list(tw, rep_.n, Level::E);
  psi_inv_.reserve(nilp_.size());
  for (const Mat& u : nilp_)
    psi_inv_.push_back(psi_N(tw, u, AddChar::PsiE, -sign_));
}

cplx BesselFn::operator()(const Mat& g) const {
  MatKey key = mat_key(g);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const Tower& tw = *rep_.tower;
  cplx s = 0.0;
  for (size_t i = 0; i < nilp_.size(); ++i)
    s += psi_inv_[i] * character_value(rep_, *cls_, mat_mul(tw, g, nilp_[i]));
  s /= (double)nilp_.size();
  cache_.emplace(key, s);
  return s;
}

double BesselReport::max_dev() const {
  return std::max({identity_dev, equivariance_dev, support_dev, conjugation_dev});
}

BesselReport verify_bessel_suite(Workspace& ws, const CuspidalRep& rep,
                                 int64_t sample_size, uint64_t seed) {
  const Tower& tw = ws.tower();
  BesselFn& B = ws.bessel(rep, +1);
  BesselFn btilde(contragredient(rep), ws.classifier(), -1);
  BesselReport rp;

  rp.identity_dev = std::abs(B(identity_mat(rep.n)) - 1.0);

  // support: on the mirabolic over E the function vanishes off N_n(E)
  for_each_mirabolic(tw, rep.n, Level::E, ws.budget(), [&](const Mat& g) {
    if (is_upper_unipotent(g)) return;
    rp.support_dev = std::max(rp.support_dev, std::abs(B(g)));
  });

  auto nilp = unipotent_list(tw, rep.n, Level::E);
  auto check_triple = [&](const Mat& u1, const Mat& g, const Mat& u2) {
    cplx lhs = B(mat_mul(tw, mat_mul(tw, u1, g), u2));
    cplx rhs = psi_N(tw, u1, AddChar::PsiE) * psi_N(tw, u2, AddChar::PsiE) * B(g);
    rp.equivariance_dev = std::max(rp.equivariance_dev, std::abs(lhs - rhs));
    ++rp.triples;
  };
  auto check_conj = [&](const Mat& g) {
    Mat gi = mat_inverse(tw, g);
    double d1 = std::abs(B(gi) - std::conj(B(g)));
    double d2 = std::abs(btilde(g) - std::conj(B(g)));
    rp.conjugation_dev = std::max({rp.conjugation_dev, d1, d2});
  };

  int64_t gsize = gl_order(tw.card(Level::E), rep.n);
  int64_t exhaustive_cost =
      gsize / (int64_t)nilp.size() * (int64_t)(nilp.size() * nilp.size());
  if (exhaustive_cost <= sample_size || exhaustive_cost <= 10'000) {
    const auto& reps = coset_reps(tw, rep.n, Level::E, ws.budget()).reps;
    for (const Mat& g : reps) {
      for (const Mat& u1 : nilp)
        for (const Mat& u2 : nilp) check_triple(u1, g, u2);
      check_conj(g);
    }
  } else {
    auto eng = ws.rng(seed * 2654435761u + 17);
    for (int64_t t = 0; t < sample_size; ++t) {
      Mat g = ws.random_gl(eng, Level::E);
      check_triple(ws.random_unipotent(eng, Level::E), g,
                   ws.random_unipotent(eng, Level::E));
      check_conj(g);
    }
  }
  return rp;
}

}  // namespace asai
