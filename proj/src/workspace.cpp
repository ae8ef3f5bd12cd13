#include "asai/workspace.hpp"

#include <stdexcept>

namespace asai {

namespace {
constexpr int64_t kExhaustiveTranslateLimit = 10'000;
constexpr int kRandomTranslates = 200;
}  // namespace

Workspace::Workspace(Tower tw, int64_t budget, uint64_t seed)
    : tw_(std::move(tw)), budget_(budget), seed_(seed), cls_(tw_) {}

const CosetTable& Workspace::cosets_H() {
  if (!cosets_H_)
    cosets_H_ = coset_reps(tw_, tw_.n(), Level::F, budget_);
  return *cosets_H_;
}

const std::vector<Mat>& Workspace::translates() {
  if (!translates_) {
    int64_t gsize = gl_order(tw_.card(Level::E), tw_.n());
    std::vector<Mat> out;
    if (gsize <= kExhaustiveTranslateLimit) {
      out = coset_reps(tw_, tw_.n(), Level::E, budget_).reps;
      translates_exhaustive_ = true;
    } else {
      out.push_back(identity_mat(tw_.n()));
      auto eng = rng(0x72616e64ull);
      for (int i = 0; i < kRandomTranslates; ++i)
        out.push_back(random_gl(eng, Level::E));
      translates_exhaustive_ = false;
    }
    translates_ = std::move(out);
  }
  return *translates_;
}

bool Workspace::translates_exhaustive() {
  translates();
  return translates_exhaustive_;
}

const ClassHistogram& Workspace::hist(Subset s) {
  auto it = hists_.find(s);
  if (it != hists_.end()) return it->second;
  int n = tw_.n();
  auto walk = [&](const MatVisitor& fn) {
    switch (s) {
      case Subset::GroupE: for_each_gl(tw_, n, Level::E, budget_, fn); break;
      case Subset::GroupF: for_each_gl(tw_, n, Level::F, budget_, fn); break;
      case Subset::MirabolicE:
        for_each_mirabolic(tw_, n, Level::E, budget_, fn);
        break;
      case Subset::MirabolicF:
        for_each_mirabolic(tw_, n, Level::F, budget_, fn);
        break;
      case Subset::UnipotentE: for_each_unipotent(tw_, n, Level::E, fn); break;
    }
  };
  return hists_.emplace(s, histogram_over(cls_, walk)).first->second;
}

const std::vector<std::vector<int>>& Workspace::radical_compositions() {
  if (rad_comps_.empty()) rad_comps_ = proper_compositions(tw_.n());
  return rad_comps_;
}

const ClassHistogram& Workspace::radical_hist(size_t i) {
  auto it = rad_hists_.find(i);
  if (it != rad_hists_.end()) return it->second;
  const auto& comp = radical_compositions().at(i);
  auto walk = [&](const MatVisitor& fn) {
    for_each_radical(tw_, comp, Level::E, fn);
  };
  return rad_hists_.emplace(i, histogram_over(cls_, walk)).first->second;
}

const std::vector<std::pair<ClassKey, ClassKey>>& Workspace::tau_class_pairs() {
  if (!tau_pairs_) {
    std::vector<std::pair<ClassKey, ClassKey>> pairs;
    const ClassHistogram& h = hist(Subset::GroupE);
    for (const auto& [key, g] : h.sample)
      pairs.emplace_back(key, cls_.key(tau_map(tw_, g)));
    tau_pairs_ = std::move(pairs);
  }
  return *tau_pairs_;
}

BesselFn& Workspace::bessel(const CuspidalRep& rep, int psi_sign) {
  auto key = std::make_pair(rep.theta.k, psi_sign);
  auto it = bessel_.find(key);
  if (it == bessel_.end())
    it = bessel_.emplace(key, std::make_unique<BesselFn>(rep, cls_, psi_sign))
             .first;
  return *it->second;
}

std::mt19937_64 Workspace::rng(uint64_t salt) const {
  uint64_t mix = seed_ * 1000003ull;
  mix ^= (uint64_t)tw_.p() * 10007ull + (uint64_t)tw_.f() * 101ull + tw_.n();
  mix ^= salt * 0x9e3779b97f4a7c15ull;
  return std::mt19937_64(mix);
}

Mat Workspace::random_gl(std::mt19937_64& eng, Level lv) const {
  int n = tw_.n();
  int64_t s = tw_.card(lv);
  for (;;) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n * n; ++i)
      m.a[i] = tw_.level_elem((int64_t)(eng() % (uint64_t)s), lv);
    if (!mat_det(tw_, m).is_zero()) return m;
  }
}

Mat Workspace::random_unipotent(std::mt19937_64& eng, Level lv) const {
  int n = tw_.n();
  int64_t s = tw_.card(lv);
  Mat m = identity_mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m.at(i, j) = tw_.level_elem((int64_t)(eng() % (uint64_t)s), lv);
  return m;
}

}  // namespace asai
