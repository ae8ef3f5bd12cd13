#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "asai/bessel.hpp"
#include "asai/cuspidal.hpp"
#include "asai/matgroup.hpp"

namespace asai {

enum class Subset { GroupE, GroupF, MirabolicE, MirabolicF, UnipotentE };

/**
 * Per-tower caches shared by every representation: coset tables, class
 * histograms over the named subgroups, the Whittaker translate set, and one
 * Bessel cache per (orbit, psi sign).  Everything is built lazily and the
 * iteration orders are fixed, so downstream sums are reproducible.
 */
class Workspace {
 public:
  explicit Workspace(Tower tw, int64_t budget = Tower::kDefaultBudget,
                     uint64_t seed = 0);
  // caches hold pointers into the workspace, so it must stay put
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const Tower& tower() const { return tw_; }
  int64_t budget() const { return budget_; }
  uint64_t seed() const { return seed_; }
  Classifier& classifier() { return cls_; }

  /// N_n(F)\GL_n(F) canonical coset representatives.
  const CosetTable& cosets_H();
  /// Whittaker translate set: canonical N_n(E)\GL_n(E) representatives when
  /// |GL_n(E)| <= 10^4, otherwise the identity plus 200 seeded pseudo-random
  /// invertible matrices over E.
  const std::vector<Mat>& translates();
  bool translates_exhaustive();

  const ClassHistogram& hist(Subset s);
  const std::vector<std::vector<int>>& radical_compositions();
  const ClassHistogram& radical_hist(size_t i);
  /// (key, key of tau(representative)) for every class of GL_n(E).
  const std::vector<std::pair<ClassKey, ClassKey>>& tau_class_pairs();

  BesselFn& bessel(const CuspidalRep& rep, int psi_sign);

  std::mt19937_64 rng(uint64_t salt) const;
  Mat random_gl(std::mt19937_64& eng, Level lv) const;
  Mat random_unipotent(std::mt19937_64& eng, Level lv) const;

 private:
  Tower tw_;
  int64_t budget_;
  uint64_t seed_;
  Classifier cls_;
  std::optional<CosetTable> cosets_H_;
  std::optional<std::vector<Mat>> translates_;
  bool translates_exhaustive_ = false;
  std::map<Subset, ClassHistogram> hists_;
  std::vector<std::vector<int>> rad_comps_;
  std::map<size_t, ClassHistogram> rad_hists_;
  std::optional<std::vector<std::pair<ClassKey, ClassKey>>> tau_pairs_;
  std::map<std::pair<int64_t, int>, std::unique_ptr<BesselFn>> bessel_;
};

}  // namespace asai
