#pragma once

#include <unordered_map>

#include "asai/cuspidal.hpp"

namespace asai {

class Workspace;

/**
 * Bessel function of a cuspidal representation:
 *   B(g) = |N_n(E)|^{-1} sum_{u in N_n(E)} psi_E(u)^{-sign} chi(g u).
 * Values are cached by matrix key.  Not thread safe.
 */
class BesselFn {
 public:
  BesselFn(const CuspidalRep& rep, Classifier& cls, int psi_sign = +1);

  cplx operator()(const Mat& g) const;
  const CuspidalRep& rep() const { return rep_; }
  int psi_sign() const { return sign_; }

 private:
  CuspidalRep rep_;
  Classifier* cls_;
  int sign_;
  std::vector<Mat> nilp_;
  std::vector<cplx> psi_inv_;
  mutable std::unordered_map<MatKey, cplx, MatKeyHash> cache_;
};

struct BesselReport {
  double identity_dev = 0;      // |B(1) - 1|
  double equivariance_dev = 0;  // B(u1 g u2) vs psi(u1 u2) B(g)
  double support_dev = 0;       // B on the mirabolic away from N
  double conjugation_dev = 0;   // B(g^{-1}) vs conj B(g)
  int64_t triples = 0;
  double max_dev() const;
};

/// Exhaustive over (u1, coset rep, u2) when that set is small, otherwise the
/// requested number of seeded samples.
BesselReport verify_bessel_suite(Workspace& ws, const CuspidalRep& rep,
                                 int64_t sample_size, uint64_t seed);

}  // namespace asai
