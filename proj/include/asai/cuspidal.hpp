#pragma once

#include <vector>

#include "asai/matgroup.hpp"

namespace asai {

/**
 * Irreducible cuspidal representation of GL_n(E), labelled by the Frobenius
 * orbit of a regular multiplicative character theta of K^x.  Only the
 * character (class function) is materialized:
 *   CentralUnipotent(z, k):  (-1)^{n-1} theta(z) prod_{i=1}^{k-1} (1 - Q^i)
 *   RegularElliptic(alpha):  (-1)^{n-1} sum_{i<n} theta(alpha^{Q^i})
 *   Other:                   0
 */
struct CuspidalRep {
  const Tower* tower = nullptr;
  int n = 0;
  int64_t Q = 0;
  MultChar theta;                // orbit minimum
  std::vector<int64_t> orbit;    // sorted exponents
  int64_t dim = 0;               // prod_{i=1}^{n-1} (Q^i - 1)
};

/// Throws std::invalid_argument unless theta_k is regular.
CuspidalRep new_cuspidal(const Tower& tw, int64_t k);
/// All cuspidal orbits, ascending by canonical exponent.
std::vector<CuspidalRep> list_cuspidal(const Tower& tw);
CuspidalRep contragredient(const CuspidalRep& rep);

cplx character_value(const CuspidalRep& rep, const ClassData& cd);
cplx character_value(const CuspidalRep& rep, Classifier& cls, const Mat& g);
cplx character_value(const CuspidalRep& rep, const ClassKey& k);

/// (1/|S|) sum over S of chi; the dimension of S-invariants.
cplx average_over(const CuspidalRep& rep, const ClassHistogram& hist);
/// Same, validated to be a nonnegative integer within tol (throws otherwise).
int integer_average(const CuspidalRep& rep, const ClassHistogram& hist, double tol);
/// (1/|S|) sum over S of |chi|^2.
double norm_over(const CuspidalRep& rep, const ClassHistogram& hist);
/// (1/|S|) sum over S of chi_a conj(chi_b).
cplx inner_product(const CuspidalRep& a, const CuspidalRep& b,
                   const ClassHistogram& hist);

}  // namespace asai
