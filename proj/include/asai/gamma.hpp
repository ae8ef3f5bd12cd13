#pragma once

#include <array>

#include "asai/workspace.hpp"

namespace asai {

/// Complex function on the row space F^n, dense in point-index order: index
/// is mixed radix over the F element order, first coordinate most significant.
struct SchwartzFn {
  int n = 0;
  std::vector<cplx> v;
};

/// The dimension argument m selects the row space F^m; 0 means the tower's n.
/// Towers only reach n in {2, 3}, but the transform itself is defined for any
/// m <= kMaxN over the tower's bottom field.
int64_t point_count(const Tower& tw, int m = 0);  // q^m
int64_t point_index(const Tower& tw, const std::array<FieldElem, kMaxN>& x,
                    int m = 0);
std::array<FieldElem, kMaxN> point_at(const Tower& tw, int64_t idx, int m = 0);
std::array<FieldElem, kMaxN> last_row(const Mat& g);  // e_n g

SchwartzFn schwartz_zero(const Tower& tw, int m = 0);
SchwartzFn indicator(const Tower& tw, int64_t idx, int m = 0);
SchwartzFn indicator_e_n(const Tower& tw);
SchwartzFn constant_one(const Tower& tw, int m = 0);
/// (F phi)(y) = sum_x phi(x) psi_F(sign<x,y>) with <x,y> = sum x_i y_i.
/// Unnormalized: fourier(fourier(phi, +1), -1) = q^n phi.
SchwartzFn fourier(const Tower& tw, const SchwartzFn& phi, int sign);

/// W(g) = B(g h) for the Bessel function of (rep, psi_E^sign); every element
/// of the Whittaker model is a combination of such right translates.
struct WhittakerElem {
  const CuspidalRep* rep = nullptr;
  Mat h;
  int psi_sign = +1;
};

cplx whittaker_eval(Workspace& ws, const WhittakerElem& w, const Mat& g);
/// Wt(g) = W(omega_n transpose(g)^{-1}); lies in the contragredient model
/// for the inverted character.
cplx whittaker_tilde_eval(Workspace& ws, const WhittakerElem& w, const Mat& g);

/// Z(W, phi) = sum_{g in N_n(F)\GL_n(F)} W(g) phi(e_n g).
cplx zeta(Workspace& ws, const WhittakerElem& w, const SchwartzFn& phi);
/// Same sum with Wt in place of W.
cplx zeta_tilde(Workspace& ws, const WhittakerElem& w, const SchwartzFn& phi);

/// gamma = sum_{g in N_n(F)\GL_n(F)} B(g) psi_F(sign * (g^{-1})_{n,1}).
cplx gamma_bessel(Workspace& ws, const CuspidalRep& rep, int psi_sign = +1);

/// gamma as the constant ratio Z(Wt, F phi) / Z(W, phi), measured across the
/// translate set and the point-indicator basis.
struct GammaFE {
  cplx gamma;                  // ratio at the base pair (B, indicator of e_n)
  double dispersion_s0 = 0;    // max |ratio - gamma|, indicators with phi(0)=0
  double dispersion_full = 0;  // same including the indicator at 0
  double residual_s0 = 0;      // max |Zt - gamma Z|, zero denominators included
  double residual_full = 0;
  int64_t used_s0 = 0;         // pairs with |Z| above threshold
  int64_t skipped_s0 = 0;
  bool exhaustive = false;     // translate set covered all of N_n(E)\G
};

/// Throws std::runtime_error when the base denominator vanishes, when
/// dispersion_s0 or residual_s0 exceeds tol, or (full_schwartz only) when
/// residual_full does; the last is what a distinguished rep fails, through
/// the indicator at 0.
GammaFE gamma_fe(Workspace& ws, const CuspidalRep& rep, bool full_schwartz,
                 double tol = 1e-8, int psi_sign = +1);

/// The four distinction criteria; they must agree.
struct DistinctionReport {
  int multiplicity = 0;     // character average over GL_n(F), in {0, 1}
  bool gow = false;         // chi(tau(g)) = chi(g) on every class of GL_n(E)
  bool bessel_sym = false;  // B(frob(g)^{-1}) = B(g) on the test set
  double gow_dev = 0;
  double bessel_dev = 0;
  cplx coset_sum;           // sum of B over N_n(F)\GL_n(F), in {q^n - 1, 0}
  bool distinguished = false;
};

/// Throws std::runtime_error when the verdicts disagree, the average is not
/// 0 or 1, or the coset sum is near neither admissible value.
DistinctionReport distinction(Workspace& ws, const CuspidalRep& rep);

}  // namespace asai
