#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asai/field_tower.hpp"

namespace asai {

/// Laurent polynomial in T = q^{-s} with complex coefficients.  q rides along
/// so substitutions and the factor identities can use exact integer powers of
/// the residue cardinality.  Kept reduced: no |coefficient| < 1e-12.
struct LaurentPoly {
  int64_t q = 0;
  std::map<int, cplx> c;  // exponent -> coefficient
};

LaurentPoly lp_term(int64_t q, cplx coeff, int e);
LaurentPoly lp_const(int64_t q, cplx coeff);
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_scale(const LaurentPoly& a, cplx s);
/// T -> a T^e with e != 0; e = -1 gives the reciprocal substitution.
LaurentPoly lp_substitute(const LaurentPoly& p, cplx a, int e);
LaurentPoly lp_reduce(LaurentPoly p);
bool lp_is_zero(const LaurentPoly& p);
bool lp_is_monomial(const LaurentPoly& p, double tol = 1e-12);
cplx lp_coeff(const LaurentPoly& p, int e);
cplx lp_eval(const LaurentPoly& p, cplx T);
/// max_e |a_e - b_e|.
double lp_max_coeff_dev(const LaurentPoly& a, const LaurentPoly& b);
std::string lp_to_string(const LaurentPoly& p);

/// num/den with den nonzero; scaled so den has constant term 1 when the
/// constant term is nonzero.  Equality is by cross-multiplication.
struct RationalFn {
  LaurentPoly num, den;
};

RationalFn rf_make(LaurentPoly num, LaurentPoly den);
RationalFn rf_mul(const RationalFn& a, const RationalFn& b);
RationalFn rf_div(const RationalFn& a, const RationalFn& b);
bool rf_equal(const RationalFn& a, const RationalFn& b, double tol = 1e-10);
bool rf_is_constant(const RationalFn& r, cplx value, double tol = 1e-10);
/// The monomial m T^k with num = (m T^k) den, if there is one.
std::optional<std::pair<cplx, int>> rf_as_monomial(const RationalFn& r,
                                                   double tol = 1e-12);
/// Nonzero poles counted with multiplicity: exponent span of the denominator.
int pole_count(const RationalFn& r);
std::string rf_to_string(const RationalFn& r);

/// L-factor of the level-zero representation attached to (lambda, rep):
/// 1/(1 - lambda T^n).  Only the distinguished case is defined; the other
/// throws std::invalid_argument.
RationalFn asai_L(int64_t q, int n, cplx lambda, bool distinguished);
/// L(1-s) of the contragredient: T -> q^{-1} T^{-1} applied to the L-factor
/// for lambda^{-1}.
RationalFn asai_L_dual(int64_t q, int n, cplx lambda);

/// vol * gamma(s) = (X/(lambda - X)) c1 + gamma_finite with X = q^{n(s-1)}
/// = q^{-n} T^{-n}; the volume constant is carried formally on the left.
RationalFn local_gamma_vol(int64_t q, int n, cplx lambda, cplx gamma_finite,
                           cplx c1);

struct EpsilonResult {
  cplx c2_vol;  // vol * eps = c2_vol X^{c3} in X = q^s
  int c3 = 0;
};

/// Builds vol*eps = vol*gamma * L(s)/L(1-s, dual) and asserts: it is a single
/// monomial in X = q^s; c3 = n; gamma_finite = c1/(1 - q^n); and
/// c2_vol * lambda = -gamma_finite.  Throws std::runtime_error otherwise.
/// The two-argument form uses the exact distinguished inputs c1 = q^n - 1,
/// gamma_finite = -1; the long form accepts measured values.
EpsilonResult epsilon_check(int64_t q, int n, cplx lambda, double tol = 1e-10);
EpsilonResult epsilon_check(int64_t q, int n, cplx lambda, cplx c1,
                            cplx gamma_finite, double tol);

/// Coefficient deviation between the two sides of the power-comparison
/// identity   q^{2ns} q^{-n} (c1 - g) + lambda g q^{ns}
///          = c2 lambda q^{(c3+n)s} - c2 lambda^2 q^{c3 s}
/// at g = -1, c1 = q^n - 1, c2 = 1/lambda, c3 = n.
double eq3_dev(int64_t q, int n, cplx lambda);

/// Deterministic sample, half on the unit circle, half with radius in
/// [0.3, 3.0); independent of platform rounding of the engine stream.
std::vector<cplx> sample_lambdas(int count, uint64_t seed);

}  // namespace asai
