#include "asai/level_zero.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace asai {

namespace {

constexpr double kStrip = 1e-12;

double qpow(int64_t q, int e) { return std::pow((double)q, e); }

void check_same_q(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.q != b.q) throw std::invalid_argument("mixed residue cardinalities");
}

std::string fmt_c(cplx v) {
  char buf[80];
  if (std::abs(v.imag()) < kStrip) {
    std::snprintf(buf, sizeof buf, "%.12g", v.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", v.real(), v.imag());
  }
  return buf;
}

}  // namespace

LaurentPoly lp_term(int64_t q, cplx coeff, int e) {
  LaurentPoly p{q, {}};
  if (std::abs(coeff) >= kStrip) p.c[e] = coeff;
  return p;
}

LaurentPoly lp_const(int64_t q, cplx coeff) { return lp_term(q, coeff, 0); }

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_q(a, b);
  LaurentPoly r = a;
  for (const auto& [e, v] : b.c) r.c[e] += v;
  return lp_reduce(std::move(r));
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
  return lp_add(a, lp_scale(b, -1.0));
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_q(a, b);
  LaurentPoly r{a.q, {}};
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) r.c[ea + eb] += va * vb;
  return lp_reduce(std::move(r));
}

LaurentPoly lp_scale(const LaurentPoly& a, cplx s) {
  LaurentPoly r{a.q, {}};
  for (const auto& [e, v] : a.c) r.c[e] = v * s;
  return lp_reduce(std::move(r));
}

LaurentPoly lp_substitute(const LaurentPoly& p, cplx a, int e) {
  if (e == 0) throw std::invalid_argument("degenerate substitution");
  LaurentPoly r{p.q, {}};
  for (const auto& [k, v] : p.c) r.c[k * e] += v * std::pow(a, k);
  return lp_reduce(std::move(r));
}

LaurentPoly lp_reduce(LaurentPoly p) {
  for (auto it = p.c.begin(); it != p.c.end();) {
    if (std::abs(it->second) < kStrip)
      it = p.c.erase(it);
    else
      ++it;
  }
  return p;
}

bool lp_is_zero(const LaurentPoly& p) { return lp_reduce(p).c.empty(); }

bool lp_is_monomial(const LaurentPoly& p, double tol) {
  int live = 0;
  for (const auto& [e, v] : p.c)
    if (std::abs(v) > tol) ++live;
  return live == 1;
}

cplx lp_coeff(const LaurentPoly& p, int e) {
  auto it = p.c.find(e);
  return it == p.c.end() ? cplx(0.0) : it->second;
}

cplx lp_eval(const LaurentPoly& p, cplx T) {
  cplx acc = 0.0;
  for (const auto& [e, v] : p.c) acc += v * std::pow(T, e);
  return acc;
}

double lp_max_coeff_dev(const LaurentPoly& a, const LaurentPoly& b) {
  double d = 0;
  for (const auto& [e, v] : a.c) d = std::max(d, std::abs(v - lp_coeff(b, e)));
  for (const auto& [e, v] : b.c) d = std::max(d, std::abs(v - lp_coeff(a, e)));
  return d;
}

std::string lp_to_string(const LaurentPoly& p) {
  if (p.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : p.c) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << fmt_c(v);
      continue;
    }
    os << fmt_c(v) << "*T";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

RationalFn rf_make(LaurentPoly num, LaurentPoly den) {
  den = lp_reduce(std::move(den));
  if (den.c.empty()) throw std::invalid_argument("zero denominator");
  cplx c0 = lp_coeff(den, 0);
  if (std::abs(c0) >= kStrip) {
    num = lp_scale(num, 1.0 / c0);
    den = lp_scale(den, 1.0 / c0);
    den.c[0] = 1.0;  // exact after scaling
  }
  return {lp_reduce(std::move(num)), std::move(den)};
}

RationalFn rf_mul(const RationalFn& a, const RationalFn& b) {
  return rf_make(lp_mul(a.num, b.num), lp_mul(a.den, b.den));
}

RationalFn rf_div(const RationalFn& a, const RationalFn& b) {
  return rf_make(lp_mul(a.num, b.den), lp_mul(a.den, b.num));
}

bool rf_equal(const RationalFn& a, const RationalFn& b, double tol) {
  return lp_max_coeff_dev(lp_mul(a.num, b.den), lp_mul(b.num, a.den)) <= tol;
}

bool rf_is_constant(const RationalFn& r, cplx value, double tol) {
  return lp_max_coeff_dev(r.num, lp_scale(r.den, value)) <= tol;
}

std::optional<std::pair<cplx, int>> rf_as_monomial(const RationalFn& r,
                                                   double tol) {
  auto lead = [](const LaurentPoly& p) {
    int e = 0;
    double best = -1;
    for (const auto& [k, v] : p.c)
      if (std::abs(v) > best) best = std::abs(v), e = k;
    return e;
  };
  if (r.num.c.empty()) return std::nullopt;
  int en = lead(r.num), ed = lead(r.den);
  cplx m = lp_coeff(r.num, en) / lp_coeff(r.den, ed);
  int k = en - ed;
  LaurentPoly probe = lp_mul(lp_term(r.den.q, m, k), r.den);
  if (lp_max_coeff_dev(r.num, probe) > tol) return std::nullopt;
  return std::make_pair(m, k);
}

int pole_count(const RationalFn& r) {
  if (r.den.c.empty()) throw std::invalid_argument("zero denominator");
  return r.den.c.rbegin()->first - r.den.c.begin()->first;
}

std::string rf_to_string(const RationalFn& r) {
  if (lp_is_monomial(r.den) && r.den.c.count(0) &&
      std::abs(lp_coeff(r.den, 0) - 1.0) < kStrip)
    return lp_to_string(r.num);
  return "(" + lp_to_string(r.num) + ") / (" + lp_to_string(r.den) + ")";
}

RationalFn asai_L(int64_t q, int n, cplx lambda, bool distinguished) {
  if (lambda == cplx(0.0)) throw std::invalid_argument("lambda must be nonzero");
  if (!distinguished)
    throw std::invalid_argument("L-factor defined only in the distinguished case");
  return rf_make(lp_const(q, 1.0),
                 lp_sub(lp_const(q, 1.0), lp_term(q, lambda, n)));
}

RationalFn asai_L_dual(int64_t q, int n, cplx lambda) {
  RationalFn L = asai_L(q, n, 1.0 / lambda, true);
  return rf_make(lp_substitute(L.num, 1.0 / (double)q, -1),
                 lp_substitute(L.den, 1.0 / (double)q, -1));
}

RationalFn local_gamma_vol(int64_t q, int n, cplx lambda, cplx gamma_finite,
                           cplx c1) {
  if (lambda == cplx(0.0)) throw std::invalid_argument("lambda must be nonzero");
  // Clear X = q^{-n} T^{-n} from (X/(lambda - X)) c1 + gamma_finite by
  // multiplying through by T^n.
  double qn = qpow(q, -n);
  LaurentPoly den = lp_sub(lp_term(q, lambda, n), lp_const(q, qn));
  LaurentPoly num = lp_add(lp_const(q, c1 * qn), lp_scale(den, gamma_finite));
  return rf_make(std::move(num), std::move(den));
}

EpsilonResult epsilon_check(int64_t q, int n, cplx lambda, double tol) {
  double qn = qpow(q, n);
  return epsilon_check(q, n, lambda, qn - 1.0, -1.0, tol);
}

EpsilonResult epsilon_check(int64_t q, int n, cplx lambda, cplx c1,
                            cplx gamma_finite, double tol) {
  cplx gf_expected = c1 / (1.0 - qpow(q, n));
  if (std::abs(gamma_finite - gf_expected) > tol * 1e2 ||
      std::abs(gamma_finite - cplx(-1.0)) > 1e-6)
    throw std::runtime_error("gamma is not c1/(1 - q^n) = -1");

  RationalFn eps = rf_mul(local_gamma_vol(q, n, lambda, gamma_finite, c1),
                          rf_div(asai_L(q, n, lambda, true),
                                 asai_L_dual(q, n, lambda)));
  auto mono = rf_as_monomial(eps, tol);
  if (!mono) throw std::runtime_error("vol*eps is not a monomial");
  EpsilonResult r;
  r.c2_vol = mono->first;
  r.c3 = -mono->second;  // T = X^{-1}
  if (r.c3 != n) throw std::runtime_error("monomial exponent is not n");
  if (std::abs(r.c2_vol * lambda + gamma_finite) > tol * 1e2)
    throw std::runtime_error("c2_vol * lambda != -gamma");
  return r;
}

double eq3_dev(int64_t q, int n, cplx lambda) {
  cplx g = -1.0;
  cplx c1 = qpow(q, n) - 1.0;
  cplx c2 = 1.0 / lambda;
  int c3 = n;
  // q^{ks} = T^{-k}
  LaurentPoly lhs = lp_add(lp_term(q, qpow(q, -n) * (c1 - g), -2 * n),
                           lp_term(q, lambda * g, -n));
  LaurentPoly rhs = lp_sub(lp_term(q, c2 * lambda, -(c3 + n)),
                           lp_term(q, c2 * lambda * lambda, -c3));
  return lp_max_coeff_dev(lhs, rhs);
}

std::vector<cplx> sample_lambdas(int count, uint64_t seed) {
  std::mt19937_64 eng(seed ^ 0x6c616d62ull);
  auto unit = [&] { return (double)(eng() >> 11) * 0x1.0p-53; };
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) {
    double r = i % 2 == 0 ? 1.0 : 0.3 + 2.7 * unit();
    out.push_back(std::polar(r, 2.0 * 3.14159265358979323846 * unit()));
  }
  return out;
}

}  // namespace asai
