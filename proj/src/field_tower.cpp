#include "asai/field_tower.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asai {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Order of x in F_p[x]/(P) where P is the monic candidate; returns 0 when a
// power of x collapses to 0 or the order is below the target.  An order of
// exactly p^d - 1 certifies primitivity (and irreducibility with it).
int64_t order_of_x(const std::vector<int>& poly, int64_t p, int64_t target) {
  int d = static_cast<int>(poly.size()) - 1;  // always >= 4 here
  std::vector<int> v(d, 0);
  v[1] = 1;
  for (int64_t k = 1; k <= target; ++k) {
    bool is_one = v[0] == 1;
    for (int i = 1; i < d && is_one; ++i) is_one = v[i] == 0;
    if (is_one) return k == target ? target : k;
    // v *= x
    int carry = v[d - 1];
    for (int i = d - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < d; ++i)
        v[i] = (int)(((int64_t)v[i] - (int64_t)carry * poly[i]) % p + p) % p;
    }
    bool all_zero = true;
    for (int i = 0; i < d && all_zero; ++i) all_zero = v[i] == 0;
    if (all_zero) return 0;
  }
  return 0;
}

std::vector<int> smallest_primitive_poly(int64_t p, int d, int64_t M) {
  // Scan monic degree-d candidates in lex order of (c0, c1, ..., c_{d-1}).
  std::vector<int> c(d, 0);
  for (;;) {
    if (c[0] != 0) {
      std::vector<int> poly(c.begin(), c.end());
      poly.push_back(1);
      if (order_of_x(poly, p, M) == M) return poly;
    }
    int i = d - 1;
    while (i >= 0 && c[i] == (int)p - 1) c[i--] = 0;
    if (i < 0) throw std::runtime_error("no primitive polynomial found");
    ++c[i];
  }
}

}  // namespace

Tower Tower::build(int64_t p, int f, int n, int64_t budget,
                   std::optional<int32_t> z_override) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (f < 1) throw std::invalid_argument("f must be >= 1");
  if (n != 2 && n != 3) throw std::invalid_argument("n must be 2 or 3");

  Tower tw;
  tw.p_ = p;
  tw.f_ = f;
  tw.n_ = n;
  tw.d_ = 2 * n * f;
  tw.q_ = ipow(p, f);
  tw.Q_ = tw.q_ * tw.q_;
  int64_t cardK = 1;
  for (int i = 0; i < tw.d_; ++i) {
    cardK *= p;
    if (cardK > budget) throw std::invalid_argument("tower exceeds budget");
  }
  tw.M_ = cardK - 1;
  tw.stride_F_ = tw.M_ / (tw.q_ - 1);
  tw.stride_E_ = tw.M_ / (tw.Q_ - 1);
  tw.log_minus_one_ = p == 2 ? 0 : (int32_t)(tw.M_ / 2);

  tw.modulus_ = smallest_primitive_poly(p, tw.d_, tw.M_);

  // Exp/log tables over the packed coefficient representation sum c_i p^i.
  const int d = tw.d_;
  tw.exp_code_.assign(tw.M_, 0);
  tw.log_code_.assign(cardK, -1);
  std::vector<int64_t> v(d, 0);
  v[0] = 1;
  std::vector<int64_t> place(d);
  place[0] = 1;
  for (int i = 1; i < d; ++i) place[i] = place[i - 1] * p;
  for (int64_t k = 0; k < tw.M_; ++k) {
    int64_t code = 0;
    for (int i = 0; i < d; ++i) code += v[i] * place[i];
    tw.exp_code_[k] = (int32_t)code;
    if (tw.log_code_[code] != -1)
      throw std::runtime_error("generator power collision");
    tw.log_code_[code] = (int32_t)k;
    int64_t carry = v[d - 1];
    for (int i = d - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (carry != 0)
      for (int i = 0; i < d; ++i)
        v[i] = ((v[i] - carry * tw.modulus_[i]) % p + p) % p;
  }

  // Zech logs: zech_[j] = log(1 + g^j).
  tw.zech_.assign(tw.M_, -1);
  for (int64_t j = 0; j < tw.M_; ++j) {
    int64_t code = tw.exp_code_[j];
    int64_t c0 = code % p;
    int64_t sum = code - c0 + (c0 + 1) % p;
    tw.zech_[j] = sum == 0 ? -1 : tw.log_code_[sum];
  }

  // Prime subfield values by repeated addition of 1.
  tw.prime_val_.assign(tw.M_, -1);
  FieldElem acc = tw.one();
  for (int64_t m = 1; m < p; ++m) {
    tw.prime_val_[acc.lg] = (int32_t)m;
    acc = tw.add(acc, tw.one());
  }
  if (!acc.is_zero()) throw std::runtime_error("prime subfield mismatch");

  // Roots of unity.
  tw.rou_.resize(tw.M_);
  for (int64_t m = 0; m < tw.M_; ++m)
    tw.rou_[m] = std::polar(1.0, 2.0 * std::numbers::pi * (double)m / (double)tw.M_);
  tw.rou_p_.resize(p);
  for (int64_t m = 0; m < p; ++m)
    tw.rou_p_[m] = std::polar(1.0, 2.0 * std::numbers::pi * (double)m / (double)p);

  // z: smallest generator power inside E but outside F.
  if (z_override) {
    FieldElem z{*z_override};
    if (!tw.in_level(z, Level::E) || tw.in_level(z, Level::F) || z.is_zero())
      throw std::invalid_argument("z override must lie in E but not in F");
    tw.z_log_ = *z_override;
  } else {
    for (int64_t m = 1;; ++m) {
      FieldElem x{(int32_t)m};
      if (tw.in_level(x, Level::E) && !tw.in_level(x, Level::F)) {
        tw.z_log_ = (int32_t)m;
        break;
      }
    }
  }

  // psi_F by F index: exp(2 pi i Tr_{F/F_p}(x) / p).
  tw.psi_F_table_.resize(tw.q_);
  for (int64_t idx = 0; idx < tw.q_; ++idx) {
    FieldElem x = tw.level_elem(idx, Level::F);
    FieldElem t = tw.abs_trace_F(x);
    tw.psi_F_table_[idx] = tw.rou_p_[tw.prime_value(t)];
  }

  // psi_E by E index: psi_F((x - x^q) / (z - z^q)).
  FieldElem z = tw.z();
  FieldElem dz = tw.sub(z, tw.frob(z, 1));
  FieldElem dz_inv = tw.inv(dz);
  tw.psi_E_table_.resize(tw.Q_);
  for (int64_t idx = 0; idx < tw.Q_; ++idx) {
    FieldElem x = tw.level_elem(idx, Level::E);
    FieldElem w = tw.mul(tw.sub(x, tw.frob(x, 1)), dz_inv);
    if (!tw.in_level(w, Level::F))
      throw std::runtime_error("psi_E construction left F");
    tw.psi_E_table_[idx] = tw.psi_F_table_[tw.level_index(w, Level::F)];
  }
  return tw;
}

std::string Tower::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i == 1) os << (modulus_[i] != 1 ? "*x" : "x");
    if (i > 1) os << (modulus_[i] != 1 ? "*x^" : "x^") << i;
  }
  return os.str();
}

FieldElem Tower::from_log(int64_t lg) const {
  return {(int32_t)(((lg % M_) + M_) % M_)};
}

FieldElem Tower::add(FieldElem a, FieldElem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int64_t dd = a.lg - b.lg;
  if (dd < 0) dd += M_;
  int32_t t = zech_[dd];
  if (t < 0) return {};
  int64_t lg = b.lg + t;
  if (lg >= M_) lg -= M_;
  return {(int32_t)lg};
}

FieldElem Tower::neg(FieldElem a) const {
  if (a.is_zero()) return a;
  int64_t lg = a.lg + log_minus_one_;
  if (lg >= M_) lg -= M_;
  return {(int32_t)lg};
}

FieldElem Tower::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Tower::mul(FieldElem a, FieldElem b) const {
  if (a.is_zero() || b.is_zero()) return {};
  int64_t lg = (int64_t)a.lg + b.lg;
  if (lg >= M_) lg -= M_;
  return {(int32_t)lg};
}

FieldElem Tower::inv(FieldElem a) const {
  if (a.is_zero()) throw std::invalid_argument("inverse of zero");
  return {(int32_t)((M_ - a.lg) % M_)};
}

FieldElem Tower::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem Tower::pow(FieldElem a, int64_t e) const {
  if (a.is_zero()) {
    if (e <= 0) throw std::invalid_argument("0 to a nonpositive power");
    return {};
  }
  int64_t lg = (int64_t)((__int128)a.lg * e % M_);
  if (lg < 0) lg += M_;
  return {(int32_t)lg};
}

FieldElem Tower::frob(FieldElem a, int j) const {
  if (a.is_zero()) return a;
  int jj = ((j % (2 * n_)) + 2 * n_) % (2 * n_);
  int64_t mult = 1;
  for (int i = 0; i < jj; ++i) mult = mult * q_ % M_;
  return {(int32_t)((int64_t)a.lg * mult % M_)};
}

int64_t Tower::card(Level lv) const {
  switch (lv) {
    case Level::F: return q_;
    case Level::E: return Q_;
    default: return M_ + 1;
  }
}

int64_t Tower::stride(Level lv) const {
  switch (lv) {
    case Level::F: return stride_F_;
    case Level::E: return stride_E_;
    default: return 1;
  }
}

bool Tower::in_level(FieldElem a, Level lv) const {
  return a.is_zero() || a.lg % stride(lv) == 0;
}

int64_t Tower::level_index(FieldElem a, Level lv) const {
  if (a.is_zero()) return 0;
  int64_t s = stride(lv);
  if (a.lg % s != 0) throw std::invalid_argument("element outside level");
  return 1 + a.lg / s;
}

FieldElem Tower::level_elem(int64_t idx, Level lv) const {
  if (idx == 0) return {};
  return {(int32_t)((idx - 1) * stride(lv))};
}

std::vector<FieldElem> Tower::elements(Level lv) const {
  std::vector<FieldElem> out;
  int64_t c = card(lv);
  out.reserve(c);
  for (int64_t i = 0; i < c; ++i) out.push_back(level_elem(i, lv));
  return out;
}

int Tower::prime_value(FieldElem a) const {
  if (a.is_zero()) return 0;
  int32_t v = prime_val_[a.lg];
  if (v < 0) throw std::invalid_argument("element outside prime subfield");
  return v;
}

FieldElem Tower::abs_trace_F(FieldElem a) const {
  if (!in_level(a, Level::F)) throw std::invalid_argument("trace needs x in F");
  FieldElem t = zero();
  int64_t mult = 1;
  for (int i = 0; i < f_; ++i) {
    FieldElem ai = a.is_zero() ? a : FieldElem{(int32_t)((int64_t)a.lg * mult % M_)};
    t = add(t, ai);
    mult = mult * p_ % M_;
  }
  return t;
}

cplx Tower::psi_F(FieldElem x, int sign) const {
  cplx v = psi_F_table_[level_index(x, Level::F)];
  return sign >= 0 ? v : std::conj(v);
}

cplx Tower::psi_E(FieldElem x, int sign) const {
  cplx v = psi_E_table_[level_index(x, Level::E)];
  return sign >= 0 ? v : std::conj(v);
}

cplx Tower::root_of_unity(int64_t m) const {
  return rou_[((m % M_) + M_) % M_];
}

MultChar Tower::mult_char(int64_t k) const {
  return {((k % M_) + M_) % M_};
}

cplx Tower::theta(MultChar th, FieldElem x) const {
  if (x.is_zero()) throw std::invalid_argument("theta undefined at 0");
  int64_t k = ((th.k % M_) + M_) % M_;
  return rou_[k * x.lg % M_];
}

bool Tower::is_regular(MultChar th) const {
  return (int)orbit_exponents(th).size() == n_;
}

std::vector<int64_t> Tower::orbit_exponents(MultChar th) const {
  std::set<int64_t> orb;
  int64_t x = ((th.k % M_) + M_) % M_;
  while (!orb.count(x)) {
    orb.insert(x);
    x = x * (Q_ % M_) % M_;
  }
  return {orb.begin(), orb.end()};
}

}  // namespace asai
