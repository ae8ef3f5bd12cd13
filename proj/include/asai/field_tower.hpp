#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asai {

using cplx = std::complex<double>;

/**
 * Element of the top field K = F_{q^{2n}}, stored as the exponent of a fixed
 * primitive generator g; zero is lg == -1.  The representation is canonical
 * (exponents are kept reduced mod |K^x|), so equality is bitwise and the
 * ordering "zero first, then ascending exponent" is total.  All arithmetic
 * lives on Tower, which owns the log tables.
 */
struct FieldElem {
  int32_t lg = -1;

  bool is_zero() const { return lg < 0; }
  friend bool operator==(FieldElem a, FieldElem b) { return a.lg == b.lg; }
  friend std::strong_ordering operator<=>(FieldElem a, FieldElem b) {
    return a.lg <=> b.lg;
  }
};

/// Multiplicative character of K^x: g^j -> exp(2 pi i * k j / |K^x|).
struct MultChar {
  int64_t k = 0;
};

/// The three fields of the tower F_p <= F <= E <= K with F = F_q, E = F_{q^2},
/// K = F_{q^{2n}}.  Subfields are identified inside K by exponent stride.
enum class Level { F, E, K };

/**
 * Tower of finite fields built from one Zech-log table for K.
 *
 * The modulus is the lexicographically smallest primitive polynomial of
 * degree 2nf over F_p, coefficients compared low degree first with values
 * 0..p-1.  g is the class of x.  The additive characters are
 *   psi_F(x) = exp(2 pi i Tr_{F/F_p}(x) / p)
 *   psi_E(x) = psi_F((x - x^q) / (z - z^q))
 * with z the smallest generator power lying in E but not in F (overridable).
 * psi_E is nontrivial, trivial on F (exactly F when f = 1; in general its
 * kernel has q^2/p elements) and satisfies psi_E(x^q) = psi_E(x)^{-1}.
 */
class Tower {
 public:
  static constexpr int64_t kDefaultBudget = 10'000'000;

  /// Builds the tower for q = p^f and GL_n; n must be 2 or 3, p prime.
  /// Throws std::invalid_argument on bad parameters or when q^{2n} exceeds
  /// the budget.
  static Tower build(int64_t p, int f, int n,
                     int64_t budget = kDefaultBudget,
                     std::optional<int32_t> z_override = std::nullopt);

  int64_t p() const { return p_; }
  int f() const { return f_; }
  int n() const { return n_; }
  int64_t q() const { return q_; }
  int64_t Q() const { return Q_; }  // |E| = q^2
  int64_t M() const { return M_; }  // |K^x| = q^{2n} - 1
  int degree() const { return d_; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  FieldElem z() const { return {z_log_}; }
  int32_t z_log() const { return z_log_; }

  FieldElem zero() const { return {}; }
  FieldElem one() const { return {0}; }
  FieldElem gen() const { return {1}; }
  FieldElem from_log(int64_t lg) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, int64_t e) const;
  /// x -> x^{q^j}; j may be any integer (reduced mod 2n).
  FieldElem frob(FieldElem a, int j = 1) const;

  int64_t card(Level lv) const;  // q, q^2, q^{2n}
  bool in_level(FieldElem a, Level lv) const;
  /// Index in the canonical element order of the level: 0 for zero, then
  /// ascending exponent.
  int64_t level_index(FieldElem a, Level lv) const;
  FieldElem level_elem(int64_t idx, Level lv) const;
  std::vector<FieldElem> elements(Level lv) const;

  /// Value 0..p-1 of an element of the prime subfield.
  int prime_value(FieldElem a) const;
  /// Tr_{F/F_p}(x) for x in F, as an element of F_p.
  FieldElem abs_trace_F(FieldElem a) const;

  cplx psi_F(FieldElem x, int sign = +1) const;  // requires x in F
  cplx psi_E(FieldElem x, int sign = +1) const;  // requires x in E
  cplx root_of_unity(int64_t m) const;           // exp(2 pi i m / M)

  MultChar mult_char(int64_t k) const;           // exponent reduced mod M
  cplx theta(MultChar th, FieldElem x) const;    // throws at x = 0
  bool is_regular(MultChar th) const;
  /// Frobenius orbit {k Q^i mod M}, sorted ascending.
  std::vector<int64_t> orbit_exponents(MultChar th) const;

 private:
  Tower() = default;

  int64_t p_ = 0, q_ = 0, Q_ = 0, M_ = 0;
  int f_ = 0, n_ = 0, d_ = 0;
  std::vector<int> modulus_;
  int32_t z_log_ = -1;
  int64_t stride_F_ = 0, stride_E_ = 0;
  int32_t log_minus_one_ = 0;

  std::vector<int32_t> zech_;       // zech_[j] = log(1 + g^j), -1 when zero
  std::vector<int32_t> exp_code_;   // power -> packed coefficient vector
  std::vector<int32_t> log_code_;   // packed coefficient vector -> power
  std::vector<int32_t> prime_val_;  // log -> 0..p-1 on the prime subfield
  std::vector<cplx> rou_;           // exp(2 pi i m / M)
  std::vector<cplx> rou_p_;         // exp(2 pi i m / p)
  std::vector<cplx> psi_F_table_;   // by F level index
  std::vector<cplx> psi_E_table_;   // by E level index

  int64_t stride(Level lv) const;
};

}  // namespace asai
