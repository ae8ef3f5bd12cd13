#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "asai/field_tower.hpp"

namespace asai {

constexpr int kMaxN = 3;

/// Square matrix of size n <= 3 with entries anywhere in K; the working level
/// is a constraint on the entries, not part of the value.
struct Mat {
  int n = 0;
  std::array<FieldElem, kMaxN * kMaxN> a{};

  FieldElem& at(int i, int j) { return a[i * n + j]; }
  FieldElem at(int i, int j) const { return a[i * n + j]; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

/// Row-major lexicographic order induced by the element order.
bool lex_less(const Mat& a, const Mat& b);

using MatKey = std::array<uint16_t, kMaxN * kMaxN + 1>;
MatKey mat_key(const Mat& m);
struct MatKeyHash {
  size_t operator()(const MatKey& k) const noexcept;
};

Mat identity_mat(int n);
Mat omega_mat(int n);  // ones on the antidiagonal
Mat scalar_mat(int n, FieldElem z);
Mat mat_mul(const Tower& tw, const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& m);
FieldElem mat_det(const Tower& tw, const Mat& m);
Mat mat_inverse(const Tower& tw, const Mat& m);  // throws on singular
Mat mat_frob(const Tower& tw, const Mat& m, int j = 1);
/// tau(g) = transpose(frob(g, 1))^{-1}; an automorphism of GL_n(E).
Mat tau_map(const Tower& tw, const Mat& g);
/// omega * transpose(g)^{-1}; an involution.
Mat tilde_arg(const Tower& tw, const Mat& g);
int mat_rank(const Tower& tw, const Mat& m);
/// Monic characteristic polynomial det(xI - g), coefficients c0..cn.
std::vector<FieldElem> char_poly(const Tower& tw, const Mat& m);
bool is_upper_unipotent(const Mat& m);

enum class AddChar { PsiF, PsiE };
/// psi_N(u) = character(sum of the superdiagonal); throws unless u is upper
/// unipotent with superdiagonal entries inside the character's level.
cplx psi_N(const Tower& tw, const Mat& u, AddChar ch, int sign = +1);

/// |GL_n| over a field with s elements.
int64_t gl_order(int64_t s, int n);

using MatVisitor = std::function<void(const Mat&)>;

/// Invertible n x n matrices over the level, in row-lex order.  Throws when
/// the group order exceeds the budget.
void for_each_gl(const Tower& tw, int n, Level lv, int64_t budget,
                 const MatVisitor& fn);
/// Upper unipotent matrices over the level, in row-lex order.
void for_each_unipotent(const Tower& tw, int n, Level lv, const MatVisitor& fn);
std::vector<Mat> unipotent_list(const Tower& tw, int n, Level lv);
/// Subgroup with last row e_n, in row-lex order.
void for_each_mirabolic(const Tower& tw, int n, Level lv, int64_t budget,
                        const MatVisitor& fn);
/// Compositions of n with at least two parts, in deterministic order.
std::vector<std::vector<int>> proper_compositions(int n);
/// Unipotent radical of the standard parabolic given by the composition.
void for_each_radical(const Tower& tw, const std::vector<int>& comp, Level lv,
                      const MatVisitor& fn);

/// Lexicographically smallest element of {u g : u upper unipotent over lv}.
Mat nf_canonicalize(const Tower& tw, const Mat& g, Level lv);

struct CosetTable {
  std::vector<Mat> reps;  // canonical representatives, ascending
};
/// N_n(lv)\GL_n(lv) coset representatives.
CosetTable coset_reps(const Tower& tw, int n, Level lv, int64_t budget);

struct ClassData {
  enum Kind { CentralUnipotent = 0, RegularElliptic = 1, Other = 2 };
  Kind kind = Other;
  FieldElem z;      // central part, CentralUnipotent only
  int blocks = 0;   // Jordan block count, CentralUnipotent only
  FieldElem alpha;  // smallest-log eigenvalue in K, RegularElliptic only
};

/// Conjugacy-invariant key: (kind, z log | min orbit log, blocks).
struct ClassKey {
  uint8_t kind = 2;
  int32_t a = -1;
  uint8_t b = 0;
  auto operator<=>(const ClassKey&) const = default;
};

/// Classifies g in GL_n(E) by characteristic polynomial shape; memoizes the
/// polynomial-only part.  Not thread safe.
class Classifier {
 public:
  explicit Classifier(const Tower& tw) : tw_(&tw) {}
  ClassData classify(const Mat& g);  // throws on singular input
  ClassKey key(const ClassData& cd) const;
  ClassKey key(const Mat& g) { return key(classify(g)); }
  const Tower& tower() const { return *tw_; }

 private:
  struct Pattern {
    ClassData::Kind kind;
    FieldElem x;  // z for CentralUnipotent, min-log alpha for RegularElliptic
  };
  const Tower* tw_;
  std::unordered_map<uint64_t, Pattern> memo_;
  Pattern pattern(const std::vector<FieldElem>& cp);
};

struct ClassHistogram {
  std::map<ClassKey, int64_t> counts;
  std::map<ClassKey, Mat> sample;  // first representative seen per key
  int64_t total = 0;
  void insert(const ClassKey& k, const Mat& g);
};

ClassHistogram histogram_over(Classifier& cls,
                              const std::function<void(const MatVisitor&)>& walk);

}  // namespace asai
