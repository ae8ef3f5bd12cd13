#include "asai/matgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace asai {

bool lex_less(const Mat& a, const Mat& b) {
  for (int i = 0; i < a.n * a.n; ++i) {
    if (a.a[i] != b.a[i]) return a.a[i] < b.a[i];
  }
  return false;
}

MatKey mat_key(const Mat& m) {
  MatKey k{};
  k[0] = (uint16_t)m.n;
  for (int i = 0; i < m.n * m.n; ++i) k[i + 1] = (uint16_t)(m.a[i].lg + 1);
  return k;
}

size_t MatKeyHash::operator()(const MatKey& k) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (uint16_t v : k) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return (size_t)h;
}

Mat identity_mat(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = {0};
  return m;
}

Mat omega_mat(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = {0};
  return m;
}

Mat scalar_mat(int n, FieldElem z) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = z;
  return m;
}

Mat mat_mul(const Tower& tw, const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      FieldElem s;
      for (int k = 0; k < x.n; ++k) s = tw.add(s, tw.mul(x.at(i, k), y.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

Mat mat_transpose(const Mat& m) {
  Mat r;
  r.n = m.n;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r.at(i, j) = m.at(j, i);
  return r;
}

FieldElem mat_det(const Tower& tw, const Mat& m) {
  if (m.n == 2)
    return tw.sub(tw.mul(m.at(0, 0), m.at(1, 1)), tw.mul(m.at(0, 1), m.at(1, 0)));
  FieldElem d;
  for (int j = 0; j < 3; ++j) {
    FieldElem minor = tw.sub(
        tw.mul(m.at(1, (j + 1) % 3), m.at(2, (j + 2) % 3)),
        tw.mul(m.at(1, (j + 2) % 3), m.at(2, (j + 1) % 3)));
    d = tw.add(d, tw.mul(m.at(0, j), minor));
  }
  return d;
}

Mat mat_inverse(const Tower& tw, const Mat& m) {
  FieldElem det = mat_det(tw, m);
  if (det.is_zero()) throw std::invalid_argument("singular matrix");
  FieldElem di = tw.inv(det);
  Mat r;
  r.n = m.n;
  if (m.n == 2) {
    r.at(0, 0) = tw.mul(m.at(1, 1), di);
    r.at(0, 1) = tw.neg(tw.mul(m.at(0, 1), di));
    r.at(1, 0) = tw.neg(tw.mul(m.at(1, 0), di));
    r.at(1, 1) = tw.mul(m.at(0, 0), di);
    return r;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor expansion; adjugate transposes (i, j)
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      FieldElem cof = tw.sub(tw.mul(m.at(r0, c0), m.at(r1, c1)),
                             tw.mul(m.at(r0, c1), m.at(r1, c0)));
      r.at(j, i) = tw.mul(cof, di);
    }
  return r;
}

Mat mat_frob(const Tower& tw, const Mat& m, int j) {
  Mat r;
  r.n = m.n;
  for (int i = 0; i < m.n * m.n; ++i) r.a[i] = tw.frob(m.a[i], j);
  return r;
}

Mat tau_map(const Tower& tw, const Mat& g) {
  return mat_inverse(tw, mat_transpose(mat_frob(tw, g, 1)));
}

Mat tilde_arg(const Tower& tw, const Mat& g) {
  return mat_mul(tw, omega_mat(g.n), mat_inverse(tw, mat_transpose(g)));
}

int mat_rank(const Tower& tw, const Mat& m) {
  Mat w = m;
  int rank = 0;
  for (int col = 0; col < w.n && rank < w.n; ++col) {
    int piv = -1;
    for (int i = rank; i < w.n; ++i)
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < w.n; ++j) std::swap(w.at(piv, j), w.at(rank, j));
    FieldElem pi = tw.inv(w.at(rank, col));
    for (int i = rank + 1; i < w.n; ++i) {
      FieldElem factor = tw.mul(w.at(i, col), pi);
      for (int j = col; j < w.n; ++j)
        w.at(i, j) = tw.sub(w.at(i, j), tw.mul(factor, w.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::vector<FieldElem> char_poly(const Tower& tw, const Mat& m) {
  std::vector<FieldElem> c(m.n + 1);
  c[m.n] = tw.one();
  if (m.n == 2) {
    c[1] = tw.neg(tw.add(m.at(0, 0), m.at(1, 1)));
    c[0] = mat_det(tw, m);
    return c;
  }
  FieldElem tr = tw.add(tw.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
  FieldElem s2;
  for (int i = 0; i < 3; ++i) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    s2 = tw.add(s2, tw.sub(tw.mul(m.at(r0, r0), m.at(r1, r1)),
                           tw.mul(m.at(r0, r1), m.at(r1, r0))));
  }
  c[2] = tw.neg(tr);
  c[1] = s2;
  c[0] = tw.neg(mat_det(tw, m));
  return c;
}

bool is_upper_unipotent(const Mat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j <= i; ++j) {
      FieldElem want = i == j ? FieldElem{0} : FieldElem{};
      if (m.at(i, j) != want) return false;
    }
  return true;
}

cplx psi_N(const Tower& tw, const Mat& u, AddChar ch, int sign) {
  if (!is_upper_unipotent(u)) throw std::invalid_argument("psi_N needs unipotent");
  FieldElem s;
  for (int i = 0; i + 1 < u.n; ++i) s = tw.add(s, u.at(i, i + 1));
  return ch == AddChar::PsiF ? tw.psi_F(s, sign) : tw.psi_E(s, sign);
}

int64_t gl_order(int64_t s, int n) {
  int64_t sn = 1;
  for (int i = 0; i < n; ++i) sn *= s;
  int64_t ord = 1, pw = 1;
  for (int i = 0; i < n; ++i) {
    ord *= sn - pw;
    pw *= s;
  }
  return ord;
}

namespace {

// Rows of length n over the level, ascending in the element order.
std::vector<std::vector<FieldElem>> level_rows(const Tower& tw, int n, Level lv) {
  int64_t s = tw.card(lv);
  int64_t count = 1;
  for (int i = 0; i < n; ++i) count *= s;
  std::vector<std::vector<FieldElem>> rows;
  rows.reserve(count);
  std::vector<int64_t> idx(n, 0);
  for (;;) {
    std::vector<FieldElem> row(n);
    for (int i = 0; i < n; ++i) row[i] = tw.level_elem(idx[i], lv);
    rows.push_back(row);
    int i = n - 1;
    while (i >= 0 && idx[i] == s - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return rows;
}

// Reduces row against the echelon basis; returns false when dependent.
bool independent(const Tower& tw, std::vector<std::vector<FieldElem>>& basis,
                 std::vector<FieldElem> row, bool commit) {
  for (const auto& b : basis) {
    int piv = -1;
    for (int j = 0; j < (int)b.size(); ++j)
      if (!b[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0 || row[piv].is_zero()) continue;
    FieldElem factor = tw.div(row[piv], b[piv]);
    for (int j = 0; j < (int)row.size(); ++j)
      row[j] = tw.sub(row[j], tw.mul(factor, b[j]));
  }
  bool nonzero = false;
  for (const auto& x : row) nonzero |= !x.is_zero();
  if (nonzero && commit) basis.push_back(row);
  return nonzero;
}

}  // namespace

void for_each_gl(const Tower& tw, int n, Level lv, int64_t budget,
                 const MatVisitor& fn) {
  if (n != 2 && n != 3) throw std::invalid_argument("n must be 2 or 3");
  if (gl_order(tw.card(lv), n) > budget)
    throw std::invalid_argument("GL enumeration exceeds budget");
  auto rows = level_rows(tw, n, lv);
  Mat m;
  m.n = n;
  std::vector<std::vector<FieldElem>> basis;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      fn(m);
      return;
    }
    for (const auto& row : rows) {
      if (!independent(tw, basis, row, true)) continue;
      for (int j = 0; j < n; ++j) m.at(depth, j) = row[j];
      self(self, depth + 1);
      basis.pop_back();
    }
  };
  rec(rec, 0);
}

void for_each_unipotent(const Tower& tw, int n, Level lv, const MatVisitor& fn) {
  std::vector<std::pair<int, int>> free_pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) free_pos.push_back({i, j});
  int64_t s = tw.card(lv);
  Mat m = identity_mat(n);
  std::vector<int64_t> idx(free_pos.size(), 0);
  for (;;) {
    for (size_t t = 0; t < free_pos.size(); ++t)
      m.at(free_pos[t].first, free_pos[t].second) = tw.level_elem(idx[t], lv);
    fn(m);
    int i = (int)free_pos.size() - 1;
    while (i >= 0 && idx[i] == s - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
}

std::vector<Mat> unipotent_list(const Tower& tw, int n, Level lv) {
  std::vector<Mat> out;
  for_each_unipotent(tw, n, lv, [&](const Mat& u) { out.push_back(u); });
  return out;
}

void for_each_mirabolic(const Tower& tw, int n, Level lv, int64_t budget,
                        const MatVisitor& fn) {
  for_each_gl(tw, n, lv, budget, [&](const Mat& g) {
    for (int j = 0; j < n; ++j) {
      FieldElem want = j == n - 1 ? FieldElem{0} : FieldElem{};
      if (g.at(n - 1, j) != want) return;
    }
    fn(g);
  });
}

std::vector<std::vector<int>> proper_compositions(int n) {
  std::vector<std::vector<int>> out;
  auto rec = [&](auto&& self, std::vector<int>& cur, int rest) -> void {
    if (rest == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, cur, rest - part);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(rec, cur, n);
  return out;
}

void for_each_radical(const Tower& tw, const std::vector<int>& comp, Level lv,
                      const MatVisitor& fn) {
  int n = 0;
  for (int part : comp) n += part;
  // free positions: above the diagonal blocks
  std::vector<std::pair<int, int>> free_pos;
  std::vector<int> block_of(n);
  int pos = 0, b = 0;
  for (int part : comp) {
    for (int t = 0; t < part; ++t) block_of[pos++] = b;
    ++b;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block_of[i] != block_of[j]) free_pos.push_back({i, j});
  int64_t s = tw.card(lv);
  Mat m = identity_mat(n);
  std::vector<int64_t> idx(free_pos.size(), 0);
  for (;;) {
    for (size_t t = 0; t < free_pos.size(); ++t)
      m.at(free_pos[t].first, free_pos[t].second) = tw.level_elem(idx[t], lv);
    fn(m);
    int i = (int)free_pos.size() - 1;
    while (i >= 0 && idx[i] == s - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
}

Mat nf_canonicalize(const Tower& tw, const Mat& g, Level lv) {
  Mat best = g;
  for_each_unipotent(tw, g.n, lv, [&](const Mat& u) {
    Mat c = mat_mul(tw, u, g);
    if (lex_less(c, best)) best = c;
  });
  return best;
}

CosetTable coset_reps(const Tower& tw, int n, Level lv, int64_t budget) {
  CosetTable tab;
  for_each_gl(tw, n, lv, budget, [&](const Mat& g) {
    if (nf_canonicalize(tw, g, lv) == g) tab.reps.push_back(g);
  });
  return tab;
}

Classifier::Pattern Classifier::pattern(const std::vector<FieldElem>& cp) {
  const Tower& tw = *tw_;
  int n = (int)cp.size() - 1;
  uint64_t key = (uint64_t)n;
  for (int i = 0; i < n; ++i) key = key * 8192u + (uint64_t)(cp[i].lg + 1);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Pattern pat{ClassData::Other, {}};
  // (x - z)^n for some z in E?
  bool found = false;
  for (int64_t zi = 1; zi < tw.card(Level::E) && !found; ++zi) {
    FieldElem z = tw.level_elem(zi, Level::E);
    // expand (x - z)^n
    std::vector<FieldElem> want{tw.neg(z), tw.one()};
    for (int rep = 1; rep < n; ++rep) {
      std::vector<FieldElem> next(want.size() + 1);
      for (size_t i = 0; i < want.size(); ++i) {
        next[i + 1] = tw.add(next[i + 1], want[i]);
        next[i] = tw.add(next[i], tw.mul(want[i], tw.neg(z)));
      }
      want = next;
    }
    bool eq = true;
    for (int i = 0; i <= n && eq; ++i) eq = want[i] == cp[i];
    if (eq) {
      pat = {ClassData::CentralUnipotent, z};
      found = true;
    }
  }
  if (!found) {
    // any root in E kills ellipticity (degree <= 3: no E-root <=> irreducible)
    bool has_root = false;
    for (int64_t zi = 0; zi < tw.card(Level::E) && !has_root; ++zi) {
      FieldElem x = tw.level_elem(zi, Level::E);
      FieldElem v = cp[n];
      for (int i = n - 1; i >= 0; --i) v = tw.add(tw.mul(v, x), cp[i]);
      has_root = v.is_zero();
    }
    if (!has_root) {
      // irreducible over E; roots live in K, take the smallest exponent
      FieldElem alpha;
      for (int64_t lg = 0; lg < tw.M(); ++lg) {
        FieldElem x{(int32_t)lg};
        FieldElem v = cp[n];
        for (int i = n - 1; i >= 0; --i) v = tw.add(tw.mul(v, x), cp[i]);
        if (v.is_zero()) {
          alpha = x;
          break;
        }
      }
      if (alpha.is_zero()) throw std::runtime_error("no eigenvalue in K");
      pat = {ClassData::RegularElliptic, alpha};
    }
  }
  memo_.emplace(key, pat);
  return pat;
}

ClassData Classifier::classify(const Mat& g) {
  const Tower& tw = *tw_;
  if (mat_det(tw, g).is_zero())
    throw std::invalid_argument("class data needs invertible input");
  Pattern pat = pattern(char_poly(tw, g));
  ClassData cd;
  cd.kind = pat.kind;
  if (pat.kind == ClassData::CentralUnipotent) {
    cd.z = pat.x;
    Mat shifted = g;
    FieldElem zi = tw.inv(pat.x);
    for (int i = 0; i < g.n * g.n; ++i) shifted.a[i] = tw.mul(g.a[i], zi);
    for (int i = 0; i < g.n; ++i)
      shifted.at(i, i) = tw.sub(shifted.at(i, i), tw.one());
    cd.blocks = g.n - mat_rank(tw, shifted);
  } else if (pat.kind == ClassData::RegularElliptic) {
    cd.alpha = pat.x;
  }
  return cd;
}

ClassKey Classifier::key(const ClassData& cd) const {
  const Tower& tw = *tw_;
  ClassKey k;
  k.kind = (uint8_t)cd.kind;
  if (cd.kind == ClassData::CentralUnipotent) {
    k.a = cd.z.lg;
    k.b = (uint8_t)cd.blocks;
  } else if (cd.kind == ClassData::RegularElliptic) {
    int32_t best = cd.alpha.lg;
    for (int i = 1; i < tw.n(); ++i) {
      int32_t cand = tw.frob(cd.alpha, 2 * i).lg;
      best = std::min(best, cand);
    }
    k.a = best;
  }
  return k;
}

void ClassHistogram::insert(const ClassKey& k, const Mat& g) {
  ++counts[k];
  ++total;
  sample.emplace(k, g);
}

ClassHistogram histogram_over(Classifier& cls,
                              const std::function<void(const MatVisitor&)>& walk) {
  ClassHistogram h;
  walk([&](const Mat& g) { h.insert(cls.key(g), g); });
  return h;
}

}  // namespace asai
