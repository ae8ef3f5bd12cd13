#include "asai/cuspidal.hpp"

#include <cmath>
#include <stdexcept>

namespace asai {

CuspidalRep new_cuspidal(const Tower& tw, int64_t k) {
  MultChar th = tw.mult_char(k);
  if (!tw.is_regular(th))
    throw std::invalid_argument("character is not regular");
  CuspidalRep rep;
  rep.tower = &tw;
  rep.n = tw.n();
  rep.Q = tw.Q();
  rep.orbit = tw.orbit_exponents(th);
  rep.theta = {rep.orbit.front()};
  rep.dim = 1;
  int64_t pw = 1;
  for (int i = 1; i < rep.n; ++i) {
    pw *= rep.Q;
    rep.dim *= pw - 1;
  }
  return rep;
}

std::vector<CuspidalRep> list_cuspidal(const Tower& tw) {
  std::vector<CuspidalRep> out;
  for (int64_t k = 1; k < tw.M(); ++k) {
    MultChar th = tw.mult_char(k);
    if (!tw.is_regular(th)) continue;
    if (tw.orbit_exponents(th).front() != k) continue;
    out.push_back(new_cuspidal(tw, k));
  }
  return out;
}

CuspidalRep contragredient(const CuspidalRep& rep) {
  return new_cuspidal(*rep.tower, rep.tower->M() - rep.theta.k);
}

cplx character_value(const CuspidalRep& rep, const ClassData& cd) {
  const Tower& tw = *rep.tower;
  double sign = rep.n % 2 == 0 ? -1.0 : 1.0;
  switch (cd.kind) {
    case ClassData::CentralUnipotent: {
      double scale = 1.0;
      double pw = 1.0;
      for (int i = 1; i < cd.blocks; ++i) {
        pw *= (double)rep.Q;
        scale *= 1.0 - pw;
      }
      return sign * scale * tw.theta(rep.theta, cd.z);
    }
    case ClassData::RegularElliptic: {
      cplx s = 0.0;
      for (int i = 0; i < rep.n; ++i)
        s += tw.theta(rep.theta, tw.frob(cd.alpha, 2 * i));
      return sign * s;
    }
    default:
      return 0.0;
  }
}

cplx character_value(const CuspidalRep& rep, Classifier& cls, const Mat& g) {
  return character_value(rep, cls.classify(g));
}

cplx character_value(const CuspidalRep& rep, const ClassKey& k) {
  ClassData cd;
  cd.kind = (ClassData::Kind)k.kind;
  if (cd.kind == ClassData::CentralUnipotent) {
    cd.z = {k.a};
    cd.blocks = k.b;
  } else if (cd.kind == ClassData::RegularElliptic) {
    cd.alpha = {k.a};
  }
  return character_value(rep, cd);
}

cplx average_over(const CuspidalRep& rep, const ClassHistogram& hist) {
  cplx s = 0.0;
  for (const auto& [key, count] : hist.counts)
    s += (double)count * character_value(rep, key);
  return s / (double)hist.total;
}

int integer_average(const CuspidalRep& rep, const ClassHistogram& hist,
                    double tol) {
  cplx v = average_over(rep, hist);
  double r = std::round(v.real());
  if (std::abs(v.imag()) > tol || std::abs(v.real() - r) > tol || r < 0)
    throw std::runtime_error("average is not a nonnegative integer");
  return (int)r;
}

double norm_over(const CuspidalRep& rep, const ClassHistogram& hist) {
  double s = 0.0;
  for (const auto& [key, count] : hist.counts)
    s += (double)count * std::norm(character_value(rep, key));
  return s / (double)hist.total;
}

cplx inner_product(const CuspidalRep& a, const CuspidalRep& b,
                   const ClassHistogram& hist) {
  cplx s = 0.0;
  for (const auto& [key, count] : hist.counts)
    s += (double)count * character_value(a, key) *
         std::conj(character_value(b, key));
  return s / (double)hist.total;
}

}  // namespace asai
