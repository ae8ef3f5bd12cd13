#include "asai/records.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace asai {

namespace {

std::string join64(const std::vector<int64_t>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

const char* b2s(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string fmt_g12(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string config_json(const RunConfig& cfg) {
  std::ostringstream os;
  os << "{\"p\":" << cfg.p << ",\"f\":" << cfg.f << ",\"n\":" << cfg.n
     << ",\"theta\":[" << join64(cfg.theta, ",") << "]"
     << ",\"z\":" << (cfg.z_override ? std::to_string(*cfg.z_override) : "null")
     << ",\"tol\":" << fmt_g12(cfg.tol) << ",\"budget\":" << cfg.budget
     << ",\"seed\":" << cfg.seed << ",\"format\":\"" << cfg.format << "\"}";
  return os.str();
}

GammaRecord compute_gamma_record(Workspace& ws, const CuspidalRep& rep,
                                 double tol) {
  const Tower& tw = ws.tower();
  DistinctionReport d = distinction(ws, rep);
  cplx gb = gamma_bessel(ws, rep, +1);
  GammaFE fe = gamma_fe(ws, rep, !d.distinguished, tol);

  if (std::abs(d.coset_sum.imag()) > 1e-6)
    throw std::runtime_error("coset sum is not real");

  GammaRecord r;
  r.q = tw.q();
  r.n = tw.n();
  r.theta_orbit = rep.orbit;
  r.z_log = tw.z_log();
  r.distinguished = d.distinguished;
  r.multiplicity = d.multiplicity;
  r.gamma_re = gb.real();
  r.gamma_im = gb.imag();
  r.gamma_abs = std::abs(gb);
  r.coset_sum = d.coset_sum.real();
  r.route_a_vs_b_dev = std::abs(gb - fe.gamma);
  r.criteria_agreement = true;  // distinction throws on disagreement
  return r;
}

std::string record_jsonl(const GammaRecord& r) {
  std::ostringstream os;
  os << "{\"q\":" << r.q << ",\"n\":" << r.n << ",\"theta_orbit\":["
     << join64(r.theta_orbit, ",") << "],\"z_log\":" << r.z_log
     << ",\"distinguished\":" << b2s(r.distinguished)
     << ",\"multiplicity\":" << r.multiplicity
     << ",\"gamma_re\":" << fmt_g12(r.gamma_re)
     << ",\"gamma_im\":" << fmt_g12(r.gamma_im)
     << ",\"gamma_abs\":" << fmt_g12(r.gamma_abs)
     << ",\"coset_sum\":" << fmt_g12(r.coset_sum)
     << ",\"route_a_vs_b_dev\":" << fmt_g12(r.route_a_vs_b_dev)
     << ",\"criteria_agreement\":" << b2s(r.criteria_agreement) << "}";
  return os.str();
}

std::string record_csv_header() {
  return "q,n,theta_orbit,z_log,distinguished,multiplicity,gamma_re,gamma_im,"
         "gamma_abs,coset_sum,route_a_vs_b_dev,criteria_agreement";
}

std::string record_csv(const GammaRecord& r) {
  std::ostringstream os;
  os << r.q << ',' << r.n << ',' << join64(r.theta_orbit, ";") << ','
     << r.z_log << ',' << b2s(r.distinguished) << ',' << r.multiplicity << ','
     << fmt_g12(r.gamma_re) << ',' << fmt_g12(r.gamma_im) << ','
     << fmt_g12(r.gamma_abs) << ',' << fmt_g12(r.coset_sum) << ','
     << fmt_g12(r.route_a_vs_b_dev) << ',' << b2s(r.criteria_agreement);
  return os.str();
}

std::string records_table(const std::vector<GammaRecord>& rs) {
  std::ostringstream os;
  os << "  orbit                 dist mult  gamma                      |gamma|"
        "        coset_sum  route_dev\n";
  for (const GammaRecord& r : rs) {
    char buf[160];
    std::string orbit = "{" + join64(r.theta_orbit, ",") + "}";
    std::string gm = fmt_g12(r.gamma_re) + (r.gamma_im >= 0 ? "+" : "") +
                     fmt_g12(r.gamma_im) + "i";
    std::snprintf(buf, sizeof buf, "  %-21s %-4s %4d  %-26s %-13s %9s  %.3g\n",
                  orbit.c_str(), r.distinguished ? "yes" : "no",
                  r.multiplicity, gm.c_str(), fmt_g12(r.gamma_abs).c_str(),
                  fmt_g12(r.coset_sum).c_str(), r.route_a_vs_b_dev);
    os << buf;
  }
  return os.str();
}

std::string render_records(const RunConfig& cfg,
                           const std::vector<GammaRecord>& rs) {
  std::ostringstream os;
  if (cfg.format == "jsonl") {
    os << "{\"config\":" << config_json(cfg) << "}\n";
    for (const GammaRecord& r : rs) os << record_jsonl(r) << "\n";
  } else if (cfg.format == "csv") {
    os << "# config " << config_json(cfg) << "\n"
       << record_csv_header() << "\n";
    for (const GammaRecord& r : rs) os << record_csv(r) << "\n";
  } else {
    os << "config " << config_json(cfg) << "\n" << records_table(rs);
  }
  return os.str();
}

}  // namespace asai
