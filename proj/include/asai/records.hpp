#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asai/gamma.hpp"

namespace asai {

/// Everything a run depends on; echoed into every output so results can be
/// traced back to their parameters.
struct RunConfig {
  int64_t p = 2;
  int f = 1;
  int n = 2;
  std::vector<int64_t> theta;  // orbit exponents to keep; empty = all
  std::optional<int32_t> z_override;
  double tol = 1e-8;
  int64_t budget = Tower::kDefaultBudget;
  uint64_t seed = 0;
  std::string format = "table";  // table | jsonl | csv
  std::string out;               // empty = stdout
};

std::string config_json(const RunConfig& cfg);

struct GammaRecord {
  int64_t q = 0;
  int n = 0;
  std::vector<int64_t> theta_orbit;
  int32_t z_log = -1;
  bool distinguished = false;
  int multiplicity = 0;
  double gamma_re = 0;
  double gamma_im = 0;
  double gamma_abs = 0;
  double coset_sum = 0;
  double route_a_vs_b_dev = 0;
  bool criteria_agreement = false;
};

/// Runs distinction plus both gamma routes for one orbit.
GammaRecord compute_gamma_record(Workspace& ws, const CuspidalRep& rep,
                                 double tol);

std::string fmt_g12(double v);
std::string record_jsonl(const GammaRecord& r);
std::string record_csv_header();
std::string record_csv(const GammaRecord& r);
std::string records_table(const std::vector<GammaRecord>& rs);

/// One line per record plus a leading config line; byte-stable across runs.
std::string render_records(const RunConfig& cfg,
                           const std::vector<GammaRecord>& rs);

}  // namespace asai
