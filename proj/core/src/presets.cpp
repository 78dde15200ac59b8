#include "exgraph/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace exg {

std::vector<PresetRow> preset_eval(double n, double d, int s, int t, double eps1,
                                   double eps2) {
  if (n <= 0 || d <= 0 || eps1 <= 0 || eps2 <= 0 || s < 2 || t < s)
    throw std::domain_error("preset_eval: parameters out of domain");
  double eta = std::pow(d, static_cast<double>(s) / (2.0 * (s - 1)));
  double eta_sq = eta * eta;
  if (eps2 * eta_sq >= 15.0 * n)
    throw std::domain_error("preset_eval: eps2 * eta^2 must stay below 15n");
  double m = std::log2(15.0 * n / (eps2 * eta_sq));

  std::vector<PresetRow> rows;
  auto push = [&](const std::string& name, double value) {
    bool vac = !(value >= 1.0 && value <= n) || std::isnan(value);
    rows.push_back({name, value, vac});
  };
  auto pw = [](double base, double e) { return std::pow(base, e); };

  rows.push_back({"eta", eta, false});
  rows.push_back({"m", m, false});
  push("D_subdivision", std::max(pw(m, 19) * eta_sq / 1e20, eps2 * eta_sq / 1e20));
  push("D_adjuster", eta_sq * pw(m, 20) / (1e10 * t));
  push("ell_min_subdivision", pw(m, 10));
  push("dense_threshold", pw(n, static_cast<double>(s - 1) / s));
  push("sparse_threshold", pw(std::log2(n), 200));

  auto plog = [](double x, double e) {
    return x > 1 ? std::pow(std::log2(x), e) : std::nan("");
  };
  push("interval1_lo", 4.0 / eps1 * plog(15.0 * n / (eps2 * eta_sq), 3));
  push("interval1_hi", eta_sq / pw(288.0 * pw(t, 1.0 / s), static_cast<double>(s) / (s - 1)));
  push("interval2_lo", 300.0 * plog(n / eta_sq, 8));
  push("interval2_hi", eta_sq / 100.0 * plog(n / eta_sq, 12));
  push("interval3_lo", plog(n, 7));
  push("interval3_hi", n / plog(n, 12));
  return rows;
}

} // namespace exg
