#ifndef EXGRAPH_PRESETS_HPP
#define EXGRAPH_PRESETS_HPP

#include <string>
#include <vector>

namespace exg {

/// One evaluated quantity from the parameter calculus. `vacuous` marks
/// values that cannot matter at the given scale (above n or below 1).
struct PresetRow {
  std::string name;
  double value = 0;
  bool vacuous = false;
};

/// Evaluates the derived quantities eta, m, the two D variants, the regime
/// thresholds and the three predicted interval endpoints for the given
/// parameters. Purely informational; the c coefficient in the first D
/// variant is taken as 1.
std::vector<PresetRow> preset_eval(double n, double d, int s, int t, double eps1, double eps2);

} // namespace exg

#endif
