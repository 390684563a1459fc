#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pastlife/measures.hpp"

namespace pastlife::curve {

using measures::MeasureValue;
using measures::QuadratureConfig;

struct CurvePoint {
    double t = 0.0;
    std::vector<MeasureValue> values; // one per requested measure
};

/// A sweep of measures over a strictly increasing t-grid; serializes to CSV
/// with columns t,<m>,<m>_err,<m>_method per measure.
struct CurveTable {
    std::string spec;
    std::vector<std::string> measure_names;
    std::vector<CurvePoint> rows;
};

/// Evaluates the named measures on a uniform grid of n_points over
/// [t_min, t_max]. Rows are independent and are computed in parallel when
/// `parallel` is set; the result is identical either way and ordered by t.
CurveTable compute_curve(const Distribution& d, const std::string& spec,
                         const std::vector<std::string>& names, double t_min,
                         double t_max, int n_points, const QuadratureConfig& cfg = {},
                         double alpha = 0.0, bool parallel = true);

/// Serial reference implementation; compute_curve(parallel=true) must match
/// it value for value.
CurveTable compute_curve_serial(const Distribution& d, const std::string& spec,
                                const std::vector<std::string>& names, double t_min,
                                double t_max, int n_points,
                                const QuadratureConfig& cfg = {}, double alpha = 0.0);

void write_csv(const CurveTable& table, std::ostream& os);
void write_json(const CurveTable& table, std::ostream& os);

} // namespace pastlife::curve
