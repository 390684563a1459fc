#include "pastlife/curve.hpp"

#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace pastlife::curve {

namespace {

// Full round-trip precision, stable across runs for identical doubles.
std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CurveTable compute_impl(const Distribution& d, const std::string& spec,
                        const std::vector<std::string>& names, double t_min,
                        double t_max, int n_points, const QuadratureConfig& cfg,
                        double alpha, bool parallel) {
    if (n_points < 2) throw std::invalid_argument("curve: need at least 2 grid points");
    if (!(t_min < t_max)) throw std::invalid_argument("curve: t_min must be below t_max");
    if (names.empty()) throw std::invalid_argument("curve: no measures requested");

    CurveTable table;
    table.spec = spec;
    table.measure_names = names;
    table.rows.resize(n_points);

    const double step = (t_max - t_min) / (n_points - 1);
    std::vector<std::exception_ptr> errors(n_points);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (int i = 0; i < n_points; ++i) {
        try {
            CurvePoint& row = table.rows[i];
            row.t = t_min + i * step;
            row.values.reserve(names.size());
            for (const std::string& m : names)
                row.values.push_back(measures::evaluate_by_name(d, m, row.t, cfg, alpha));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }

    for (int i = 0; i < n_points; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return table;
}

} // namespace

CurveTable compute_curve(const Distribution& d, const std::string& spec,
                         const std::vector<std::string>& names, double t_min,
                         double t_max, int n_points, const QuadratureConfig& cfg,
                         double alpha, bool parallel) {
    return compute_impl(d, spec, names, t_min, t_max, n_points, cfg, alpha, parallel);
}

CurveTable compute_curve_serial(const Distribution& d, const std::string& spec,
                                const std::vector<std::string>& names, double t_min,
                                double t_max, int n_points, const QuadratureConfig& cfg,
                                double alpha) {
    return compute_impl(d, spec, names, t_min, t_max, n_points, cfg, alpha, false);
}

void write_csv(const CurveTable& table, std::ostream& os) {
    os << "# pastlife curve v1 spec=" << table.spec << "\n";
    os << "t";
    for (const std::string& m : table.measure_names)
        os << "," << m << "," << m << "_err," << m << "_method";
    os << "\n";
    for (const CurvePoint& row : table.rows) {
        os << fmt_full(row.t);
        for (const MeasureValue& v : row.values)
            os << "," << fmt_full(v.value) << "," << fmt_full(v.numerical_error) << ","
               << measures::to_string(v.method);
        os << "\n";
    }
}

void write_json(const CurveTable& table, std::ostream& os) {
    nlohmann::json j;
    j["format"] = "pastlife curve v1";
    j["spec"] = table.spec;
    j["measures"] = table.measure_names;
    nlohmann::json rows = nlohmann::json::array();
    for (const CurvePoint& row : table.rows) {
        nlohmann::json r;
        r["t"] = row.t;
        for (std::size_t k = 0; k < table.measure_names.size(); ++k) {
            const std::string& m = table.measure_names[k];
            r[m] = {{"value", row.values[k].value},
                    {"error", row.values[k].numerical_error},
                    {"method", measures::to_string(row.values[k].method)}};
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
}

} // namespace pastlife::curve
