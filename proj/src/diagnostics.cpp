#include "mimetic/diagnostics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace mimetic {

void ConservedSeries::append(long step, double time, std::vector<double> values) {
    if (values.size() != labels.size())
        throw std::invalid_argument("ConservedSeries::append: value count does not match labels");
    if (!entries.empty() && step <= entries.back().step)
        throw std::invalid_argument("ConservedSeries::append: steps must be strictly increasing");
    entries.push_back({step, time, std::move(values)});
}

DriftReport drift_report(const ConservedSeries& series, const std::string& label) {
    if (series.entries.empty()) throw std::invalid_argument("drift_report: empty series");
    auto it = std::find(series.labels.begin(), series.labels.end(), label);
    if (it == series.labels.end())
        throw std::invalid_argument("drift_report: unknown label \"" + label + "\"");
    const std::size_t col = static_cast<std::size_t>(it - series.labels.begin());

    const double x0 = series.entries.front().values[col];
    if (!std::isfinite(x0)) throw std::invalid_argument("drift_report: first value is not finite");
    double max_abs = 0.0;
    for (const auto& e : series.entries)
        max_abs = std::max(max_abs, std::abs(e.values[col] - x0));
    const double denom = std::max(std::abs(x0), 1e-300);
    return {max_abs, max_abs / denom, x0};
}

double convergence_order(const std::vector<std::pair<double, double>>& h_err) {
    if (h_err.size() < 3)
        throw std::invalid_argument("convergence_order: need at least 3 points");
    double prev_h = std::numeric_limits<double>::infinity();
    for (const auto& [h, err] : h_err) {
        if (!(h > 0.0) || !(err > 0.0))
            throw std::invalid_argument("convergence_order: h and err must be positive");
        if (!(h < prev_h))
            throw std::invalid_argument("convergence_order: h must be strictly decreasing");
        prev_h = h;
    }
    double sx = 0, sy = 0;
    for (const auto& [h, err] : h_err) {
        sx += std::log(h);
        sy += std::log(err);
    }
    const double n = static_cast<double>(h_err.size());
    const double mx = sx / n, my = sy / n;
    double num = 0, den = 0;
    for (const auto& [h, err] : h_err) {
        const double dx = std::log(h) - mx;
        num += dx * (std::log(err) - my);
        den += dx * dx;
    }
    return num / den;
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(const ConservedSeries& series, std::ostream& out) {
    out << "step,time";
    for (const auto& label : series.labels) out << ',' << label;
    out << '\n';
    for (const auto& e : series.entries) {
        out << e.step << ',' << format_g17(e.time);
        for (double v : e.values) out << ',' << format_g17(v);
        out << '\n';
    }
}

void write_csv_file(const ConservedSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_csv(series, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mimetic
