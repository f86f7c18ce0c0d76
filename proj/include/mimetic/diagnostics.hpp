#pragma once

#include <cmath>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mimetic/errors.hpp"

namespace mimetic {

/// Per-step ledger of labeled conserved quantities.
struct ConservedSeries {
    std::vector<std::string> labels;

    struct Entry {
        long step;
        double time;
        std::vector<double> values;
    };
    std::vector<Entry> entries;

    explicit ConservedSeries(std::vector<std::string> labels_ = {})
        : labels(std::move(labels_)) {}

    /// Appends one row; steps must be strictly increasing and the value count
    /// must match the label count.
    void append(long step, double time, std::vector<double> values);
};

struct DriftReport {
    double max_abs_drift;
    double max_rel_drift;
    double first_value;
};

/// Drift of one labeled column relative to its first entry:
/// rel = max_n |x_n - x_0| / max(|x_0|, 1e-300).
DriftReport drift_report(const ConservedSeries& series, const std::string& label);

/// Least-squares slope of log(err) against log(h).  Needs at least 3 points
/// with h strictly decreasing and h, err > 0.
double convergence_order(const std::vector<std::pair<double, double>>& h_err);

struct StabilityReport {
    bool stable;
    long unstable_at_step;  ///< -1 when stable
};

/// Steps the state n_steps times and reports the first step at which
/// norm(state) exceeds blowup_factor * norm(initial state), treating an
/// instability_error from the stepper the same way.
template <class State, class Step, class Norm>
StabilityReport stability_probe(Step&& step, Norm&& norm, State state, long n_steps,
                                double blowup_factor = 1e3) {
    if (!(blowup_factor > 1.0))
        throw std::invalid_argument("stability_probe: blowup_factor must be > 1");
    const double base = norm(state);
    for (long k = 1; k <= n_steps; ++k) {
        try {
            state = step(std::move(state));
        } catch (const instability_error& e) {
            return {false, e.step()};
        }
        const double current = norm(state);
        if (!std::isfinite(current) || current > blowup_factor * base) return {false, k};
    }
    return {true, -1};
}

/// Decimal string with 17 significant digits, enough to round-trip the
/// double exactly.  Used for byte-reproducible CSV ledgers.
std::string format_g17(double x);

/// CSV with header "step,time,<labels...>" and one row per entry, every
/// floating-point field rendered by format_g17.
void write_csv(const ConservedSeries& series, std::ostream& out);

/// Same, to a file.  Throws std::runtime_error on I/O failure.
void write_csv_file(const ConservedSeries& series, const std::filesystem::path& path);

}  // namespace mimetic
