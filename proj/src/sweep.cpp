#include "gedanken/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <thread>

namespace gedanken::sweep {

const std::vector<std::string> kSweepableParameters = {
    "d", "D", "T_A", "T_B", "q_A", "q_B", "m_A", "m_B", "D_A", "Q_A",
};

double Axis::value_at(int i) const {
    if (points == 1) return lo;
    double t = static_cast<double>(i) / (points - 1);
    if (log_spaced) return lo * std::pow(hi / lo, t);
    return lo + (hi - lo) * t;
}

void apply_parameter(Scenario& s, const std::string& name, double value) {
    if (name == "d") s.d = pq::length(value);
    else if (name == "D") s.D = pq::length(value);
    else if (name == "T_A") s.T_A = pq::duration(value);
    else if (name == "T_B") s.T_B = pq::duration(value);
    else if (name == "q_A") s.q_A = pq::charge(value);
    else if (name == "q_B") s.q_B = pq::charge(value);
    else if (name == "m_A") s.m_A = pq::mass(value);
    else if (name == "m_B") s.m_B = pq::mass(value);
    else if (name == "D_A") {
        if (s.field != FieldKind::Electromagnetic)
            throw GridError("axis D_A requires an electromagnetic scenario");
        s.q_A = pq::charge(value / s.d.value());
    } else if (name == "Q_A") {
        if (s.field != FieldKind::Gravitational)
            throw GridError("axis Q_A requires a gravitational scenario");
        s.m_A = pq::mass(value / (s.d.value() * s.d.value()));
    } else {
        throw GridError("unknown sweep parameter '" + name + "'");
    }
}

std::size_t GridSpec::size() const {
    std::size_t n = 1;
    for (const auto& axis : axes) n *= static_cast<std::size_t>(axis.points);
    return n;
}

void GridSpec::check() const {
    for (const auto& axis : axes) {
        if (std::find(kSweepableParameters.begin(), kSweepableParameters.end(),
                      axis.name) == kSweepableParameters.end())
            throw GridError("unknown sweep parameter '" + axis.name + "'");
        if (axis.points < 2)
            throw GridError("axis '" + axis.name + "' needs at least 2 points");
        if (!(axis.lo < axis.hi))
            throw GridError("axis '" + axis.name + "' needs lo < hi");
        if (axis.log_spaced && !(axis.lo > 0))
            throw GridError("log-spaced axis '" + axis.name + "' needs lo > 0");
        if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi))
            throw GridError("axis '" + axis.name + "' has non-finite bounds");
    }
    if (!(slack.c_min > 0) || !(slack.c_max >= slack.c_min))
        throw GridError("slack interval needs 0 < min <= max");
}

Scenario GridSpec::scenario_at(std::size_t flat_index,
                               std::vector<double>* axis_values) const {
    Scenario s = base;
    std::vector<double> values(axes.size(), 0.0);
    // Row-major: last axis varies fastest.
    std::size_t rest = flat_index;
    for (std::size_t a = axes.size(); a-- > 0;) {
        const Axis& axis = axes[a];
        int i = static_cast<int>(rest % axis.points);
        rest /= axis.points;
        values[a] = axis.value_at(i);
    }
    // Apply in declaration order so derived axes (D_A, Q_A) see the d set by
    // an earlier axis on the same grid.
    for (std::size_t a = 0; a < axes.size(); ++a)
        apply_parameter(s, axes[a].name, values[a]);
    if (axis_values) *axis_values = values;
    return s;
}

std::vector<Row> run(const GridSpec& grid, int threads) {
    grid.check();
    std::size_t n = grid.size();
    std::vector<Row> rows(n);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Row& row = rows[i];
            row.index = i;
            Scenario s = grid.scenario_at(i, &row.axis_values);
            row.report = classifier::classify(s, grid.slack, grid.bob_sigma);
        }
    };

    if (threads <= 1 || n < 2) {
        work(0, n);
        return rows;
    }
    std::size_t worker_count = std::min<std::size_t>(threads, n);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    std::size_t chunk = (n + worker_count - 1) / worker_count;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < worker_count; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        workers.emplace_back([&, begin, end] {
            try {
                work(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_csv(std::ostream& out, const GridSpec& grid,
               const std::vector<Row>& rows) {
    out << "# planck units (hbar = c = G = 1); row-major grid, last axis fastest\n";
    for (const auto& axis : grid.axes) out << csv_field(axis.name) << ",";
    out << "outcome,recoherence_ratio,which_path_ratio,visibility,"
           "distinguishability,signaling_metric\n";
    for (const auto& row : rows) {
        for (double v : row.axis_values) out << format_number(v) << ",";
        const auto& r = row.report;
        double rec = 0.0, wp = 0.0;
        for (const auto& nc : r.criteria) {
            if (nc.name == "recoherence") rec = nc.criterion.ratio;
            else if (nc.name == "which_path") wp = nc.criterion.ratio;
        }
        out << csv_field(classifier::to_string(r.outcome)) << ','
            << format_number(rec) << ',' << format_number(wp) << ','
            << format_number(r.model.visibility) << ','
            << format_number(r.model.distinguishability) << ','
            << format_number(r.signaling_metric) << '\n';
    }
}

}  // namespace gedanken::sweep
