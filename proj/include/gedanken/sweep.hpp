#ifndef GEDANKEN_SWEEP_HPP
#define GEDANKEN_SWEEP_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gedanken/classifier.hpp"
#include "gedanken/scenario.hpp"

namespace gedanken::sweep {

/// Malformed grid (bad axis bounds, unknown parameter name, empty
/// restriction, ...): a configuration problem, distinct from scenario
/// validation failures.
class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Axis {
    std::string name;  // see kSweepableParameters
    double lo = 0.0;
    double hi = 0.0;
    int points = 2;
    bool log_spaced = false;

    double value_at(int i) const;
};

/// Parameters an axis may sweep. "D_A" drives q_A = D_A / d on an
/// electromagnetic base scenario; "Q_A" drives m_A = Q_A / d^2 on a
/// gravitational one.
extern const std::vector<std::string> kSweepableParameters;

/// Writes one parameter (by axis name, Planck-unit value) into a scenario.
void apply_parameter(Scenario& s, const std::string& name, double value);

struct GridSpec {
    Scenario base;
    estimators::Slack slack;
    std::vector<Axis> axes;  // row-major enumeration, last axis fastest
    std::optional<Quantity> bob_sigma;  // model wavepacket-width override

    /// Total number of grid points (1 when there are no axes).
    std::size_t size() const;

    /// Throws GridError on any violated grid invariant.
    void check() const;

    /// Scenario at a row-major flat index; optionally reports the axis
    /// values that were applied.
    Scenario scenario_at(std::size_t flat_index,
                         std::vector<double>* axis_values = nullptr) const;
};

struct Row {
    std::size_t index = 0;
    std::vector<double> axis_values;
    classifier::OutcomeReport report;
};

/// Evaluates every grid point. Points are distributed over `threads` workers
/// and written into the result by index, so the returned rows are identical
/// for any thread count. Scenario validation failures propagate as
/// classifier::ValidationError.
std::vector<Row> run(const GridSpec& grid, int threads = 1);

/// Phase-diagram CSV: a `#` convention line, then a header row, then one row
/// per grid point in row-major order. All numbers in Planck units, printed
/// with %.17g; fields quoted RFC-4180-style when needed.
void write_csv(std::ostream& out, const GridSpec& grid, const std::vector<Row>& rows);

}  // namespace gedanken::sweep

#endif  // GEDANKEN_SWEEP_HPP
