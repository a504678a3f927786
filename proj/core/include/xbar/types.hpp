#pragma once

// Domain types shared across the simulator. All quantities are SI:
// volts, amperes, siemens, ohms.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace xbar {

using Index = std::ptrdiff_t;

/// Rejected input: bad dimensions, malformed files, invalid parameters.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Singular or structurally degenerate network.
struct SolverDegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nonlinear solve failed to reach the residual target.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, double residual_amps)
        : std::runtime_error(msg), residual(residual_amps) {}
    double residual;
};

/// Conversion produced out-of-range conductances in strict mode.
struct ConversionInfeasibleError : std::runtime_error {
    ConversionInfeasibleError(const std::string& msg, std::vector<std::pair<Index, Index>> entries)
        : std::runtime_error(msg), offending(std::move(entries)) {}
    std::vector<std::pair<Index, Index>> offending;
};

/// Constant weight matrix cannot be scaled onto the conductance range.
struct DegenerateMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossbarDims {
    Index rows = 0;  // m, input lines
    Index cols = 0;  // n, output lines

    void validate() const {
        if (rows < 1 || cols < 1) throw InputError("crossbar dims must be at least 1x1");
    }
    bool operator==(const CrossbarDims&) const = default;
};

/// Series resistances of the non-ideal crossbar network.
struct ParasiticParams {
    double r_wire_row = 0.0;  // ohms per row wire segment
    double r_wire_col = 0.0;  // ohms per column wire segment
    double r_input = 0.0;     // ohms between row driver and row wire
    double r_output = 0.0;    // ohms between column wire and virtual ground
    double r_access = 0.0;    // on-state access transistor, ohms

    /// Wire/input/output values used throughout the experiments (1 ohm each,
    /// zero access resistance).
    static ParasiticParams paper() { return {1.0, 1.0, 1.0, 1.0, 0.0}; }
    static ParasiticParams none() { return {}; }

    bool all_zero() const {
        return r_wire_row == 0 && r_wire_col == 0 && r_input == 0 && r_output == 0 &&
               r_access == 0;
    }
    void validate() const;
};

enum class DeviceKind {
    linear,  // I = g * (v_top - v_mid)
    sinh,    // I = g * v_sense * sinh(beta*v) / sinh(beta*v_sense)
};

const char* to_string(DeviceKind kind);
DeviceKind device_kind_from_string(const std::string& s);

/// Cross-point device model. Conductance g is defined at the sensing voltage:
/// every kind satisfies current(g, v_sense) == g * v_sense, and the current is
/// linear in g (current(g, v) == g * current(1, v)).
struct DeviceModel {
    DeviceKind kind = DeviceKind::linear;
    double g_min = 1.0 / 300e3;  // siemens, R_off = 300k
    double g_max = 1.0 / 15e3;   // siemens, R_on = 15k
    double beta = 5.0;           // sinh steepness, 1/V
    double v_sense = 0.2;        // conductance readout voltage, V

    double current(double g, double dv) const;
    /// dI/dv at the given device voltage.
    double slope(double g, double dv) const;
    /// Current through a unit (1 S nominal) device; current(g,dv) == g*unit_current(dv).
    double unit_current(double dv) const;

    bool linear_kind() const { return kind == DeviceKind::linear; }
    void validate() const;
};

}  // namespace xbar
