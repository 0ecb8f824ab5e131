#pragma once

#include <stdexcept>
#include <string>

namespace specrank {

/// A loop or duplicate edge was requested on a simple undirected graph.
struct invalid_edge_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text; carries the 1-based line number when known.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    long line_number;
};

/// The requested index is undefined on this graph (e.g. degree index of an
/// edgeless graph).
struct undefined_index_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative method failed to reach the requested tolerance.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& msg, double res)
        : std::runtime_error(msg + " (residual " + std::to_string(res) + ")"), residual(res) {}
    double residual;
};

/// The damping parameter is at or beyond the spectral bound.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact elimination hit an all-zero pivot column.
struct singular_matrix_error : std::runtime_error {
    explicit singular_matrix_error(std::size_t col)
        : std::runtime_error("singular system: zero pivot column " + std::to_string(col)),
          column(col) {}
    std::size_t column;
};

/// A rational function was evaluated at a zero of its denominator.
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The node/arc maps do not commute with source and target, or sizes differ.
struct morphism_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search procedure exhausted its iteration budget or hit an excluded case.
struct not_found_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad run configuration (CLI or API level).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace specrank
