#pragma once

#include <string>
#include <vector>

#include "gsqg/solver.hpp"

namespace gsqg::harness {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Shortest decimal text that parses back to the same double (%.17g).
std::string format_double(double v);

/// Header row, then one row per entry; throws IoError on failure.
void write_csv(const Table& table, const std::string& path);
/// Columns: t, l2, hs_crit, hs_crit_delta, gevrey_tracked, energy_residual, max_u, courant.
void write_csv(const Trajectory& traj, const std::string& path);
Table trajectory_table(const Trajectory& traj);

/// Reads a CSV written by write_csv.
Table read_csv(const std::string& path);

/// Writes "x y" lines for the two named columns (log-transformed when asked),
/// preceded by a "# slope=..." comment holding the least-squares slope.
/// Rows with non-positive values are skipped under a log transform.
/// Throws DomainError for an unknown column.
void emit_plot_data(const std::string& csv_path, const std::string& out_path, const std::string& x_col,
                    const std::string& y_col, bool log_x = true, bool log_y = true);

}  // namespace gsqg::harness
