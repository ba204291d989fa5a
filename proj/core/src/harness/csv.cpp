#include "gsqg/harness/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsqg/error.hpp"

namespace gsqg::harness {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& table, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

Table trajectory_table(const Trajectory& traj) {
  Table t;
  t.header = {"t", "l2", "hs_crit", "hs_crit_delta", "gevrey_tracked", "energy_residual", "max_u", "courant"};
  for (const auto& d : traj.diagnostics) {
    t.rows.push_back({d.t, d.l2, d.hs_crit, d.hs_crit_delta, d.gevrey_tracked, d.energy_residual, d.max_u, d.courant});
  }
  return t;
}

void write_csv(const Trajectory& traj, const std::string& path) { write_csv(trajectory_table(traj), path); }

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  Table t;
  std::string line;
  if (!std::getline(in, line)) return t;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        row.push_back(std::nan(""));
      }
    }
    if (row.size() != t.header.size()) throw FormatError("row width differs from header in " + path);
    t.rows.push_back(std::move(row));
  }
  return t;
}

void emit_plot_data(const std::string& csv_path, const std::string& out_path, const std::string& x_col,
                    const std::string& y_col, bool log_x, bool log_y) {
  const Table t = read_csv(csv_path);
  const auto col = [&](const std::string& name) {
    const auto it = std::find(t.header.begin(), t.header.end(), name);
    if (it == t.header.end()) throw DomainError("unknown column '" + name + "' in " + csv_path);
    return static_cast<std::size_t>(it - t.header.begin());
  };
  const std::size_t xi = col(x_col);
  const std::size_t yi = col(y_col);
  std::vector<double> xs, ys;
  for (const auto& row : t.rows) {
    double x = row[xi];
    double y = row[yi];
    if ((log_x && !(x > 0.0)) || (log_y && !(y > 0.0)) || !std::isfinite(x) || !std::isfinite(y)) continue;
    xs.push_back(log_x ? std::log(x) : x);
    ys.push_back(log_y ? std::log(y) : y);
  }
  double slope = 0.0;
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double den = n * sxx - sx * sx;
    slope = den != 0.0 ? (n * sxy - sx * sy) / den : 0.0;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << "# x=" << (log_x ? "log(" + x_col + ")" : x_col) << " y=" << (log_y ? "log(" + y_col + ")" : y_col) << '\n';
  out << "# slope=" << format_double(slope) << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) out << format_double(xs[i]) << ' ' << format_double(ys[i]) << '\n';
  if (!out) throw IoError("failed writing " + out_path);
}

}  // namespace gsqg::harness
