#ifndef TVFLOW_PRESETS_HPP
#define TVFLOW_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <tvflow/types.hpp>

namespace tvflow {

/// Initial profile formulas on the unit torus. Arguments are taken mod 1.
namespace formula {
/// 10(4 - log 5) for |x - 1/2| <= 1/10, 5/|x - 1/2| - 10(1 + log 5) elsewhere.
double cusp(double x);
/// Piecewise cubic with plateaus near 0 and 1/2, a = 450, r = 1/15.
double cubic(double x, double a = 450.0, double r = 1.0 / 15.0);
double cosine(double x);
double poly2d(double x, double y);
}  // namespace formula

/// Names accepted by preset_initial: cusp1d, cubic1d, cos1d (1D), poly2d (2D).
const std::vector<std::string>& preset_names();
int preset_dimension(std::string_view name);

/// Samples a 1D preset at the cell centres x_n = n h, n = 1..n_cells,
/// subtracts the sample mean and drops the last entry (reduced coordinates).
Vector preset_initial(std::string_view name, int n_cells);

/// 2D version: centres (ix h_x, iy h_y), x-fastest, mean removed, reduced.
Vector preset_initial2d(std::string_view name, int nx, int ny);

/// Full-length (unreduced) mean-free samples, same sampling rule.
Vector preset_samples(std::string_view name, int n_cells);
Vector preset_samples2d(std::string_view name, int nx, int ny);

/// Reads cell values from a text file: numbers separated by commas,
/// whitespace or newlines; lines starting with '#' are ignored. The count must
/// equal expected_cells. The mean is removed and the last entry dropped.
/// Throws std::runtime_error with the offending line on malformed input.
Vector load_initial(const std::string& path, int expected_cells);

/// Mean removal followed by dropping the last entry.
Vector to_reduced(const Vector& samples);

}  // namespace tvflow

#endif  // TVFLOW_PRESETS_HPP
