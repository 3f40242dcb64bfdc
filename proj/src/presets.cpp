#include <tvflow/presets.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tvflow {

namespace formula {

namespace {
double wrap_unit(double x) { return x - std::floor(x); }
}  // namespace

double cusp(double x) {
  const double dist = std::abs(wrap_unit(x) - 0.5);
  const double log5 = std::log(5.0);
  if (dist <= 0.1) return 10.0 * (4.0 - log5);
  return 5.0 / dist - 10.0 * (1.0 + log5);
}

double cubic(double x, double a, double r) {
  x = wrap_unit(x);
  const double edge = a * std::pow(0.25 - r, 3);
  if (x <= r || x >= 1.0 - r) return -edge;
  if (x < 0.5 - r) return a * std::pow(x - 0.25, 3);
  if (x <= 0.5 + r) return edge;
  return -a * std::pow(x - 0.75, 3);
}

double cosine(double x) { return -std::cos(2.0 * std::numbers::pi * x); }

double poly2d(double x, double y) {
  x = wrap_unit(x);
  y = wrap_unit(y);
  return x * (x - 1.0) * y * (y - 1.0) - 1.0 / 36.0;
}

}  // namespace formula

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"cusp1d", "cubic1d", "cos1d", "poly2d"};
  return names;
}

int preset_dimension(std::string_view name) {
  if (name == "cusp1d" || name == "cubic1d" || name == "cos1d") return 1;
  if (name == "poly2d") return 2;
  throw std::invalid_argument("unknown preset '" + std::string(name) +
                              "' (expected cusp1d, cubic1d, cos1d or poly2d)");
}

Vector to_reduced(const Vector& samples) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  const Vector centred = samples.array() - samples.mean();
  return centred.head(samples.size() - 1);
}

Vector preset_samples(std::string_view name, int n_cells) {
  if (preset_dimension(name) != 1) {
    throw std::invalid_argument("preset '" + std::string(name) + "' is two-dimensional");
  }
  if (n_cells < 3) throw std::domain_error("need at least 3 cells");
  double (*f)(double) = formula::cosine;
  if (name == "cusp1d") f = formula::cusp;
  if (name == "cubic1d") f = [](double x) { return formula::cubic(x); };
  const double h = 1.0 / n_cells;
  Vector v(n_cells);
  for (int i = 0; i < n_cells; ++i) v(i) = f((i + 1) * h);
  return v.array() - v.mean();
}

Vector preset_samples2d(std::string_view name, int nx, int ny) {
  if (preset_dimension(name) != 2) {
    throw std::invalid_argument("preset '" + std::string(name) + "' is one-dimensional");
  }
  if (nx < 3 || ny < 3) throw std::domain_error("need at least 3 cells per direction");
  Vector v(static_cast<Eigen::Index>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      v(ix + iy * nx) = formula::poly2d((ix + 1.0) / nx, (iy + 1.0) / ny);
    }
  }
  return v.array() - v.mean();
}

Vector preset_initial(std::string_view name, int n_cells) {
  return to_reduced(preset_samples(name, n_cells));
}

Vector preset_initial2d(std::string_view name, int nx, int ny) {
  return to_reduced(preset_samples2d(name, nx, ny));
}

Vector load_initial(const std::string& path, int expected_cells) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open initial data file '" + path + "'");
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (char& c : line) {
      if (c == ',' || c == ';') c = ' ';
    }
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(value)) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number: '" +
                                 token + "'");
      }
      values.push_back(value);
    }
  }
  if (static_cast<int>(values.size()) != expected_cells) {
    throw std::runtime_error(path + ": expected " + std::to_string(expected_cells) +
                             " values, found " + std::to_string(values.size()));
  }
  return to_reduced(Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
}

}  // namespace tvflow
