#include "bosonstar/field_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace bosonstar {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw InvalidArgument("cannot open " + path.string() + " for writing");
  return os;
}

template <typename F>
void write_real(std::ostream& os, const F& u, const char* header) {
  os << header << '\n' << std::setprecision(17);
  const auto x = u.coordinates();
  for (std::size_t j = 0; j < u.size(); ++j) os << x[j] << ',' << u[j] << '\n';
}

}  // namespace

void write_csv(std::ostream& os, const RadialField& u) { write_real(os, u, "r,value"); }
void write_csv(std::ostream& os, const SpectralField& v) { write_real(os, v, "xi,value"); }

void write_csv(std::ostream& os, const ComplexRadialField& psi) {
  os << "r,re,im\n" << std::setprecision(17);
  const auto r = psi.coordinates();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    os << r[j] << ',' << psi[j].real() << ',' << psi[j].imag() << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const RadialField& u) {
  auto os = open_out(path);
  write_csv(os, u);
}
void write_csv(const std::filesystem::path& path, const SpectralField& v) {
  auto os = open_out(path);
  write_csv(os, v);
}
void write_csv(const std::filesystem::path& path, const ComplexRadialField& psi) {
  auto os = open_out(path);
  write_csv(os, psi);
}

RadialField read_radial_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("r,value", 0) != 0) {
    throw InvalidArgument("field csv: expected header 'r,value'");
  }
  std::vector<double> r, v;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidArgument("field csv: malformed row '" + line + "'");
    try {
      r.push_back(std::stod(line.substr(0, comma)));
      v.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw InvalidArgument("field csv: malformed row '" + line + "'");
    }
  }
  if (r.size() < 4) throw InvalidArgument("field csv: too few rows");
  const std::size_t n = r.size();
  const double dr = r.front();
  for (std::size_t j = 0; j < n; ++j) {
    const double expected = dr * static_cast<double>(j + 1);
    if (std::abs(r[j] - expected) > 1e-9 * std::max(1.0, expected)) {
      throw InvalidArgument("field csv: node column is not a uniform interior grid");
    }
  }
  return RadialField(RadialGrid(n, dr * static_cast<double>(n + 1)), std::move(v));
}

RadialField read_radial_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("cannot open " + path.string());
  return read_radial_csv(is);
}

}  // namespace bosonstar
