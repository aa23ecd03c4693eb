#ifndef KPRAB_IO_HPP
#define KPRAB_IO_HPP

#include "kprab/green.hpp"
#include "kprab/inequality.hpp"

#include <string>

namespace kprab {

// Fixed 17-significant-digit formatting used for all machine output so
// that identical inputs give byte-identical files.
std::string format_double(double v);

// Config JSON with keys {schema, a, b, xi, eta, k, rho, beta, gamma, omega};
// "schema" is optional and must be 1 when present.
BVPConfig load_config(const std::string& path);
BVPConfig parse_config(const std::string& json_text);

// Two-column CSV (node, value); a non-numeric first row is treated as a
// header and skipped.
GridFunction read_grid_csv(const std::string& path);
void write_grid_csv(const std::string& path, const GridFunction& g);

std::string report_to_json(const InequalityReport& rep);

} // namespace kprab

#endif
