#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "casimir/scenarios.hpp"

namespace casimir {

/// Sweep table file format:
///
///   # casimir-gear v<version> kind=<open-gear|concentric> y=<y> m_max=<m> rel_tol=<tol>
///   beta,F,T[,energy,torque]
///   <17 significant digits per value>
///
/// The physical columns are present only when `physical` is set.
struct CsvOptions {
    bool physical = false;
};

void write_csv(std::ostream& out, const SweepTable& table, const CsvOptions& options = {});
std::string to_csv(const SweepTable& table, const CsvOptions& options = {});

struct CsvDocument {
    std::map<std::string, std::string> header;  ///< key=value pairs of the comment line, plus "version"
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Parses the format above. Throws casimir::Error on malformed input.
CsvDocument read_csv(std::istream& in);

/// printf("%.17g")
std::string format_double(double v);

}  // namespace casimir
