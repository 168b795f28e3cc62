#include "casimir/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace casimir {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// shortest round-trip form, for the header
std::string shortest(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

void write_csv(std::ostream& out, const SweepTable& table, const CsvOptions& options) {
    const auto& s = table.scenario;
    out << "# casimir-gear v" << table.version << " kind=" << to_string(s.kind) << " y=" << shortest(s.y)
        << " m_max=" << s.mode_spec.m_max << " rel_tol=" << shortest(s.quad_spec.rel_tol) << '\n';
    out << "beta,F,T";
    if (options.physical) {
        out << ",energy,torque";
    }
    out << '\n';
    for (const auto& row : table.rows) {
        out << format_double(row.beta) << ',' << format_double(row.energy) << ',' << format_double(row.torque);
        if (options.physical) {
            const auto p = to_physical(s, row.energy, row.torque);
            out << ',' << format_double(p.energy) << ',' << format_double(p.torque);
        }
        out << '\n';
    }
}

std::string to_csv(const SweepTable& table, const CsvOptions& options) {
    std::ostringstream out;
    write_csv(out, table, options);
    return out.str();
}

CsvDocument read_csv(std::istream& in) {
    CsvDocument doc;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# casimir-gear v", 0) != 0) {
        throw Error("missing '# casimir-gear' header line");
    }
    std::istringstream header(line.substr(2));
    std::string token;
    header >> token;  // casimir-gear
    header >> token;
    doc.header["version"] = token.substr(1);
    while (header >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw Error("malformed header token '" + token + "'");
        }
        doc.header[token.substr(0, eq)] = token.substr(eq + 1);
    }
    if (!std::getline(in, line)) {
        throw Error("missing column line");
    }
    std::istringstream cols(line);
    while (std::getline(cols, token, ',')) {
        doc.columns.push_back(token);
    }
    if (doc.columns.size() < 3 || doc.columns[0] != "beta" || doc.columns[1] != "F" || doc.columns[2] != "T") {
        throw Error("column line must start with beta,F,T");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        while (std::getline(cells, token, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(token, &used);
            } catch (const std::exception&) {
                throw Error("non-numeric cell '" + token + "'");
            }
            if (used != token.size()) {
                throw Error("non-numeric cell '" + token + "'");
            }
            row.push_back(v);
        }
        if (row.size() != doc.columns.size()) {
            throw Error("row width does not match the column line");
        }
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

}  // namespace casimir
