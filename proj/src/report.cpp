#include "bers/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "bers/errors.hpp"

namespace bers {

CheckRow slope_row(const std::string& check_id, const std::string& anchor,
                   const ResidualReport& report, double slope_min) {
    CheckRow row;
    row.check_id = check_id;
    row.anchor = anchor;
    row.h = report.finest_h();
    row.max_norm = report.finest_max();
    row.l2_norm = report.finest_l2();
    row.slope = report.order_l2();
    row.threshold = slope_min;
    // exactly-zero studies report +inf, which clears any finite threshold;
    // NaN (too few levels) fails.
    row.pass = row.slope >= slope_min;
    return row;
}

CheckRow exact_row(const std::string& check_id, const std::string& anchor,
                   double h, double max_norm, double l2_norm, double tol) {
    CheckRow row;
    row.check_id = check_id;
    row.anchor = anchor;
    row.h = h;
    row.max_norm = max_norm;
    row.l2_norm = l2_norm;
    row.slope = std::numeric_limits<double>::quiet_NaN();
    row.threshold = tol;
    row.pass = max_norm <= tol;
    return row;
}

CheckRow floor_row(const std::string& check_id, const std::string& anchor,
                   double value, double floor) {
    CheckRow row;
    row.check_id = check_id;
    row.anchor = anchor;
    row.h = std::numeric_limits<double>::quiet_NaN();
    row.max_norm = value;
    row.l2_norm = value;
    row.slope = std::numeric_limits<double>::quiet_NaN();
    row.threshold = floor;
    row.pass = value >= floor;
    return row;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string csv_from_rows(const std::vector<CheckRow>& rows) {
    std::ostringstream out;
    out << "check_id,anchor,h,max_norm,l2_norm,slope,threshold,status\n";
    for (const CheckRow& row : rows) {
        out << row.check_id << ',' << row.anchor << ',' << format_double(row.h)
            << ',' << format_double(row.max_norm) << ','
            << format_double(row.l2_norm) << ',' << format_double(row.slope)
            << ',' << format_double(row.threshold) << ','
            << (row.pass ? "pass" : "fail") << '\n';
    }
    return out.str();
}

std::string manifest_json(const std::vector<CheckRow>& rows) {
    nlohmann::json failures = nlohmann::json::array();
    for (const CheckRow& row : rows) {
        if (!row.pass) failures.push_back(row.check_id);
    }
    nlohmann::json doc;
    doc["checks"] = rows.size();
    doc["failures"] = failures;
    doc["exit_code"] = failures.empty() ? 0 : 1;
    return doc.dump(2) + "\n";
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const CheckRow& row : rows) {
        if (!row.pass) return false;
    }
    return true;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file \"" + path + "\"");
    out << text;
    if (!out) throw ConfigError("failed writing output file \"" + path + "\"");
}

}  // namespace bers
