#pragma once

#include <string>
#include <vector>

#include "bers/residual.hpp"

namespace bers {

// One verification result. A slope row passes when the observed order reaches
// the threshold (an exactly-zero study reports +inf and passes); an exact row
// passes when max_norm stays at or below the threshold; a floor row passes
// when max_norm stays at or ABOVE the threshold (used for determinant lower
// bounds). h is the finest step of the study, NaN when no grid is involved.
struct CheckRow {
    std::string check_id;
    std::string anchor;
    double h = 0.0;
    double max_norm = 0.0;
    double l2_norm = 0.0;
    double slope = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

CheckRow slope_row(const std::string& check_id, const std::string& anchor,
                   const ResidualReport& report, double slope_min);
CheckRow exact_row(const std::string& check_id, const std::string& anchor,
                   double h, double max_norm, double l2_norm, double tol);
CheckRow floor_row(const std::string& check_id, const std::string& anchor,
                   double value, double floor);

// %.12e; non-finite values render as "inf", "-inf", "nan" so reports stay
// byte-reproducible across platforms.
std::string format_double(double v);

// Header "check_id,anchor,h,max_norm,l2_norm,slope,threshold,status" plus one
// line per row, status "pass" or "fail".
std::string csv_from_rows(const std::vector<CheckRow>& rows);

// {"checks": N, "failures": [ids...], "exit_code": 0|1}
std::string manifest_json(const std::vector<CheckRow>& rows);

bool all_pass(const std::vector<CheckRow>& rows);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace bers
