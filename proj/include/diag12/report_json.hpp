#pragma once

/**
 * @file report_json.hpp
 * @brief Stable JSON form of a DiagonalReport.
 *
 *     {
 *       "schema": 1,
 *       "ring": {"n": 8, "vars": 1, "degree_bound": 2},
 *       "verdict": false,
 *       "method": "ENUMERATION",
 *       "witness": {"kind": "non_involutive_unit",
 *                   "unit": "2*x1 + 1 (mod 8)", "square": "4*x1^2 + 4*x1 + 1 (mod 8)"},
 *       "search_bound_note": "..."
 *     }
 *
 * "vars" and "degree_bound" appear only when set. Witness kinds are
 * "inverse_pair" (fields a, b) and "non_involutive_unit" (fields unit,
 * square). Elements of Z_n are JSON integers; polynomials are strings in the
 * canonical text format. "square" is informational and ignored when reading.
 */

#include <json.hpp>

#include "diag12/diagonal.hpp"

namespace diag12 {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json report_to_json(const DiagonalReport& report);

/// Throws std::invalid_argument on any schema violation.
DiagonalReport report_from_json(const nlohmann::json& document);

} // namespace diag12
