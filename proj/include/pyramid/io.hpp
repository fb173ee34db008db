#ifndef PYRAMID_IO_HPP
#define PYRAMID_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <pyramid/exact/poly.hpp>
#include <pyramid/report.hpp>
#include <pyramid/transforms.hpp>

namespace pyramid
{

// All JSON is written compactly with a trailing newline; that form is what
// round-trips byte for byte.

/// {"n":2,"entries":["1/4","1/2","1/4"]}
std::string pyramid_to_json(const PyramidRow &row);
std::string pyramid_to_json(const IntRow &row);
/// Accepts the object above; "n" is optional but must match the entry count when present.
/// Throws ParseError.
PyramidRow pyramid_from_json(std::string_view text);

/// {"coeffs":["-1/4","0","1"]}, ascending powers.
std::string poly_to_json(const Poly &p);
Poly poly_from_json(std::string_view text);

/// One row per line, entries separated by commas.
std::string rows_to_csv(const std::vector<PyramidRow> &rows);
std::string rows_to_csv(const std::vector<IntRow> &rows);

/// [{"identity":..,"n":..,"m":..,"status":..}, ...]; "detail" is added when non-empty.
std::string report_to_json(const CheckReport &report);

} // namespace pyramid

#endif
