#pragma once

#include <string>
#include <string_view>

#include "nsjac/curve.hpp"

namespace nsjac {

/// Parsed curve file:
///
///   p=<prime>
///   ext=<c0,c1,...,1>      (optional)
///   n=<int>
///   s=<int>
///   c <i> <j> <value>      (coefficient of x^i y^j in the tail)
///
/// `#` starts a comment. Constant values may carry a leading '-'.
struct CurveFile {
    Curve curve;
    bool declares_extension = false;
};

CurveFile parse_curve_file(std::string_view text);
std::string format_curve_file(const Curve& curve);

/// Whole file as a string; InvalidInput if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace nsjac
