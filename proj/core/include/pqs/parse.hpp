#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pqs/mpoly.hpp"

namespace pqs {

/// Parses sums of products such as "3/2*X1^2*X2 - e1*X2 + 1". Identifiers in
/// `vars` are polynomial variables, identifiers in `tower` infinitesimals.
/// Throws Error(Input) on malformed text or unknown identifiers.
EMPoly parse_epoly(std::string_view text, const std::vector<std::string>& vars, const TowerPtr& tower);
QMPoly parse_qpoly(std::string_view text, const std::vector<std::string>& vars);
/// Univariate polynomial in `var`.
QPoly parse_upoly(std::string_view text, const std::string& var = "T");
EPoly parse_eupoly(std::string_view text, const TowerPtr& tower, const std::string& var = "T");

/// Default names X1..Xn.
std::vector<std::string> var_names(const std::string& stem, std::size_t n);

}  // namespace pqs
