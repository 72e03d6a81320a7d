#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scpr/solvers.hpp"
#include "scpr/state.hpp"

namespace scpr {

// `x1,x2,x3[,u],value` header, one row per state in index order, values with
// 17 significant digits, and a final terminal row `TAU,,,[,]0`.
std::string values_to_csv(const StateIndex& index,
                          const std::vector<double>& values);

// Inverse of values_to_csv. Throws ParseError on malformed input.
std::vector<double> load_values_csv(std::string_view text,
                                    const StateIndex& index);

// `cop robber time next` rows (1-based vertices, `inf` for unreachable).
std::string capture_times_to_text(const CaptureTimeTable& table);

// Both cops' policies, C1 first, in the policy text format.
std::string policies_to_text(const CopPolicy& pi1, const CopPolicy& pi2);

void write_file(const std::string& path, std::string_view contents);

}  // namespace scpr
