#pragma once

#include <ostream>

namespace scpr::cli {

// Runs one `scpr` command. Returns 0 on success, 1 on input or validation
// errors and 2 when value iteration did not converge.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scpr::cli
