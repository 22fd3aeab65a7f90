#pragma once

#include <ostream>

namespace ahilb {

// Exit codes: 0 ok, 1 invalid input, 2 invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ahilb
