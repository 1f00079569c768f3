#pragma once

#include <ostream>

namespace cornerlab::cli {

// Exit codes: 0 success, 1 domain error (error JSON on err), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cornerlab::cli
