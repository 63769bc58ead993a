#pragma once

#include <ostream>

namespace hmlift::cli {

// Exit status: 0 success, 1 a stated expectation was violated, 2 usage or
// input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hmlift::cli
