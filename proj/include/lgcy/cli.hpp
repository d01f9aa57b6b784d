#pragma once

#include <iosfwd>

namespace lgcy {

// Exit codes: 0 success, 1 usage or input error, 2 a verification failed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgcy
