#pragma once

#include <ostream>

namespace calisson {

// Exit codes: 0 success, 1 negative answer (untileable, unreachable),
// 2 usage or input error, 3 internal disagreement between methods.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace calisson
