#pragma once

namespace hyperim {

// Entry point behind the command-line tool. Exit codes: 0 success, 1 runtime
// error, 2 usage error.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace hyperim
