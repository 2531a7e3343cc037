#pragma once

namespace chartfold {

// Command-line front end. Returns the process exit code: 0 on success,
// 1 on validation failure, 2 on usage or parse errors.
int run_cli(int argc, const char* const* argv);

}  // namespace chartfold
