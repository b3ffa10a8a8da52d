#pragma once

namespace hullpart {

/// Command-line entry point. Exit codes: 0 success, 1 parse or I/O error,
/// 2 infeasible flags, 3 oracle mismatch.
int cli_main(int argc, char** argv);

}  // namespace hullpart
