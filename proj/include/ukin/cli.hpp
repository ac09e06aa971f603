#pragma once

#include <ostream>

namespace ukin::cli {

/// Exit statuses of the ukin command.
enum Status : int { Ok = 0, CheckFailed = 1, Usage = 2 };

/// Runs one ukin invocation. Documents go to `out` (or --out), reports to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ukin::cli
