#pragma once

namespace dartbound {

/// Command-line entry point; returns the process exit code (0 success,
/// 2 invalid usage or malformed input, 1 internal failure).
int run(int argc, const char* const* argv);

}  // namespace dartbound
