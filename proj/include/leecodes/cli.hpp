#pragma once

namespace leecodes::cli {

// Entry point behind the command-line tool. Exit codes: 0 success / verified,
// 1 verification failed, 2 usage or parse error, 3 resource cap exceeded.
int run(int argc, const char* const* argv);

}  // namespace leecodes::cli
