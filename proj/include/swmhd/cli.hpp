#pragma once

namespace swmhd {

// Entry point shared by the swmhd binary and the CLI tests.
// Exit codes: 0 success, 1 configuration error, 2 solver failure.
int cli_main(int argc, const char* const* argv);

}  // namespace swmhd
