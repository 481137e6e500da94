// The `lozenge` command line: count, formula, macmahon, verify, render, cut.
#pragma once

#include <iosfwd>

namespace lozenge {

// Exit status: 0 success, 1 verification mismatch, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lozenge
