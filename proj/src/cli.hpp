#pragma once

#include <iosfwd>

namespace symtree::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kBudget = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symtree::cli
