#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace waring::cli {

enum ExitCode : int { Success = 0, VerificationFailed = 1, InputError = 2, FieldExtension = 3 };

/// Runs one command. `args` excludes the program name. Setting the
/// environment variable WARING_VERBOSE to a non-empty value other than "0"
/// adds progress lines on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring::cli
