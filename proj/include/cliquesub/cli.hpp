#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquesub {

/// Command-line entry point; args excludes the program name. Returns the process exit status:
/// 0 success, 1 verification failure, 2 input error or refused hypothesis.
int cli_main(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace cliquesub
