#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke::tools {

/// Entry point of the `hecke` executable; args exclude the program name.
/// Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::tools
