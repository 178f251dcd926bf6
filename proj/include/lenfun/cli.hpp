#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenfun {

/// Exit codes: 0 success, 1 scenario failures, 2 usage or parse errors,
/// 3 semantic validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lenfun
