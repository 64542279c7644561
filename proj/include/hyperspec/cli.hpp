#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperspec {

/// Entry point behind the `hyperspec` executable. `args` excludes the
/// program name. Returns 0 on success, 1 on domain errors (JSON on `err`),
/// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperspec
