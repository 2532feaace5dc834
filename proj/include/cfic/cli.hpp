#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfic {

// Entry point behind the cfic binary, separated for testing.  args excludes
// argv[0].  Exit code 0 on success, 1 on domain/parse/usage errors, 2 when a
// search budget runs out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace cfic
