#ifndef OHMCURVE_CLI_HPP
#define OHMCURVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ohmcurve {

// Full command-line front end, in-process so tests can drive it. args is
// argv without the program name; `in` backs any "-"/missing input path.
// Returns the process exit code: 0 success / all suites pass, 1 a theorem
// violation was found, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace ohmcurve

#endif
