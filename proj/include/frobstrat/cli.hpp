#ifndef FROBSTRAT_CLI_HPP
#define FROBSTRAT_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

namespace frobstrat {

/*
 * Command-line front end. Reports go to `out`, diagnostics to `err`.
 * Exit codes: 0 success, 1 bad flags or parameters, 2 internal invariant
 * violation. `precision_env` carries FROBSTRAT_PRECISION, if set; the
 * --precision flag takes priority over it.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            std::optional<std::string> precision_env = std::nullopt);

}  // namespace frobstrat

#endif
