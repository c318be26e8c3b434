#ifndef STOKES_CLI_APP_HPP
#define STOKES_CLI_APP_HPP

#include <iosfwd>

namespace stokes::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_certificate_failed = 2;

// Full command-line entry point; results go to --out or to `out`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace stokes::cli

#endif
