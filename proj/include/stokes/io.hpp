#ifndef STOKES_IO_HPP
#define STOKES_IO_HPP

#include <string>

namespace stokes
{

// Shortest decimal string that parses back to the same binary64.
std::string shortest(double x);

// Writes content to a sibling temporary file, then renames it over path.
// Throws std::runtime_error on I/O failure.
void atomic_write(const std::string &path, const std::string &content);

} // namespace stokes

#endif
