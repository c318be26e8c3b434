#ifndef STOKES_PARALLEL_HPP
#define STOKES_PARALLEL_HPP

namespace stokes
{

// Number of OpenMP threads to use: the STOKES_THREADS environment variable
// when set to a positive integer, otherwise the OpenMP default.
int thread_count();

} // namespace stokes

#endif
