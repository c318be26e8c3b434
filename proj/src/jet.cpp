#include <stokes/jet.hpp>

namespace stokes
{

template class Jet<Interval>;
template class Jet<double>;

} // namespace stokes
