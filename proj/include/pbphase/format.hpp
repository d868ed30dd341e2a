#pragma once

#include <string>

#include "pbphase/numerics.hpp"

namespace pbphase {

// Round-trip exact decimal: 17 significant digits, lowercase exponent.
std::string format_double(double x);

// "re+imi" / "re-imi" using format_double for both parts.
std::string format_complex(Complex z);

}  // namespace pbphase
