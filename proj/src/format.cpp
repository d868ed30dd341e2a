#include "pbphase/format.hpp"

#include <cmath>
#include <cstdio>

namespace pbphase {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const std::string im = format_double(z.imag());
  if (im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

}  // namespace pbphase
