#include "bell/format.hpp"

#include <cstdio>

namespace bell {

std::string format_double17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace bell
