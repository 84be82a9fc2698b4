#ifndef BELL_FORMAT_HPP
#define BELL_FORMAT_HPP

#include <string>

namespace bell {

/// Shortest %.17g rendering: round-trips any finite double exactly, so
/// serialized documents are byte-stable for equal inputs.
std::string format_double17(double value);

}  // namespace bell

#endif
