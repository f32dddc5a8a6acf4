#include "zipfkit/types.hpp"

#include "zipfkit/error.hpp"

namespace zipfkit {

void validate_bounds(const SegmentBounds& bounds, std::size_t vocabulary) {
  if (bounds.upper_end < 1) throw DataError("upper segment must contain at least rank 1");
  if (bounds.middle_end <= bounds.upper_end)
    throw DataError("middle_end must be greater than upper_end");
  if (bounds.middle_end >= vocabulary) {
    throw DataError("segment bounds (" + std::to_string(bounds.upper_end) + ", " +
                    std::to_string(bounds.middle_end) + ") exceed vocabulary of " +
                    std::to_string(vocabulary) + " types");
  }
}

const char* to_string(Segment s) {
  switch (s) {
    case Segment::upper:
      return "upper";
    case Segment::middle:
      return "middle";
    case Segment::lower:
      return "lower";
  }
  return "?";
}

}  // namespace zipfkit
