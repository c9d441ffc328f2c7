#ifndef BILLIARDS_ERRORS_HPP
#define BILLIARDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace billiards {

struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A line or direction is isotropic where a non-isotropic one is required.
struct isotropic_error : geometry_error {
  using geometry_error::geometry_error;
};

/// lambda hit -a^2 or -b^2, or a line forces it there.
struct degenerate_conic_error : geometry_error {
  using geometry_error::geometry_error;
};

struct focal_line_error : geometry_error {
  using geometry_error::geometry_error;
};

/// The orbit tracer reached an isotropic tangency point of the ellipse with
/// an isotropic next side; reflection is undefined there.
struct isotropic_degeneration_error : geometry_error {
  using geometry_error::geometry_error;
};

}  // namespace billiards

#endif
