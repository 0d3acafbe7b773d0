#pragma once

#include <stdexcept>
#include <string>

namespace mstab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// picard
struct degree_mismatch : error { using error::error; };
struct unsupported_parameters : error { using error::error; };
struct singular_system : error { using error::error; };

// cones
struct dimension_mismatch : error { using error::error; };
struct not_effective : error { using error::error; };
struct unknown_cone : error { using error::error; };

// chowring
struct wrong_degree : error { using error::error; };
struct non_terminating : error { using error::error; };
struct non_unit_leading_term : error { using error::error; };

// movcurve
struct degenerate_pivot : error { using error::error; };
struct rank_deficit : error { using error::error; };
struct retries_exhausted : error { using error::error; };
struct duplicate_points : error { using error::error; };
struct unknown_curve : error { using error::error; };
struct bad_parameters : error { using error::error; };

// io
struct parse_error : error { using error::error; };

} // namespace mstab
