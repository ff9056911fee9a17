#pragma once

#include <stdexcept>
#include <string>

namespace skeg {

/// Base class for all input-rejection errors thrown by this library.
/// One subclass per condition so callers (and the CLI's exit-code mapping)
/// can distinguish them without parsing messages.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewVertices : GeometryError {
    using GeometryError::GeometryError;
};

/// Repeated or collinear-adjacent vertex within tolerance.
struct DegenerateVertex : GeometryError {
    using GeometryError::GeometryError;
};

struct SelfIntersecting : GeometryError {
    using GeometryError::GeometryError;
};

/// A query point handed to the geodesic engine is not inside the polygon.
struct PointOutsidePolygon : GeometryError {
    using GeometryError::GeometryError;
};

/// A site handed to point location / the solvers is not inside the polygon.
struct SiteOutsidePolygon : GeometryError {
    using GeometryError::GeometryError;
};

/// k outside [1, number of sites available to the call].
struct KTooLarge : GeometryError {
    using GeometryError::GeometryError;
};

/// Grid oracle spacing too coarse: no candidate sample landed in the polygon.
struct EmptyGrid : GeometryError {
    using GeometryError::GeometryError;
};

/// Internal defect guard: the decomposition failed to find a splitting
/// diagonal inside the balance bound (cannot happen for a valid triangulation).
struct NoBalancedDiagonal : GeometryError {
    using GeometryError::GeometryError;
};

} // namespace skeg
