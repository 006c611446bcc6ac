#pragma once

#include <array>
#include <variant>
#include <vector>

#include "qgsw/field.hpp"

namespace qgsw {

struct Disc {
    double radius = 1.0;
};

struct Ellipse {
    double a = 2.0;  // semi-major
    double b = 1.0;  // semi-minor
    double orientation = 0.0;
};

struct Polygon {
    std::vector<std::array<double, 2>> vertices;  // counter-clockwise, simple
};

/// Vortex-patch initial datum: indicator of a shape, optionally mollified
/// over signed-distance width epsilon.
struct PatchSpec {
    std::variant<Disc, Ellipse, Polygon> shape = Disc{};
    std::array<double, 2> center = {0.0, 0.0};
    double amplitude = 1.0;
    double mollify_width = 0.0;
};

/// Signed distance to the patch boundary (positive inside). For the ellipse
/// this is the first-order normal approximation (1 - f) / |grad f|, exact on
/// the boundary and accurate within the mollification collar.
double signed_distance(const PatchSpec& patch, double x1, double x2);

/// amplitude * H(d(x)/eps) with H a smooth 0 -> 1 ramp over [-1, 1];
/// eps = 0 gives the sharp indicator. Rejects patches whose bounding box
/// does not fit inside [0, length)^2 with margin >= 3 eps.
ScalarField rasterize(const PatchSpec& patch, const Grid& grid);

struct OverlapMeasures {
    double intersection_area = 0.0;
    double symmetric_difference_area = 0.0;
    double sup_difference = 0.0;
};

/// Thresholded set comparison of two fields on a shared grid.
OverlapMeasures overlap_measures(const ScalarField& a, const ScalarField& b,
                                 double threshold = 0.5);

}  // namespace qgsw
