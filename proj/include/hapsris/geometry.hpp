#pragma once

namespace hapsris {

/// Cartesian node position on a locally flat ground plane, metres.
/// `z` is altitude above ground.
struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

struct GeometryConstants {
  double earth_radius_m = 6378e3;
  double haps_altitude_m = 20e3;
};

/// Throws std::invalid_argument unless the coordinates are finite and z >= 0.
void validate(const Position& p);

double horizontal_distance(const Position& a, const Position& b);

/// Elevation of `aerial` seen from `ground`, in degrees within (0, 90].
/// Exactly 90 when the two nodes are vertically aligned.
double elevation_angle_deg(const Position& ground, const Position& aerial);

/// Slant range between the platform and a ground node for a given
/// elevation, accounting for Earth curvature:
///   d = sqrt(R^2 sin^2(e) + H^2 + 2 H R) - R sin(e)
double slant_distance_3d(double elevation_deg, const GeometryConstants& g);

}  // namespace hapsris
