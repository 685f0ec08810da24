#include "hapsris/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "hapsris/units.hpp"

namespace hapsris {

void validate(const Position& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw std::invalid_argument("position has non-finite coordinates");
  }
  if (p.z < 0.0) {
    throw std::invalid_argument("position below ground (z < 0)");
  }
}

double horizontal_distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double elevation_angle_deg(const Position& ground, const Position& aerial) {
  validate(ground);
  validate(aerial);
  if (ground == aerial) {
    throw std::invalid_argument("coincident nodes");
  }
  const double dz = aerial.z - ground.z;
  if (dz <= 0.0) {
    throw std::invalid_argument("aerial node must be above the ground node");
  }
  const double horizontal = horizontal_distance(ground, aerial);
  if (horizontal == 0.0) {
    return 90.0;
  }
  return rad_to_deg(std::atan(dz / horizontal));
}

double slant_distance_3d(double elevation_deg, const GeometryConstants& g) {
  if (!(elevation_deg > 0.0 && elevation_deg <= 90.0)) {
    throw std::domain_error("elevation must lie in (0, 90] degrees");
  }
  if (!(g.earth_radius_m > 0.0) || g.haps_altitude_m < 0.0) {
    throw std::invalid_argument("invalid geometry constants");
  }
  const double re = g.earth_radius_m;
  const double hz = g.haps_altitude_m;
  // Zenith: exactly H.
  const double s = elevation_deg == 90.0 ? 1.0 : std::sin(deg_to_rad(elevation_deg));
  const double rs = re * s;
  if (s == 1.0) {
    return hz;
  }
  return std::sqrt(rs * rs + hz * hz + 2.0 * hz * re) - rs;
}

}  // namespace hapsris
