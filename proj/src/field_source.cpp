#include "abflux/field_source.hpp"

#include "abflux/constants.hpp"
#include "abflux/detail/overloaded.hpp"
#include "abflux/elliptic.hpp"
#include "abflux/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace abflux {
using detail::overloaded;

namespace {

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

[[noreturn]] void throw_on_source(const char* what, const Vec3& p, double distance) {
  std::ostringstream os;
  os << "evaluation point (" << p.x() << ", " << p.y() << ", " << p.z() << ") lies "
     << distance << " m from the " << what;
  throw GeometryError(os.str());
}

struct LoopFrame {
  double z;     // axial coordinate
  Vec3 rho_vec; // radial vector
  double rho;
};

LoopFrame loop_frame(const CurrentLoop& loop, const Vec3& p) {
  const Vec3 d = p - loop.center;
  const double z = d.dot(loop.axis);
  const Vec3 rho_vec = d - z * loop.axis;
  return {z, rho_vec, rho_vec.norm()};
}

void check_loop_distance(const CurrentLoop& loop, const LoopFrame& f, const Vec3& p,
                         double min_distance) {
  const double dist = std::hypot(f.rho - loop.radius, f.z);
  if (dist <= min_distance) {
    throw_on_source("current loop wire", p, dist);
  }
}

Vec3 loop_vector_potential(const CurrentLoop& loop, const Vec3& p, double min_distance) {
  const LoopFrame f = loop_frame(loop, p);
  check_loop_distance(loop, f, p, min_distance);
  if (f.rho == 0.0) {
    return Vec3::Zero();
  }
  const double a = loop.radius;
  const double beta2 = (a + f.rho) * (a + f.rho) + f.z * f.z;
  const double m = 4.0 * a * f.rho / beta2;
  // A_phi = mu0 I / (pi k) sqrt(a / rho) [(1 - m/2) K - E], with
  // sqrt(a/rho) / k = beta / (2 rho).
  const double a_phi =
      Constants::mu0 * loop.current * std::sqrt(beta2) * loop_potential_kernel(m) /
      (2.0 * std::numbers::pi * f.rho);
  return (a_phi / f.rho) * loop.axis.cross(f.rho_vec);
}

Vec3 loop_magnetic_field(const CurrentLoop& loop, const Vec3& p, double min_distance) {
  const LoopFrame f = loop_frame(loop, p);
  check_loop_distance(loop, f, p, min_distance);
  const double a = loop.radius;
  const double r2 = f.rho * f.rho + f.z * f.z;
  const double alpha2 = (a - f.rho) * (a - f.rho) + f.z * f.z;
  const double beta2 = (a + f.rho) * (a + f.rho) + f.z * f.z;
  const double beta = std::sqrt(beta2);
  const double m = 4.0 * a * f.rho / beta2;
  const double C = Constants::mu0 * loop.current / std::numbers::pi;
  const auto [K, E] = elliptic_ke(m);
  const double b_axial = C / (2.0 * alpha2 * beta) * ((a * a - r2) * E + alpha2 * K);
  Vec3 B = b_axial * loop.axis;
  if (f.rho > 0.0) {
    // B_rho = C z / (2 alpha^2 beta rho) [(a^2 + r^2) E - alpha^2 K]
    //       = C z beta / (2 alpha^2 rho) [(1 - m/2) E - (1 - m) K]
    const double b_radial_over_rho =
        C * f.z * beta * loop_radial_kernel(m) / (2.0 * alpha2 * f.rho * f.rho);
    B += b_radial_over_rho * f.rho_vec;
  }
  return B;
}

} // namespace

FieldSource FieldSource::uniform(const Vec3& B) { return FieldSource(UniformField{B}); }

FieldSource FieldSource::current_loop(const Vec3& center, const Vec3& axis, double radius,
                                      double current) {
  if (!(radius > 0.0)) {
    throw GeometryError("current loop radius must be positive");
  }
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError("current loop axis must be a nonzero finite vector");
  }
  return FieldSource(CurrentLoop{center, axis / n, radius, current});
}

FieldSource FieldSource::flux_filament(Curve path, double flux) {
  if (!path.closed()) {
    throw GeometryError("flux filament path must be closed");
  }
  return FieldSource(FluxFilament{std::move(path), flux});
}

FieldSource FieldSource::gauge_shifted(FieldSource inner, GaugeFunction chi) {
  return FieldSource(
      GaugeShifted{std::make_shared<const FieldSource>(std::move(inner)), std::move(chi)});
}

FieldSource FieldSource::composite(std::vector<FieldSource> parts) {
  return FieldSource(Composite{std::move(parts)});
}

Vec3 filament_vector_potential(const Curve& path, double flux, const Vec3& point,
                               double min_distance) {
  Vec3 sum = Vec3::Zero();
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    const auto seg = path.segment(i);
    const double dist = point_segment_distance(point, seg.start, seg.end);
    if (dist <= min_distance) {
      throw_on_source("flux filament", point, dist);
    }
    // int_0^1 dt / |r1 - t L|^3 = (|r1| + |r2|) / (|r1||r2| (|r1||r2| + r1.r2)),
    // and L x r1 = r1 x r2.
    const Vec3 r1 = point - seg.start;
    const Vec3 r2 = point - seg.end;
    const double n1 = r1.norm();
    const double n2 = r2.norm();
    const double denom = n1 * n2 * (n1 * n2 + r1.dot(r2));
    sum += ((n1 + n2) / denom) * r1.cross(r2);
  }
  return (flux / (4.0 * std::numbers::pi)) * sum;
}

Vec3 vector_potential(const FieldSource& source, const Vec3& point, const EvalOptions& opts) {
  return std::visit(
      overloaded{
          [&](const UniformField& u) -> Vec3 { return 0.5 * u.B.cross(point); },
          [&](const CurrentLoop& l) -> Vec3 {
            return loop_vector_potential(l, point, opts.min_distance);
          },
          [&](const FluxFilament& f) -> Vec3 {
            return filament_vector_potential(f.path, f.flux, point, opts.min_distance);
          },
          [&](const GaugeShifted& g) -> Vec3 {
            return vector_potential(*g.inner, point, opts) + g.chi.gradient(point);
          },
          [&](const Composite& c) -> Vec3 {
            Vec3 sum = Vec3::Zero();
            for (const auto& part : c.parts) {
              sum += vector_potential(part, point, opts);
            }
            return sum;
          },
      },
      source.variant());
}

Vec3 magnetic_field(const FieldSource& source, const Vec3& point, const EvalOptions& opts) {
  return std::visit(
      overloaded{
          [&](const UniformField& u) -> Vec3 { return u.B; },
          [&](const CurrentLoop& l) -> Vec3 {
            return loop_magnetic_field(l, point, opts.min_distance);
          },
          [&](const FluxFilament&) -> Vec3 {
            throw UnsupportedSourceError(
                "magnetic field of a flux filament is singular; use its linking number");
          },
          [&](const GaugeShifted& g) -> Vec3 { return magnetic_field(*g.inner, point, opts); },
          [&](const Composite& c) -> Vec3 {
            Vec3 sum = Vec3::Zero();
            for (const auto& part : c.parts) {
              sum += magnetic_field(part, point, opts);
            }
            return sum;
          },
      },
      source.variant());
}

} // namespace abflux
