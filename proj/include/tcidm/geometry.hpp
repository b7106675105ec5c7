#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>
#include <string>
#include <vector>

#include "tcidm/error.hpp"

namespace tcidm {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;  // (w, x, y, z)

/// Proper rotation in SO(3). Canonical storage is the 3x3 matrix; the
/// quaternion view is used for compact serialization and always carries a
/// non-negative w.
class Rotation {
  public:
    Rotation() : m_(Eigen::Matrix3d::Identity()) {}

    /// Validates orthonormality (R^T R = I within 1e-9) and det = +1.
    static Rotation from_matrix(const Eigen::Matrix3d& m);
    /// Validates unit norm within 1e-9, then canonicalises the sign.
    static Rotation from_quaternion(double w, double x, double y, double z);
    static Rotation from_axis_angle(const Vec3& axis, double angle_rad);
    static Rotation identity() { return Rotation(); }

    const Eigen::Matrix3d& matrix() const { return m_; }
    /// Unit quaternion with w >= 0.
    Quat quaternion() const;

    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    Rotation operator*(const Rotation& other) const { return Rotation(m_ * other.m_); }
    Rotation inverse() const { return Rotation(m_.transpose()); }

    /// Geodesic distance to another rotation, radians in [0, pi].
    double angle_to(const Rotation& other) const;
    double angle() const { return angle_to(Rotation()); }

  private:
    explicit Rotation(const Eigen::Matrix3d& m) : m_(m) {}
    Eigen::Matrix3d m_;
};

/// SE(3) element: x -> R x + t.
struct RigidTransform {
    Rotation rotation;
    Vec3 translation{0.0, 0.0, 0.0};

    static RigidTransform identity() { return RigidTransform{}; }

    Vec3 apply(const Vec3& x) const { return rotation * x + translation; }
    RigidTransform inverse() const {
        Rotation rinv = rotation.inverse();
        return RigidTransform{rinv, -(rinv * translation)};
    }

    std::string to_json() const;
    static RigidTransform from_json(const std::string& text);
};

/// compose(a, b).apply(x) == a.apply(b.apply(x))
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
inline RigidTransform operator*(const RigidTransform& a, const RigidTransform& b) {
    return compose(a, b);
}

/// Geodesic rotation angle plus translation distance between two transforms.
double rotation_angle_between(const RigidTransform& a, const RigidTransform& b);
double translation_distance(const RigidTransform& a, const RigidTransform& b);

/// Ordered point set with optional non-negative weights (same length,
/// summing to > 0). Weights ride with the correspondence, so kabsch_align
/// takes them from `source` and falls back to `target`.
struct PointSet {
    std::vector<Vec3> points;
    std::optional<std::vector<double>> weights;

    std::size_t size() const { return points.size(); }
    void validate() const;
};

/// Closed-form weighted Procrustes fit: the (R, p) minimising
/// sum_i w_i ||R s_i + p - t_i||^2, reflection-corrected so det(R) = +1.
/// Throws DegenerateConfiguration when fewer than 3 points are given or the
/// source covariance has rank < 2 (sigma2/sigma1 < 1e-8), i.e. the rotation
/// is underdetermined and the caller must widen the point set.
RigidTransform kabsch_align(const PointSet& source, const PointSet& target);

/// Weighted sum of squared distances ||T(s_i) - t_i||^2 (meters^2, summed).
double residual(const RigidTransform& transform, const PointSet& source, const PointSet& target);

}  // namespace tcidm
