#include "tcidm/geometry.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

#include "nlohmann/json.hpp"

namespace tcidm {

namespace {
constexpr double kOrthoTol = 1e-9;
constexpr double kRankRatio = 1e-8;
}  // namespace

Rotation Rotation::from_matrix(const Eigen::Matrix3d& m) {
    const double ortho_err = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (ortho_err > kOrthoTol)
        fail(ErrorCode::DegenerateConfiguration,
             "matrix not orthonormal (max |R^T R - I| = " + std::to_string(ortho_err) + ")");
    if (std::abs(m.determinant() - 1.0) > kOrthoTol)
        fail(ErrorCode::DegenerateConfiguration,
             "matrix determinant " + std::to_string(m.determinant()) + ", expected +1");
    return Rotation(m);
}

Rotation Rotation::from_quaternion(double w, double x, double y, double z) {
    const double norm = std::sqrt(w * w + x * x + y * y + z * z);
    if (std::abs(norm - 1.0) > kOrthoTol)
        fail(ErrorCode::DegenerateConfiguration,
             "quaternion norm " + std::to_string(norm) + ", expected 1");
    Quat q(w / norm, x / norm, y / norm, z / norm);
    return Rotation(q.toRotationMatrix());
}

Rotation Rotation::from_axis_angle(const Vec3& axis, double angle_rad) {
    const double n = axis.norm();
    if (n <= 0.0) fail(ErrorCode::DegenerateConfiguration, "zero rotation axis");
    return Rotation(Eigen::AngleAxisd(angle_rad, axis / n).toRotationMatrix());
}

Quat Rotation::quaternion() const {
    Quat q(m_);
    q.normalize();
    if (q.w() < 0.0) q.coeffs() = -q.coeffs();
    return q;
}

double Rotation::angle_to(const Rotation& other) const {
    // trace(R_a^T R_b) = 1 + 2 cos(theta)
    const double tr = (m_.transpose() * other.m_).trace();
    const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    return RigidTransform{a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

double rotation_angle_between(const RigidTransform& a, const RigidTransform& b) {
    return a.rotation.angle_to(b.rotation);
}

double translation_distance(const RigidTransform& a, const RigidTransform& b) {
    return (a.translation - b.translation).norm();
}

std::string RigidTransform::to_json() const {
    const Quat q = rotation.quaternion();
    nlohmann::json j;
    j["q"] = {q.w(), q.x(), q.y(), q.z()};
    j["t"] = {translation.x(), translation.y(), translation.z()};
    return j.dump();
}

RigidTransform RigidTransform::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("q") || !j.contains("t"))
        fail(ErrorCode::ParseError, "transform JSON must contain q and t");
    const auto& q = j.at("q");
    const auto& t = j.at("t");
    if (q.size() != 4 || t.size() != 3)
        fail(ErrorCode::ParseError, "transform JSON: q must have 4 entries, t must have 3");
    RigidTransform out;
    out.rotation = Rotation::from_quaternion(q[0], q[1], q[2], q[3]);
    out.translation = Vec3(t[0], t[1], t[2]);
    return out;
}

void PointSet::validate() const {
    if (points.empty()) fail(ErrorCode::DegenerateConfiguration, "empty point set");
    if (weights) {
        if (weights->size() != points.size())
            fail(ErrorCode::LengthMismatch, "weights length " + std::to_string(weights->size()) +
                                                " != points length " + std::to_string(points.size()));
        double sum = 0.0;
        for (double w : *weights) {
            if (w < 0.0) fail(ErrorCode::DegenerateConfiguration, "negative weight");
            sum += w;
        }
        if (sum <= 0.0) fail(ErrorCode::DegenerateConfiguration, "weights sum to zero");
    }
}

namespace {

const std::vector<double>* pick_weights(const PointSet& source, const PointSet& target) {
    if (source.weights) return &*source.weights;
    if (target.weights) return &*target.weights;
    return nullptr;
}

}  // namespace

RigidTransform kabsch_align(const PointSet& source, const PointSet& target) {
    if (source.size() != target.size())
        fail(ErrorCode::LengthMismatch, "source has " + std::to_string(source.size()) +
                                            " points, target has " + std::to_string(target.size()));
    const std::size_t n = source.size();
    if (n < 3)
        fail(ErrorCode::DegenerateConfiguration,
             "need at least 3 correspondences, got " + std::to_string(n));
    source.validate();
    target.validate();

    const std::vector<double>* w = pick_weights(source, target);
    double wsum = 0.0;
    Vec3 cs = Vec3::Zero(), ct = Vec3::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w ? (*w)[i] : 1.0;
        cs += wi * source.points[i];
        ct += wi * target.points[i];
        wsum += wi;
    }
    cs /= wsum;
    ct /= wsum;

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w ? (*w)[i] : 1.0;
        cov += wi * (source.points[i] - cs) * (target.points[i] - ct).transpose();
    }

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector3d sigma = svd.singularValues();
    // Rank < 2 leaves a rotation about the dominant axis unconstrained.
    if (sigma(0) <= 0.0 || sigma(1) / sigma(0) < kRankRatio)
        fail(ErrorCode::DegenerateConfiguration,
             "point configuration is (near-)collinear: sigma = [" + std::to_string(sigma(0)) + ", " +
                 std::to_string(sigma(1)) + ", " + std::to_string(sigma(2)) + "]");

    Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
    d(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    const Eigen::Matrix3d r = svd.matrixV() * d * svd.matrixU().transpose();

    RigidTransform out;
    out.rotation = Rotation::from_matrix(r);
    out.translation = ct - r * cs;
    return out;
}

double residual(const RigidTransform& transform, const PointSet& source, const PointSet& target) {
    if (source.size() != target.size())
        fail(ErrorCode::LengthMismatch, "source has " + std::to_string(source.size()) +
                                            " points, target has " + std::to_string(target.size()));
    const std::vector<double>* w = pick_weights(source, target);
    double sum = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const double wi = w ? (*w)[i] : 1.0;
        sum += wi * (transform.apply(source.points[i]) - target.points[i]).squaredNorm();
    }
    return sum;
}

}  // namespace tcidm
