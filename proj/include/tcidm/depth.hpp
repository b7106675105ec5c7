#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcidm/geometry.hpp"

namespace tcidm {

/// Dense per-frame depth raster, row-major with row 0 at the top. Depths are
/// meters when metric, arbitrary affine scale when relative. Valid pixels
/// carry finite, strictly positive values; invalid pixels hold the
/// non-positive sentinel 0.
struct DepthFrame {
    int width = 0;
    int height = 0;
    std::vector<float> values;
    std::vector<std::uint8_t> valid;

    static DepthFrame filled(int width, int height, float value);

    std::int64_t pixel_count() const { return static_cast<std::int64_t>(width) * height; }
    float at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
    bool is_valid(int x, int y) const { return valid[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, float v) {
        const std::size_t i = static_cast<std::size_t>(y) * width + x;
        values[i] = v;
        valid[i] = v > 0.0f ? 1 : 0;
    }

    void validate() const;
};

/// Affine depth upgrade D_metric = s * D_relative + d.
struct ScaleShift {
    double s = 1.0;  // dimensionless, > 0
    double d = 0.0;  // meters
};

struct CameraIntrinsics {
    double fx = 0.0, fy = 0.0;  // focal lengths, pixels
    double cx = 0.0, cy = 0.0;  // principal point, pixels

    void validate(int width, int height) const;
    std::string to_json() const;
    static CameraIntrinsics from_json(const std::string& text);
};

/// Camera (or tool) pose per frame with strictly increasing timestamps.
struct PoseSequence {
    std::vector<RigidTransform> poses;
    std::vector<double> frame_times;  // seconds

    std::size_t size() const { return poses.size(); }
    void validate() const;

    std::string to_json() const;
    static PoseSequence from_json(const std::string& text);
};

struct FitOptions {
    int stride = 1;            // regular-grid subsampling of the domain
    bool trimmed_refit = false;  // drop the worst 10% residual pixels once, refit
};

struct ScaleShiftFit {
    ScaleShift params;
    double rms_residual = 0.0;  // meters, over the pixels used by the final fit
    std::int64_t pixels_used = 0;
    bool trimmed = false;
};

/// Pixel indices valid in both frames, subsampled on a regular grid.
std::vector<std::int64_t> joint_valid_domain(const DepthFrame& a, const DepthFrame& b,
                                             int stride = 1);

/// Closed-form least squares for (s, d) minimising
/// sum_{i in domain} (s * relative[i] + d - metric_ref[i])^2.
/// Throws InsufficientOverlap (|domain| < 2), DegenerateDepth (no variance in
/// the relative depths) and NonPositiveScale (optimum has s <= 0; never clamps).
ScaleShiftFit fit_scale_shift(const DepthFrame& relative, const DepthFrame& metric_ref,
                              const std::vector<std::int64_t>& domain);

/// Domain defaulting to all jointly valid pixels (with stride), plus the
/// optional one-pass trimmed refit for outlier-laden generated depth.
ScaleShiftFit fit_scale_shift_auto(const DepthFrame& relative, const DepthFrame& metric_ref,
                                   const FitOptions& options = {});

/// Per-frame affine application. Validity is preserved except where the
/// mapped value lands <= 0, which marks the pixel invalid.
std::vector<DepthFrame> apply_scale_shift(const std::vector<DepthFrame>& frames,
                                          const ScaleShift& params);
DepthFrame apply_scale_shift(const DepthFrame& frame, const ScaleShift& params);

/// Per-frame statistics emitted alongside apply_scale_shift; drift in the
/// generated depth shows up as shifting means or growing invalidation.
struct DepthFrameStats {
    int frame = 0;
    std::int64_t valid_pixels = 0;
    std::int64_t invalidated_pixels = 0;  // killed by the positivity guard
    double mean_depth = 0.0;              // meters, over valid output pixels
};
std::vector<DepthFrameStats> alignment_stats(const std::vector<DepthFrame>& input,
                                             const std::vector<DepthFrame>& output);

/// Upgrade a relative pose sequence to metric: scale translations by s, then
/// left-multiply the single rigid correction that maps scaled frame-0 onto
/// anchor_gt. Inter-frame rotations are preserved exactly; inter-frame
/// translations scale by exactly s.
PoseSequence metricize_poses(const PoseSequence& rel, const ScaleShift& scale,
                             const RigidTransform& anchor_gt);

}  // namespace tcidm
