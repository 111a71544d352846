#pragma once

#include <cstdint>
#include <vector>

#include "texcoh/image.hpp"

namespace texcoh {

// Radial directions, angles measured from the +y axis toward +x in raster
// coordinates (y grows downward). The unit step for direction i is
// (sin theta_i, cos theta_i); steps for the four axis directions are exact.
class DirectionSet {
public:
    // count must be even and >= 4.
    explicit DirectionSet(int count);

    int count() const noexcept { return count_; }
    double angle(int i) const { return angles_[static_cast<std::size_t>(i)]; }
    double step_x(int i) const { return step_x_[static_cast<std::size_t>(i)]; }
    double step_y(int i) const { return step_y_[static_cast<std::size_t>(i)]; }

private:
    int count_;
    std::vector<double> angles_;
    std::vector<double> step_x_;
    std::vector<double> step_y_;
};

// Saturation band for the scan along a ray. The order-0 band is absolute:
// |M0_i(n) - M0| <= absolute_t with absolute_t = fraction * sqrt(M2) of the
// analyzed frame. The order-k band is relative: |Mk_i(n) - Mk| <= fraction*|Mk|.
struct ThresholdSpec {
    double fraction = 0.5;
    double absolute_t = 0.0;
};

ThresholdSpec make_threshold(const ImageGrid& image, double fraction);

// Intensity at fractional pixel coordinates by bilinear interpolation of
// the four surrounding pixel centers. Valid for x in [0, width-1] and
// y in [0, height-1].
double sample_bilinear(const ImageGrid& image, double x, double y);

// Running directional mean M0_i at radius n: the mean of the n unit-step
// samples b(p + j*step), j = 1..n.
double directional_moment0(const ImageGrid& image, int px, int py,
                           const DirectionSet& dirs, int dir, int n);

// Running directional central moment Mk_i at radius n, centered on the
// same-radius running mean.
double directional_momentk(const ImageGrid& image, int px, int py,
                           const DirectionSet& dirs, int dir, int n, int k);

struct LengthResult {
    int length = 0;
    bool censored = false;
};

// Smallest n in [1, r_max] whose running directional moment enters the
// saturation band around the frame moment; (r_max, censored) if none does.
// order is 0 or a moment order k >= 2. p must be at least r_max away from
// every frame edge.
LengthResult coherence_length(const ImageGrid& image, int px, int py,
                              const DirectionSet& dirs, int dir,
                              const ThresholdSpec& threshold, int r_max, int order = 0);

// Coherence lengths for every interior pixel and direction. The margin on
// all four sides equals r_max, so every retained pixel supports full-length
// rays in all directions. Interior coordinates in the accessors are frame
// coordinates (x in [margin, width-margin), same for y).
class CoherenceField {
public:
    int frame_width() const noexcept { return frame_width_; }
    int frame_height() const noexcept { return frame_height_; }
    int margin() const noexcept { return margin_; }
    int interior_width() const noexcept { return interior_width_; }
    int interior_height() const noexcept { return interior_height_; }
    int direction_count() const noexcept { return direction_count_; }
    int r_max() const noexcept { return r_max_; }
    int order_k() const noexcept { return order_k_; }  // 0 when only order 0 was extracted
    const ThresholdSpec& threshold() const noexcept { return threshold_; }

    std::size_t interior_pixels() const noexcept {
        return static_cast<std::size_t>(interior_width_) * static_cast<std::size_t>(interior_height_);
    }
    std::size_t entries() const noexcept { return interior_pixels() * static_cast<std::size_t>(direction_count_); }

    int length0(int x, int y, int dir) const { return lengths0_[index(x, y, dir)]; }
    bool censored0(int x, int y, int dir) const { return censored0_[index(x, y, dir)] != 0; }
    int lengthk(int x, int y, int dir) const { return lengthsk_[index(x, y, dir)]; }
    bool censoredk(int x, int y, int dir) const { return censoredk_[index(x, y, dir)] != 0; }

    const std::vector<std::uint16_t>& lengths0() const noexcept { return lengths0_; }
    const std::vector<std::uint8_t>& censored0() const noexcept { return censored0_; }
    const std::vector<std::uint16_t>& lengthsk() const noexcept { return lengthsk_; }
    const std::vector<std::uint8_t>& censoredk() const noexcept { return censoredk_; }

    std::size_t index(int x, int y, int dir) const {
        const std::size_t ix = static_cast<std::size_t>(x - margin_);
        const std::size_t iy = static_cast<std::size_t>(y - margin_);
        return (iy * static_cast<std::size_t>(interior_width_) + ix) * static_cast<std::size_t>(direction_count_) +
               static_cast<std::size_t>(dir);
    }

private:
    int frame_width_ = 0;
    int frame_height_ = 0;
    int margin_ = 0;
    int interior_width_ = 0;
    int interior_height_ = 0;
    int direction_count_ = 0;
    int r_max_ = 0;
    int order_k_ = 0;
    ThresholdSpec threshold_;
    std::vector<std::uint16_t> lengths0_;
    std::vector<std::uint8_t> censored0_;
    std::vector<std::uint16_t> lengthsk_;  // empty when order_k_ == 0
    std::vector<std::uint8_t> censoredk_;

    friend class FieldBuilder;
};

// Extracts the field. order is 0 (order-0 lengths only) or k >= 2 (order-0
// and order-k lengths in one scan). threads = 0 picks the hardware thread
// count; the result is identical for any thread count. Requires
// 2*r_max < min(width, height).
CoherenceField coherence_field(const ImageGrid& image, const DirectionSet& dirs,
                               const ThresholdSpec& threshold, int r_max,
                               int order = 0, int threads = 0);

}  // namespace texcoh
