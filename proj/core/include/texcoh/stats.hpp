#pragma once

#include <map>
#include <vector>

#include "texcoh/image.hpp"

namespace texcoh {

// Mean intensity and central moments of a frame or window.
// quality_ratio is sqrt(M2)/M0: 0 when both vanish, +infinity when the
// mean is zero but the variance is not.
struct MomentSummary {
    double m0 = 0.0;
    std::map<int, double> mk;  // moment order (>= 2) -> central moment
    double quality_ratio = 0.0;

    double m2() const { return mk.at(2); }
};

// Mean intensity over all pixels.
double global_mean(const ImageGrid& image);

// Mean of (b - M0)^k over all pixels, k >= 2.
double global_moment(const ImageGrid& image, int k);

struct WindowRect {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;
};

// Moments of the window's pixels, centered on the window's own mean.
// Order 2 is always computed; `orders` may request more.
MomentSummary windowed_summary(const ImageGrid& image, const WindowRect& window,
                               const std::vector<int>& orders = {2});

// Lattice of window summaries covering the frame. Edge cells may be
// smaller than window_size; every pixel belongs to exactly one cell.
struct HomogeneityGrid {
    int window_size = 0;
    double acceptance_limit = 0.5;
    int cols = 0;
    int rows = 0;
    std::vector<MomentSummary> cells;  // row-major
    MomentSummary frame;

    const MomentSummary& cell(int cx, int cy) const {
        return cells[static_cast<std::size_t>(cy) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(cx)];
    }
    bool cell_homogeneous(int cx, int cy) const { return cell(cx, cy).quality_ratio <= acceptance_limit; }
    bool frame_homogeneous() const { return frame.quality_ratio <= acceptance_limit; }
    int homogeneous_count() const;
};

HomogeneityGrid homogeneity_lattice(const ImageGrid& image, int window_size, double acceptance_limit);

}  // namespace texcoh
