#pragma once

#include <cstdint>
#include <vector>

namespace texcoh {

// Grayscale raster with real-valued intensities in [0, 255], row-major,
// row 0 at the top. Immutable once constructed; quantization to 8 bits
// happens only at file I/O.
class ImageGrid {
public:
    ImageGrid(int width, int height, double fill = 0.0);
    ImageGrid(int width, int height, std::vector<double> intensities);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return data_.size(); }

    double at(int x, int y) const {
        return data_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)];
    }
    const std::vector<double>& intensities() const noexcept { return data_; }

private:
    int width_;
    int height_;
    std::vector<double> data_;
};

// Interleaved 8-bit RGB raster, row-major.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        const std::size_t i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
        rgb[i] = r;
        rgb[i + 1] = g;
        rgb[i + 2] = b;
    }
};

struct NormalizationSpec {
    double low_percentile = 0.01;   // in [0, 0.5)
    double high_percentile = 0.99;  // in (0.5, 1]
};

struct NormalizeResult {
    ImageGrid image;
    bool degenerate;    // both anchors coincided; output is the input unchanged
    double low_value;   // intensity at the low anchor
    double high_value;  // intensity at the high anchor
};

// Percentile-anchored linear contrast stretch. Anchors a, b are
// nearest-rank percentiles of the pixel multiset; each output pixel is
// clamp(255*(v - a)/(b - a), 0, 255). A frame whose anchors coincide is
// returned unchanged with the degenerate flag set.
NormalizeResult normalize_contrast(const ImageGrid& image, const NormalizationSpec& spec);

// Round half-up to the nearest 8-bit value, clamping to [0, 255] first.
std::uint8_t quantize8(double v);

}  // namespace texcoh
