#pragma once

#include <filesystem>
#include <vector>

#include "texcoh/image.hpp"

namespace texcoh {

// Reads a binary PGM (P5, maxval <= 255) or an 8-bit single-channel PNG.
// The format is detected from the file's magic bytes, not the extension.
// Anything else (ASCII PGM, 16-bit samples, color or palette PNG) is
// rejected with an IoError.
ImageGrid load_image(const std::filesystem::path& path);

// Writes a binary PGM (P5, maxval 255); intensities are rounded half-up.
void save_pgm(const ImageGrid& image, const std::filesystem::path& path);

// Writes an 8-bit RGB PNG.
void save_rgb_png(const RgbImage& image, const std::filesystem::path& path);

// Writes a binary PBM (P4). `bits` holds one 0/1 byte per pixel, row-major.
void save_pbm(int width, int height, const std::vector<std::uint8_t>& bits,
              const std::filesystem::path& path);

}  // namespace texcoh
