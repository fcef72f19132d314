#pragma once

#include <string>
#include <vector>

namespace slc {

/// Single-channel raster of doubles, row major. Pixel intensities use the
/// canonical [0, 255] range; derived fields (saliency maps, filter outputs)
/// reuse the same container with arbitrary real values.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    bool empty() const { return width <= 0 || height <= 0; }
};

/// Intensity fields and intermediate numeric fields share the raster type.
using RealField = GrayImage;

/// Axis-aligned box, pixel units, (x, y) top-left inclusive.
struct Box {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    long long area() const { return static_cast<long long>(w) * h; }
    bool operator==(const Box&) const = default;
};

/// Throws std::invalid_argument unless dimensions are >= 1 and data length
/// matches width * height.
void require_valid(const GrayImage& img, const char* what);

/// True iff every element is finite.
bool all_finite(const GrayImage& img);

double mean(const GrayImage& img);

GrayImage crop(const GrayImage& img, const Box& box);

/// Bilinear resample to new_w x new_h. Sample points are pixel centers,
/// clamped at the borders.
GrayImage resize_bilinear(const GrayImage& img, int new_w, int new_h);

// 8-bit binary PGM (P5). Loading rejects maxval > 255; save clamps and
// rounds to the nearest integer. A save/load cycle of 8-bit data is exact.
GrayImage load_pgm(const std::string& path);
void save_pgm(const std::string& path, const GrayImage& img);

} // namespace slc
