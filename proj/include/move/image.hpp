#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace move {

// Row-major RGB image with values in [0, 1].
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // height * width * 3

    ImageBuffer() = default;
    ImageBuffer(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0.0) {}

    double& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

// Y = 0.299 R + 0.587 G + 0.114 B, the convention used by the
// single-channel metrics.
std::vector<double> luminance(const ImageBuffer& img);

// Throws std::invalid_argument on size mismatch or out-of-range values.
void validate_image_pair(const ImageBuffer& a, const ImageBuffer& b);

// Deterministic procedural target images, usable instead of a PNG file.
// Known names: "sunrise" (gradient sky, soft sun disc, darker sea) and
// "rings" (colored concentric rings).
ImageBuffer make_builtin_target(const std::string& name, int width, int height);

}  // namespace move
