#include "move/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace move {

std::vector<double> luminance(const ImageBuffer& img) {
    std::vector<double> y(img.pixel_count());
    for (std::size_t p = 0; p < y.size(); ++p) {
        const double* px = img.data.data() + p * 3;
        y[p] = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
    }
    return y;
}

void validate_image_pair(const ImageBuffer& a, const ImageBuffer& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("image dimensions differ");
    if (a.width <= 0 || a.height <= 0) throw std::invalid_argument("empty image");
    for (const auto* img : {&a, &b}) {
        if (img->data.size() != img->pixel_count() * 3)
            throw std::invalid_argument("image buffer length inconsistent with dimensions");
        for (double v : img->data)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::invalid_argument("image values outside [0, 1]");
    }
}

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

ImageBuffer sunrise(int w, int h) {
    ImageBuffer img(w, h);
    const double horizon = 0.62;
    const double sun_x = 0.5, sun_y = 0.42, sun_r = 0.16;
    for (int y = 0; y < h; ++y) {
        const double v = (h > 1) ? static_cast<double>(y) / (h - 1) : 0.0;
        for (int x = 0; x < w; ++x) {
            const double u = (w > 1) ? static_cast<double>(x) / (w - 1) : 0.0;
            double r, g, b;
            if (v < horizon) {
                const double t = v / horizon;  // 0 at top
                r = 0.95 - 0.25 * t;
                g = 0.45 + 0.25 * t;
                b = 0.30 + 0.30 * t;
            } else {
                const double t = (v - horizon) / (1.0 - horizon);
                r = 0.25 - 0.10 * t;
                g = 0.30 - 0.12 * t;
                b = 0.45 - 0.15 * t;
            }
            const double d = std::hypot(u - sun_x, v - sun_y);
            const double glow = std::exp(-(d * d) / (2.0 * sun_r * sun_r));
            r += 0.6 * glow;
            g += 0.5 * glow;
            b += 0.25 * glow;
            if (v >= horizon) {
                // sun reflection stripe on the water
                const double stripe = std::exp(-std::pow((u - sun_x) / 0.08, 2.0));
                const double fade = 1.0 - (v - horizon) / (1.0 - horizon);
                r += 0.35 * stripe * fade;
                g += 0.25 * stripe * fade;
            }
            img.at(y, x, 0) = clamp01(r);
            img.at(y, x, 1) = clamp01(g);
            img.at(y, x, 2) = clamp01(b);
        }
    }
    return img;
}

ImageBuffer rings(int w, int h) {
    ImageBuffer img(w, h);
    for (int y = 0; y < h; ++y) {
        const double v = (h > 1) ? 2.0 * y / (h - 1) - 1.0 : 0.0;
        for (int x = 0; x < w; ++x) {
            const double u = (w > 1) ? 2.0 * x / (w - 1) - 1.0 : 0.0;
            const double r = std::hypot(u, v);
            const double wave = 0.5 + 0.5 * std::cos(6.0 * 3.14159265358979323846 * r);
            img.at(y, x, 0) = clamp01(wave);
            img.at(y, x, 1) = clamp01(0.5 + 0.5 * std::cos(6.0 * 3.14159265358979323846 * r + 2.0));
            img.at(y, x, 2) = clamp01(1.0 - 0.8 * r);
        }
    }
    return img;
}

}  // namespace

ImageBuffer make_builtin_target(const std::string& name, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("builtin target: bad dimensions");
    if (name == "sunrise") return sunrise(width, height);
    if (name == "rings") return rings(width, height);
    throw std::invalid_argument("unknown builtin target: " + name);
}

}  // namespace move
