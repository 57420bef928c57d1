#pragma once

#include <string>
#include <vector>

#include "move/image.hpp"

namespace move {

// 8-bit RGB PNG with channel values round(255 * v). Throws IoError.
void save_png(const ImageBuffer& img, const std::string& path);

// Loads an 8-bit PNG of any color type as RGB in [0, 1].
ImageBuffer load_png(const std::string& path);

// Half-pixel-center bilinear resampling (the pinned method for fitting
// target images to the run resolution).
ImageBuffer resize_bilinear(const ImageBuffer& src, int width, int height);

// Tiles images left-to-right, top-to-bottom into ceil(sqrt(n)) columns.
// All tiles must share dimensions.
ImageBuffer tile_grid(const std::vector<ImageBuffer>& tiles);

}  // namespace move
