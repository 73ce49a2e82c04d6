#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gs2d {

// Dense float image, row-major, channel-interleaved. Nominal value range
// is [0,1]; intermediate buffers (gradients) may hold anything finite.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<double> data;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c, double fill = 0.0)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, fill) {
        if (w < 0 || h < 0 || (c != 1 && c != 3))
            throw std::invalid_argument("ImageBuffer: bad dimensions");
    }

    size_t size() const { return data.size(); }

    double& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    bool same_shape(const ImageBuffer& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

inline constexpr double LUMA_R = 0.299;
inline constexpr double LUMA_G = 0.587;
inline constexpr double LUMA_B = 0.114;

// BT.601 luma of one pixel; 1-channel images pass through.
inline double luma_at(const ImageBuffer& img, int x, int y) {
    if (img.channels == 1) return img.at(x, y, 0);
    return LUMA_R * img.at(x, y, 0) + LUMA_G * img.at(x, y, 1) + LUMA_B * img.at(x, y, 2);
}

}  // namespace gs2d
