#pragma once

#include <cstdint>
#include <vector>

#include "ssdwt/errors.hpp"

namespace ssdwt {

using sample_t = std::int32_t;

// 2-D array of signed integer samples, row-major. Holds raw images and
// in-place transform state alike.
struct sample_grid {
    int width = 0;
    int height = 0;
    int bit_depth = 8; // bits per sample of the source image, 1..16
    std::vector<sample_t> samples;

    sample_grid() = default;
    sample_grid(int w, int h, int depth, sample_t fill = 0)
        : width(w), height(h), bit_depth(depth),
          samples(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
        if (w < 1 || h < 1 || depth < 1 || depth > 16)
            fail(errc::bad_header, "invalid grid geometry");
    }

    std::size_t pixel_count() const { return samples.size(); }

    sample_t& at(int x, int y) {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    sample_t at(int x, int y) const {
        return samples[static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const sample_grid& other) const = default;
};

} // namespace ssdwt
