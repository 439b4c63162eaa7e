#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Minimal netpbm reader/writer covering the four formats we accept as map
// input: P1/P2 (plain bitmap/graymap) and P4/P5 (raw bitmap/graymap), with
// maxval capped at 255.  Bitmap bits follow PBM polarity (1 = black) and are
// widened to gray (1 -> 0, 0 -> 255) so callers can threshold uniformly.

namespace gridplan {

// Decode failure; message always names the byte offset of the offending input.
class PnmError : public std::runtime_error {
public:
    PnmError(std::size_t offset, const std::string& what_arg)
        : std::runtime_error("pnm: byte " + std::to_string(offset) + ": " + what_arg),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct PnmImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // row-major gray values, 0 = black

    std::uint8_t at(int col, int row) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

// Throws PnmError on malformed or truncated input.
PnmImage decode_pnm(std::string_view bytes);

// Raw (binary) encoders; gray uses P5, bit uses P4 with 1 = black.
std::string encode_pgm(int width, int height, const std::vector<std::uint8_t>& gray);
std::string encode_pbm(int width, int height, const std::vector<std::uint8_t>& black_bits);

} // namespace gridplan
