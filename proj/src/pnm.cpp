#include "gridplan/pnm.hpp"

namespace gridplan {
namespace {

// Cursor over the raw bytes; every read remembers where it happened so errors
// can point at the exact offset.
struct Reader {
    std::string_view data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }

    // Whitespace and '#' comments (to end of line) separate header tokens and
    // plain-format samples.
    void skip_separators() {
        while (!eof()) {
            const char c = data[pos];
            if (c == '#') {
                while (!eof() && data[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                ++pos;
            } else {
                break;
            }
        }
    }

    long read_uint(const char* what) {
        skip_separators();
        const std::size_t start = pos;
        if (eof()) throw PnmError(pos, std::string("unexpected end of file, expected ") + what);
        if (data[pos] < '0' || data[pos] > '9')
            throw PnmError(pos, std::string("expected ") + what);
        long value = 0;
        while (!eof() && data[pos] >= '0' && data[pos] <= '9') {
            value = value * 10 + (data[pos] - '0');
            if (value > 1000000000L) throw PnmError(start, std::string(what) + " out of range");
            ++pos;
        }
        return value;
    }
};

int read_dimension(Reader& r, const char* what) {
    r.skip_separators();
    const std::size_t start = r.pos;
    const long v = r.read_uint(what);
    if (v <= 0) throw PnmError(start, std::string(what) + " must be positive");
    if (v > 1 << 20) throw PnmError(start, std::string(what) + " out of range");
    return static_cast<int>(v);
}

} // namespace

PnmImage decode_pnm(std::string_view bytes) {
    Reader r{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw PnmError(0, "not a PNM file (missing magic number)");
    const char kind = bytes[1];
    if (kind != '1' && kind != '2' && kind != '4' && kind != '5')
        throw PnmError(1, std::string("unsupported format P") + kind);
    r.pos = 2;

    PnmImage img;
    img.width = read_dimension(r, "width");
    img.height = read_dimension(r, "height");
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    img.pixels.resize(n);

    int maxval = 1;
    if (kind == '2' || kind == '5') {
        r.skip_separators();
        const std::size_t start = r.pos;
        const long v = r.read_uint("maxval");
        if (v <= 0) throw PnmError(start, "maxval must be positive");
        if (v > 255) throw PnmError(start, "maxval " + std::to_string(v) + " exceeds 255");
        maxval = static_cast<int>(v);
    }

    switch (kind) {
    case '1': // plain bitmap: '0'/'1' samples, 1 = black
        for (std::size_t i = 0; i < n; ++i) {
            r.skip_separators();
            if (r.eof()) throw PnmError(r.pos, "truncated pixel data");
            const char c = bytes[r.pos];
            if (c != '0' && c != '1') throw PnmError(r.pos, "expected bit 0 or 1");
            img.pixels[i] = (c == '1') ? 0 : 255;
            ++r.pos;
        }
        break;
    case '2': // plain graymap
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t start = r.pos;
            const long v = r.read_uint("pixel value");
            if (v > maxval) throw PnmError(start, "pixel value exceeds maxval");
            img.pixels[i] = static_cast<std::uint8_t>(v * 255 / maxval);
        }
        break;
    case '4': { // raw bitmap: rows padded to whole bytes, MSB first, 1 = black
        if (r.eof()) throw PnmError(r.pos, "truncated pixel data");
        ++r.pos; // exactly one separator byte after the header
        const std::size_t row_bytes = (static_cast<std::size_t>(img.width) + 7) / 8;
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                const std::size_t byte = r.pos + y * row_bytes + x / 8;
                if (byte >= bytes.size()) throw PnmError(bytes.size(), "truncated pixel data");
                const int bit = (static_cast<unsigned char>(bytes[byte]) >> (7 - x % 8)) & 1;
                img.pixels[static_cast<std::size_t>(y) * img.width + x] = bit ? 0 : 255;
            }
        }
        break;
    }
    case '5': { // raw graymap: one byte per pixel (maxval <= 255)
        if (r.eof()) throw PnmError(r.pos, "truncated pixel data");
        ++r.pos;
        if (r.pos + n > bytes.size()) throw PnmError(bytes.size(), "truncated pixel data");
        for (std::size_t i = 0; i < n; ++i) {
            const long v = static_cast<unsigned char>(bytes[r.pos + i]);
            if (v > maxval) throw PnmError(r.pos + i, "pixel value exceeds maxval");
            img.pixels[i] = static_cast<std::uint8_t>(v * 255 / maxval);
        }
        break;
    }
    }
    return img;
}

std::string encode_pgm(int width, int height, const std::vector<std::uint8_t>& gray) {
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(gray.data()), gray.size());
    return out;
}

std::string encode_pbm(int width, int height, const std::vector<std::uint8_t>& black_bits) {
    std::string out = "P4\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
    const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
    std::string payload(row_bytes * height, '\0');
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (black_bits[static_cast<std::size_t>(y) * width + x])
                payload[y * row_bytes + x / 8] |= static_cast<char>(0x80 >> (x % 8));
    out += payload;
    return out;
}

} // namespace gridplan
