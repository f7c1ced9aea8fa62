#include "ssdwt/pgm.hpp"

#include <cctype>
#include <fstream>

#include "ssdwt/errors.hpp"

namespace ssdwt {

namespace {

struct token_reader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    // Reads the next decimal token, skipping whitespace and '#' comments.
    long next_number() {
        for (;;) {
            if (pos >= bytes.size())
                fail(errc::bad_header, "unexpected end of header");
            const int c = bytes[pos];
            if (std::isspace(c)) {
                ++pos;
            } else if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n')
                    ++pos;
            } else {
                break;
            }
        }
        if (!std::isdigit(bytes[pos]))
            fail(errc::bad_header, "non-numeric header token");
        long value = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1'000'000'000L)
                fail(errc::bad_header, "header value too large");
            ++pos;
        }
        return value;
    }
};

int depth_for_maxval(long maxval) {
    int depth = 0;
    while ((1L << depth) - 1 < maxval)
        ++depth;
    return depth;
}

} // namespace

sample_grid read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        fail(errc::bad_magic, "not a binary PGM (P5) stream");

    token_reader rd{bytes, 2};
    const long width = rd.next_number();
    const long height = rd.next_number();
    const long maxval = rd.next_number();
    if (width < 1 || height < 1 || maxval < 1 || maxval > 65535)
        fail(errc::bad_header, "bad dimensions or maxval");

    // Exactly one whitespace byte separates the header from the payload.
    if (rd.pos >= bytes.size() || !std::isspace(bytes[rd.pos]))
        fail(errc::bad_header, "missing header terminator");
    ++rd.pos;

    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    const std::size_t n = static_cast<std::size_t>(width) * height;
    if (bytes.size() - rd.pos < n * bytes_per_sample)
        fail(errc::truncated, "payload shorter than width*height samples");

    sample_grid grid(static_cast<int>(width), static_cast<int>(height),
                     depth_for_maxval(maxval));
    const std::uint8_t* p = bytes.data() + rd.pos;
    if (bytes_per_sample == 1) {
        for (std::size_t i = 0; i < n; ++i)
            grid.samples[i] = p[i];
    } else {
        for (std::size_t i = 0; i < n; ++i)
            grid.samples[i] = (p[2 * i] << 8) | p[2 * i + 1];
    }
    return grid;
}

std::vector<std::uint8_t> write_pgm(const sample_grid& grid) {
    const long maxval = (1L << grid.bit_depth) - 1;
    for (sample_t v : grid.samples)
        if (v < 0 || v > maxval)
            fail(errc::out_of_range, "sample outside declared bit depth");

    std::string header = "P5\n" + std::to_string(grid.width) + " " +
                         std::to_string(grid.height) + "\n" +
                         std::to_string(maxval) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (maxval > 255) {
        for (sample_t v : grid.samples) {
            out.push_back(static_cast<std::uint8_t>(v >> 8));
            out.push_back(static_cast<std::uint8_t>(v & 0xff));
        }
    } else {
        for (sample_t v : grid.samples)
            out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

sample_grid load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::io_error, "cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

void save_pgm_file(const std::string& path, const sample_grid& grid) {
    const auto bytes = write_pgm(grid);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(errc::io_error, "cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        fail(errc::io_error, "short write to " + path);
}

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::bad_magic: return "BadMagic";
    case errc::bad_header: return "BadHeader";
    case errc::truncated: return "Truncated";
    case errc::out_of_range: return "OutOfRange";
    case errc::illegal_decisions: return "IllegalDecisions";
    case errc::illegal_decision_bits: return "IllegalDecisionBits";
    case errc::corrupt_payload: return "CorruptPayload";
    case errc::bad_version: return "BadVersion";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::unsupported_mode: return "UnsupportedMode";
    case errc::too_large: return "TooLarge";
    case errc::filter_set_too_small: return "FilterSetTooSmall";
    case errc::range_guard: return "RangeGuard";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace ssdwt
