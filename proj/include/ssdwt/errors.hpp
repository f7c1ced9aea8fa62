#pragma once

#include <stdexcept>
#include <string>

namespace ssdwt {

enum class errc {
    bad_magic,
    bad_header,
    truncated,
    out_of_range,
    illegal_decisions,
    illegal_decision_bits,
    corrupt_payload,
    bad_version,
    dimension_mismatch,
    unsupported_mode,
    too_large,
    filter_set_too_small,
    range_guard,
    io_error,
};

const char* errc_name(errc code) noexcept;

class codec_error : public std::runtime_error {
public:
    codec_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw codec_error(code, what);
}

} // namespace ssdwt
