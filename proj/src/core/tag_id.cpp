#include "privacycoach/tag_id.hpp"

#include <algorithm>

namespace privacycoach {

namespace {

int hex_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string describe(TagIdError reason, std::string_view input) {
    std::string msg = "invalid tag id";
    if (!input.empty() && input.size() <= 64) {
        msg += " '";
        msg += input;
        msg += "'";
    }
    msg += ": ";
    switch (reason) {
        case TagIdError::empty:           msg += "empty"; break;
        case TagIdError::non_hex:         msg += "contains non-hex characters"; break;
        case TagIdError::odd_digit_count: msg += "odd number of hex digits"; break;
        case TagIdError::bad_length:      msg += "must be 4 to 32 hex digits"; break;
    }
    return msg;
}

} // namespace

std::string_view to_string(TagIdError error) noexcept {
    switch (error) {
        case TagIdError::empty:           return "empty";
        case TagIdError::non_hex:         return "non-hex";
        case TagIdError::odd_digit_count: return "odd-digit-count";
        case TagIdError::bad_length:      return "bad-length";
    }
    return "unknown";
}

InvalidTagId::InvalidTagId(TagIdError reason, std::string_view input)
    : std::invalid_argument(describe(reason, input)), reason_(reason) {}

std::optional<TagIdError> TagId::check(std::string_view text) noexcept {
    if (text.empty()) return TagIdError::empty;
    if (!std::all_of(text.begin(), text.end(), [](char c) { return hex_value(c) >= 0; }))
        return TagIdError::non_hex;
    if (text.size() % 2 != 0) return TagIdError::odd_digit_count;
    if (text.size() < 2 * kMinBytes || text.size() > 2 * kMaxBytes) return TagIdError::bad_length;
    return std::nullopt;
}

TagId TagId::parse(std::string_view text) {
    if (auto error = check(text)) throw InvalidTagId(*error, text);
    std::string canonical(text);
    std::transform(canonical.begin(), canonical.end(), canonical.begin(), [](char c) {
        return (c >= 'A' && c <= 'F') ? static_cast<char>(c - 'A' + 'a') : c;
    });
    return TagId(std::move(canonical));
}

std::vector<std::uint8_t> TagId::bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(canonical_.size() / 2);
    for (std::size_t i = 0; i < canonical_.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>(hex_value(canonical_[i]) * 16 + hex_value(canonical_[i + 1])));
    }
    return out;
}

} // namespace privacycoach
