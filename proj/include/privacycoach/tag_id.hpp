#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace privacycoach {

enum class TagIdError { empty, non_hex, odd_digit_count, bad_length };

/// Wire token for the reason, e.g. "odd-digit-count".
std::string_view to_string(TagIdError error) noexcept;

class InvalidTagId : public std::invalid_argument {
public:
    InvalidTagId(TagIdError reason, std::string_view input);

    TagIdError reason() const noexcept { return reason_; }

private:
    TagIdError reason_;
};

/**
 * Identifier read from an RFID tag and the only key the Policy Provider ever
 * sees. Holds 2 to 16 bytes; the canonical text form is lowercase hex with no
 * separators. Parsing is case-insensitive.
 */
class TagId {
public:
    static constexpr std::size_t kMinBytes = 2;
    static constexpr std::size_t kMaxBytes = 16;

    /// Throws InvalidTagId.
    static TagId parse(std::string_view text);

    /// Returns the reason `text` is not a tag id, or nullopt if it is one.
    static std::optional<TagIdError> check(std::string_view text) noexcept;

    const std::string& str() const noexcept { return canonical_; }
    std::vector<std::uint8_t> bytes() const;

    friend auto operator<=>(const TagId&, const TagId&) = default;

private:
    explicit TagId(std::string canonical) : canonical_(std::move(canonical)) {}

    std::string canonical_;
};

inline TagId parse_tag_id(std::string_view text) { return TagId::parse(text); }

inline std::ostream& operator<<(std::ostream& os, const TagId& tag) {
    return os << tag.str();
}

} // namespace privacycoach
