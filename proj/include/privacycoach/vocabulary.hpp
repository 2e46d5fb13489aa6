#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace privacycoach {

enum class PolicyKind : std::uint8_t { badge, product };

inline constexpr std::array<PolicyKind, 2> kAllKinds{PolicyKind::badge, PolicyKind::product};

std::string_view to_string(PolicyKind kind) noexcept;
std::optional<PolicyKind> parse_policy_kind(std::string_view text) noexcept;

/// Ordinal of a level within its dimension; 0 is the most protective.
using Level = std::uint8_t;

/// One ordered privacy variable. Level i is strictly more protective than level i+1.
struct DimensionDescriptor {
    std::string_view name;
    std::span<const std::string_view> levels;

    std::size_t level_count() const noexcept { return levels.size(); }
    Level top() const noexcept { return static_cast<Level>(levels.size() - 1); }
    std::optional<Level> find_level(std::string_view level_name) const noexcept;
    std::string_view level_name(Level level) const { return levels[level]; }

    friend bool operator==(const DimensionDescriptor& a, const DimensionDescriptor& b) noexcept;
};

/// The fixed set of variables a policy of a given kind declares.
struct Vocabulary {
    PolicyKind kind;
    std::span<const DimensionDescriptor> dimensions;
    std::span<const std::string_view> channels;

    std::optional<std::size_t> find_dimension(std::string_view name) const noexcept;
    std::optional<std::size_t> find_channel(std::string_view name) const noexcept;

    /// Number of distinct valid policies of this kind (level combinations x channel subsets).
    std::uint64_t policy_count() const noexcept;

    /// Dimensions plus channels; also the number of wizard questions for the kind.
    std::size_t variable_count() const noexcept { return dimensions.size() + channels.size(); }
};

const Vocabulary& vocabulary(PolicyKind kind) noexcept;

} // namespace privacycoach
