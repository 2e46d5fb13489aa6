#include "privacycoach/vocabulary.hpp"

#include <algorithm>

namespace privacycoach {

namespace {

// Level lists run from most to least protective.
constexpr std::string_view kIdentityLevels[] = {"anonymous", "pseudonymous", "identified"};
constexpr std::string_view kLoggingLevels[] = {"none", "presence", "full-events"};
constexpr std::string_view kProfilingLevels[] = {"none", "compensated", "unconditional"};
constexpr std::string_view kRetentionLevels[] = {"transaction-only", "month", "year", "indefinite"};
constexpr std::string_view kSharingLevels[] = {"none", "affiliates", "third-parties"};
constexpr std::string_view kLinkingLevels[] = {"item-only", "purchase-linked", "identity-linked"};

constexpr DimensionDescriptor kProfiling{"profiling", kProfilingLevels};
constexpr DimensionDescriptor kRetention{"retention", kRetentionLevels};
constexpr DimensionDescriptor kSharing{"sharing", kSharingLevels};

constexpr DimensionDescriptor kBadgeDimensions[] = {
    {"identity", kIdentityLevels},
    {"logging", kLoggingLevels},
    kProfiling,
    kRetention,
    kSharing,
};
constexpr std::string_view kBadgeChannels[] = {"email", "sms", "premises-display", "cashier-display"};

constexpr DimensionDescriptor kProductDimensions[] = {
    {"linking", kLinkingLevels},
    kProfiling,
    kRetention,
    kSharing,
};
constexpr std::string_view kProductChannels[] = {"email", "sms", "in-store-display"};

constexpr Vocabulary kBadgeVocabulary{PolicyKind::badge, kBadgeDimensions, kBadgeChannels};
constexpr Vocabulary kProductVocabulary{PolicyKind::product, kProductDimensions, kProductChannels};

} // namespace

std::string_view to_string(PolicyKind kind) noexcept {
    return kind == PolicyKind::badge ? "badge" : "product";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view text) noexcept {
    if (text == "badge") return PolicyKind::badge;
    if (text == "product") return PolicyKind::product;
    return std::nullopt;
}

std::optional<Level> DimensionDescriptor::find_level(std::string_view level_name) const noexcept {
    auto it = std::find(levels.begin(), levels.end(), level_name);
    if (it == levels.end()) return std::nullopt;
    return static_cast<Level>(it - levels.begin());
}

bool operator==(const DimensionDescriptor& a, const DimensionDescriptor& b) noexcept {
    return a.name == b.name && std::equal(a.levels.begin(), a.levels.end(), b.levels.begin(), b.levels.end());
}

std::optional<std::size_t> Vocabulary::find_dimension(std::string_view name) const noexcept {
    auto it = std::find_if(dimensions.begin(), dimensions.end(),
                           [&](const DimensionDescriptor& d) { return d.name == name; });
    if (it == dimensions.end()) return std::nullopt;
    return static_cast<std::size_t>(it - dimensions.begin());
}

std::optional<std::size_t> Vocabulary::find_channel(std::string_view name) const noexcept {
    auto it = std::find(channels.begin(), channels.end(), name);
    if (it == channels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - channels.begin());
}

std::uint64_t Vocabulary::policy_count() const noexcept {
    std::uint64_t count = 1;
    for (const auto& d : dimensions) count *= d.level_count();
    return count << channels.size();
}

const Vocabulary& vocabulary(PolicyKind kind) noexcept {
    return kind == PolicyKind::badge ? kBadgeVocabulary : kProductVocabulary;
}

} // namespace privacycoach
