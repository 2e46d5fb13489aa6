#pragma once

#include "privacycoach/tag_id.hpp"
#include "privacycoach/validation.hpp"
#include "privacycoach/vocabulary.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace privacycoach {

inline constexpr int kSchemaVersion = 1;

struct DimensionEntry {
    std::string name;
    std::string level;
};

struct ChannelEntry {
    std::string name;
    bool used = false;
};

/// Unchecked policy candidate: entries may be missing, duplicated or unknown.
struct PolicyDraft {
    std::string tag;
    std::string kind;
    int schema_version = kSchemaVersion;
    std::vector<DimensionEntry> dimensions;
    std::vector<ChannelEntry> channels;
};

/// Reports every invariant violation of `draft`, not just the first.
ValidationReport validate_policy(const PolicyDraft& draft);

/**
 * A provider's declaration for one tag: one level per dimension and one
 * used/unused flag per contact channel of the kind's vocabulary. Always
 * complete and valid; immutable after construction.
 */
class PrivacyPolicy {
public:
    /// `levels` and `channels_used` are in vocabulary order. Throws std::invalid_argument.
    PrivacyPolicy(TagId tag, PolicyKind kind, std::vector<Level> levels, std::vector<bool> channels_used);

    /// Throws ValidationError with the full report.
    static PrivacyPolicy from_draft(const PolicyDraft& draft);

    /// The bottom policy: every level 0, no channel used.
    static PrivacyPolicy minimal(TagId tag, PolicyKind kind);

    const TagId& tag() const noexcept { return tag_; }
    PolicyKind kind() const noexcept { return kind_; }
    int schema_version() const noexcept { return kSchemaVersion; }
    const Vocabulary& vocab() const noexcept { return vocabulary(kind_); }

    std::span<const Level> levels() const noexcept { return levels_; }
    Level level(std::size_t dimension) const { return levels_.at(dimension); }
    std::string_view level_name(std::size_t dimension) const;
    /// nullopt when the dimension is not part of this kind.
    std::optional<std::string_view> level_of(std::string_view dimension) const;

    const std::vector<bool>& channels_used() const noexcept { return channels_; }
    bool channel_used(std::size_t channel) const { return channels_.at(channel); }

    PolicyDraft to_draft() const;

    PrivacyPolicy with_tag(TagId tag) const;
    PrivacyPolicy with_level(std::size_t dimension, Level level) const;
    PrivacyPolicy with_channel(std::size_t channel, bool used) const;

    friend bool operator==(const PrivacyPolicy&, const PrivacyPolicy&) = default;

private:
    TagId tag_;
    PolicyKind kind_;
    std::vector<Level> levels_;
    std::vector<bool> channels_;
};

} // namespace privacycoach
