#pragma once

#include "privacycoach/policy.hpp"
#include "privacycoach/validation.hpp"
#include "privacycoach/vocabulary.hpp"

#include <string>
#include <vector>

namespace privacycoach {

struct ProfileDimensionEntry {
    std::string name;
    std::string max;
};

struct ProfileChannelEntry {
    std::string name;
    bool allowed = false;
};

struct KindSectionDraft {
    std::string kind;
    std::vector<ProfileDimensionEntry> dimensions;
    std::vector<ProfileChannelEntry> channels;
};

struct ProfileDraft {
    int schema_version = kSchemaVersion;
    std::vector<KindSectionDraft> sections;
};

ValidationReport validate_profile(const ProfileDraft& draft);

/// The user's bounds for one policy kind: maximum acceptable level per
/// dimension and the set of contact channels they allow.
class KindPreferences {
public:
    /// Vocabulary order. Throws std::invalid_argument.
    KindPreferences(PolicyKind kind, std::vector<Level> maxima, std::vector<bool> allowed_channels);

    static KindPreferences most_protective(PolicyKind kind);
    static KindPreferences most_permissive(PolicyKind kind);

    PolicyKind kind() const noexcept { return kind_; }
    const Vocabulary& vocab() const noexcept { return vocabulary(kind_); }

    std::span<const Level> maxima() const noexcept { return maxima_; }
    Level max_level(std::size_t dimension) const { return maxima_.at(dimension); }
    std::string_view max_name(std::size_t dimension) const;

    const std::vector<bool>& allowed_channels() const noexcept { return allowed_; }
    bool channel_allowed(std::size_t channel) const { return allowed_.at(channel); }

    friend bool operator==(const KindPreferences&, const KindPreferences&) = default;

private:
    PolicyKind kind_;
    std::vector<Level> maxima_;
    std::vector<bool> allowed_;
};

/// The user's stored privacy profile, covering both kinds completely.
class UserProfile {
public:
    /// Throws std::invalid_argument if the kinds do not line up.
    UserProfile(KindPreferences badge, KindPreferences product);

    /// Throws ValidationError with the full report.
    static UserProfile from_draft(const ProfileDraft& draft);

    static UserProfile most_protective();
    static UserProfile most_permissive();

    int schema_version() const noexcept { return kSchemaVersion; }
    const KindPreferences& preferences(PolicyKind kind) const noexcept {
        return kind == PolicyKind::badge ? badge_ : product_;
    }

    ProfileDraft to_draft() const;

    friend bool operator==(const UserProfile&, const UserProfile&) = default;

private:
    KindPreferences badge_;
    KindPreferences product_;
};

} // namespace privacycoach
