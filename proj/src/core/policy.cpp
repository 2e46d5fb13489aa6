#include "privacycoach/policy.hpp"

#include "section_check.hpp"

#include <stdexcept>

namespace privacycoach {

using detail::make_issue;

ValidationReport validate_policy(const PolicyDraft& draft) {
    ValidationReport report;
    auto& issues = report.issues;

    if (auto error = TagId::check(draft.tag)) {
        issues.push_back(make_issue(IssueCode::invalid_tag_id, draft.tag,
                                    "tag id is " + std::string(to_string(*error))));
    }
    const auto kind = parse_policy_kind(draft.kind);
    if (!kind) {
        issues.push_back(make_issue(IssueCode::unknown_kind, draft.kind,
                                    "kind must be 'badge' or 'product'"));
    }
    if (draft.schema_version != kSchemaVersion) {
        issues.push_back(make_issue(IssueCode::unsupported_schema, std::to_string(draft.schema_version),
                                    "only schema version 1 is supported"));
    }
    if (!kind) return report;

    std::vector<detail::NamedValue> dims;
    dims.reserve(draft.dimensions.size());
    for (const auto& d : draft.dimensions) dims.push_back({d.name, d.level});
    std::vector<std::string_view> channels;
    channels.reserve(draft.channels.size());
    for (const auto& c : draft.channels) channels.push_back(c.name);

    detail::check_section(vocabulary(*kind), dims, channels, "", "level", issues);
    return report;
}

PrivacyPolicy::PrivacyPolicy(TagId tag, PolicyKind kind, std::vector<Level> levels, std::vector<bool> channels_used)
    : tag_(std::move(tag)), kind_(kind), levels_(std::move(levels)), channels_(std::move(channels_used)) {
    const auto& v = vocabulary(kind_);
    if (levels_.size() != v.dimensions.size())
        throw std::invalid_argument("policy needs one level per dimension");
    if (channels_.size() != v.channels.size())
        throw std::invalid_argument("policy needs one flag per channel");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (levels_[i] >= v.dimensions[i].level_count())
            throw std::invalid_argument("level out of range for dimension " + std::string(v.dimensions[i].name));
    }
}

PrivacyPolicy PrivacyPolicy::from_draft(const PolicyDraft& draft) {
    auto report = validate_policy(draft);
    if (!report.valid()) throw ValidationError(std::move(report));

    const auto kind = *parse_policy_kind(draft.kind);
    const auto& v = vocabulary(kind);
    std::vector<Level> levels(v.dimensions.size());
    for (const auto& d : draft.dimensions) {
        const auto index = *v.find_dimension(d.name);
        levels[index] = *v.dimensions[index].find_level(d.level);
    }
    std::vector<bool> channels(v.channels.size());
    for (const auto& c : draft.channels) channels[*v.find_channel(c.name)] = c.used;
    return PrivacyPolicy(TagId::parse(draft.tag), kind, std::move(levels), std::move(channels));
}

PrivacyPolicy PrivacyPolicy::minimal(TagId tag, PolicyKind kind) {
    const auto& v = vocabulary(kind);
    return PrivacyPolicy(std::move(tag), kind, std::vector<Level>(v.dimensions.size(), 0),
                         std::vector<bool>(v.channels.size(), false));
}

std::string_view PrivacyPolicy::level_name(std::size_t dimension) const {
    return vocab().dimensions[dimension].level_name(level(dimension));
}

std::optional<std::string_view> PrivacyPolicy::level_of(std::string_view dimension) const {
    auto index = vocab().find_dimension(dimension);
    if (!index) return std::nullopt;
    return level_name(*index);
}

PolicyDraft PrivacyPolicy::to_draft() const {
    const auto& v = vocab();
    PolicyDraft draft;
    draft.tag = tag_.str();
    draft.kind = std::string(to_string(kind_));
    draft.schema_version = kSchemaVersion;
    for (std::size_t i = 0; i < levels_.size(); ++i)
        draft.dimensions.push_back({std::string(v.dimensions[i].name), std::string(level_name(i))});
    for (std::size_t i = 0; i < channels_.size(); ++i)
        draft.channels.push_back({std::string(v.channels[i]), channels_[i]});
    return draft;
}

PrivacyPolicy PrivacyPolicy::with_tag(TagId tag) const {
    PrivacyPolicy copy = *this;
    copy.tag_ = std::move(tag);
    return copy;
}

PrivacyPolicy PrivacyPolicy::with_level(std::size_t dimension, Level level) const {
    auto levels = levels_;
    levels.at(dimension) = level;
    return PrivacyPolicy(tag_, kind_, std::move(levels), channels_);
}

PrivacyPolicy PrivacyPolicy::with_channel(std::size_t channel, bool used) const {
    auto channels = channels_;
    channels.at(channel) = used;
    return PrivacyPolicy(tag_, kind_, levels_, std::move(channels));
}

} // namespace privacycoach
