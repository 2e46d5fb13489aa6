#include "privacycoach/profile.hpp"

#include "section_check.hpp"

#include <algorithm>
#include <stdexcept>

namespace privacycoach {

using detail::make_issue;

ValidationReport validate_profile(const ProfileDraft& draft) {
    ValidationReport report;
    auto& issues = report.issues;

    if (draft.schema_version != kSchemaVersion) {
        issues.push_back(make_issue(IssueCode::unsupported_schema, std::to_string(draft.schema_version),
                                    "only schema version 1 is supported"));
    }

    for (auto kind : kAllKinds) {
        const auto name = to_string(kind);
        std::vector<const KindSectionDraft*> sections;
        for (const auto& s : draft.sections)
            if (s.kind == name) sections.push_back(&s);

        if (sections.empty()) {
            issues.push_back(make_issue(IssueCode::missing_kind_section, std::string(name),
                                        "profile has no section for kind '" + std::string(name) + "'"));
            continue;
        }
        if (sections.size() > 1) {
            issues.push_back(make_issue(IssueCode::duplicate_kind_section, std::string(name),
                                        "profile has " + std::to_string(sections.size()) +
                                            " sections for kind '" + std::string(name) + "'"));
            continue;
        }

        const auto& section = *sections.front();
        std::vector<detail::NamedValue> dims;
        for (const auto& d : section.dimensions) dims.push_back({d.name, d.max});
        std::vector<std::string_view> channels;
        for (const auto& c : section.channels) channels.push_back(c.name);
        detail::check_section(vocabulary(kind), dims, channels, std::string(name) + ".", "max", issues);
    }

    std::vector<std::string_view> unknown;
    for (const auto& s : draft.sections)
        if (!parse_policy_kind(s.kind)) unknown.push_back(s.kind);
    std::sort(unknown.begin(), unknown.end());
    for (auto kind : unknown) {
        issues.push_back(make_issue(IssueCode::unknown_kind, std::string(kind),
                                    "kind must be 'badge' or 'product'"));
    }
    return report;
}

KindPreferences::KindPreferences(PolicyKind kind, std::vector<Level> maxima, std::vector<bool> allowed_channels)
    : kind_(kind), maxima_(std::move(maxima)), allowed_(std::move(allowed_channels)) {
    const auto& v = vocabulary(kind_);
    if (maxima_.size() != v.dimensions.size())
        throw std::invalid_argument("preferences need one maximum per dimension");
    if (allowed_.size() != v.channels.size())
        throw std::invalid_argument("preferences need one decision per channel");
    for (std::size_t i = 0; i < maxima_.size(); ++i) {
        if (maxima_[i] >= v.dimensions[i].level_count())
            throw std::invalid_argument("maximum out of range for dimension " + std::string(v.dimensions[i].name));
    }
}

KindPreferences KindPreferences::most_protective(PolicyKind kind) {
    const auto& v = vocabulary(kind);
    return KindPreferences(kind, std::vector<Level>(v.dimensions.size(), 0), std::vector<bool>(v.channels.size(), false));
}

KindPreferences KindPreferences::most_permissive(PolicyKind kind) {
    const auto& v = vocabulary(kind);
    std::vector<Level> maxima;
    for (const auto& d : v.dimensions) maxima.push_back(d.top());
    return KindPreferences(kind, std::move(maxima), std::vector<bool>(v.channels.size(), true));
}

std::string_view KindPreferences::max_name(std::size_t dimension) const {
    return vocab().dimensions[dimension].level_name(max_level(dimension));
}

UserProfile::UserProfile(KindPreferences badge, KindPreferences product)
    : badge_(std::move(badge)), product_(std::move(product)) {
    if (badge_.kind() != PolicyKind::badge || product_.kind() != PolicyKind::product)
        throw std::invalid_argument("profile sections must be badge then product");
}

UserProfile UserProfile::from_draft(const ProfileDraft& draft) {
    auto report = validate_profile(draft);
    if (!report.valid()) throw ValidationError(std::move(report));

    auto build = [&](PolicyKind kind) {
        const auto& v = vocabulary(kind);
        const auto& section = *std::find_if(draft.sections.begin(), draft.sections.end(),
                                            [&](const KindSectionDraft& s) { return s.kind == to_string(kind); });
        std::vector<Level> maxima(v.dimensions.size());
        for (const auto& d : section.dimensions) {
            const auto index = *v.find_dimension(d.name);
            maxima[index] = *v.dimensions[index].find_level(d.max);
        }
        std::vector<bool> allowed(v.channels.size());
        for (const auto& c : section.channels) allowed[*v.find_channel(c.name)] = c.allowed;
        return KindPreferences(kind, std::move(maxima), std::move(allowed));
    };
    return UserProfile(build(PolicyKind::badge), build(PolicyKind::product));
}

UserProfile UserProfile::most_protective() {
    return UserProfile(KindPreferences::most_protective(PolicyKind::badge),
                       KindPreferences::most_protective(PolicyKind::product));
}

UserProfile UserProfile::most_permissive() {
    return UserProfile(KindPreferences::most_permissive(PolicyKind::badge),
                       KindPreferences::most_permissive(PolicyKind::product));
}

ProfileDraft UserProfile::to_draft() const {
    ProfileDraft draft;
    for (auto kind : kAllKinds) {
        const auto& prefs = preferences(kind);
        const auto& v = prefs.vocab();
        KindSectionDraft section;
        section.kind = std::string(to_string(kind));
        for (std::size_t i = 0; i < v.dimensions.size(); ++i)
            section.dimensions.push_back({std::string(v.dimensions[i].name), std::string(prefs.max_name(i))});
        for (std::size_t i = 0; i < v.channels.size(); ++i)
            section.channels.push_back({std::string(v.channels[i]), prefs.channel_allowed(i)});
        draft.sections.push_back(std::move(section));
    }
    return draft;
}

} // namespace privacycoach
