#include "section_check.hpp"

#include <algorithm>

namespace privacycoach::detail {

namespace {

std::string quoted(std::string_view s) {
    std::string out = "'";
    out += s;
    out += "'";
    return out;
}

std::string subject_of(std::string_view prefix, std::string_view name) {
    std::string s(prefix);
    s += name;
    return s;
}

} // namespace

void check_section(const Vocabulary& vocab,
                   const std::vector<NamedValue>& dimensions,
                   const std::vector<std::string_view>& channels,
                   std::string_view subject_prefix,
                   std::string_view value_role,
                   std::vector<Issue>& out) {
    const std::string kind_name(to_string(vocab.kind));

    for (const auto& descriptor : vocab.dimensions) {
        const auto subject = subject_of(subject_prefix, descriptor.name);
        std::size_t seen = 0;
        for (const auto& entry : dimensions) {
            if (entry.name != descriptor.name) continue;
            ++seen;
            if (!descriptor.find_level(entry.value)) {
                out.push_back(make_issue(IssueCode::unknown_level, subject,
                                         quoted(entry.value) + " is not a valid " + std::string(value_role) +
                                             " for dimension " + quoted(descriptor.name)));
            }
        }
        if (seen == 0) {
            out.push_back(make_issue(IssueCode::missing_dimension, subject,
                                     "dimension " + quoted(descriptor.name) + " is missing"));
        } else if (seen > 1) {
            out.push_back(make_issue(IssueCode::duplicate_dimension, subject,
                                     "dimension " + quoted(descriptor.name) + " appears " +
                                         std::to_string(seen) + " times"));
        }
    }

    for (const auto& channel : vocab.channels) {
        const auto subject = subject_of(subject_prefix, channel);
        const auto seen = std::count(channels.begin(), channels.end(), channel);
        if (seen == 0) {
            out.push_back(make_issue(IssueCode::missing_channel, subject,
                                     "channel " + quoted(channel) + " is missing"));
        } else if (seen > 1) {
            out.push_back(make_issue(IssueCode::duplicate_channel, subject,
                                     "channel " + quoted(channel) + " appears " + std::to_string(seen) +
                                         " times"));
        }
    }

    std::vector<std::string_view> unknown;
    for (const auto& entry : dimensions) {
        if (!vocab.find_dimension(entry.name)) unknown.push_back(entry.name);
    }
    std::sort(unknown.begin(), unknown.end());
    for (auto name : unknown) {
        out.push_back(make_issue(IssueCode::unknown_dimension, subject_of(subject_prefix, name),
                                 quoted(name) + " is not a dimension of kind " + kind_name));
    }

    unknown.clear();
    for (auto name : channels) {
        if (!vocab.find_channel(name)) unknown.push_back(name);
    }
    std::sort(unknown.begin(), unknown.end());
    for (auto name : unknown) {
        out.push_back(make_issue(IssueCode::unknown_channel, subject_of(subject_prefix, name),
                                 quoted(name) + " is not a channel of kind " + kind_name));
    }
}

} // namespace privacycoach::detail
