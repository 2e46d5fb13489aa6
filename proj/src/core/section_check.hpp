#pragma once

#include "privacycoach/validation.hpp"
#include "privacycoach/vocabulary.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace privacycoach::detail {

struct NamedValue {
    std::string_view name;
    std::string_view value;
};

/**
 * Checks one kind's dimension and channel entries against its vocabulary and
 * appends one issue per violation: known variables in vocabulary order, then
 * unknown dimension names, then unknown channel names, each lexicographic.
 * `value_role` names the dimension attribute ("level" or "max") in messages.
 */
void check_section(const Vocabulary& vocab,
                   const std::vector<NamedValue>& dimensions,
                   const std::vector<std::string_view>& channels,
                   std::string_view subject_prefix,
                   std::string_view value_role,
                   std::vector<Issue>& out);

inline Issue make_issue(IssueCode code, std::string subject, std::string message) {
    return Issue{code, std::move(subject), std::move(message)};
}

} // namespace privacycoach::detail
