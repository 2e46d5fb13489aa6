#pragma once

#include "privacycoach/policy.hpp"
#include "privacycoach/profile.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace privacycoach {

enum class VariableClass { dimension, channel };

std::string_view to_string(VariableClass c) noexcept;

/**
 * Outcome for one variable of a policy.
 *
 * For a dimension, `declared` is the policy's level name and `bound` the
 * user's maximum; acceptable iff ordinal(declared) <= ordinal(bound).
 * For a channel, `declared` is "true"/"false" (used by the policy) and
 * `bound` is "true"/"false" (allowed by the user); only a used channel that
 * is not allowed is unacceptable.
 */
struct VariableVerdict {
    std::string variable;
    VariableClass variable_class = VariableClass::dimension;
    std::string declared;
    std::string bound;
    bool acceptable = false;

    friend bool operator==(const VariableVerdict&, const VariableVerdict&) = default;
};

enum class Overall { match, no_match };

std::string_view to_string(Overall overall) noexcept;

struct MatchResult {
    TagId tag;
    PolicyKind kind;
    std::vector<VariableVerdict> verdicts; // vocabulary order: dimensions, then channels
    Overall overall;

    bool matched() const noexcept { return overall == Overall::match; }

    friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// Client-side matching. Every variable is evaluated (no short-circuit);
/// overall is the conjunction of the per-variable verdicts.
MatchResult match_policies(const UserProfile& profile, const PrivacyPolicy& policy);

/// Boolean-only form of match_policies for bulk evaluation. Same rule, no verdict list.
bool policy_acceptable(const KindPreferences& preferences, const PrivacyPolicy& policy);

/// Line 0 is "MATCH" or "NO MATCH", followed by one reason line per
/// unacceptable verdict in vocabulary order.
std::vector<std::string> explain(const MatchResult& result);

/// `<matchresult tag kind overall>` with one `<verdict/>` per variable.
std::string match_result_to_xml(const MatchResult& result);

} // namespace privacycoach
