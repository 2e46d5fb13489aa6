#include "privacycoach/match.hpp"

#include "privacycoach/xml_codec.hpp"

#include <algorithm>

namespace privacycoach {

namespace {

std::string bool_token(bool b) { return b ? "true" : "false"; }

} // namespace

std::string_view to_string(VariableClass c) noexcept {
    return c == VariableClass::dimension ? "dimension" : "channel";
}

std::string_view to_string(Overall overall) noexcept {
    return overall == Overall::match ? "match" : "no-match";
}

MatchResult match_policies(const UserProfile& profile, const PrivacyPolicy& policy) {
    const auto& prefs = profile.preferences(policy.kind());
    const auto& v = policy.vocab();

    MatchResult result{policy.tag(), policy.kind(), {}, Overall::match};
    result.verdicts.reserve(v.variable_count());

    for (std::size_t i = 0; i < v.dimensions.size(); ++i) {
        const bool ok = policy.level(i) <= prefs.max_level(i);
        result.verdicts.push_back({std::string(v.dimensions[i].name), VariableClass::dimension,
                                   std::string(policy.level_name(i)), std::string(prefs.max_name(i)), ok});
    }
    for (std::size_t i = 0; i < v.channels.size(); ++i) {
        const bool used = policy.channel_used(i);
        const bool allowed = prefs.channel_allowed(i);
        result.verdicts.push_back({std::string(v.channels[i]), VariableClass::channel, bool_token(used),
                                   bool_token(allowed), !used || allowed});
    }

    const bool all = std::all_of(result.verdicts.begin(), result.verdicts.end(),
                                 [](const VariableVerdict& vv) { return vv.acceptable; });
    result.overall = all ? Overall::match : Overall::no_match;
    return result;
}

bool policy_acceptable(const KindPreferences& preferences, const PrivacyPolicy& policy) {
    bool ok = preferences.kind() == policy.kind();
    const auto levels = policy.levels();
    for (std::size_t i = 0; i < levels.size(); ++i) ok &= levels[i] <= preferences.max_level(i);
    const auto& used = policy.channels_used();
    for (std::size_t i = 0; i < used.size(); ++i) ok &= !used[i] || preferences.channel_allowed(i);
    return ok;
}

std::vector<std::string> explain(const MatchResult& result) {
    std::vector<std::string> lines;
    lines.emplace_back(result.matched() ? "MATCH" : "NO MATCH");
    for (const auto& v : result.verdicts) {
        if (v.acceptable) continue;
        if (v.variable_class == VariableClass::dimension) {
            lines.push_back(v.variable + ": policy declares '" + v.declared + "', you accept at most '" + v.bound +
                            "'");
        } else {
            lines.push_back(v.variable + ": policy uses this contact channel, you have not allowed it (used=" +
                            v.declared + ", allowed=" + v.bound + ")");
        }
    }
    return lines;
}

std::string match_result_to_xml(const MatchResult& result) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<matchresult tag=\"" + result.tag.str() + "\" kind=\"" + std::string(to_string(result.kind)) +
           "\" overall=\"" + std::string(to_string(result.overall)) + "\">\n";
    for (const auto& v : result.verdicts) {
        out += "  <verdict variable=\"" + escape_xml_attribute(v.variable) + "\" class=\"" +
               std::string(to_string(v.variable_class)) + "\" declared=\"" + escape_xml_attribute(v.declared) +
               "\" bound=\"" + escape_xml_attribute(v.bound) + "\" acceptable=\"" + bool_token(v.acceptable) +
               "\"/>\n";
    }
    out += "</matchresult>\n";
    return out;
}

} // namespace privacycoach
