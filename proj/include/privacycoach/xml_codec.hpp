#pragma once

#include "privacycoach/policy.hpp"
#include "privacycoach/profile.hpp"

#include <string>
#include <string_view>

namespace privacycoach {

// Wire and storage codec for policies and profiles.
//
// Parsing is fail-closed: any element, attribute or token outside the
// vocabulary raises ValidationError listing every issue found. Serialization
// emits the single canonical form (vocabulary order, lowercase tokens, UTF-8,
// LF, two-space indent), so equal values always produce identical bytes.

PrivacyPolicy policy_from_xml(std::string_view document);
std::string policy_to_xml(const PrivacyPolicy& policy);

/// Reads a policy document into an unchecked draft; only structural problems
/// throw. Used where the caller wants the full validation report itself.
PolicyDraft policy_draft_from_xml(std::string_view document);

UserProfile profile_from_xml(std::string_view document);
std::string profile_to_xml(const UserProfile& profile);

/// Escapes the five XML special characters for use inside a double-quoted attribute.
std::string escape_xml_attribute(std::string_view text);

/// `<validationreport valid="...">` with one `<error code subject message/>` per issue.
std::string validation_report_to_xml(const ValidationReport& report);

} // namespace privacycoach
