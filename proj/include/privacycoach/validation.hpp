#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace privacycoach {

enum class IssueCode {
    malformed_xml,
    unknown_root,
    unknown_element,
    unknown_attribute,
    missing_attribute,
    unexpected_text,
    invalid_boolean,
    invalid_tag_id,
    unknown_kind,
    unsupported_schema,
    unknown_dimension,
    unknown_level,
    missing_dimension,
    duplicate_dimension,
    unknown_channel,
    missing_channel,
    duplicate_channel,
    missing_kind_section,
    duplicate_kind_section,
};

/// Kebab-case wire token, e.g. "missing-dimension".
std::string_view to_string(IssueCode code) noexcept;

struct Issue {
    IssueCode code;
    std::string subject;
    std::string message;

    friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
    std::vector<Issue> issues;

    bool valid() const noexcept { return issues.empty(); }
};

/// Thrown by every fail-closed constructor and parser; carries all issues found.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);

    const ValidationReport& report() const noexcept { return report_; }
    /// Code of the first issue.
    IssueCode code() const noexcept { return report_.issues.front().code; }

private:
    ValidationReport report_;
};

} // namespace privacycoach
