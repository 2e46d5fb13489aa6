#include "privacycoach/validation.hpp"

namespace privacycoach {

namespace {

std::string summarize(const ValidationReport& report) {
    if (report.issues.empty()) return "validation failed";
    std::string out;
    for (const auto& issue : report.issues) {
        if (!out.empty()) out += "; ";
        out += to_string(issue.code);
        out += "(";
        out += issue.subject;
        out += "): ";
        out += issue.message;
    }
    return out;
}

} // namespace

std::string_view to_string(IssueCode code) noexcept {
    switch (code) {
        case IssueCode::malformed_xml:          return "malformed-xml";
        case IssueCode::unknown_root:           return "unknown-root";
        case IssueCode::unknown_element:        return "unknown-element";
        case IssueCode::unknown_attribute:      return "unknown-attribute";
        case IssueCode::missing_attribute:      return "missing-attribute";
        case IssueCode::unexpected_text:        return "unexpected-text";
        case IssueCode::invalid_boolean:        return "invalid-boolean";
        case IssueCode::invalid_tag_id:         return "invalid-tag-id";
        case IssueCode::unknown_kind:           return "unknown-kind";
        case IssueCode::unsupported_schema:     return "unsupported-schema";
        case IssueCode::unknown_dimension:      return "unknown-dimension";
        case IssueCode::unknown_level:          return "unknown-level";
        case IssueCode::missing_dimension:      return "missing-dimension";
        case IssueCode::duplicate_dimension:    return "duplicate-dimension";
        case IssueCode::unknown_channel:        return "unknown-channel";
        case IssueCode::missing_channel:        return "missing-channel";
        case IssueCode::duplicate_channel:      return "duplicate-channel";
        case IssueCode::missing_kind_section:   return "missing-kind-section";
        case IssueCode::duplicate_kind_section: return "duplicate-kind-section";
    }
    return "unknown";
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {
    if (report_.issues.empty()) {
        report_.issues.push_back({IssueCode::malformed_xml, "", "validation failed"});
    }
}

} // namespace privacycoach
