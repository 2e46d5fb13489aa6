#include "privacycoach/xml_codec.hpp"

#include "section_check.hpp"
#include "xml_tree.hpp"

#include <algorithm>
#include <initializer_list>

namespace privacycoach {

using detail::make_issue;
using detail::XmlElement;

namespace {

constexpr std::string_view kXmlDeclaration = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

class StructureChecker {
public:
    // Flags unknown and missing attributes; returns false if any required one is absent.
    bool attributes(const XmlElement& e, std::initializer_list<std::string_view> expected) {
        bool complete = true;
        for (const auto& [key, value] : e.attributes) {
            if (std::find(expected.begin(), expected.end(), key) == expected.end())
                add(IssueCode::unknown_attribute, key, "attribute '" + key + "' is not allowed on <" + e.name + ">");
        }
        for (auto key : expected) {
            if (!e.attribute(key)) {
                add(IssueCode::missing_attribute, std::string(key),
                    "<" + e.name + "> requires attribute '" + std::string(key) + "'");
                complete = false;
            }
        }
        if (e.has_text) add(IssueCode::unexpected_text, e.name, "<" + e.name + "> must not contain text");
        return complete;
    }

    void leaf(const XmlElement& e) {
        for (const auto& child : e.children)
            add(IssueCode::unknown_element, child.name, "<" + child.name + "> is not allowed inside <" + e.name + ">");
    }

    std::optional<bool> boolean(const XmlElement& e, std::string_view key) {
        const auto* v = e.attribute(key);
        if (*v == "true") return true;
        if (*v == "false") return false;
        add(IssueCode::invalid_boolean, *v, "attribute '" + std::string(key) + "' must be 'true' or 'false'");
        return std::nullopt;
    }

    std::optional<int> schema(const XmlElement& e) {
        const auto& v = *e.attribute("schema");
        const bool digits = !v.empty() && v.size() <= 9 &&
                            std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (!digits) {
            add(IssueCode::unsupported_schema, v, "schema must be a positive integer");
            return std::nullopt;
        }
        return std::stoi(v);
    }

    void unknown_element(const XmlElement& parent, const XmlElement& child) {
        add(IssueCode::unknown_element, child.name,
            "<" + child.name + "> is not allowed inside <" + parent.name + ">");
    }

    void add(IssueCode code, std::string subject, std::string message) {
        issues_.push_back(make_issue(code, std::move(subject), std::move(message)));
    }

    void throw_if_any() {
        if (!issues_.empty()) throw ValidationError(ValidationReport{std::move(issues_)});
    }

private:
    std::vector<Issue> issues_;
};

[[noreturn]] void wrong_root(const XmlElement& root, std::string_view expected) {
    throw ValidationError(ValidationReport{{make_issue(
        IssueCode::unknown_root, root.name,
        "root element must be <" + std::string(expected) + ">, found <" + root.name + ">")}});
}

void append_attribute(std::string& out, std::string_view key, std::string_view value) {
    out += ' ';
    out += key;
    out += "=\"";
    out += escape_xml_attribute(value);
    out += '"';
}

std::string_view bool_token(bool b) { return b ? "true" : "false"; }

} // namespace

std::string escape_xml_attribute(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&':  out += "&amp;"; break;
            case '<':  out += "&lt;"; break;
            case '>':  out += "&gt;"; break;
            case '"':  out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default:   out += c; break;
        }
    }
    return out;
}

// ── Policy ──────────────────────────────────────────────────────────────────

PolicyDraft policy_draft_from_xml(std::string_view document) {
    const auto root = detail::parse_xml_tree(document);
    if (root.name != "tagpolicy") wrong_root(root, "tagpolicy");

    StructureChecker check;
    PolicyDraft draft;
    if (check.attributes(root, {"tag", "kind", "schema"})) {
        draft.tag = *root.attribute("tag");
        draft.kind = *root.attribute("kind");
        if (auto schema = check.schema(root)) draft.schema_version = *schema;
    }

    for (const auto& child : root.children) {
        if (child.name == "dimension") {
            check.leaf(child);
            if (check.attributes(child, {"name", "level"}))
                draft.dimensions.push_back({*child.attribute("name"), *child.attribute("level")});
        } else if (child.name == "channel") {
            check.leaf(child);
            if (check.attributes(child, {"name", "used"})) {
                if (auto used = check.boolean(child, "used"))
                    draft.channels.push_back({*child.attribute("name"), *used});
            }
        } else {
            check.unknown_element(root, child);
        }
    }
    check.throw_if_any();
    return draft;
}

PrivacyPolicy policy_from_xml(std::string_view document) {
    return PrivacyPolicy::from_draft(policy_draft_from_xml(document));
}

std::string policy_to_xml(const PrivacyPolicy& policy) {
    const auto& v = policy.vocab();
    std::string out(kXmlDeclaration);
    out += "<tagpolicy";
    append_attribute(out, "tag", policy.tag().str());
    append_attribute(out, "kind", to_string(policy.kind()));
    append_attribute(out, "schema", std::to_string(policy.schema_version()));
    out += ">\n";
    for (std::size_t i = 0; i < v.dimensions.size(); ++i) {
        out += "  <dimension";
        append_attribute(out, "name", v.dimensions[i].name);
        append_attribute(out, "level", policy.level_name(i));
        out += "/>\n";
    }
    for (std::size_t i = 0; i < v.channels.size(); ++i) {
        out += "  <channel";
        append_attribute(out, "name", v.channels[i]);
        append_attribute(out, "used", bool_token(policy.channel_used(i)));
        out += "/>\n";
    }
    out += "</tagpolicy>\n";
    return out;
}

// ── Profile ─────────────────────────────────────────────────────────────────

UserProfile profile_from_xml(std::string_view document) {
    const auto root = detail::parse_xml_tree(document);
    if (root.name != "privacyprofile") wrong_root(root, "privacyprofile");

    StructureChecker check;
    ProfileDraft draft;
    if (check.attributes(root, {"schema"})) {
        if (auto schema = check.schema(root)) draft.schema_version = *schema;
    }

    for (const auto& section : root.children) {
        if (section.name != "kind") {
            check.unknown_element(root, section);
            continue;
        }
        KindSectionDraft kind;
        if (check.attributes(section, {"name"})) kind.kind = *section.attribute("name");
        for (const auto& child : section.children) {
            if (child.name == "dimension") {
                check.leaf(child);
                if (check.attributes(child, {"name", "max"}))
                    kind.dimensions.push_back({*child.attribute("name"), *child.attribute("max")});
            } else if (child.name == "channel") {
                check.leaf(child);
                if (check.attributes(child, {"name", "allowed"})) {
                    if (auto allowed = check.boolean(child, "allowed"))
                        kind.channels.push_back({*child.attribute("name"), *allowed});
                }
            } else {
                check.unknown_element(section, child);
            }
        }
        draft.sections.push_back(std::move(kind));
    }
    check.throw_if_any();
    return UserProfile::from_draft(draft);
}

std::string profile_to_xml(const UserProfile& profile) {
    std::string out(kXmlDeclaration);
    out += "<privacyprofile";
    append_attribute(out, "schema", std::to_string(profile.schema_version()));
    out += ">\n";
    for (auto kind : kAllKinds) {
        const auto& prefs = profile.preferences(kind);
        const auto& v = prefs.vocab();
        out += "  <kind";
        append_attribute(out, "name", to_string(kind));
        out += ">\n";
        for (std::size_t i = 0; i < v.dimensions.size(); ++i) {
            out += "    <dimension";
            append_attribute(out, "name", v.dimensions[i].name);
            append_attribute(out, "max", prefs.max_name(i));
            out += "/>\n";
        }
        for (std::size_t i = 0; i < v.channels.size(); ++i) {
            out += "    <channel";
            append_attribute(out, "name", v.channels[i]);
            append_attribute(out, "allowed", bool_token(prefs.channel_allowed(i)));
            out += "/>\n";
        }
        out += "  </kind>\n";
    }
    out += "</privacyprofile>\n";
    return out;
}

std::string validation_report_to_xml(const ValidationReport& report) {
    std::string out(kXmlDeclaration);
    out += "<validationreport";
    append_attribute(out, "valid", bool_token(report.valid()));
    if (report.valid()) return out + "/>\n";
    out += ">\n";
    for (const auto& issue : report.issues) {
        out += "  <error";
        append_attribute(out, "code", to_string(issue.code));
        append_attribute(out, "subject", issue.subject);
        append_attribute(out, "message", issue.message);
        out += "/>\n";
    }
    out += "</validationreport>\n";
    return out;
}

} // namespace privacycoach
