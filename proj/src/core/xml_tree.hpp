#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace privacycoach::detail {

struct XmlElement {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes; // document order
    std::vector<XmlElement> children;
    bool has_text = false; // any non-whitespace character data

    const std::string* attribute(std::string_view key) const {
        for (const auto& [k, v] : attributes)
            if (k == key) return &v;
        return nullptr;
    }
};

/// Strict well-formedness parse. Rejects DOCTYPE, entity declarations,
/// processing instructions and any declared encoding other than UTF-8.
/// Throws ValidationError(malformed-xml).
XmlElement parse_xml_tree(std::string_view document);

} // namespace privacycoach::detail
