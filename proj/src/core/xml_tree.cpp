#include "xml_tree.hpp"

#include "privacycoach/validation.hpp"

#include <expat.h>

#include <cctype>
#include <climits>
#include <memory>

namespace privacycoach::detail {

namespace {

constexpr std::size_t kMaxDepth = 16;

struct ParseState {
    XML_Parser parser = nullptr;
    std::vector<XmlElement*> stack;
    std::optional<XmlElement> root;
    std::string rejection;

    void reject(std::string why) {
        if (rejection.empty()) rejection = std::move(why);
        XML_StopParser(parser, XML_FALSE);
    }
};

void on_start(void* data, const XML_Char* name, const XML_Char** atts) {
    auto& st = *static_cast<ParseState*>(data);
    if (st.stack.size() >= kMaxDepth) {
        st.reject("element nesting too deep");
        return;
    }
    XmlElement element;
    element.name = name;
    for (std::size_t i = 0; atts[i] != nullptr; i += 2) element.attributes.emplace_back(atts[i], atts[i + 1]);

    if (st.stack.empty()) {
        st.root = std::move(element);
        st.stack.push_back(&*st.root);
    } else {
        auto& parent = *st.stack.back();
        parent.children.push_back(std::move(element));
        st.stack.push_back(&parent.children.back());
    }
}

void on_end(void* data, const XML_Char*) {
    static_cast<ParseState*>(data)->stack.pop_back();
}

void on_text(void* data, const XML_Char* s, int len) {
    auto& st = *static_cast<ParseState*>(data);
    if (st.stack.empty()) return;
    for (int i = 0; i < len; ++i) {
        const char c = s[i];
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            st.stack.back()->has_text = true;
            return;
        }
    }
}

void on_doctype(void* data, const XML_Char*, const XML_Char*, const XML_Char*, int) {
    static_cast<ParseState*>(data)->reject("document type declarations are not accepted");
}

void on_entity(void* data, const XML_Char*, int, const XML_Char*, int, const XML_Char*, const XML_Char*,
               const XML_Char*, const XML_Char*) {
    static_cast<ParseState*>(data)->reject("entity declarations are not accepted");
}

void on_pi(void* data, const XML_Char*, const XML_Char*) {
    static_cast<ParseState*>(data)->reject("processing instructions are not accepted");
}

void on_xml_decl(void* data, const XML_Char*, const XML_Char* encoding, int) {
    if (encoding == nullptr) return;
    std::string enc(encoding);
    for (auto& c : enc) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (enc != "UTF-8") static_cast<ParseState*>(data)->reject("encoding must be UTF-8");
}

[[noreturn]] void fail(std::string message) {
    throw ValidationError(ValidationReport{{Issue{IssueCode::malformed_xml, "", std::move(message)}}});
}

} // namespace

XmlElement parse_xml_tree(std::string_view document) {
    if (document.size() > static_cast<std::size_t>(INT_MAX)) fail("document too large");

    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate(nullptr), &XML_ParserFree);
    if (!parser) fail("could not create XML parser");

    ParseState st;
    st.parser = parser.get();
    XML_SetUserData(parser.get(), &st);
    XML_SetElementHandler(parser.get(), on_start, on_end);
    XML_SetCharacterDataHandler(parser.get(), on_text);
    XML_SetStartDoctypeDeclHandler(parser.get(), on_doctype);
    XML_SetEntityDeclHandler(parser.get(), on_entity);
    XML_SetProcessingInstructionHandler(parser.get(), on_pi);
    XML_SetXmlDeclHandler(parser.get(), on_xml_decl);
    XML_SetParamEntityParsing(parser.get(), XML_PARAM_ENTITY_PARSING_NEVER);

    const auto status = XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE);
    if (!st.rejection.empty()) fail(st.rejection);
    if (status != XML_STATUS_OK) {
        fail(std::string(XML_ErrorString(XML_GetErrorCode(parser.get()))) + " at line " +
             std::to_string(XML_GetCurrentLineNumber(parser.get())));
    }
    if (!st.root) fail("no root element");
    return std::move(*st.root);
}

} // namespace privacycoach::detail
