#include "../support/oracle.hpp"

#include "privacycoach/fixtures.hpp"
#include "privacycoach/xml_codec.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

using namespace privacycoach;

namespace {

std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string attribute(const std::string& xml, const std::string& element, const std::string& name) {
    std::smatch m;
    const std::regex re("<" + element + "\\b[^>]*\\b" + name + "=\"([^\"]*)\"");
    return std::regex_search(xml, m, re) ? m[1].str() : std::string();
}

} // namespace

TEST_CASE("checked-in fixture file is what coach-fixtures generates") {
    const auto file = slurp(PRIVACYCOACH_GOLDEN_FILE);
    REQUIRE_FALSE(file.empty());
    CHECK(file == fixtures::fixture_json(fixtures::golden_vectors(), fixtures::profile_vectors()));
}

TEST_CASE("every match vector agrees with the oracle and with a fresh match") {
    const auto doc = nlohmann::json::parse(slurp(PRIVACYCOACH_GOLDEN_FILE));
    REQUIRE(doc.at("format") == 1);
    const auto& vectors = doc.at("match_vectors");
    REQUIRE(vectors.size() >= 40);

    std::size_t matches = 0;
    for (const auto& v : vectors) {
        const std::string name = v.at("name");
        const std::string profile_xml = v.at("profile");
        const std::string policy_xml = v.at("policy");
        const std::string expected = v.at("expected");
        CAPTURE(name);

        const auto policy_draft = policy_draft_from_xml(policy_xml);
        const auto profile = profile_from_xml(profile_xml);
        const bool oracle = oracle::acceptable(policy_draft, profile.to_draft());
        CHECK(attribute(expected, "matchresult", "overall") == (oracle ? "match" : "no-match"));
        CHECK(attribute(expected, "matchresult", "tag") == policy_draft.tag);
        matches += oracle ? 1 : 0;

        const auto policy = policy_from_xml(policy_xml);
        CHECK(match_result_to_xml(match_policies(profile, policy)) == expected);
        const auto verdicts = std::count(expected.begin(), expected.end(), '\n') - 3; // decl, open, close
        CHECK(static_cast<std::size_t>(verdicts) == vocabulary(policy.kind()).variable_count());
    }
    CHECK(vectors[0].at("name") == "agency-scenario-match");
    CHECK(attribute(vectors[0].at("expected"), "matchresult", "overall") == "match");
    CHECK(attribute(vectors[1].at("expected"), "matchresult", "overall") == "no-match");
    // The random part exercises both outcomes.
    CHECK(matches > 2);
    CHECK(matches < vectors.size() - 2);
}

TEST_CASE("every profile vector maps answers to the labelled levels") {
    const auto doc = nlohmann::json::parse(slurp(PRIVACYCOACH_GOLDEN_FILE));
    const auto& questions = doc.at("questions");
    REQUIRE(questions.size() == 16);

    for (const auto& p : doc.at("profile_vectors")) {
        const std::string name = p.at("name");
        const std::string xml = p.at("profile");
        const auto& answers = p.at("answers");
        CAPTURE(name);
        REQUIRE(answers.size() == questions.size());
        CHECK(profile_to_xml(profile_from_xml(xml)) == xml);

        for (std::size_t i = 0; i < questions.size(); ++i) {
            const auto& q = questions[i];
            const std::string id = q.at("id");
            const std::string kind = q.at("kind");
            const std::string variable = id.substr(id.find('.') + 1);
            const std::size_t answer = answers[i];
            const std::string label = q.at("options").at(answer);

            // The section of this kind in the profile document.
            const auto start = xml.find("<kind name=\"" + kind + "\">");
            const auto section = xml.substr(start, xml.find("</kind>", start) - start);
            std::string expected_line;
            if (q.at("class") == "dimension") {
                const auto level = label.substr(label.rfind('[') + 1, label.size() - label.rfind('[') - 2);
                expected_line = "<dimension name=\"" + variable + "\" max=\"" + level + "\"/>";
            } else {
                expected_line = "<channel name=\"" + variable + "\" allowed=\"" +
                                (label == "Yes" ? "true" : "false") + "\"/>";
            }
            CHECK_MESSAGE(section.find(expected_line) != std::string::npos, id << " -> " << expected_line);
        }
    }

    const auto& vectors = doc.at("profile_vectors");
    CHECK(vectors[0].at("profile") == profile_to_xml(UserProfile::most_protective()));
    CHECK(vectors[1].at("profile") == profile_to_xml(UserProfile::most_permissive()));
}
