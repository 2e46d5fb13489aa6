#include "privacycoach/fixtures.hpp"

#include "privacycoach/xml_codec.hpp"

#include <json.hpp>

#include <random>

namespace privacycoach::fixtures {

namespace {

GoldenVector vector_for(std::string name, const UserProfile& profile, const PrivacyPolicy& policy) {
    return {std::move(name), profile_to_xml(profile), policy_to_xml(policy),
            match_result_to_xml(match_policies(profile, policy))};
}

KindPreferences random_prefs(std::mt19937_64& rng, PolicyKind kind) {
    const auto& v = vocabulary(kind);
    std::vector<Level> maxima;
    for (const auto& d : v.dimensions)
        maxima.push_back(static_cast<Level>(std::uniform_int_distribution<int>(0, d.top())(rng)));
    std::vector<bool> allowed;
    for (std::size_t i = 0; i < v.channels.size(); ++i) allowed.push_back((rng() & 1u) != 0);
    return KindPreferences(kind, std::move(maxima), std::move(allowed));
}

PrivacyPolicy random_policy(std::mt19937_64& rng, const TagId& tag) {
    const auto kind = (rng() & 1u) != 0 ? PolicyKind::badge : PolicyKind::product;
    const auto& v = vocabulary(kind);
    std::vector<Level> levels;
    for (const auto& d : v.dimensions)
        levels.push_back(static_cast<Level>(std::uniform_int_distribution<int>(0, d.top())(rng)));
    std::vector<bool> channels;
    for (std::size_t i = 0; i < v.channels.size(); ++i) channels.push_back((rng() & 1u) != 0);
    return PrivacyPolicy(tag, kind, std::move(levels), std::move(channels));
}

} // namespace

std::vector<GoldenVector> golden_vectors(std::size_t random_count, std::uint64_t seed) {
    const auto demo = TagId::parse("e4f6060c");
    const UserProfile agency(KindPreferences(PolicyKind::badge, {0, 1, 0, 0, 0}, {false, false, false, false}),
                             KindPreferences::most_protective(PolicyKind::product));
    const auto anonymous_presence = PrivacyPolicy::minimal(demo, PolicyKind::badge).with_level(1, 1);

    std::vector<GoldenVector> out;
    out.push_back(vector_for("agency-scenario-match", agency, anonymous_presence));
    out.push_back(vector_for("agency-scenario-no-match", agency, anonymous_presence.with_level(0, 1)));
    out.push_back(vector_for("permissive-profile", UserProfile::most_permissive(),
                             PrivacyPolicy(demo, PolicyKind::badge, {1, 1, 0, 2, 0}, {true, false, true, false})));
    out.push_back(vector_for("protective-profile-vs-bottom-policy", UserProfile::most_protective(),
                             PrivacyPolicy::minimal(TagId::parse("00ff"), PolicyKind::product)));
    const UserProfile closed_form(KindPreferences::most_protective(PolicyKind::badge),
                                  KindPreferences(PolicyKind::product, {1, 1, 1, 1}, {true, false, false}));
    out.push_back(vector_for("closed-form-product-match", closed_form,
                             PrivacyPolicy(TagId::parse("ff00"), PolicyKind::product, {1, 1, 1, 1}, {true, false, false})));
    out.push_back(vector_for("closed-form-product-channel-violation", closed_form,
                             PrivacyPolicy(TagId::parse("ff00"), PolicyKind::product, {1, 1, 1, 1}, {true, true, false})));

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        const UserProfile profile(random_prefs(rng, PolicyKind::badge), random_prefs(rng, PolicyKind::product));
        char tag[9];
        std::snprintf(tag, sizeof tag, "%08x", static_cast<unsigned>(rng() & 0xffffffffu));
        out.push_back(vector_for("random-" + std::to_string(i), profile, random_policy(rng, TagId::parse(tag))));
    }
    return out;
}

std::vector<ProfileVector> profile_vectors() {
    const auto& questions = wizard_questions();
    std::vector<ProfileVector> out;

    auto make = [&](std::string name, std::vector<std::size_t> answers) {
        WizardAnswerSet set;
        for (std::size_t i = 0; i < questions.size(); ++i) set[questions[i].id] = answers[i];
        out.push_back({std::move(name), answers, profile_to_xml(build_profile(set))});
    };

    std::vector<std::size_t> all_min(questions.size(), 0), all_max, mixed;
    for (std::size_t i = 0; i < questions.size(); ++i) {
        all_max.push_back(questions[i].options.size() - 1);
        mixed.push_back((i * 7 + 1) % questions[i].options.size());
    }
    make("all-min", all_min);
    make("all-max", all_max);
    make("mixed", mixed);
    return out;
}

std::string fixture_json(const std::vector<GoldenVector>& vectors, const std::vector<ProfileVector>& profiles) {
    nlohmann::ordered_json doc;
    doc["format"] = 1;

    auto& qs = doc["questions"] = nlohmann::ordered_json::array();
    for (const auto& q : wizard_questions()) {
        qs.push_back({{"id", q.id},
                      {"kind", std::string(to_string(q.kind))},
                      {"class", std::string(to_string(q.variable_class))},
                      {"prompt", q.prompt},
                      {"options", q.options}});
    }

    auto& mv = doc["match_vectors"] = nlohmann::ordered_json::array();
    for (const auto& v : vectors) {
        mv.push_back({{"name", v.name}, {"profile", v.profile_xml}, {"policy", v.policy_xml}, {"expected", v.expected_xml}});
    }

    auto& pv = doc["profile_vectors"] = nlohmann::ordered_json::array();
    for (const auto& p : profiles) {
        pv.push_back({{"name", p.name}, {"answers", p.answers}, {"profile", p.profile_xml}});
    }
    return doc.dump(2) + "\n";
}

} // namespace privacycoach::fixtures
