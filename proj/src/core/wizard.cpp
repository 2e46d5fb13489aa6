#include "privacycoach/wizard.hpp"

#include <algorithm>
#include <array>

namespace privacycoach {

namespace {

struct DimensionText {
    std::string_view dimension;
    std::string_view badge_prompt;
    std::string_view product_prompt;
    std::array<std::string_view, 4> option_labels; // indexed by level
};

constexpr DimensionText kDimensionText[] = {
    {"identity", "May your ID badge use be connected to who you are?", "",
     {"No, it must stay anonymous", "A pseudonym is acceptable", "My real identity is acceptable"}},
    {"logging", "What may be recorded when you use your ID badge?", "",
     {"Nothing", "Only that the card entered the facility", "Every event (times, places, transactions)"}},
    {"profiling", "May a customer profile be built from your badge use?",
     "May a customer profile be built from the products you buy?",
     {"No profiling", "Only if it results in discounts or other benefits", "Yes, unconditionally"}},
    {"retention", "How long may the collected information be stored?",
     "How long may the collected information be stored?",
     {"Only for the transaction itself", "Up to a month", "Up to a year", "Indefinitely"}},
    {"sharing", "With whom may the collected information be shared?",
     "With whom may the collected information be shared?",
     {"Nobody", "Affiliated companies", "Third parties"}},
    {"linking", "", "May a tagged product be linked to you?",
     {"No, only to the item itself", "To the purchase transaction", "To my identity"}},
};

std::string_view channel_phrase(std::string_view channel) {
    if (channel == "email") return "by e-mail";
    if (channel == "sms") return "by SMS text message";
    if (channel == "premises-display") return "on displays on the premises";
    if (channel == "cashier-display") return "on the display at the cashier desk";
    if (channel == "in-store-display") return "on in-store displays";
    return channel;
}

const DimensionText* text_for(std::string_view dimension) {
    for (const auto& t : kDimensionText)
        if (t.dimension == dimension) return &t;
    return nullptr;
}

std::vector<WizardQuestion> make_questions() {
    std::vector<WizardQuestion> questions;
    for (auto kind : kAllKinds) {
        const auto& v = vocabulary(kind);
        const std::string prefix = std::string(to_string(kind)) + ".";
        for (std::size_t i = 0; i < v.dimensions.size(); ++i) {
            const auto& d = v.dimensions[i];
            WizardQuestion q{prefix + std::string(d.name), kind, VariableClass::dimension, i, {}, {}};
            const auto* text = text_for(d.name);
            q.prompt = std::string(kind == PolicyKind::badge ? text->badge_prompt : text->product_prompt);
            for (std::size_t level = 0; level < d.level_count(); ++level)
                q.options.push_back(std::string(text->option_labels[level]) + " [" + std::string(d.levels[level]) + "]");
            questions.push_back(std::move(q));
        }
        for (std::size_t i = 0; i < v.channels.size(); ++i) {
            WizardQuestion q{prefix + std::string(v.channels[i]), kind, VariableClass::channel, i, {}, {"No", "Yes"}};
            q.prompt = std::string(kind == PolicyKind::badge ? "ID badge: " : "Products: ") +
                       "may promotions be offered to you " + std::string(channel_phrase(v.channels[i])) + "?";
            questions.push_back(std::move(q));
        }
    }
    return questions;
}

} // namespace

const std::vector<WizardQuestion>& wizard_questions() {
    static const std::vector<WizardQuestion> questions = make_questions();
    return questions;
}

UserProfile build_profile(const WizardAnswerSet& answers) {
    const auto& questions = wizard_questions();
    for (const auto& [id, index] : answers) {
        const bool known = std::any_of(questions.begin(), questions.end(),
                                       [&](const WizardQuestion& q) { return q.id == id; });
        if (!known) throw WizardError(WizardError::Code::unknown_question, id, "unknown wizard question '" + id + "'");
    }

    std::array<std::vector<Level>, 2> maxima;
    std::array<std::vector<bool>, 2> allowed;
    for (auto kind : kAllKinds) {
        const auto& v = vocabulary(kind);
        maxima[static_cast<std::size_t>(kind)].resize(v.dimensions.size());
        allowed[static_cast<std::size_t>(kind)].resize(v.channels.size());
    }

    for (const auto& q : questions) {
        auto it = answers.find(q.id);
        if (it == answers.end())
            throw WizardError(WizardError::Code::incomplete, q.id, "question '" + q.id + "' is unanswered");
        if (it->second >= q.options.size())
            throw WizardError(WizardError::Code::out_of_range, q.id,
                              "answer " + std::to_string(it->second) + " is out of range for question '" + q.id + "'");
        const auto k = static_cast<std::size_t>(q.kind);
        if (q.variable_class == VariableClass::dimension)
            maxima[k][q.variable_index] = static_cast<Level>(it->second);
        else
            allowed[k][q.variable_index] = it->second == 1;
    }

    return UserProfile(KindPreferences(PolicyKind::badge, maxima[0], allowed[0]),
                       KindPreferences(PolicyKind::product, maxima[1], allowed[1]));
}

WizardAnswerSet answers_for(const UserProfile& profile) {
    WizardAnswerSet answers;
    for (const auto& q : wizard_questions()) {
        const auto& prefs = profile.preferences(q.kind);
        answers[q.id] = q.variable_class == VariableClass::dimension
                            ? prefs.max_level(q.variable_index)
                            : (prefs.channel_allowed(q.variable_index) ? 1u : 0u);
    }
    return answers;
}

} // namespace privacycoach
