#pragma once

#include "privacycoach/match.hpp"
#include "privacycoach/profile.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace privacycoach {

/**
 * One question of the preference wizard. Dimension questions offer the
 * dimension's levels, most protective first; channel questions offer
 * "no" (option 0) and "yes" (option 1).
 */
struct WizardQuestion {
    std::string id; // "<kind>.<variable>", e.g. "badge.identity"
    PolicyKind kind;
    VariableClass variable_class;
    std::size_t variable_index; // position in the kind's dimensions or channels
    std::string prompt;
    std::vector<std::string> options;
};

/// Fixed question list: badge section then product section, vocabulary order
/// (dimensions before channels). 9 + 7 = 16 questions.
const std::vector<WizardQuestion>& wizard_questions();

/// Question id to chosen option index.
using WizardAnswerSet = std::map<std::string, std::size_t>;

class WizardError : public std::invalid_argument {
public:
    enum class Code { incomplete, out_of_range, unknown_question };

    WizardError(Code code, std::string question, const std::string& message)
        : std::invalid_argument(message), code_(code), question_(std::move(question)) {}

    Code code() const noexcept { return code_; }
    const std::string& question() const noexcept { return question_; }

private:
    Code code_;
    std::string question_;
};

/// Each answer sets exactly one dimension maximum or one channel permission.
/// Throws WizardError.
UserProfile build_profile(const WizardAnswerSet& answers);

/// Inverse of build_profile.
WizardAnswerSet answers_for(const UserProfile& profile);

} // namespace privacycoach
