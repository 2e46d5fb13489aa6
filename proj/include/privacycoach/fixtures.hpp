#pragma once

#include "privacycoach/match.hpp"
#include "privacycoach/profile.hpp"
#include "privacycoach/wizard.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace privacycoach::fixtures {

/// (profile, policy) -> expected MatchResult, all as canonical XML text.
struct GoldenVector {
    std::string name;
    std::string profile_xml;
    std::string policy_xml;
    std::string expected_xml;
};

/// A wizard answer sequence (option index per question, question order) and
/// the profile document it must produce.
struct ProfileVector {
    std::string name;
    std::vector<std::size_t> answers;
    std::string profile_xml;
};

/// Named scenarios first (agency badge, permissive profile, product count
/// example), then `random_count` seeded random pairs.
std::vector<GoldenVector> golden_vectors(std::size_t random_count = 40, std::uint64_t seed = 20101);

/// all-min, all-max and a fixed mixed sequence.
std::vector<ProfileVector> profile_vectors();

/// The shared fixture file: {"format": 1, "questions": [...], "match_vectors": [...], "profile_vectors": [...]}.
std::string fixture_json(const std::vector<GoldenVector>& vectors, const std::vector<ProfileVector>& profiles);

} // namespace privacycoach::fixtures
