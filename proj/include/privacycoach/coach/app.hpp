#pragma once

#include "privacycoach/coach/client.hpp"
#include "privacycoach/profile.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace privacycoach::coach {

// Process exit codes of the coach CLI. For scans over several tags the
// highest value among no_match, unknown_tag and transport_error wins.
enum ExitCode : int {
    kExitOk = 0,              // success; every scanned tag matched
    kExitNoMatch = 1,         // some policy does not match the profile
    kExitUnknownTag = 2,      // some tag has no registered policy, or is not a tag id
    kExitTransportError = 3,  // provider unreachable, timed out, or answered nonsense
    kExitNoProfile = 4,       // profile missing or unreadable: run the wizard first
    kExitFailure = 5,         // usage errors and local failures
    kExitAborted = 6,         // wizard abandoned; nothing written
};

/// Tags given on the command line.
struct TagArguments {
    std::vector<std::string> tags;
};

/// One tag id per line, standing in for repeated taps of the phone on tags.
struct LineStream {
    std::istream* in;
};

using ScanSource = std::variant<TagArguments, LineStream>;

struct ScanOptions {
    bool xml = false; // emit MatchResult documents instead of text
};

/// Fetches, matches locally and renders a verdict for every tag in `source`.
int scan(const CoachConfig& config, const ScanSource& source, std::ostream& out, std::ostream& err,
         const ScanOptions& options = {});

struct WizardOptions {
    bool assume_yes = false; // overwrite an existing profile without asking
};

/// Asks the fixed question list on `in`/`out` and writes the canonical
/// profile atomically. Returns the exit code; on abort (EOF or "q") nothing
/// is written.
int run_wizard(const CoachConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
               const WizardOptions& options = {});

/// One line per dimension maximum and channel permission, vocabulary order.
int show_profile(const CoachConfig& config, std::ostream& out, std::ostream& err);

/// Same lines as show_profile prints.
std::vector<std::string> describe_profile(const UserProfile& profile);

/// Loads the profile at config.profile_path; nullopt with a message on `err` if absent or invalid.
std::optional<UserProfile> load_profile(const CoachConfig& config, std::ostream& err);

int provider_register(const CoachConfig& config, std::string_view document, const std::optional<std::string>& tag,
                      std::ostream& out, std::ostream& err);
int provider_delete(const CoachConfig& config, std::string_view tag, std::ostream& out, std::ostream& err);
int provider_list(const CoachConfig& config, std::ostream& out, std::ostream& err);

} // namespace privacycoach::coach
