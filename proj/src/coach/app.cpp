#include "privacycoach/coach/app.hpp"

#include "privacycoach/atomic_file.hpp"
#include "privacycoach/match.hpp"
#include "privacycoach/wizard.hpp"
#include "privacycoach/xml_codec.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace privacycoach::coach {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kUnknownTagLine = "UNKNOWN TAG — no policy registered; treat with caution";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string xml_error(std::string_view code, std::string_view tag, std::string_view message = {}) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<error code=\"" + std::string(code) + "\" tag=\"" +
                      escape_xml_attribute(tag) + "\"";
    if (!message.empty()) out += " message=\"" + escape_xml_attribute(message) + "\"";
    return out + "/>\n";
}

class ScanSession {
public:
    ScanSession(const CoachConfig& config, const UserProfile& profile, std::ostream& out, std::ostream& err,
                const ScanOptions& options)
        : config_(config), profile_(profile), out_(out), err_(err), options_(options) {}

    void scan_one(const std::string& raw) {
        if (auto error = TagId::check(raw)) {
            err_ << "invalid tag id '" << raw << "': " << to_string(*error) << '\n';
            if (options_.xml)
                out_ << xml_error("invalid-tag-id", raw, to_string(*error));
            else
                out_ << "tag " << raw << "\nINVALID TAG ID (" << to_string(*error) << ")\n";
            raise(kExitUnknownTag);
            out_.flush();
            return;
        }
        const auto tag = TagId::parse(raw);
        const auto outcome = fetch_policy(config_, tag);
        std::visit([&](const auto& o) { render(tag, o); }, outcome);
        out_.flush();
    }

    int exit_code() const { return exit_; }

private:
    void render(const TagId& tag, const PrivacyPolicy& policy) {
        const auto result = match_policies(profile_, policy);
        raise(result.matched() ? kExitOk : kExitNoMatch);
        if (options_.xml) {
            out_ << match_result_to_xml(result);
            return;
        }
        const auto lines = explain(result);
        out_ << "tag " << tag << " (" << to_string(policy.kind()) << ")\n" << lines.front() << '\n';
        for (std::size_t i = 1; i < lines.size(); ++i) out_ << "  " << lines[i] << '\n';
    }

    void render(const TagId& tag, const UnknownTag&) {
        raise(kExitUnknownTag);
        if (options_.xml)
            out_ << xml_error("unknown-tag", tag.str());
        else
            out_ << "tag " << tag << '\n' << kUnknownTagLine << '\n';
    }

    void render(const TagId& tag, const TransportError& e) {
        raise(kExitTransportError);
        err_ << "cannot reach policy provider at " << config_.endpoint.url() << ": " << e.message << '\n';
        if (options_.xml)
            out_ << xml_error("transport-error", tag.str(), e.message);
        else
            out_ << "tag " << tag << "\nERROR: policy provider unreachable (" << e.message << ")\n";
    }

    void render(const TagId& tag, const ProtocolError& e) {
        raise(kExitTransportError);
        err_ << "protocol error from policy provider: " << e.message << '\n';
        if (options_.xml)
            out_ << xml_error("protocol-error", tag.str(), e.message);
        else
            out_ << "tag " << tag << "\nERROR: unusable answer from policy provider (" << e.message << ")\n";
    }

    void raise(int code) { exit_ = std::max(exit_, code); }

    const CoachConfig& config_;
    const UserProfile& profile_;
    std::ostream& out_;
    std::ostream& err_;
    const ScanOptions& options_;
    int exit_ = kExitOk;
};

} // namespace

std::optional<UserProfile> load_profile(const CoachConfig& config, std::ostream& err) {
    std::error_code ec;
    if (!fs::exists(config.profile_path, ec)) {
        err << "no privacy profile at " << config.profile_path.string()
            << "; run 'privacy-coach wizard' to create one\n";
        return std::nullopt;
    }
    try {
        return profile_from_xml(read_file(config.profile_path));
    } catch (const std::exception& e) {
        err << "cannot use privacy profile " << config.profile_path.string() << ": " << e.what()
            << "\nrun 'privacy-coach wizard' to recreate it\n";
        return std::nullopt;
    }
}

int scan(const CoachConfig& config, const ScanSource& source, std::ostream& out, std::ostream& err,
         const ScanOptions& options) {
    const auto profile = load_profile(config, err);
    if (!profile) return kExitNoProfile;

    ScanSession session(config, *profile, out, err, options);
    if (const auto* args = std::get_if<TagArguments>(&source)) {
        for (const auto& raw : args->tags) session.scan_one(trim(raw));
    } else {
        std::string line;
        auto& in = *std::get<LineStream>(source).in;
        while (std::getline(in, line)) {
            auto raw = trim(line);
            if (!raw.empty()) session.scan_one(raw);
        }
    }
    return session.exit_code();
}

int run_wizard(const CoachConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
               const WizardOptions& options) {
    std::error_code ec;
    std::string line;
    if (fs::exists(config.profile_path, ec) && !options.assume_yes) {
        out << "A privacy profile already exists at " << config.profile_path.string() << ".\nOverwrite it? [y/N] "
            << std::flush;
        if (!std::getline(in, line) || (trim(line) != "y" && trim(line) != "Y")) {
            out << "Keeping the existing profile.\n";
            return kExitAborted;
        }
    }

    const auto& questions = wizard_questions();
    WizardAnswerSet answers;
    out << "Answer each question with the number of your choice (b = back, q = quit).\n";

    std::size_t i = 0;
    while (i < questions.size()) {
        const auto& q = questions[i];
        out << "\n[" << i + 1 << "/" << questions.size() << "] " << q.prompt << '\n';
        for (std::size_t o = 0; o < q.options.size(); ++o) out << "  " << o + 1 << ") " << q.options[o] << '\n';
        out << "> " << std::flush;

        if (!std::getline(in, line)) {
            out << "\nWizard aborted; no profile written.\n";
            return kExitAborted;
        }
        const auto answer = trim(line);
        if (answer == "q" || answer == "Q") {
            out << "Wizard aborted; no profile written.\n";
            return kExitAborted;
        }
        if (answer == "b" || answer == "B") {
            if (i > 0) --i;
            continue;
        }
        std::size_t choice = 0;
        const bool numeric = !answer.empty() && answer.size() < 4 &&
                             std::all_of(answer.begin(), answer.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (numeric) choice = static_cast<std::size_t>(std::stoul(answer));
        if (!numeric || choice < 1 || choice > q.options.size()) {
            out << "Please enter a number from 1 to " << q.options.size() << ".\n";
            continue;
        }
        answers[q.id] = choice - 1;
        ++i;
    }

    const auto profile = build_profile(answers);
    try {
        const auto parent = config.profile_path.parent_path();
        if (!parent.empty()) fs::create_directories(parent);
        write_file_atomically(config.profile_path, profile_to_xml(profile));
    } catch (const std::exception& e) {
        err << "cannot write profile: " << e.what() << '\n';
        return kExitFailure;
    }
    out << "\nProfile saved to " << config.profile_path.string() << ".\n";
    return kExitOk;
}

std::vector<std::string> describe_profile(const UserProfile& profile) {
    std::vector<std::string> lines;
    for (auto kind : kAllKinds) {
        const auto& prefs = profile.preferences(kind);
        const auto& v = prefs.vocab();
        const std::string prefix = std::string(to_string(kind)) + ".";
        for (std::size_t i = 0; i < v.dimensions.size(); ++i)
            lines.push_back(prefix + std::string(v.dimensions[i].name) + ": at most " + std::string(prefs.max_name(i)));
        for (std::size_t i = 0; i < v.channels.size(); ++i)
            lines.push_back(prefix + std::string(v.channels[i]) + ": " +
                            (prefs.channel_allowed(i) ? "allowed" : "disallowed"));
    }
    return lines;
}

int show_profile(const CoachConfig& config, std::ostream& out, std::ostream& err) {
    const auto profile = load_profile(config, err);
    if (!profile) return kExitNoProfile;
    for (const auto& line : describe_profile(*profile)) out << line << '\n';
    return kExitOk;
}

// ── Registrar commands ──────────────────────────────────────────────────────

namespace {

int report_transport(const AdminResponse& r, const CoachConfig& config, std::ostream& err) {
    err << "cannot reach policy provider at " << config.endpoint.url() << ": " << r.error << '\n';
    return kExitTransportError;
}

} // namespace

int provider_register(const CoachConfig& config, std::string_view document, const std::optional<std::string>& tag,
                      std::ostream& out, std::ostream& err) {
    std::string tag_text;
    if (tag) {
        tag_text = *tag;
    } else {
        try {
            tag_text = policy_draft_from_xml(document).tag;
        } catch (const ValidationError& e) {
            err << "policy document rejected: " << e.what() << '\n';
            return kExitFailure;
        }
    }
    if (auto error = TagId::check(tag_text)) {
        err << "invalid tag id '" << tag_text << "': " << to_string(*error) << '\n';
        return kExitFailure;
    }
    const auto id = TagId::parse(tag_text);
    const auto r = put_policy(config, id, document);
    if (r.status == 0) return report_transport(r, config, err);
    if (r.status == 201 || r.status == 200) {
        out << (r.status == 201 ? "created " : "replaced ") << id << '\n';
        return kExitOk;
    }
    err << "provider rejected the policy (status " << r.status << "):\n" << r.body;
    return r.status == 400 ? kExitFailure : kExitTransportError;
}

int provider_delete(const CoachConfig& config, std::string_view tag, std::ostream& out, std::ostream& err) {
    if (auto error = TagId::check(tag)) {
        err << "invalid tag id '" << tag << "': " << to_string(*error) << '\n';
        return kExitUnknownTag;
    }
    const auto id = TagId::parse(tag);
    const auto r = delete_policy(config, id);
    if (r.status == 0) return report_transport(r, config, err);
    if (r.status == 204) {
        out << "deleted " << id << '\n';
        return kExitOk;
    }
    if (r.status == 404) {
        out << "unknown tag " << id << '\n';
        return kExitUnknownTag;
    }
    err << "unexpected provider status " << r.status << '\n';
    return kExitTransportError;
}

int provider_list(const CoachConfig& config, std::ostream& out, std::ostream& err) {
    const auto r = get_tags(config);
    if (r.status == 0) return report_transport(r, config, err);
    if (r.status != 200) {
        err << "unexpected provider status " << r.status << '\n';
        return kExitTransportError;
    }
    try {
        for (const auto& tag : parse_tag_list(r.body)) out << tag << '\n';
    } catch (const ValidationError& e) {
        err << "unusable tag listing: " << e.what() << '\n';
        return kExitTransportError;
    }
    return kExitOk;
}

} // namespace privacycoach::coach
