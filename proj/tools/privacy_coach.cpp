// privacy-coach: terminal client of the Privacy Coach.
//
//   privacy-coach wizard                 answer the questionnaire, store the profile
//   privacy-coach scan [TAG...]          look up tags (stdin lines if none) and match them
//   privacy-coach profile show           print the stored profile
//   privacy-coach provider register|delete|list   registrar access to the provider

#include "privacycoach/atomic_file.hpp"
#include "privacycoach/coach/app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace privacycoach;
using namespace privacycoach::coach;

namespace {

std::string default_profile_path() {
    if (const char* home = std::getenv("HOME"); home && *home)
        return (std::filesystem::path(home) / ".privacycoach" / "profile.xml").string();
    return "privacycoach-profile.xml";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Privacy Coach: match RFID tag privacy policies against your preferences"};
    app.require_subcommand(1);

    std::string endpoint = "http://127.0.0.1:8080/PrivacyCoachService";
    std::string profile_path = default_profile_path();
    double timeout_seconds = 10.0;
    app.add_option("--endpoint", endpoint, "Policy Provider base URL")
        ->envname("PRIVACYCOACH_ENDPOINT")
        ->capture_default_str();
    app.add_option("--profile", profile_path, "Privacy profile file")
        ->envname("PRIVACYCOACH_PROFILE")
        ->capture_default_str();
    app.add_option("--timeout", timeout_seconds, "Request timeout in seconds")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* wizard = app.add_subcommand("wizard", "Answer the privacy questionnaire and store your profile");
    bool assume_yes = false;
    wizard->add_flag("-y,--yes", assume_yes, "Overwrite an existing profile without asking");

    auto* scan_cmd = app.add_subcommand("scan", "Look up tags and match their policies against your profile");
    std::vector<std::string> tags;
    bool xml = false;
    scan_cmd->add_option("tags", tags, "Tag ids; read one per line from stdin when omitted");
    scan_cmd->add_flag("--xml", xml, "Emit match results as XML");

    auto* profile_cmd = app.add_subcommand("profile", "Inspect the stored profile");
    profile_cmd->require_subcommand(1);
    auto* profile_show = profile_cmd->add_subcommand("show", "Print every preference");

    auto* provider_cmd = app.add_subcommand("provider", "Registrar commands against the Policy Provider");
    provider_cmd->require_subcommand(1);
    auto* reg = provider_cmd->add_subcommand("register", "Register or replace a policy from an XML file");
    std::string policy_file;
    std::optional<std::string> reg_tag;
    reg->add_option("file", policy_file, "Policy document ('-' for stdin)")->required();
    reg->add_option("--tag", reg_tag, "Tag id to register under (defaults to the document's tag)");
    auto* del = provider_cmd->add_subcommand("delete", "Remove a tag's policy");
    std::string del_tag;
    del->add_option("tag", del_tag, "Tag id")->required();
    auto* list = provider_cmd->add_subcommand("list", "List registered tags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitFailure;
    }

    CoachConfig config;
    try {
        config.endpoint = Endpoint::parse(endpoint);
        config.profile_path = profile_path;
        config.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000.0));
        config.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "privacy-coach: " << e.what() << '\n';
        return kExitFailure;
    }

    if (wizard->parsed()) return run_wizard(config, std::cin, std::cout, std::cerr, {assume_yes});
    if (scan_cmd->parsed()) {
        ScanSource source = tags.empty() ? ScanSource{LineStream{&std::cin}} : ScanSource{TagArguments{tags}};
        return scan(config, source, std::cout, std::cerr, {xml});
    }
    if (profile_show->parsed()) return show_profile(config, std::cout, std::cerr);
    if (reg->parsed()) {
        std::string document;
        try {
            if (policy_file == "-") {
                document.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                document = read_file(policy_file);
            }
        } catch (const StorageError& e) {
            std::cerr << "privacy-coach: " << e.what() << '\n';
            return kExitFailure;
        }
        return provider_register(config, document, reg_tag, std::cout, std::cerr);
    }
    if (del->parsed()) return provider_delete(config, del_tag, std::cout, std::cerr);
    if (list->parsed()) return provider_list(config, std::cout, std::cerr);
    return kExitFailure;
}
