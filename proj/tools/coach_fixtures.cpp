// coach-fixtures: writes the shared golden-vector file that other Privacy
// Coach clients (e.g. the browser UI) check their matcher and wizard against.

#include "privacycoach/atomic_file.hpp"
#include "privacycoach/fixtures.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Generate Privacy Coach golden-vector fixtures"};
    std::string out_path;
    std::size_t random_count = 40;
    std::uint64_t seed = 20101;
    app.add_option("-o,--out", out_path, "Output file (stdout when omitted)");
    app.add_option("--random", random_count, "Number of random (profile, policy) vectors")->capture_default_str();
    app.add_option("--seed", seed, "Seed for the random vectors")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    using namespace privacycoach::fixtures;
    const auto json = fixture_json(golden_vectors(random_count, seed), profile_vectors());
    if (out_path.empty()) {
        std::cout << json;
        return 0;
    }
    try {
        privacycoach::write_file_atomically(out_path, json);
    } catch (const privacycoach::StorageError& e) {
        std::cerr << "coach-fixtures: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
