// policy-provider: the Privacy Coach back office. Resolves tag numbers to
// privacy policies over HTTP and stores them as one XML file per tag.

#include "privacycoach/provider/registry.hpp"
#include "privacycoach/provider/service.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <thread>

#include <pthread.h>

using namespace privacycoach;
using namespace privacycoach::provider;

int main(int argc, char** argv) {
    CLI::App app{"Privacy Coach Policy Provider"};

    std::string bind = "127.0.0.1";
    int port = 8080;
    std::string storage = "policies";
    std::string base_path(kDefaultBasePath);
    std::string access_log_path;
    app.add_option("--bind", bind, "Listen address")->envname("PRIVACYCOACH_PROVIDER_BIND")->capture_default_str();
    app.add_option("--port", port, "Listen port (0 picks a free one)")
        ->envname("PRIVACYCOACH_PROVIDER_PORT")
        ->capture_default_str()
        ->check(CLI::Range(0, 65535));
    app.add_option("--storage", storage, "Storage root, one <tagid>.xml per tag")
        ->envname("PRIVACYCOACH_PROVIDER_STORAGE")
        ->capture_default_str();
    app.add_option("--base-path", base_path, "URL prefix of the service")
        ->envname("PRIVACYCOACH_PROVIDER_BASE_PATH")
        ->capture_default_str();
    app.add_option("--access-log", access_log_path, "Append the access log here instead of stderr")
        ->envname("PRIVACYCOACH_PROVIDER_ACCESS_LOG");
    CLI11_PARSE(app, argc, argv);

    // Signals are taken by a dedicated thread; block them before any other thread starts.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    std::ofstream log_file;
    if (!access_log_path.empty()) {
        log_file.open(access_log_path, std::ios::app);
        if (!log_file) {
            std::cerr << "policy-provider: cannot open access log " << access_log_path << '\n';
            return 1;
        }
    }
    AccessLog access_log(access_log_path.empty() ? static_cast<std::ostream&>(std::cerr) : log_file);

    try {
        std::filesystem::create_directories(storage);
        PolicyRegistry registry(storage);
        for (const auto& skipped : registry.skipped())
            std::cerr << "policy-provider: skipped " << skipped.file.string() << ": " << skipped.reason << '\n';

        ProviderService service(registry, base_path, &access_log);
        const int bound = service.bind(bind, port);
        std::cout << "policy-provider listening on " << bind << ':' << bound << service.base_path() << " with "
                  << registry.size() << " policies" << std::endl;

        std::thread signal_thread([&] {
            int sig = 0;
            sigwait(&signals, &sig);
            service.stop();
        });
        service.serve();
        // serve() may also return on its own (e.g. socket failure); wake the signal thread.
        pthread_kill(signal_thread.native_handle(), SIGTERM);
        signal_thread.join();
    } catch (const std::exception& e) {
        std::cerr << "policy-provider: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
