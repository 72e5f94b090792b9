#pragma once

#include "pubgames/game.hpp"
#include "pubgames/stats.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace httplib {
class Server;
}

namespace pubgames {

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

struct ServiceConfig {
    /// JSON-lines results log; results are accepted and dropped when unset.
    std::optional<std::string> results_path;
    /// Directory served at "/" (the web client build).
    std::optional<std::string> web_root;
    std::function<std::chrono::system_clock::time_point()> clock = [] { return std::chrono::system_clock::now(); };
};

/// Stateless JSON API over one immutable corpus snapshot. Each handler is a
/// pure function of the corpus and its request, except `result`, which
/// appends to the results log under a mutex.
class Service {
public:
    /// A null corpus makes every API endpoint answer 503.
    Service(std::shared_ptr<const Corpus> corpus, ServiceConfig config);

    HttpResponse stats() const;
    HttpResponse puzzle(std::string_view game, const std::optional<std::string>& seed_hex) const;
    /// `date` is YYYY-MM-DD; defaults to the current UTC date.
    HttpResponse daily(std::string_view game, const std::optional<std::string>& date) const;
    HttpResponse guess(std::string_view body) const;
    HttpResponse reveal(const std::optional<std::string>& game, const std::optional<std::string>& seed_hex) const;
    HttpResponse result(std::string_view body);

    /// Registers every route on `server`.
    void mount(httplib::Server& server);

private:
    std::shared_ptr<const Corpus> corpus_;
    ServiceConfig config_;
    std::mutex log_mutex_;
};

/// UTC calendar date of `t` as YYYY-MM-DD.
std::string utc_date(std::chrono::system_clock::time_point t);
/// UTC timestamp of `t` as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp(std::chrono::system_clock::time_point t);
/// True for a well-formed, existing calendar date YYYY-MM-DD.
bool valid_date(std::string_view date);

}  // namespace pubgames
