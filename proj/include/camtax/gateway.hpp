#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace camtax {

struct GenerationParams {
    double temperature = 0.0;
    std::size_t max_tokens = 4095;
    double top_p = 1.0;
    double frequency_penalty = 0.0;
    double presence_penalty = 0.0;
};

void validate(const GenerationParams& params); // throws ConfigError
nlohmann::json to_json(const GenerationParams& params);
GenerationParams generation_params_from_json(const nlohmann::json& j);

enum class Role { System, User, Assistant };
std::string_view role_name(Role role);

struct ChatMessage {
    Role role = Role::User;
    std::string content;
};

struct ChatRequest {
    std::vector<ChatMessage> messages; // non-empty; last role must be user
    GenerationParams params;
    std::string tag; // pipeline stage label, for logging only
};

struct ChatResponse {
    std::string content; // raw model text, unmodified
    std::string backend_id;
    std::uint64_t latency_ms = 0;
};

// Stable content key of (messages, params); the tag is deliberately
// excluded so log labels cannot break replay.
std::string request_key(const ChatRequest& request);
nlohmann::json request_to_json(const ChatRequest& request);

enum class BackendKind { LiveHttp, Scripted, RecordReplay };
std::string_view backend_kind_name(BackendKind kind);

struct BackendConfig {
    BackendKind kind = BackendKind::Scripted;
    std::string endpoint_url;   // live_http
    std::string model_name;     // live_http
    std::string api_key_env_var; // live_http
    std::string script_path;    // scripted (optional; tests usually build in memory)
    std::string cassette_path;  // record_replay
    bool record = false;        // record_replay: true = record through live backend
    std::size_t max_retries = 3;
    std::uint64_t retry_backoff_ms = 100;
    std::size_t max_in_flight = 1;
};

// Thrown inside backends for failures the retry policy may absorb
// (timeouts, HTTP 429/5xx). Carries an optional Retry-After hint.
struct TransientBackendFailure {
    std::string message;
    std::optional<std::uint64_t> retry_after_ms;
};

class Backend {
public:
    virtual ~Backend() = default;
    // One attempt, no retries. Throws TransientBackendFailure or BackendError.
    virtual ChatResponse send_once(const ChatRequest& request) = 0;
    virtual std::string id() const = 0;
};

// Fixed response queue. An entry either succeeds with content or fails
// transiently, which lets tests drive the retry policy.
class ScriptedBackend : public Backend {
public:
    struct Entry {
        std::string content;
        bool fail = false;
        std::string fail_message;
    };

    ScriptedBackend() = default;
    explicit ScriptedBackend(std::vector<std::string> responses);
    static std::unique_ptr<ScriptedBackend> from_file(const std::filesystem::path& path);

    void push(std::string content);
    void push_failure(std::string message);
    std::size_t remaining() const;

    ChatResponse send_once(const ChatRequest& request) override;
    std::string id() const override { return "scripted"; }

private:
    mutable std::mutex mutex_;
    std::deque<Entry> entries_;
};

// OpenAI-compatible chat-completions client. The API key is read from the
// configured environment variable at construction time.
class HttpBackend : public Backend {
public:
    HttpBackend(std::string endpoint_url, std::string model_name, std::string api_key_env_var,
                std::uint64_t timeout_ms = 120000);

    ChatResponse send_once(const ChatRequest& request) override;
    std::string id() const override { return "live:" + model_name_; }

private:
    std::string endpoint_url_;
    std::string model_name_;
    std::string api_key_;
    std::uint64_t timeout_ms_;
    std::mutex mutex_;
};

// JSON-lines cassette: one {key, request, response} object per line.
class Cassette {
public:
    static Cassette load(const std::filesystem::path& path); // missing file -> empty cassette
    static void append(const std::filesystem::path& path, const ChatRequest& request,
                       const ChatResponse& response);

    std::optional<ChatResponse> find(const std::string& key) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, ChatResponse> entries_;
};

class RecordingBackend : public Backend {
public:
    RecordingBackend(std::unique_ptr<Backend> live, std::filesystem::path cassette_path);
    ChatResponse send_once(const ChatRequest& request) override;
    std::string id() const override;

private:
    std::unique_ptr<Backend> live_;
    std::filesystem::path cassette_path_;
    std::mutex mutex_;
};

class ReplayBackend : public Backend {
public:
    explicit ReplayBackend(std::filesystem::path cassette_path);
    // Never falls through to the network: a miss is a hard error.
    ChatResponse send_once(const ChatRequest& request) override;
    std::string id() const override;

private:
    Cassette cassette_;
    std::string cassette_name_;
};

// Builds the backend a config describes. `live_override`, when set, stands
// in for the live side (used by tests to record cassettes offline).
std::unique_ptr<Backend> make_backend(const BackendConfig& config,
                                      std::unique_ptr<Backend> live_override = nullptr);

using LogSink = std::function<void(const nlohmann::json&)>;

// Retry + logging wrapper every pipeline stage talks to. Holds at most
// max_in_flight requests against the backend at once.
class Gateway {
public:
    Gateway(std::unique_ptr<Backend> backend, std::size_t max_retries = 3,
            std::uint64_t retry_backoff_ms = 100, std::size_t max_in_flight = 1,
            LogSink log = nullptr);

    // Validates the request, retries transient failures with backoff
    // (honoring Retry-After), and appends the request/response pair to the
    // run log. Throws BackendError once retries are exhausted.
    ChatResponse send(const ChatRequest& request);

    Backend& backend() { return *backend_; }
    std::size_t requests_sent() const { return requests_sent_; }

    // Sleep hook; tests replace it to avoid real waiting.
    std::function<void(std::uint64_t)> sleep_ms;

private:
    std::unique_ptr<Backend> backend_;
    std::size_t max_retries_;
    std::uint64_t retry_backoff_ms_;
    std::size_t max_in_flight_;
    std::size_t in_flight_ = 0;
    std::mutex mutex_;
    std::condition_variable_any cv_;
    std::mutex log_mutex_;
    LogSink log_;
    std::atomic<std::size_t> requests_sent_{0};
};

Gateway make_gateway(const BackendConfig& config, LogSink log = nullptr,
                     std::unique_ptr<Backend> live_override = nullptr);

} // namespace camtax
