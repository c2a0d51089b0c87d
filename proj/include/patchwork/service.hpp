#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "patchwork/analysis.hpp"

namespace patchwork {

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

// Session store behind the JSON API. handle() is transport-free so tests can
// drive it directly; serve() puts it behind an HTTP listener.
class Service {
public:
    Response handle(const std::string& method, const std::string& target, const std::string& body);

private:
    struct Session {
        std::string id;
        int revision = 0;
        Configuration cfg;
        Analysis analysis;
    };

    Response create(const std::string& body);
    Response state(const Session& s, int status = 200) const;
    Response toggle_twist(Session& s, const std::string& body);
    Response flip_sign(Session& s, const std::string& body);
    void commit(Session& s, Configuration cfg);

    std::mutex mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    int next_id_ = 1;
};

// HTTP front end for a Service.
class Listener {
public:
    explicit Listener(Service& svc);
    ~Listener();
    bool bind(const std::string& host, int port);
    int bind_any_port(const std::string& host);  // returns the port, or -1
    void run();   // blocks until stop()
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Blocks until the listener stops. Returns false if the port cannot be bound.
bool serve(Service& svc, const std::string& host, int port);

}  // namespace patchwork
