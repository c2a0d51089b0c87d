#include "patchwork/service.hpp"

#include <regex>

#include <httplib.h>

#include "patchwork/error.hpp"
#include "patchwork/ragsdale.hpp"
#include "patchwork/svg.hpp"

namespace patchwork {

using nlohmann::json;

namespace {

Response json_response(int status, const json& j) { return {status, "application/json", j.dump()}; }

Response error_response(int status, const std::string& code, const std::string& msg) {
    return json_response(status, {{"error", code}, {"message", msg}});
}

Point parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("a point is a pair of integers");
    return {j[0].get<int>(), j[1].get<int>()};
}

std::string query_param(const std::string& query, const std::string& key) {
    size_t pos = 0;
    while (pos <= query.size()) {
        size_t amp = query.find('&', pos);
        std::string kv = query.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
        size_t eq = kv.find('=');
        if (kv.substr(0, eq) == key) return eq == std::string::npos ? "" : kv.substr(eq + 1);
        if (amp == std::string::npos) break;
        pos = amp + 1;
    }
    return "";
}

}  // namespace

void Service::commit(Session& s, Configuration cfg) {
    Analysis a = analyze(cfg);
    s.cfg = std::move(cfg);
    s.analysis = std::move(a);
    ++s.revision;
}

Response Service::state(const Session& s, int status) const {
    json j;
    j["id"] = s.id;
    j["revision"] = s.revision;
    j["report"] = report_json(s.cfg, s.analysis);
    return json_response(status, j);
}

Response Service::create(const std::string& body) {
    json req = json::parse(body);
    Configuration cfg;
    if (req.contains("patch")) {
        cfg = load(parse_patch(req.at("patch").get<std::string>()));
    } else if (req.contains("ragsdale")) {
        const json& r = req.at("ragsdale");
        int k = r.at("k").get<int>();
        RagsdaleConfig rc;
        if (r.contains("single")) {
            const json& tm = r.at("single");
            rc = single_block(k, tm.at(0).get<int>(), tm.at(1).get<int>());
        } else {
            rc = full_construction(k);
        }
        cfg = make_configuration(std::move(rc.tri), rc.twists);
    } else {
        return error_response(400, "BadRequest", "body needs a 'patch' or 'ragsdale' member");
    }
    auto s = std::make_shared<Session>();
    s->id = "s" + std::to_string(next_id_++);
    s->revision = 0;
    commit(*s, std::move(cfg));
    sessions_[s->id] = s;
    return state(*s, 201);
}

Response Service::toggle_twist(Session& s, const std::string& body) {
    json req = json::parse(body);
    if (req.at("revision").get<int>() != s.revision)
        return json_response(409, {{"error", "StaleRevision"}, {"revision", s.revision}});
    const json& ej = req.at("edge");
    if (!ej.is_array() || ej.size() != 2) throw std::invalid_argument("edge is a pair of points");
    Point a = parse_point(ej[0]), b = parse_point(ej[1]);
    int e = s.cfg.tri.edge_index(a, b);
    if (e < 0) return error_response(400, "BadEdge", to_string(a) + "-" + to_string(b) + " is not an edge");
    if (s.cfg.tri.edge_on_boundary[e])
        return error_response(400, "BadEdge", to_string(a) + "-" + to_string(b) + " is a boundary edge");
    EdgeSet t = s.cfg.twists;
    t[e] = !t[e];
    if (auto bad = violated_cycle(s.cfg.curve, t)) {
        Point p = s.cfg.tri.points[s.cfg.curve.cycle_point[*bad]];
        json cyc = json::array();
        for (int f : s.cfg.curve.cycles[*bad])
            cyc.push_back({point_json(s.cfg.tri.points[s.cfg.tri.edges[f][0]]),
                           point_json(s.cfg.tri.points[s.cfg.tri.edges[f][1]])});
        return json_response(422, {{"error", "Inadmissible"},
                                   {"message", "twist directions around " + to_string(p) + " do not sum to zero"},
                                   {"cycle", {{"index", *bad}, {"point", point_json(p)}, {"edges", cyc}}}});
    }
    Configuration next = s.cfg;
    next.twists = t;
    next.signs = signs_from_twists(next.tri, next.curve, t);
    commit(s, std::move(next));
    return state(s);
}

Response Service::flip_sign(Session& s, const std::string& body) {
    json req = json::parse(body);
    if (req.at("revision").get<int>() != s.revision)
        return json_response(409, {{"error", "StaleRevision"}, {"revision", s.revision}});
    Point p = parse_point(req.at("point"));
    int v = s.cfg.tri.point_index(p);
    if (v < 0) return error_response(400, "BadPoint", to_string(p) + " is not a lattice point of the polygon");
    Configuration next = s.cfg;
    next.signs[v] = -next.signs[v];
    next.twists = twists_from_signs(next.tri, next.curve, next.signs);
    next.signs = signs_from_twists(next.tri, next.curve, next.twists);
    commit(s, std::move(next));
    return state(s);
}

Response Service::handle(const std::string& method, const std::string& target, const std::string& body) {
    static const std::regex kSession(R"(^/api/sessions/([A-Za-z0-9]+)(/[a-z-]+)?$)");
    std::string path = target.substr(0, target.find('?'));
    std::string query = target.find('?') == std::string::npos ? "" : target.substr(target.find('?') + 1);
    std::lock_guard<std::mutex> lock(mu_);
    try {
        if (path == "/api/sessions") {
            if (method != "POST") return error_response(405, "MethodNotAllowed", method + " " + path);
            return create(body);
        }
        std::smatch m;
        if (!std::regex_match(path, m, kSession)) return error_response(404, "NotFound", path);
        auto it = sessions_.find(m[1]);
        if (it == sessions_.end()) return error_response(404, "UnknownSession", m[1]);
        Session& s = *it->second;
        std::string action = m[2];
        if (action.empty() && method == "GET") return state(s);
        if (action == "/toggle-twist" && method == "POST") return toggle_twist(s, body);
        if (action == "/flip-sign" && method == "POST") return flip_sign(s, body);
        if (action == "/svg" && method == "GET") {
            std::string view = query_param(query, "view");
            return {200, "image/svg+xml", render_svg(s.cfg, s.analysis, view.empty() ? "subdivision" : view)};
        }
        if (action == "/patch" && method == "GET") return {200, "text/plain", emit_patch(to_patch(s.cfg))};
        return error_response(404, "NotFound", method + " " + path);
    } catch (const Error& e) {
        int status = (e.code() == Code::SyntaxError || e.code() == Code::SemanticError ||
                      e.code() == Code::ViewUnavailable)
                         ? 400
                         : 422;
        json j = {{"error", code_name(e.code())}, {"message", e.what()}};
        if (e.line()) j["line"] = *e.line();
        if (e.where()) j["point"] = point_json(*e.where());
        return json_response(status, j);
    } catch (const json::exception& e) {
        return error_response(400, "BadRequest", e.what());
    } catch (const std::invalid_argument& e) {
        return error_response(400, "BadRequest", e.what());
    }
}

struct Listener::Impl {
    httplib::Server server;
};

Listener::Listener(Service& svc) : impl_(std::make_unique<Impl>()) {
    auto forward = [&svc](const httplib::Request& req, httplib::Response& res) {
        Response r = svc.handle(req.method, req.target, req.body);
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    impl_->server.Get(".*", forward);
    impl_->server.Post(".*", forward);
}

Listener::~Listener() = default;

bool Listener::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }

int Listener::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

void Listener::run() { impl_->server.listen_after_bind(); }

void Listener::stop() { impl_->server.stop(); }

bool serve(Service& svc, const std::string& host, int port) {
    Listener l(svc);
    if (!l.bind(host, port)) return false;
    l.run();
    return true;
}

}  // namespace patchwork
