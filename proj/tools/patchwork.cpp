// Command-line front end: check, classify, ovals, ragsdale, render, serve.
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "patchwork/analysis.hpp"
#include "patchwork/error.hpp"
#include "patchwork/ragsdale.hpp"
#include "patchwork/service.hpp"
#include "patchwork/svg.hpp"

using namespace patchwork;
using nlohmann::json;

namespace {

Configuration load_file(const std::string& path) { return load(parse_patch(read_file(path))); }

int cmd_check(const std::string& path, bool as_json) {
    Configuration c = load_file(path);
    if (as_json) {
        std::cout << json{{"ok", true},
                          {"points", c.tri.points.size()},
                          {"triangles", c.tri.triangles.size()},
                          {"edges", c.tri.edges.size()},
                          {"genus", c.curve.genus},
                          {"twists", members(c.twists).size()},
                          {"normal_fan_unimodular", c.tri.normal_fan_unimodular}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "ok: " << c.tri.points.size() << " points, " << c.tri.triangles.size() << " triangles, "
                  << c.tri.edges.size() << " edges, g=" << c.curve.genus << ", "
                  << members(c.twists).size() << " twists\n";
        if (!c.tri.normal_fan_unimodular) std::cout << "note: normal fan is not unimodular\n";
    }
    return 0;
}

int cmd_classify(const std::string& path, bool as_json) {
    Configuration c = load_file(path);
    Analysis a = analyze(c);
    if (as_json)
        std::cout << report_json(c, a).dump() << "\n";
    else
        std::cout << a.cls.summary() << "\n";
    return 0;
}

int cmd_ovals(const std::string& path, bool as_json) {
    Configuration c = load_file(path);
    Analysis a = analyze(c);
    std::string text = ovals_text(a);
    if (as_json) {
        json r = report_json(c, a);
        std::cout << json{{"p", r["p"]}, {"n", r["n"]}, {"ovals", r["ovals"]}}.dump() << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_ragsdale(int k, const std::vector<int>& single, const std::string& out, bool as_json) {
    RagsdaleConfig rc = single.empty() ? full_construction(k) : single_block(k, single[0], single[1]);
    Configuration c = make_configuration(rc.tri, rc.twists);
    Analysis a = analyze(c);
    if (!out.empty()) write_file(out, emit_patch(to_patch(c)));
    json blocks = json::array();
    for (const auto& b : rc.blocks) {
        json side = json::array();
        for (Point p : b.side) side.push_back(point_json(p));
        blocks.push_back({{"t", b.t},
                          {"m", b.m},
                          {"upper", point_json(b.upper)},
                          {"lower", point_json(b.lower)},
                          {"side", side},
                          {"adjustment", b.adjustment}});
    }
    json r = report_json(c, a);
    if (as_json) {
        json j = {{"k", k},
                  {"blocks", blocks},
                  {"predicted_p", rc.predicted_p},
                  {"closed_form", rc.closed_form ? json(rc.closed_form->str()) : json(nullptr)},
                  {"adjustments", rc.adjustments},
                  {"report", r}};
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "degree " << 2 * k << ", " << rc.blocks.size() << " block(s)\n";
    for (const auto& b : rc.blocks)
        std::cout << "  t=" << b.t << " m=" << b.m << " P=" << to_string(b.upper)
                  << " P'=" << to_string(b.lower) << " B=" << to_string(b.side.front()) << ".."
                  << to_string(b.side.back()) << "\n";
    for (const auto& s : rc.adjustments) std::cout << "  adjusted: " << s << "\n";
    std::cout << a.cls.summary() << "\n";
    std::cout << "predicted p=" << rc.predicted_p;
    if (rc.closed_form) std::cout << " closed form p=" << rc.closed_form->str();
    std::cout << "\n";
    std::cout << "p=" << r["p"].dump() << " n=" << r["n"].dump() << "\n";
    return 0;
}

int cmd_render(const std::string& path, const std::string& view, const std::string& out) {
    Configuration c = load_file(path);
    Analysis a = analyze(c);
    write_file(out, render_svg(c, a, view));
    return 0;
}

int cmd_serve(int port) {
    Service svc;
    std::cerr << "listening on 127.0.0.1:" << port << "\n";
    if (!serve(svc, "127.0.0.1", port)) {
        std::cerr << "error IoError: cannot bind port " << port << "\n";
        return 1;
    }
    return 0;
}

int default_port() {
    const char* env = std::getenv("PATCHWORK_PORT");
    if (env) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return 8080;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial patchworking of real tropical plane curves"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, view, out;
    int k = 0, port = default_port();
    std::vector<int> single;

    auto* check = app.add_subcommand("check", "validate a patch file");
    check->add_option("file", file)->required();
    auto* classify = app.add_subcommand("classify", "rank, components and structural certificate");
    classify->add_option("file", file)->required();
    auto* ovals = app.add_subcommand("ovals", "even/odd oval counts and the nesting tree");
    ovals->add_option("file", file)->required();
    auto* ragsdale = app.add_subcommand("ragsdale", "generate a Ragsdale counter-example configuration");
    ragsdale->add_option("--k", k, "half the degree")->required()->check(CLI::Range(5, 40));
    ragsdale->add_option("--single", single, "single block t,m")->delimiter(',')->expected(2);
    ragsdale->add_option("--out", out, "write the configuration as a patch file");
    auto* render = app.add_subcommand("render", "write an SVG view");
    render->add_option("file", file)->required();
    render->add_option("--view", view)->required()->check(CLI::IsMember({"subdivision", "zones", "realpart"}));
    render->add_option("--out", out)->required();
    auto* srv = app.add_subcommand("serve", "run the JSON/HTTP session service");
    srv->add_option("--port", port, "port (default $PATCHWORK_PORT or 8080)");
    for (auto* sub : {check, classify, ovals, ragsdale, render, srv}) sub->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return cmd_check(file, as_json);
        if (*classify) return cmd_classify(file, as_json);
        if (*ovals) return cmd_ovals(file, as_json);
        if (*ragsdale) return cmd_ragsdale(k, single, out, as_json);
        if (*render) return cmd_render(file, view, out);
        if (*srv) return cmd_serve(port);
    } catch (const Error& e) {
        if (as_json) {
            json j = {{"error", code_name(e.code())}, {"message", e.what()}};
            if (e.line()) j["line"] = *e.line();
            std::cout << j.dump() << "\n";
        } else {
            std::cerr << "error " << code_name(e.code()) << ": " << e.what();
            if (e.line()) std::cerr << " (line " << *e.line() << ")";
            std::cerr << "\n";
        }
        return 1;
    }
    return 2;
}
