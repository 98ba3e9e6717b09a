// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "seminorm/cli.hpp"

namespace {

using seminorm::cli::Json;

struct Flags {
    std::string input = "-";
    std::optional<std::int64_t> characteristic;
    std::string box, point;
    std::optional<std::int64_t> m_max, horizon, q_max;
    bool json = false, text = false;
};

std::vector<std::int64_t> split_ints(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::size_t used = 0;
        const auto v = std::stoll(piece, &used);
        if (used != piece.size()) throw std::invalid_argument("bad integer list '" + text + "'");
        out.push_back(v);
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(file), {}};
}

void add_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--input,-i", f.input, "JSON input document, - for stdin");
    cmd->add_option("--char", f.characteristic, "Field characteristic, 0 or a prime");
    cmd->add_option("--box", f.box, "Scan box a,b,...");
    cmd->add_option("--m-max", f.m_max, "Frobenius depth for characteristic p");
    cmd->add_option("--horizon", f.horizon, "Ratliff-Rush power horizon");
    cmd->add_option("--q-max", f.q_max, "Largest certificate q to try");
    cmd->add_option("--point", f.point, "Move this point of the curve to the origin, a,b");
    auto* json = cmd->add_flag("--json", f.json, "JSON output (default)");
    auto* text = cmd->add_flag("--text", f.text, "Plain text output");
    json->excludes(text);
}

int run(const std::string& command, const Flags& f) {
    Json doc;
    seminorm::cli::Report report;
    try {
        doc = Json::parse(read_input(f.input));
        if (!doc.is_object()) throw seminorm::cli::SchemaError({"document: expected a JSON object"});
        if (f.characteristic) doc["char"] = *f.characteristic;
        Json& opts = doc["options"];
        if (opts.is_null()) opts = Json::object();
        if (!f.box.empty()) opts["box"] = split_ints(f.box);
        if (!f.point.empty()) opts["point"] = split_ints(f.point);
        if (f.m_max) opts["m_max"] = *f.m_max;
        if (f.horizon) opts["horizon"] = *f.horizon;
        if (f.q_max) opts["q_max"] = *f.q_max;
        if (opts.is_object() && opts.empty()) doc.erase("options");
        report = seminorm::cli::execute(seminorm::cli::parse_input(doc, command));
    } catch (const seminorm::cli::SchemaError& e) {
        report = seminorm::cli::error_report(e.what());
        report.body["problems"] = e.problems();
    } catch (const std::exception& e) {
        report = seminorm::cli::error_report(e.what());
    }
    if (f.text) std::cout << seminorm::cli::render_text(report);
    else std::cout << report.body.dump(2) << "\n";
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seminormality and weak normality of monomial objects"};
    app.require_subcommand(1);
    Flags flags;
    std::string chosen;

    std::map<std::string, CLI::App*> groups;
    for (const auto& command : seminorm::cli::commands()) {
        const auto slash = command.find('/');
        const auto kind = command.substr(0, slash);
        if (!groups.count(kind)) {
            groups[kind] = app.add_subcommand(kind, "Commands on " + kind + " inputs");
            groups[kind]->require_subcommand(1);
        }
        auto* leaf = groups[kind]->add_subcommand(command.substr(slash + 1));
        add_flags(leaf, flags);
        leaf->callback([&chosen, command] { chosen = command; });
    }

    CLI11_PARSE(app, argc, argv);
    return run(chosen, flags);
}
