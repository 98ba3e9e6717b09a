// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "seminorm/criteria.hpp"
#include "seminorm/curves.hpp"
#include "seminorm/monoids.hpp"
#include "seminorm/valuations.hpp"
#include "seminorm/weak_closure.hpp"

namespace seminorm::cli {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial expressions.

class ExpressionParser {
public:
    ExpressionParser(const std::string& text, CharSpec field, const std::vector<std::string>& vars)
        : text_(text), field_(field), vars_(vars) {}

    SparsePolynomial run() {
        skip_space();
        if (at_end()) throw ParseError(pos_, "empty expression");
        auto value = expr();
        skip_space();
        if (!at_end()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                throw ParseError(pos_, "expected an operator (write products with '*')");
            throw ParseError(pos_, std::string("unexpected '") + c + "'");
        }
        return value;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePolynomial expr() {
        auto value = term();
        for (;;) {
            if (accept('+')) value += term();
            else if (accept('-')) value -= term();
            else return value;
        }
    }

    SparsePolynomial term() {
        auto value = unary();
        while (accept('*')) value = value * unary();
        return value;
    }

    SparsePolynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    SparsePolynomial power() {
        auto base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "expected a nonnegative integer exponent");
        std::int64_t e = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int digit = text_[pos_] - '0';
            if (e > (std::numeric_limits<std::int32_t>::max() - digit) / 10) throw ParseError(start, "exponent overflow");
            e = e * 10 + digit;
            ++pos_;
        }
        if (accept('^')) throw ParseError(pos_ - 1, "chained exponents need parentheses");
        return base.pow(e);
    }

    SparsePolynomial atom() {
        skip_space();
        if (at_end()) throw ParseError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return SparsePolynomial::constant(field_, vars_, Coeff(BigInt(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) throw ParseError(start, "unknown variable '" + name + "'");
            return SparsePolynomial::variable(field_, vars_, static_cast<std::size_t>(it - vars_.begin()));
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    const std::string& text_;
    CharSpec field_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Document validation.

const std::map<std::string, std::set<std::string>>& command_options() {
    static const std::map<std::string, std::set<std::string>> table{
        {"ideal/integral-closure", {}},
        {"ideal/weak-closure", {"m_max"}},
        {"ideal/rees", {}},
        {"ideal/samuel", {}},
        {"ideal/i-greater", {}},
        {"ideal/ratliff-rush", {"horizon"}},
        {"semigroup/seminormalize", {}},
        {"semigroup/weak-normalize", {}},
        {"semigroup/relative", {}},
        {"monoid/member", {}},
        {"monoid/seminormal", {"box"}},
        {"curve/check", {"point"}},
        {"element/verify-sosi", {}},
        {"element/verify-wsi", {}},
        {"element/derive-F", {"q_max"}},
        {"element/derivative-check", {}},
        {"element/swan", {}},
        {"element/schanuel", {}},
    };
    return table;
}

const std::map<std::string, std::set<std::string>>& kind_fields() {
    static const std::map<std::string, std::set<std::string>> table{
        {"ideal", {"vars", "generators", "exponent", "n"}},
        {"semigroup", {"generators", "ambient"}},
        {"monoid", {"generators", "exponent"}},
        {"curve", {"vars", "poly"}},
        {"element", {"vars", "ring", "ideal", "b", "c", "a", "F", "certificate"}},
    };
    return table;
}

std::vector<std::string> default_vars(std::size_t dim) {
    if (dim == 1) return {"t"};
    if (dim == 2) return {"x", "y"};
    if (dim == 3) return {"x", "y", "z"};
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= dim; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class Validator {
public:
    explicit Validator(const Json& doc) : doc_(doc) {}

    void fail(const std::string& problem) { problems_.push_back(problem); }
    bool ok() const { return problems_.empty(); }
    std::vector<std::string>& problems() { return problems_; }

    bool has(const std::string& key) const { return doc_.contains(key); }
    const Json& at(const std::string& key) const { return doc_.at(key); }

    std::optional<std::int64_t> integer(const Json& j, const std::string& where, std::int64_t min) {
        if (!j.is_number_integer()) {
            fail(where + ": expected an integer");
            return std::nullopt;
        }
        const auto v = j.get<std::int64_t>();
        if (v < min) {
            fail(where + ": must be at least " + std::to_string(min));
            return std::nullopt;
        }
        return v;
    }

    std::optional<IntVector> int_array(const Json& j, const std::string& where, std::int64_t min) {
        if (!j.is_array()) {
            fail(where + ": expected an array of integers");
            return std::nullopt;
        }
        IntVector out;
        bool good = true;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto v = integer(j[i], where + "[" + std::to_string(i) + "]", min);
            if (v) out.push_back(*v);
            else good = false;
        }
        if (!good) return std::nullopt;
        return out;
    }

    std::optional<std::vector<IntVector>> exponent_list(const Json& j, const std::string& where) {
        if (!j.is_array() || j.empty()) {
            fail(where + ": expected a nonempty array of exponent vectors");
            return std::nullopt;
        }
        std::vector<IntVector> out;
        bool good = true;
        std::optional<std::size_t> length;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto here = where + "[" + std::to_string(i) + "]";
            if (j[i].is_array() && !j[i].empty()) {
                if (!length) length = j[i].size();
                else if (j[i].size() != *length) {
                    fail(here + ": length differs from the first vector");
                    good = false;
                }
            }
            auto v = int_array(j[i], here, 0);
            if (!v) {
                good = false;
                continue;
            }
            if (v->empty()) {
                fail(here + ": empty exponent vector");
                good = false;
            }
            out.push_back(*v);
        }
        if (!good) return std::nullopt;
        return out;
    }

    std::optional<std::vector<std::string>> vars(const Json& j, const std::string& where) {
        if (!j.is_array() || j.empty()) {
            fail(where + ": expected a nonempty array of variable names");
            return std::nullopt;
        }
        std::vector<std::string> out;
        for (const auto& v : j) {
            if (!v.is_string() || !is_identifier(v.get<std::string>())) {
                fail(where + ": variable names must be identifiers");
                return std::nullopt;
            }
            out.push_back(v.get<std::string>());
        }
        if (std::set<std::string>(out.begin(), out.end()).size() != out.size()) {
            fail(where + ": duplicate variable names");
            return std::nullopt;
        }
        return out;
    }

    std::optional<SparsePolynomial> poly(const Json& j, const std::string& where, CharSpec field,
                                         const std::vector<std::string>& vars) {
        if (!j.is_string()) {
            fail(where + ": expected a polynomial string");
            return std::nullopt;
        }
        try {
            return parse_polynomial(j.get<std::string>(), field, vars);
        } catch (const std::exception& e) {
            fail(where + ": " + e.what());
            return std::nullopt;
        }
    }

private:
    const Json& doc_;
    std::vector<std::string> problems_;
};

std::string poly_text(const SparsePolynomial& p) { return p.to_string(); }

Json canonical_polys(Validator& v, const Json& list, const std::string& where, CharSpec field,
                     const std::vector<std::string>& vars) {
    Json out = Json::array();
    if (!list.is_array()) {
        v.fail(where + ": expected an array of polynomial strings");
        return out;
    }
    for (std::size_t i = 0; i < list.size(); ++i)
        if (auto p = v.poly(list[i], where + "[" + std::to_string(i) + "]", field, vars)) out.push_back(poly_text(*p));
    return out;
}

void validate_ideal(Validator& v, const std::string& action, Json& payload) {
    std::optional<std::vector<IntVector>> gens;
    if (!v.has("generators")) v.fail("generators: required");
    else gens = v.exponent_list(v.at("generators"), "generators");
    if (gens) payload["generators"] = *gens;
    const std::size_t dim = gens ? gens->front().size() : 0;

    if (v.has("vars")) {
        if (auto names = v.vars(v.at("vars"), "vars")) {
            if (gens && names->size() != dim) v.fail("vars: expected " + std::to_string(dim) + " names");
            payload["vars"] = *names;
        }
    } else if (gens) {
        payload["vars"] = default_vars(dim);
    }

    if (action == "samuel") {
        if (!v.has("exponent")) v.fail("exponent: required by ideal/samuel");
    } else if (v.has("exponent")) {
        v.fail("exponent: only used by ideal/samuel");
    }
    if (v.has("exponent")) {
        if (auto e = v.int_array(v.at("exponent"), "exponent", 0)) {
            if (gens && e->size() != dim) v.fail("exponent: expected " + std::to_string(dim) + " coordinates");
            payload["exponent"] = *e;
        }
    }
    if (v.has("n")) {
        if (action != "samuel") v.fail("n: only used by ideal/samuel");
        if (auto n = v.integer(v.at("n"), "n", 1)) payload["n"] = *n;
    }
    if (gens && action != "integral-closure" && action != "weak-closure" && action != "ratliff-rush") {
        const bool unit = std::any_of(gens->begin(), gens->end(), [](const IntVector& g) {
            return std::all_of(g.begin(), g.end(), [](std::int64_t c) { return c == 0; });
        });
        if (unit) v.fail("generators: ideal/" + action + " needs a proper ideal");
    }
}

void validate_semigroup(Validator& v, const std::string& action, Json& payload) {
    if (!v.has("generators")) v.fail("generators: required");
    else if (auto g = v.int_array(v.at("generators"), "generators", 1)) {
        if (g->empty()) v.fail("generators: must be nonempty");
        payload["generators"] = *g;
        if (action == "seminormalize" && !g->empty()) {
            std::int64_t d = 0;
            for (auto x : *g) d = std::gcd(d, x);
            if (d != 1) v.fail("generators: semigroup/seminormalize needs generators with gcd 1");
        }
    }
    if (v.has("ambient")) {
        if (action == "seminormalize") v.fail("ambient: not used by semigroup/seminormalize");
        if (auto a = v.int_array(v.at("ambient"), "ambient", 1)) {
            if (a->empty()) v.fail("ambient: must be nonempty");
            payload["ambient"] = *a;
        }
    } else if (action != "seminormalize") {
        payload["ambient"] = IntVector{1};
    }
}

void validate_monoid(Validator& v, const std::string& action, Json& payload) {
    std::optional<std::vector<IntVector>> gens;
    if (!v.has("generators")) v.fail("generators: required");
    else gens = v.exponent_list(v.at("generators"), "generators");
    if (gens) payload["generators"] = *gens;
    if (action == "member" && !v.has("exponent")) v.fail("exponent: required by monoid/member");
    if (action != "member" && v.has("exponent")) v.fail("exponent: only used by monoid/member");
    if (v.has("exponent")) {
        if (auto e = v.int_array(v.at("exponent"), "exponent", 0)) {
            if (gens && e->size() != gens->front().size()) v.fail("exponent: dimension differs from generators");
            payload["exponent"] = *e;
        }
    }
}

void validate_curve(Validator& v, CharSpec field, Json& payload) {
    std::vector<std::string> names{"x", "y"};
    if (v.has("vars")) {
        if (auto n = v.vars(v.at("vars"), "vars")) {
            if (n->size() != 2) v.fail("vars: a plane curve needs exactly two variables");
            else names = *n;
        }
    }
    payload["vars"] = names;
    if (!v.has("poly")) v.fail("poly: required");
    else if (auto p = v.poly(v.at("poly"), "poly", field, names)) payload["poly"] = poly_text(*p);
}

void validate_element(Validator& v, const std::string& action, CharSpec field, Json& payload) {
    std::optional<std::size_t> dim;
    if (v.has("ring")) {
        const auto& ring = v.at("ring");
        if (!ring.is_object() || ring.size() != 1 || !(ring.contains("semigroup") || ring.contains("monoid"))) {
            v.fail("ring: expected {\"semigroup\": [...]} or {\"monoid\": [[...], ...]}");
        } else if (ring.contains("semigroup")) {
            if (auto g = v.int_array(ring["semigroup"], "ring.semigroup", 1)) {
                if (g->empty()) v.fail("ring.semigroup: must be nonempty");
                payload["ring"] = {{"semigroup", *g}};
                dim = 1;
            }
        } else if (auto g = v.exponent_list(ring["monoid"], "ring.monoid")) {
            payload["ring"] = {{"monoid", *g}};
            dim = g->front().size();
        }
    }
    if (v.has("ideal")) {
        if (v.has("ring")) v.fail("ideal: give either ring or ideal, not both");
        if (auto g = v.exponent_list(v.at("ideal"), "ideal")) {
            payload["ideal"] = *g;
            dim = g->front().size();
        }
    }

    std::vector<std::string> names = default_vars(dim.value_or(1));
    if (v.has("vars")) {
        if (auto n = v.vars(v.at("vars"), "vars")) {
            if (dim && n->size() != *dim) v.fail("vars: expected " + std::to_string(*dim) + " names");
            names = *n;
        }
    }
    if (std::find(names.begin(), names.end(), "T") != names.end() || std::find(names.begin(), names.end(), "X") != names.end())
        v.fail("vars: T and X are reserved");
    payload["vars"] = names;

    auto required = [&](const std::string& key) {
        if (!v.has(key)) v.fail(key + ": required by element/" + action);
    };
    const std::map<std::string, std::set<std::string>> uses{
        {"verify-sosi", {"ring", "b", "certificate"}},
        {"verify-wsi", {"ring", "ideal", "b", "certificate"}},
        {"derive-F", {"ideal", "b", "certificate"}},
        {"derivative-check", {"F", "b"}},
        {"swan", {"ring", "b", "c"}},
        {"schanuel", {"a"}},
    };
    for (const auto& key : {"ring", "ideal", "b", "c", "a", "F", "certificate"})
        if (v.has(key) && !uses.at(action).count(key)) v.fail(std::string(key) + ": not used by element/" + action);

    if (action == "verify-sosi" || action == "swan") required("ring");
    if (action == "verify-wsi" && !v.has("ring") && !v.has("ideal")) v.fail("ring or ideal: required by element/verify-wsi");
    if (action == "verify-sosi" || action == "verify-wsi" || action == "derivative-check" || action == "swan") required("b");
    if (action == "verify-sosi" || action == "verify-wsi") required("certificate");
    if (action == "swan") required("c");
    if (action == "schanuel") required("a");
    if (action == "derivative-check") required("F");
    if (action == "derive-F" && !v.has("certificate") && !(v.has("ideal") && v.has("b")))
        v.fail("certificate, or ideal and b: required by element/derive-F");
    if (action == "derive-F" && v.has("certificate") && (v.has("ideal") || v.has("b")))
        v.fail("certificate: give either a certificate or ideal and b");

    for (const auto& key : {"b", "c", "a"})
        if (v.has(key))
            if (auto p = v.poly(v.at(key), key, field, names)) payload[key] = poly_text(*p);
    if (v.has("F")) {
        auto with_t = names;
        with_t.push_back("T");
        if (auto p = v.poly(v.at("F"), "F", field, with_t)) payload["F"] = poly_text(*p);
    }
    if (v.has("certificate")) {
        const auto& c = v.at("certificate");
        const std::string list_key = action == "verify-sosi" ? "c" : "a";
        const std::set<std::string> allowed = action == "verify-sosi" ? std::set<std::string>{"q", "n_start", "c"}
                                                                      : std::set<std::string>{"q", "a"};
        if (!c.is_object()) {
            v.fail("certificate: expected an object");
        } else {
            Json cert = Json::object();
            for (const auto& [key, _] : c.items())
                if (!allowed.count(key)) v.fail("certificate." + key + ": unknown field");
            std::optional<std::int64_t> q;
            if (!c.contains("q")) v.fail("certificate.q: required");
            else if ((q = v.integer(c["q"], "certificate.q", 0))) cert["q"] = *q;
            if (action == "verify-sosi") {
                if (!c.contains("n_start")) v.fail("certificate.n_start: required");
                else if (auto n = v.integer(c["n_start"], "certificate.n_start", 1)) cert["n_start"] = *n;
            }
            if (!c.contains(list_key)) {
                v.fail("certificate." + list_key + ": required");
            } else {
                cert[list_key] = canonical_polys(v, c[list_key], "certificate." + list_key, field, names);
                const auto expected = q ? (list_key == "c" ? *q : 2 * *q + 1) : -1;
                if (q && c[list_key].is_array() && static_cast<std::int64_t>(c[list_key].size()) != expected)
                    v.fail("certificate." + list_key + ": expected " + std::to_string(expected) + " entries");
            }
            payload["certificate"] = cert;
        }
    }
}

void validate_options(Validator& v, const Json& opts, const std::string& command, std::size_t box_dim,
                      Options& out) {
    if (!opts.is_object()) {
        v.fail("options: expected an object");
        return;
    }
    const auto& allowed = command_options().at(command);
    for (const auto& [key, value] : opts.items()) {
        if (!allowed.count(key)) {
            v.fail("options." + key + ": not accepted by " + command);
            continue;
        }
        if (key == "box") {
            if (auto b = v.int_array(value, "options.box", 1)) {
                if (box_dim && b->size() != box_dim) v.fail("options.box: expected " + std::to_string(box_dim) + " entries");
                out.box = *b;
            }
        } else if (key == "point") {
            if (auto p = v.int_array(value, "options.point", std::numeric_limits<std::int64_t>::min())) {
                if (p->size() != 2) v.fail("options.point: expected two coordinates");
                out.point = *p;
            }
        } else if (auto n = v.integer(value, "options." + key, key == "horizon" ? 0 : 1)) {
            if (key == "m_max") out.m_max = *n;
            if (key == "horizon") out.horizon = *n;
            if (key == "q_max") out.q_max = *n;
        }
    }
}

} // namespace

SparsePolynomial parse_polynomial(const std::string& text, CharSpec field, const std::vector<std::string>& vars) {
    return ExpressionParser(text, field, vars).run();
}

SchemaError::SchemaError(std::vector<std::string> problems)
    : std::invalid_argument("invalid input: " + join(problems, "; ")), problems_(std::move(problems)) {}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : command_options()) out.push_back(name);
        return out;
    }();
    return names;
}

Request parse_input(const Json& document, const std::string& command) {
    if (!document.is_object()) throw SchemaError({"document: expected a JSON object"});
    Validator v(document);
    Request req;

    req.command = command;
    if (document.contains("command")) {
        if (!document["command"].is_string()) v.fail("command: expected a string");
        else if (command.empty()) req.command = document["command"].get<std::string>();
        else if (document["command"].get<std::string>() != command)
            v.fail("command: document says '" + document["command"].get<std::string>() + "' but '" + command +
                   "' was requested");
    }
    if (req.command.empty()) throw SchemaError({"command: none given"});
    if (!command_options().count(req.command)) throw SchemaError({"command: unknown command '" + req.command + "'"});
    const std::string kind = req.kind();
    const std::string action = req.command.substr(kind.size() + 1);

    if (!document.contains("kind")) v.fail("kind: required");
    else if (!document["kind"].is_string() || document["kind"].get<std::string>() != kind)
        v.fail("kind: must be \"" + kind + "\" for " + req.command);

    if (document.contains("char")) {
        if (auto c = v.integer(document["char"], "char", 0)) {
            if (*c != 0 && !is_prime(*c)) v.fail("char: must be 0 or a prime");
            else req.characteristic = CharSpec(*c);
        }
    }

    const auto& fields = kind_fields().at(kind);
    for (const auto& [key, _] : document.items())
        if (key != "kind" && key != "char" && key != "command" && key != "options" && !fields.count(key))
            v.fail(key + ": unknown field for kind " + kind);

    req.payload = Json::object();
    if (kind == "ideal") validate_ideal(v, action, req.payload);
    else if (kind == "semigroup") validate_semigroup(v, action, req.payload);
    else if (kind == "monoid") validate_monoid(v, action, req.payload);
    else if (kind == "curve") validate_curve(v, req.characteristic, req.payload);
    else validate_element(v, action, req.characteristic, req.payload);

    if (document.contains("options")) {
        std::size_t box_dim = 0;
        if (req.payload.contains("generators") && req.payload["generators"].is_array() &&
            !req.payload["generators"].empty() && req.payload["generators"][0].is_array())
            box_dim = req.payload["generators"][0].size();
        validate_options(v, document["options"], req.command, box_dim, req.options);
    }
    if (req.command == "curve/check" && req.options.point && req.payload.contains("poly") && v.ok()) {
        const auto vars = req.payload["vars"].get<std::vector<std::string>>();
        const auto f = parse_polynomial(req.payload["poly"].get<std::string>(), req.characteristic, vars);
        if (f.compose({f.constant_like(Coeff((*req.options.point)[0])), f.constant_like(Coeff((*req.options.point)[1]))}) !=
            f.constant_like(0))
            v.fail("options.point: the curve does not pass through this point");
    }

    if (!v.ok()) throw SchemaError(std::move(v.problems()));
    return req;
}

Json serialize(const Request& request) {
    Json out = request.payload;
    out["command"] = request.command;
    out["kind"] = request.kind();
    out["char"] = request.characteristic.value();
    Json opts = Json::object();
    if (request.options.box) opts["box"] = *request.options.box;
    if (request.options.m_max) opts["m_max"] = *request.options.m_max;
    if (request.options.horizon) opts["horizon"] = *request.options.horizon;
    if (request.options.q_max) opts["q_max"] = *request.options.q_max;
    if (request.options.point) opts["point"] = *request.options.point;
    if (!opts.empty()) out["options"] = opts;
    return out;
}

int Report::exit_code() const noexcept {
    switch (status) {
    case Status::ok: return 0;
    case Status::inconclusive: return 2;
    case Status::error: return 1;
    }
    return 1;
}

std::string to_string(Status s) {
    switch (s) {
    case Status::ok: return "ok";
    case Status::inconclusive: return "inconclusive";
    case Status::error: return "error";
    }
    return "error";
}

Report error_report(const std::string& message, const Json& input) {
    Report r;
    r.status = Status::error;
    r.body = {{"status", "error"}, {"error", message}};
    if (!input.is_null()) r.body["input"] = input;
    return r;
}

namespace {

// ---------------------------------------------------------------------------
// Dispatch.

struct Outcome {
    Json result = Json::object();
    Json flags = Json::object();
    bool conclusive = true;
};

Json exponents(const std::vector<ExponentVector>& list) {
    Json out = Json::array();
    for (const auto& e : list) out.push_back(e.coords());
    return out;
}

std::vector<ExponentVector> to_exponents(const Json& j) {
    std::vector<ExponentVector> out;
    for (const auto& e : j) out.emplace_back(e.get<IntVector>());
    return out;
}

MonomialIdeal ideal_of(const Json& gens) {
    auto list = to_exponents(gens);
    const std::size_t dim = list.front().dim();
    return MonomialIdeal(dim, std::move(list));
}

Outcome closure_outcome(const ClosureResult& c) {
    Outcome o;
    o.result["minimal_generators"] = exponents(c.ideal.generators());
    o.result["added_exponents"] = exponents(c.added);
    o.flags["box"] = c.box;
    o.flags["box_certified"] = c.box_certified;
    o.conclusive = c.box_certified;
    return o;
}

std::vector<std::string> vars_of(const Request& r) { return r.payload["vars"].get<std::vector<std::string>>(); }

SparsePolynomial poly_of(const Request& r, const std::string& key, std::vector<std::string> vars = {}) {
    if (vars.empty()) vars = vars_of(r);
    return parse_polynomial(r.payload[key].get<std::string>(), r.characteristic, vars);
}

MonomialAlgebraContext ring_of(const Request& r) {
    const auto& ring = r.payload["ring"];
    if (ring.contains("semigroup"))
        return {r.characteristic, NumericalSemigroup(ring["semigroup"].get<std::vector<std::int64_t>>())};
    auto gens = to_exponents(ring["monoid"]);
    const std::size_t dim = gens.front().dim();
    return {r.characteristic, AffineMonoid(dim, std::move(gens))};
}

std::vector<SparsePolynomial> polys_of(const Request& r, const Json& list) {
    std::vector<SparsePolynomial> out;
    for (const auto& p : list) out.push_back(parse_polynomial(p.get<std::string>(), r.characteristic, vars_of(r)));
    return out;
}

Json semigroup_json(const NumericalSemigroup& s) {
    return {{"gcd", s.gcd()}, {"minimal_generators", s.generators()}, {"conductor", s.conductor()},
            {"gaps", s.gaps()}};
}

Json certificate_json(const WSICertificate& c) {
    Json a = Json::array();
    for (const auto& p : c.a) a.push_back(p.to_string());
    return {{"q", c.q}, {"a", a}};
}

Outcome run(const Request& r) {
    const auto& c = r.command;
    const auto& p = r.payload;
    Outcome o;

    if (c == "ideal/integral-closure") return closure_outcome(integral_closure(ideal_of(p["generators"])));
    if (c == "ideal/weak-closure") {
        const auto m_max = r.options.m_max.value_or(kDefaultFrobeniusDepth);
        const auto w = weak_closure(ideal_of(p["generators"]), r.characteristic, m_max);
        o = closure_outcome(w.closure);
        if (!r.characteristic.is_zero()) {
            o.flags["m_max"] = m_max;
            o.flags["m_max_exhausted"] = !w.certified;
            o.result["undecided_exponents"] = exponents(w.undecided);
            o.conclusive = o.conclusive && w.certified;
        }
        return o;
    }
    if (c == "ideal/rees") {
        Json vals = Json::array();
        for (const auto& v : rees_valuations(ideal_of(p["generators"])))
            vals.push_back({{"normal", v.normal}, {"value", v.ideal_value}});
        o.result["valuations"] = vals;
        return o;
    }
    if (c == "ideal/samuel") {
        const auto ideal = ideal_of(p["generators"]);
        const ExponentVector gamma(p["exponent"].get<IntVector>());
        const auto value = samuel_value(ideal, gamma);
        o.result["exponent"] = gamma.coords();
        o.result["value"] = seminorm::to_string(value);
        o.result["in_integral_closure"] = value >= 1;
        if (p.contains("n")) {
            const auto n = p["n"].get<std::int64_t>();
            o.result["estimate"] = seminorm::to_string(samuel_estimate(ideal, gamma, n));
            o.result["n"] = n;
        }
        return o;
    }
    if (c == "ideal/i-greater") return closure_outcome(i_greater(ideal_of(p["generators"])));
    if (c == "ideal/ratliff-rush") {
        const auto horizon = r.options.horizon.value_or(5);
        const auto rr = ratliff_rush(ideal_of(p["generators"]), horizon);
        o.result["minimal_generators"] = exponents(rr.ideal.generators());
        o.flags["horizon"] = horizon;
        o.flags["stabilized"] = rr.stabilized;
        o.conclusive = rr.stabilized;
        return o;
    }

    if (r.kind() == "semigroup") {
        const NumericalSemigroup s(p["generators"].get<std::vector<std::int64_t>>());
        ExtensionResult ext{s, {}};
        if (c == "semigroup/seminormalize") {
            ext = ns_seminormalize(s);
        } else {
            const NumericalSemigroup t(p["ambient"].get<std::vector<std::int64_t>>());
            ext = c == "semigroup/relative" ? relative_seminormalization(s, t)
                                            : relative_weak_normalization(s, t, r.characteristic.value());
            o.result["ambient"] = semigroup_json(t);
        }
        o.result["semigroup"] = semigroup_json(ext.result);
        o.result["adjoined"] = ext.adjoined;
        o.result["unchanged"] = ext.adjoined.empty();
        return o;
    }

    if (c == "monoid/member") {
        auto gens = to_exponents(p["generators"]);
        const std::size_t dim = gens.front().dim();
        const AffineMonoid m(dim, std::move(gens));
        const ExponentVector x(p["exponent"].get<IntVector>());
        o.result["exponent"] = x.coords();
        o.result["member"] = monoid_membership(m, x);
        o.result["in_seminormalization"] = seminormalization_contains(m, x);
        return o;
    }
    if (c == "monoid/seminormal") {
        auto gens = to_exponents(p["generators"]);
        const std::size_t dim = gens.front().dim();
        IntVector box = r.options.box.value_or(IntVector{});
        if (box.empty())
            for (std::size_t j = 0; j < dim; ++j) {
                std::int64_t top = 0;
                for (const auto& g : gens) top = std::max(top, g[j]);
                box.push_back(2 * top + 2);
            }
        const AffineMonoid m(dim, std::move(gens));
        const auto rep = is_seminormal_monoid(m, box);
        o.result["seminormal"] = rep.seminormal;
        o.result["witnesses"] = exponents(rep.witnesses);
        o.flags["box"] = rep.box;
        o.flags["box_bounded"] = rep.seminormal;
        return o;
    }

    if (c == "curve/check") {
        auto f = poly_of(r, "poly");
        if (r.options.point) {
            f = translate_to_origin(f, *r.options.point);
            o.result["translated_poly"] = f.to_string();
        }
        const PlaneCurveGerm germ(f);
        const auto init = initial_form(germ);
        const auto verdict = is_seminormal_at_origin(germ);
        o.result["multiplicity"] = init.multiplicity;
        o.result["initial_form"] = init.form.to_string();
        if (verdict == Verdict::indeterminate) {
            o.result["ordinary_point"] = "indeterminate";
            o.result["seminormal_at_origin"] = "indeterminate";
            o.conclusive = false;
        } else {
            o.result["ordinary_point"] = verdict == Verdict::yes;
            o.result["seminormal_at_origin"] = verdict == Verdict::yes;
        }
        if (!r.characteristic.is_zero()) o.flags["note"] = "tangents are separated over the prime field only";
        return o;
    }

    if (c == "element/verify-sosi") {
        const auto& cert = p["certificate"];
        const SOSICertificate sosi{cert["q"].get<std::int64_t>(), cert["n_start"].get<std::int64_t>(),
                                   polys_of(r, cert["c"])};
        o.result["verified"] = verify_sosi(ring_of(r), poly_of(r, "b"), sosi);
        return o;
    }
    if (c == "element/verify-wsi") {
        const auto& cert = p["certificate"];
        const WSICertificate wsi{cert["q"].get<std::int64_t>(), polys_of(r, cert["a"])};
        const auto b = poly_of(r, "b");
        o.result["verified"] =
            p.contains("ideal") ? verify_wsi_ideal(ideal_of(p["ideal"]), b, wsi) : verify_wsi_ring(ring_of(r), b, wsi);
        return o;
    }
    if (c == "element/derive-F") {
        std::optional<WSICertificate> cert;
        if (p.contains("certificate")) {
            cert = WSICertificate{p["certificate"]["q"].get<std::int64_t>(), polys_of(r, p["certificate"]["a"])};
        } else {
            const auto q_max = r.options.q_max.value_or(8);
            o.flags["q_max"] = q_max;
            cert = wsi_certificate_from_high_powers(ideal_of(p["ideal"]), poly_of(r, "b"), q_max);
            if (!cert) {
                o.flags["q_max_exhausted"] = true;
                o.result["F"] = nullptr;
                o.conclusive = false;
                return o;
            }
            o.result["certificate"] = certificate_json(*cert);
            cert = alternate_signs(*cert);
        }
        o.result["F"] = build_characteristic_poly(*cert).to_string();
        return o;
    }
    if (c == "element/derivative-check") {
        auto with_t = vars_of(r);
        with_t.push_back("T");
        o.result["passes"] = derivative_criterion(poly_of(r, "F", with_t), poly_of(r, "b"));
        return o;
    }
    if (c == "element/swan") {
        const auto outcome = swan_root_test(ring_of(r), poly_of(r, "b"), poly_of(r, "c"));
        o.result["outcome"] = outcome.kind == SwanOutcome::Kind::root ? "root" : "witness";
        o.result["a"] = outcome.a.to_string();
        return o;
    }
    if (c == "element/schanuel") {
        const auto s = schanuel_matrix(poly_of(r, "a"));
        o.result["f1"] = s.f1.to_string();
        o.result["f2"] = s.f2.to_string();
        o.result["g1"] = s.g1.to_string();
        o.result["g2"] = s.g2.to_string();
        Json m = Json::array();
        for (const auto& row : s.matrix) m.push_back({row[0].to_string(), row[1].to_string()});
        o.result["matrix"] = m;
        o.result["unimodular"] = s.unimodular;
        o.result["idempotent"] = s.idempotent;
        o.result["reduces_to_p2"] = s.reduces_to_p2;
        return o;
    }
    throw std::invalid_argument("unknown command '" + c + "'");
}

} // namespace

Report execute(const Request& request) {
    const Json input = serialize(request);
    try {
        const auto o = run(request);
        Report r;
        r.status = o.conclusive ? Status::ok : Status::inconclusive;
        r.body = {{"status", to_string(r.status)},
                  {"command", request.command},
                  {"char", request.characteristic.value()},
                  {"result", o.result},
                  {"flags", o.flags},
                  {"input", input}};
        return r;
    } catch (const std::exception& e) {
        return error_report(e.what(), input);
    }
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "status: " << report.body.value("status", "error") << "\n";
    if (report.body.contains("command")) out << "command: " << report.body["command"].get<std::string>() << "\n";
    if (report.body.contains("error")) out << "error: " << report.body["error"].get<std::string>() << "\n";
    for (const char* section : {"result", "flags"}) {
        if (!report.body.contains(section)) continue;
        for (const auto& [key, value] : report.body[section].items())
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return out.str();
}

} // namespace seminorm::cli
