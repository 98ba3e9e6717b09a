// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_CLI_HPP
#define SEMINORM_CLI_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "seminorm/polynomial.hpp"

namespace seminorm::cli {

using Json = nlohmann::json;

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Integers, variables, + - * ^ and parentheses. Multiplication must be
/// written out.
SparsePolynomial parse_polynomial(const std::string& text, CharSpec field, const std::vector<std::string>& vars);

/// Every schema violation of an input document, one per entry.
class SchemaError : public std::invalid_argument {
public:
    explicit SchemaError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct Options {
    std::optional<IntVector> box;
    std::optional<std::int64_t> m_max;
    std::optional<std::int64_t> horizon;
    std::optional<std::int64_t> q_max;
    std::optional<IntVector> point;

    bool operator==(const Options&) const = default;
};

struct Request {
    /// e.g. "ideal/weak-closure".
    std::string command;
    CharSpec characteristic;
    /// Validated input fields, without kind, char, command and options.
    Json payload;
    Options options;

    std::string kind() const { return command.substr(0, command.find('/')); }
    bool operator==(const Request&) const = default;
};

const std::vector<std::string>& commands();

/// Validates a document. `command` may be empty when the document names
/// one itself; when both are present they must agree.
Request parse_input(const Json& document, const std::string& command = "");
Json serialize(const Request& request);

enum class Status { ok, inconclusive, error };

struct Report {
    Status status = Status::error;
    Json body;

    int exit_code() const noexcept;
};

std::string to_string(Status s);

/// Never throws; failures become error reports.
Report execute(const Request& request);
Report error_report(const std::string& message, const Json& input = nullptr);
std::string render_text(const Report& report);

} // namespace seminorm::cli

#endif
