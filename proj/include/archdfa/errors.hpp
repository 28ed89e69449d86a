#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace archdfa {

// Base for all analysis-stage failures (exit class 1 in the CLI).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Ingestion failures (exit class 2 in the CLI).
struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Interface code string does not match the grammar.
struct MalformedCode : Error {
    MalformedCode(std::size_t position, std::string expected_what, const std::string& input)
        : Error("malformed interface code \"" + input + "\" at position " +
                std::to_string(position) + ": expected " + expected_what),
          position(position),
          expected(std::move(expected_what)) {}

    std::size_t position;
    std::string expected;
};

struct MissingScore : Error {
    MissingScore(std::string criterion_id, std::string set = {})
        : Error(set.empty()
                    ? "no score for criterion " + criterion_id
                    : "module set " + set + " has no score for criterion " + criterion_id),
          criterion(std::move(criterion_id)),
          set_id(std::move(set)) {}

    std::string criterion;
    std::string set_id;
};

struct InvalidScore : Error {
    explicit InvalidScore(int got, const std::string& context)
        : Error("invalid score " + std::to_string(got) + " for " + context +
                " (expected 1, 3 or 9)"),
          value(got) {}

    int value;
};

struct NoModuleSets : Error {
    NoModuleSets() : Error("architecture declares no module sets") {}
};

struct NoInterfaces : Error {
    NoInterfaces() : Error("interface matrix is empty") {}
};

struct UnknownBase : Error {
    explicit UnknownBase(const std::string& id)
        : Error("base module \"" + id + "\" is not defined in the architecture") {}
};

struct UnknownDatum : Error {
    UnknownDatum(const std::string& function_id, const std::string& datum)
        : Error(datum.empty()
                    ? "function " + function_id + " declares no datum solution (required in pugh mode)"
                    : "function " + function_id + " names unknown datum solution \"" + datum + "\"") {}
};

struct IncompleteScores : Error {
    IncompleteScores(const std::string& function_id, const std::string& ts_id,
                     const std::string& criterion_id)
        : Error("function " + function_id + ", solution " + ts_id +
                ": missing score for criterion " + criterion_id),
          function(function_id),
          ts(ts_id) {}

    std::string function;
    std::string ts;
};

}  // namespace archdfa
