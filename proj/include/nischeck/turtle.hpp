#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nischeck/errors.hpp"
#include "nischeck/knowledge_base.hpp"

namespace nischeck {

enum class Severity : std::uint8_t { Error, Warning };

struct ParseDiagnostic {
    int line = 1;   // 1-based
    int column = 1; // 1-based
    std::string message;
    Severity severity = Severity::Error;

    std::string to_string() const;
};

/// Syntax error; carries the position of the offending token.
class TurtleParseError : public Error {
public:
    explicit TurtleParseError(ParseDiagnostic diag);
    const ParseDiagnostic& diagnostic() const { return diag_; }

private:
    ParseDiagnostic diag_;
};

/// A recognized OWL structure could not be lifted (e.g. an owl:Restriction
/// node without owl:onProperty).
class LiftError : public Error {
public:
    explicit LiftError(ParseDiagnostic diag);
    const ParseDiagnostic& diagnostic() const { return diag_; }

private:
    ParseDiagnostic diag_;
};

struct ParseResult {
    KnowledgeBase kb;
    /// Warnings only; errors are thrown.
    std::vector<ParseDiagnostic> diagnostics;
};

/// Parses the supported Turtle subset and lifts the recognized OWL/RDFS
/// patterns into axioms and assertions. Triples outside the recognized
/// vocabulary become Warning diagnostics, never silent drops.
ParseResult parse_turtle(std::string_view text);

/// Deterministic Turtle serialization: prefixes sorted, subjects sorted by
/// expanded IRI, intersections as collections. Output re-parses to an
/// equivalent KB; two calls on one KB are byte-identical.
std::string serialize(const KnowledgeBase& kb);

} // namespace nischeck
