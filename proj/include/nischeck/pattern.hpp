#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nischeck/rdf.hpp"

namespace nischeck {

/// A pattern position: either a variable ("?x") or a ground term.
struct PatternTerm {
    static PatternTerm var(std::string name);
    static PatternTerm ground(Term term);

    bool is_var() const { return is_var_; }
    const std::string& var_name() const { return var_; }
    const Term& term() const { return term_; }

private:
    bool is_var_ = false;
    std::string var_;
    Term term_{Iri{}};
};

/// One triple pattern; `rest_star` marks the predicate as a zero-or-more
/// path (requires a ground predicate).
struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
    bool rest_star = false;
};

/// Conjunctive query with an optional MINUS group — the fragment the
/// missing-measure query needs.
struct PatternQuery {
    std::vector<TriplePattern> where;
    std::vector<TriplePattern> minus; // empty = no MINUS group
};

using Binding = std::map<std::string, Term>;

/// Evaluates the query over a triple set. MINUS removes bindings compatible
/// with any inner solution sharing at least one variable. Result is sorted
/// and duplicate-free. Throws UnsupportedFeatureError for patterns outside
/// the subset (e.g. rest_star with a variable predicate).
std::vector<Binding> match_patterns(const std::vector<Triple>& triples, const PatternQuery& query);

} // namespace nischeck
