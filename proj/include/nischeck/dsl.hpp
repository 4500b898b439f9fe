#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nischeck/errors.hpp"
#include "nischeck/knowledge_base.hpp"

namespace nischeck {

class DslSyntaxError : public Error {
public:
    DslSyntaxError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

class UndeclaredEntityError : public Error {
public:
    UndeclaredEntityError(int line, const std::string& name);
    int line() const { return line_; }

private:
    int line_;
};

class DuplicateArticleBlockError : public Error {
public:
    DuplicateArticleBlockError(int line, const std::string& article, const std::string& agent);
    int line() const { return line_; }

private:
    int line_;
};

enum class EntityKind : std::uint8_t { Agent, System, Object };

/// One security measure: the task verb and the class of its target.
struct Measure {
    Iri task;
    Iri object;
    auto operator<=>(const Measure&) const = default;
};

/// The measures one article prescribes for one agent.
struct ArticleBlock {
    Iri article;
    Iri agent;
    std::vector<Measure> measures; // non-empty
    auto operator<=>(const ArticleBlock&) const = default;
};

struct Clause {
    Iri subject;
    Iri verb;
    Iri object;
    auto operator<=>(const Clause&) const = default;
};

struct Qualifier {
    Iri cls;
    Iri property;
    Facet facet;
    long long bound;
    auto operator<=>(const Qualifier&) const = default;
};

/// Parsed form of a measure DSL file.
struct MeasureSet {
    std::vector<std::pair<EntityKind, Iri>> entities;
    std::vector<ArticleBlock> articles;
    std::vector<Clause> clauses;
    std::vector<Qualifier> qualifiers;
};

/// Parses the line-oriented measure DSL:
///
///   entity <Agent|System|Object> <Name>
///   article <ArticleName> for <AgentName>:
///     <verb> <ObjectName>          (indented)
///   clause <Subject> <verb> <Object>
///   qualify <Class> <property> <max|min|exact> <integer>
///
/// '#' starts a comment. Throws DslSyntaxError, UndeclaredEntityError,
/// DuplicateArticleBlockError.
MeasureSet parse_measures(std::string_view text);

/// Compiles a measure set into a TBox-only knowledge base: per-block
/// article-agent class definitions, the article hierarchy under NisArticles,
/// agent definitions, the Actor/Agent/System scaffold, clause and qualifier
/// subclass axioms.
KnowledgeBase compile_measures(const MeasureSet& ms);

} // namespace nischeck
