#include <algorithm>
#include <map>
#include <sstream>

#include "nischeck/dsl.hpp"

namespace nischeck {

DslSyntaxError::DslSyntaxError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

UndeclaredEntityError::UndeclaredEntityError(int line, const std::string& name)
    : Error("line " + std::to_string(line) + ": entity '" + name + "' is not declared"),
      line_(line) {}

DuplicateArticleBlockError::DuplicateArticleBlockError(int line, const std::string& article,
                                                       const std::string& agent)
    : Error("line " + std::to_string(line) + ": duplicate article block '" + article + "' for '" +
            agent + "'"),
      line_(line) {}

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

bool valid_name(const std::string& w) {
    if (w.empty() || !std::isalpha(static_cast<unsigned char>(w.front())))
        return false;
    return std::all_of(w.begin(), w.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-';
    });
}

struct Line {
    int number;
    bool indented;
    std::string text; // comment-stripped, trimmed
};

std::vector<Line> logical_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string raw(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        size_t last = raw.find_last_not_of(" \t\r");
        out.push_back({number, first > 0, raw.substr(first, last - first + 1)});
    }
    return out;
}

} // namespace

MeasureSet parse_measures(std::string_view text) {
    MeasureSet ms;
    const PrefixMap prefixes = PrefixMap::with_defaults();
    auto nis = [&](const std::string& local) { return prefixes.make("nis", local); };

    std::map<std::string, EntityKind> declared;
    std::set<std::pair<std::string, std::string>> seen_blocks;
    std::vector<int> block_lines;
    ArticleBlock* open_block = nullptr;

    auto require_entity = [&](int line, const std::string& name) {
        if (!declared.count(name))
            throw UndeclaredEntityError(line, name);
    };
    auto require_name = [&](int line, const std::string& w) {
        if (!valid_name(w))
            throw DslSyntaxError(line, "invalid name '" + w + "'");
    };

    for (const Line& line : logical_lines(text)) {
        std::vector<std::string> words = split_words(line.text);
        if (line.indented) {
            // measure line inside an article block: <verb> <Object>
            if (!open_block)
                throw DslSyntaxError(line.number, "indented measure outside an article block");
            if (words.size() != 2)
                throw DslSyntaxError(line.number, "expected '<verb> <Object>'");
            require_name(line.number, words[0]);
            require_name(line.number, words[1]);
            require_entity(line.number, words[1]);
            open_block->measures.push_back({nis(words[0]), nis(words[1])});
            continue;
        }
        open_block = nullptr;
        const std::string& keyword = words.front();
        if (keyword == "entity") {
            if (words.size() != 3)
                throw DslSyntaxError(line.number, "expected 'entity <Agent|System|Object> <Name>'");
            EntityKind kind;
            if (words[1] == "Agent")
                kind = EntityKind::Agent;
            else if (words[1] == "System")
                kind = EntityKind::System;
            else if (words[1] == "Object")
                kind = EntityKind::Object;
            else
                throw DslSyntaxError(line.number, "unknown entity kind '" + words[1] + "'");
            require_name(line.number, words[2]);
            if (declared.count(words[2]))
                throw DslSyntaxError(line.number, "duplicate entity declaration '" + words[2] + "'");
            declared.emplace(words[2], kind);
            ms.entities.emplace_back(kind, nis(words[2]));
        } else if (keyword == "article") {
            // article <ArticleName> for <AgentName>:
            if (words.size() != 4 || words[1].empty() || words[2] != "for" || words[3].back() != ':')
                throw DslSyntaxError(line.number, "expected 'article <Name> for <Agent>:'");
            std::string agent = words[3].substr(0, words[3].size() - 1);
            require_name(line.number, words[1]);
            require_name(line.number, agent);
            require_entity(line.number, agent);
            if (declared.at(agent) != EntityKind::Agent)
                throw DslSyntaxError(line.number, "'" + agent + "' is not an Agent entity");
            if (!seen_blocks.emplace(words[1], agent).second)
                throw DuplicateArticleBlockError(line.number, words[1], agent);
            ms.articles.push_back({nis(words[1]), nis(agent), {}});
            block_lines.push_back(line.number);
            open_block = &ms.articles.back();
        } else if (keyword == "clause") {
            if (words.size() != 4)
                throw DslSyntaxError(line.number, "expected 'clause <Subject> <verb> <Object>'");
            for (int i = 1; i <= 3; ++i)
                require_name(line.number, words[i]);
            require_entity(line.number, words[1]);
            require_entity(line.number, words[3]);
            ms.clauses.push_back({nis(words[1]), nis(words[2]), nis(words[3])});
        } else if (keyword == "qualify") {
            if (words.size() != 5)
                throw DslSyntaxError(line.number,
                                     "expected 'qualify <Class> <property> <max|min|exact> <integer>'");
            require_name(line.number, words[1]);
            require_name(line.number, words[2]);
            require_entity(line.number, words[1]);
            Facet facet;
            if (words[3] == "max")
                facet = Facet::MaxInclusive;
            else if (words[3] == "min")
                facet = Facet::MinInclusive;
            else if (words[3] == "exact")
                facet = Facet::Exact;
            else
                throw DslSyntaxError(line.number, "unknown facet '" + words[3] + "'");
            long long bound = 0;
            try {
                size_t used = 0;
                bound = std::stoll(words[4], &used);
                if (used != words[4].size())
                    throw std::invalid_argument(words[4]);
            } catch (const std::exception&) {
                throw DslSyntaxError(line.number, "expected an integer bound, got '" + words[4] + "'");
            }
            ms.qualifiers.push_back({nis(words[1]), nis(words[2]), facet, bound});
        } else {
            throw DslSyntaxError(line.number, "unknown directive '" + keyword + "'");
        }
    }

    for (size_t i = 0; i < ms.articles.size(); ++i)
        if (ms.articles[i].measures.empty())
            throw DslSyntaxError(block_lines[i],
                                 "article block '" + ms.articles[i].article.local() + "' for '" +
                                     ms.articles[i].agent.local() + "' has no measures");
    return ms;
}

KnowledgeBase compile_measures(const MeasureSet& ms) {
    KnowledgeBase kb(PrefixMap::with_defaults());
    const PrefixMap& prefixes = kb.prefixes();
    auto nis = [&](const std::string& local) { return prefixes.make("nis", local); };

    const Iri actor = nis("Actor");
    const Iri agent = nis("Agent");
    const Iri system = nis("System");
    const Iri nis_articles = nis("NisArticles");

    // Fixed scaffold.
    kb.add(DeclarationAxiom{DeclKind::Class, actor});
    kb.add(DeclarationAxiom{DeclKind::Class, nis_articles});
    kb.add(SubClassOfAxiom{agent, ClassExpression::named(actor)});
    kb.add(SubClassOfAxiom{system, ClassExpression::named(actor)});

    for (const auto& [kind, entity] : ms.entities) {
        kb.add(DeclarationAxiom{DeclKind::Class, entity});
        if (kind == EntityKind::Agent)
            kb.add(SubClassOfAxiom{entity, ClassExpression::named(agent)});
        else if (kind == EntityKind::System)
            kb.add(SubClassOfAxiom{entity, ClassExpression::named(system)});
    }

    // Article-agent definitions plus the article hierarchy.
    std::map<Iri, std::vector<Iri>> blocks_of_agent;
    for (const auto& block : ms.articles) {
        Iri block_class = nis(block.article.local() + "-" + block.agent.local());
        std::vector<ClassExpression> restrictions;
        restrictions.reserve(block.measures.size());
        for (const auto& m : block.measures)
            restrictions.push_back(
                ClassExpression::object_some(m.task, ClassExpression::named(m.object)));
        ClassExpression definition = restrictions.size() == 1
                                         ? restrictions.front()
                                         : ClassExpression::intersection(std::move(restrictions));
        kb.add(EquivalentClassesAxiom{block_class, definition});
        kb.add(SubClassOfAxiom{block_class, ClassExpression::named(block.article)});
        kb.add(SubClassOfAxiom{block.article, ClassExpression::named(nis_articles)});
        blocks_of_agent[block.agent].push_back(block_class);
    }

    // Agent definitions: G == Agent and all of G's article-agent classes.
    for (const auto& [agent_class, block_classes] : blocks_of_agent) {
        std::vector<ClassExpression> conjuncts;
        conjuncts.push_back(ClassExpression::named(agent));
        for (const auto& bc : block_classes)
            conjuncts.push_back(ClassExpression::named(bc));
        kb.add(EquivalentClassesAxiom{agent_class,
                                      ClassExpression::intersection(std::move(conjuncts))});
    }

    for (const auto& clause : ms.clauses)
        kb.add(SubClassOfAxiom{
            clause.subject,
            ClassExpression::object_some(clause.verb, ClassExpression::named(clause.object))});

    for (const auto& q : ms.qualifiers)
        kb.add(SubClassOfAxiom{q.cls, ClassExpression::data_facet(q.property, q.facet, q.bound)});

    return kb;
}

} // namespace nischeck
