#include <algorithm>
#include <set>

#include "nischeck/errors.hpp"
#include "nischeck/pattern.hpp"

namespace nischeck {

PatternTerm PatternTerm::var(std::string name) {
    PatternTerm t;
    t.is_var_ = true;
    t.var_ = std::move(name);
    return t;
}

PatternTerm PatternTerm::ground(Term term) {
    PatternTerm t;
    t.term_ = std::move(term);
    return t;
}

namespace {

std::optional<Term> lookup(const Binding& b, const PatternTerm& p) {
    if (!p.is_var())
        return p.term();
    auto it = b.find(p.var_name());
    if (it == b.end())
        return std::nullopt;
    return it->second;
}

bool bind(Binding& b, const PatternTerm& p, const Term& value) {
    if (!p.is_var())
        return p.term() == value;
    auto [it, inserted] = b.emplace(p.var_name(), value);
    return inserted || it->second == value;
}

/// Zero-or-more closure of `pred` edges starting at `start`.
std::vector<Term> reachable(const std::vector<Triple>& triples, const Iri& pred,
                            const Term& start) {
    std::vector<Term> order{start};
    std::set<Term> seen{start};
    for (size_t i = 0; i < order.size(); ++i) {
        for (const Triple& t : triples) {
            if (!(t.predicate == pred) || !(t.subject == order[i]))
                continue;
            if (seen.insert(t.object).second)
                order.push_back(t.object);
        }
    }
    return order;
}

std::vector<Term> all_terms(const std::vector<Triple>& triples) {
    std::set<Term> set;
    for (const Triple& t : triples) {
        set.insert(t.subject);
        set.insert(t.object);
    }
    return {set.begin(), set.end()};
}

std::vector<Binding> extend_with_path(const std::vector<Triple>& triples,
                                      const TriplePattern& pattern,
                                      const std::vector<Binding>& bindings) {
    if (pattern.predicate.is_var())
        throw UnsupportedFeatureError("a zero-or-more path requires a ground predicate");
    const Iri& pred = std::get<Iri>(pattern.predicate.term());
    std::vector<Binding> out;
    for (const Binding& b : bindings) {
        auto subject = lookup(b, pattern.subject);
        auto object = lookup(b, pattern.object);
        std::vector<Term> starts;
        if (subject)
            starts.push_back(*subject);
        else
            starts = all_terms(triples);
        for (const Term& start : starts) {
            for (const Term& end : reachable(triples, pred, start)) {
                if (object && !(*object == end))
                    continue;
                Binding next = b;
                if (bind(next, pattern.subject, start) && bind(next, pattern.object, end))
                    out.push_back(std::move(next));
            }
        }
    }
    return out;
}

std::vector<Binding> extend(const std::vector<Triple>& triples, const TriplePattern& pattern,
                            const std::vector<Binding>& bindings) {
    if (pattern.rest_star)
        return extend_with_path(triples, pattern, bindings);
    std::vector<Binding> out;
    for (const Binding& b : bindings) {
        for (const Triple& t : triples) {
            Binding next = b;
            if (bind(next, pattern.subject, t.subject) &&
                bind(next, pattern.predicate, Term(t.predicate)) &&
                bind(next, pattern.object, t.object))
                out.push_back(std::move(next));
        }
    }
    return out;
}

std::vector<Binding> eval_group(const std::vector<Triple>& triples,
                                const std::vector<TriplePattern>& patterns) {
    std::vector<Binding> bindings{Binding{}};
    for (const TriplePattern& p : patterns)
        bindings = extend(triples, p, bindings);
    return bindings;
}

/// SPARQL MINUS compatibility: shares a variable and agrees on all shared ones.
bool minus_removes(const Binding& outer, const Binding& inner) {
    bool shared = false;
    for (const auto& [var, value] : inner) {
        auto it = outer.find(var);
        if (it == outer.end())
            continue;
        if (!(it->second == value))
            return false;
        shared = true;
    }
    return shared;
}

} // namespace

std::vector<Binding> match_patterns(const std::vector<Triple>& triples,
                                    const PatternQuery& query) {
    std::vector<Binding> result = eval_group(triples, query.where);
    if (!query.minus.empty()) {
        std::vector<Binding> inner = eval_group(triples, query.minus);
        std::erase_if(result, [&](const Binding& b) {
            return std::any_of(inner.begin(), inner.end(),
                               [&](const Binding& i) { return minus_removes(b, i); });
        });
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

} // namespace nischeck
