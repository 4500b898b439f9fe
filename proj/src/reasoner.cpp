#include <algorithm>
#include <cstdint>
#include <map>

#include "nischeck/errors.hpp"
#include "nischeck/reasoner.hpp"

namespace nischeck {

// ---------------------------------------------------------------------------
// SubsumptionMap / TypeMap
// ---------------------------------------------------------------------------

SubsumptionMap::SubsumptionMap(std::set<std::pair<Iri, Iri>> class_pairs,
                               std::set<std::pair<Iri, Iri>> property_pairs)
    : class_pairs_(std::move(class_pairs)), property_pairs_(std::move(property_pairs)) {}

bool SubsumptionMap::subsumed(const Iri& sub, const Iri& sup) const {
    return sub == sup || class_pairs_.count({sub, sup}) != 0;
}

bool SubsumptionMap::property_subsumed(const Iri& sub, const Iri& sup) const {
    return sub == sup || property_pairs_.count({sub, sup}) != 0;
}

std::vector<Iri> SubsumptionMap::supers_of(const Iri& cls) const {
    std::vector<Iri> out;
    for (auto it = class_pairs_.lower_bound({cls, Iri{}});
         it != class_pairs_.end() && it->first == cls; ++it)
        out.push_back(it->second);
    return out;
}

std::vector<Iri> SubsumptionMap::direct_supers_of(const Iri& cls) const {
    std::vector<Iri> supers = supers_of(cls);
    std::vector<Iri> out;
    for (const Iri& d : supers) {
        if (d == cls)
            continue;
        bool direct = true;
        for (const Iri& e : supers) {
            if (e == cls || e == d)
                continue;
            // An intermediate e below d disqualifies d unless e and d are
            // equivalent.
            if (subsumed(e, d) && !subsumed(d, e)) {
                direct = false;
                break;
            }
        }
        if (direct)
            out.push_back(d);
    }
    return out;
}

std::vector<Iri> SubsumptionMap::classes() const {
    std::vector<Iri> out;
    Iri last;
    bool first = true;
    for (const auto& [sub, sup] : class_pairs_) {
        if (first || !(sub == last)) {
            out.push_back(sub);
            last = sub;
            first = false;
        }
    }
    return out;
}

TypeMap::TypeMap(std::map<Iri, std::set<Iri>> entries) : entries_(std::move(entries)) {}

bool TypeMap::has(const Iri& individual, const Iri& cls) const {
    auto it = entries_.find(individual);
    return it != entries_.end() && it->second.count(cls) != 0;
}

const std::set<Iri>& TypeMap::types_of(const Iri& individual) const {
    static const std::set<Iri> empty;
    auto it = entries_.find(individual);
    return it == entries_.end() ? empty : it->second;
}

// ---------------------------------------------------------------------------
// Saturation engine
// ---------------------------------------------------------------------------

namespace {

bool facet_value_meets(Facet f, long long bound, long long v) {
    switch (f) {
    case Facet::MaxInclusive:
        return v <= bound;
    case Facet::MinInclusive:
        return v >= bound;
    case Facet::Exact:
        return v == bound;
    }
    return false;
}

/// available (f1, m) entails required (f2, n) on the same data property.
bool facet_implies(Facet f1, long long m, Facet f2, long long n) {
    switch (f2) {
    case Facet::MaxInclusive:
        return (f1 == Facet::MaxInclusive || f1 == Facet::Exact) && m <= n;
    case Facet::MinInclusive:
        return (f1 == Facet::MinInclusive || f1 == Facet::Exact) && m >= n;
    case Facet::Exact:
        return f1 == Facet::Exact && m == n;
    }
    return false;
}

class Bits {
public:
    Bits() = default;
    explicit Bits(size_t n) : words_((n + 63) / 64, 0) {}

    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }

    bool or_with(const Bits& o) {
        bool changed = false;
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t nv = words_[i] | o.words_[i];
            if (nv != words_[i]) {
                words_[i] = nv;
                changed = true;
            }
        }
        return changed;
    }

    std::vector<int> ones() const {
        std::vector<int> out;
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

private:
    std::vector<uint64_t> words_;
};

struct Expr {
    enum class Kind : uint8_t { Named, Intersection, Some, FacetRestriction };
    Kind kind;
    int head = -1;             // class id (Named) / property id (Some, Facet)
    std::vector<int> children; // conjunct or filler expression ids
    Facet facet = Facet::MaxInclusive;
    long long bound = 0;
};

class Engine {
public:
    explicit Engine(const KnowledgeBase& kb) : kb_(kb) { build(); }

    void classify() {
        transitive_close();
        bool changed = true;
        while (changed) {
            changed = false;
            rebuild_pools();
            for (int c = 0; c < n_classes_; ++c) {
                for (int d : defined_) {
                    if (supers_[c].test(static_cast<size_t>(d)))
                        continue;
                    if (satisfies_all(c, *defs_[static_cast<size_t>(d)])) {
                        supers_[c].set(static_cast<size_t>(d));
                        changed = true;
                    }
                }
            }
            if (changed)
                transitive_close();
        }
    }

    void realize() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t a = 0; a < types_.size(); ++a) {
                for (int d : defined_) {
                    if (types_[a].test(static_cast<size_t>(d)))
                        continue;
                    if (instance_satisfies_all(static_cast<int>(a),
                                               *defs_[static_cast<size_t>(d)])) {
                        types_[a].or_with(supers_[d]);
                        types_[a].set(static_cast<size_t>(d));
                        changed = true;
                    }
                }
            }
        }
    }

    SubsumptionMap subsumption_map() const {
        std::set<std::pair<Iri, Iri>> class_pairs;
        for (int c = 0; c < n_classes_; ++c)
            for (int d : supers_[c].ones())
                class_pairs.emplace(class_iris_[c], class_iris_[static_cast<size_t>(d)]);
        std::set<std::pair<Iri, Iri>> property_pairs;
        for (size_t p = 0; p < prop_iris_.size(); ++p)
            for (int q : prop_supers_[p].ones())
                property_pairs.emplace(prop_iris_[p], prop_iris_[static_cast<size_t>(q)]);
        return SubsumptionMap(std::move(class_pairs), std::move(property_pairs));
    }

    TypeMap type_map() const {
        std::map<Iri, std::set<Iri>> entries;
        for (size_t a = 0; a < ind_iris_.size(); ++a) {
            std::set<Iri>& ts = entries[ind_iris_[a]];
            for (int c : types_[a].ones())
                ts.insert(class_iris_[static_cast<size_t>(c)]);
        }
        return TypeMap(std::move(entries));
    }

private:
    // --- interning -----------------------------------------------------

    int class_id(const Iri& iri) {
        auto [it, inserted] = class_ids_.emplace(iri, static_cast<int>(class_iris_.size()));
        if (inserted)
            class_iris_.push_back(iri);
        return it->second;
    }

    int prop_id(const Iri& iri) {
        auto [it, inserted] = prop_ids_.emplace(iri, static_cast<int>(prop_iris_.size()));
        if (inserted)
            prop_iris_.push_back(iri);
        return it->second;
    }

    int ind_id(const Iri& iri) {
        auto [it, inserted] = ind_ids_.emplace(iri, static_cast<int>(ind_iris_.size()));
        if (inserted)
            ind_iris_.push_back(iri);
        return it->second;
    }

    int intern(const ClassExpression& e) {
        Expr node;
        switch (e.kind()) {
        case ClassExpression::Kind::Named:
            node.kind = Expr::Kind::Named;
            node.head = class_id(e.head());
            break;
        case ClassExpression::Kind::Intersection:
            node.kind = Expr::Kind::Intersection;
            for (const auto& c : e.conjuncts())
                node.children.push_back(intern(c));
            break;
        case ClassExpression::Kind::ObjectSome:
            node.kind = Expr::Kind::Some;
            node.head = prop_id(e.head());
            node.children.push_back(intern(e.filler()));
            break;
        case ClassExpression::Kind::DataFacet:
            node.kind = Expr::Kind::FacetRestriction;
            node.head = prop_id(e.head());
            node.facet = e.facet();
            node.bound = e.bound();
            break;
        }
        exprs_.push_back(std::move(node));
        return static_cast<int>(exprs_.size() - 1);
    }

    // --- construction ---------------------------------------------------

    void build() {
        // Sorted declarations give deterministic ids.
        for (const Iri& c : kb_.declared(DeclKind::Class))
            class_id(c);
        for (const Iri& p : kb_.declared(DeclKind::ObjectProperty))
            prop_id(p);
        for (const Iri& p : kb_.declared(DeclKind::DataProperty))
            prop_id(p);
        for (const Iri& i : kb_.declared(DeclKind::Individual))
            ind_id(i);

        auto ensure_slots = [&] {
            if (defs_.size() < class_iris_.size()) {
                defs_.resize(class_iris_.size());
                told_.resize(class_iris_.size());
            }
        };
        ensure_slots();

        for (const auto& ax : kb_.tbox()) {
            if (const auto* s = std::get_if<SubClassOfAxiom>(&ax)) {
                int c = class_id(s->sub);
                std::vector<int> conjuncts;
                for (const auto& conj : s->sup.conjunct_list())
                    conjuncts.push_back(intern(conj));
                ensure_slots();
                auto& told = told_[static_cast<size_t>(c)];
                told.insert(told.end(), conjuncts.begin(), conjuncts.end());
            } else if (const auto* e = std::get_if<EquivalentClassesAxiom>(&ax)) {
                int c = class_id(e->named);
                std::vector<int> conjuncts;
                for (const auto& conj : e->definition.conjunct_list())
                    conjuncts.push_back(intern(conj));
                ensure_slots();
                defs_[static_cast<size_t>(c)] = std::move(conjuncts);
            }
        }
        n_classes_ = static_cast<int>(class_iris_.size());
        ensure_slots();
        for (int c = 0; c < n_classes_; ++c)
            if (defs_[static_cast<size_t>(c)])
                defined_.push_back(c);

        // Property closure (reflexive-transitive over asserted edges).
        prop_supers_.assign(prop_iris_.size(), Bits(prop_iris_.size()));
        for (size_t p = 0; p < prop_iris_.size(); ++p)
            prop_supers_[p].set(p);
        for (const auto& [sub, sup] : kb_.sub_property_edges())
            prop_supers_[static_cast<size_t>(prop_id(sub))].set(
                static_cast<size_t>(prop_id(sup)));
        bool pchanged = true;
        while (pchanged) {
            pchanged = false;
            for (size_t p = 0; p < prop_supers_.size(); ++p)
                for (int q : prop_supers_[p].ones())
                    if (static_cast<size_t>(q) != p)
                        pchanged |= prop_supers_[p].or_with(prop_supers_[static_cast<size_t>(q)]);
        }

        // Initial subsumptions: reflexivity plus named told/definition conjuncts.
        supers_.assign(class_iris_.size(), Bits(class_iris_.size()));
        for (int c = 0; c < n_classes_; ++c) {
            supers_[c].set(static_cast<size_t>(c));
            auto seed = [&](const std::vector<int>& conjuncts) {
                for (int x : conjuncts)
                    if (exprs_[static_cast<size_t>(x)].kind == Expr::Kind::Named)
                        supers_[c].set(static_cast<size_t>(exprs_[static_cast<size_t>(x)].head));
            };
            seed(told_[static_cast<size_t>(c)]);
            if (defs_[static_cast<size_t>(c)])
                seed(*defs_[static_cast<size_t>(c)]);
        }

        // ABox view.
        types_.assign(ind_iris_.size(), Bits(class_iris_.size()));
        edges_.resize(ind_iris_.size());
        data_.resize(ind_iris_.size());
        for (const auto& as : kb_.abox()) {
            if (const auto* c = std::get_if<ClassAssertion>(&as)) {
                asserted_types_.emplace_back(ind_id(c->individual), class_id(c->cls));
            } else if (const auto* o = std::get_if<ObjectPropertyAssertion>(&as)) {
                edges_[static_cast<size_t>(ind_id(o->subject))][prop_id(o->property)].push_back(
                    ind_id(o->object));
            } else {
                const auto& d = std::get<DataPropertyAssertion>(as);
                data_[static_cast<size_t>(ind_id(d.subject))][prop_id(d.property)].push_back(
                    d.value);
            }
        }
    }

    // --- classification ---------------------------------------------------

    void transitive_close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c = 0; c < n_classes_; ++c)
                for (int d : supers_[c].ones())
                    if (d != c)
                        changed |= supers_[c].or_with(supers_[static_cast<size_t>(d)]);
        }
    }

    void rebuild_pools() {
        pool_some_.assign(class_iris_.size(), {});
        pool_facet_.assign(class_iris_.size(), {});
        for (int c = 0; c < n_classes_; ++c) {
            auto absorb = [&](const std::vector<int>& conjuncts) {
                for (int x : conjuncts) {
                    const Expr& e = exprs_[static_cast<size_t>(x)];
                    if (e.kind == Expr::Kind::Some)
                        pool_some_[c].emplace_back(e.head, e.children.front());
                    else if (e.kind == Expr::Kind::FacetRestriction)
                        pool_facet_[c].push_back({e.head, e.facet, e.bound});
                }
            };
            for (int d : supers_[c].ones()) {
                absorb(told_[static_cast<size_t>(d)]);
                if (defs_[static_cast<size_t>(d)])
                    absorb(*defs_[static_cast<size_t>(d)]);
            }
        }
    }

    bool satisfies_all(int c, const std::vector<int>& conjuncts) {
        return std::all_of(conjuncts.begin(), conjuncts.end(),
                           [&](int x) { return satisfies(c, x); });
    }

    /// Structural satisfaction of one required conjunct by class c.
    bool satisfies(int c, int required) {
        const Expr& r = exprs_[static_cast<size_t>(required)];
        switch (r.kind) {
        case Expr::Kind::Named:
            return supers_[c].test(static_cast<size_t>(r.head));
        case Expr::Kind::Intersection:
            return satisfies_all(c, r.children);
        case Expr::Kind::Some:
            for (const auto& [p, filler] : pool_some_[c])
                if (prop_supers_[static_cast<size_t>(p)].test(static_cast<size_t>(r.head)) &&
                    filler_subsumed(filler, r.children.front()))
                    return true;
            return false;
        case Expr::Kind::FacetRestriction:
            for (const auto& [d, f, m] : pool_facet_[c])
                if (d == r.head && facet_implies(f, m, r.facet, r.bound))
                    return true;
            return false;
        }
        return false;
    }

    /// Structural subsumption between filler expressions.
    bool filler_subsumed(int a, int b) {
        const Expr& ea = exprs_[static_cast<size_t>(a)];
        const Expr& eb = exprs_[static_cast<size_t>(b)];
        if (eb.kind == Expr::Kind::Intersection)
            return std::all_of(eb.children.begin(), eb.children.end(),
                               [&](int bi) { return filler_subsumed(a, bi); });
        switch (ea.kind) {
        case Expr::Kind::Named:
            if (eb.kind == Expr::Kind::Named)
                return supers_[ea.head].test(static_cast<size_t>(eb.head));
            return satisfies(ea.head, b);
        case Expr::Kind::Intersection:
            return std::any_of(ea.children.begin(), ea.children.end(),
                               [&](int ai) { return filler_subsumed(ai, b); });
        case Expr::Kind::Some:
            return eb.kind == Expr::Kind::Some &&
                   prop_supers_[static_cast<size_t>(ea.head)].test(
                       static_cast<size_t>(eb.head)) &&
                   filler_subsumed(ea.children.front(), eb.children.front());
        case Expr::Kind::FacetRestriction:
            return eb.kind == Expr::Kind::FacetRestriction && ea.head == eb.head &&
                   facet_implies(ea.facet, ea.bound, eb.facet, eb.bound);
        }
        return false;
    }

    // --- realization --------------------------------------------------

    bool instance_satisfies_all(int a, const std::vector<int>& conjuncts) {
        return std::all_of(conjuncts.begin(), conjuncts.end(),
                           [&](int x) { return instance_satisfies(a, x); });
    }

    bool instance_satisfies(int a, int required) {
        const Expr& r = exprs_[static_cast<size_t>(required)];
        switch (r.kind) {
        case Expr::Kind::Named:
            return types_[static_cast<size_t>(a)].test(static_cast<size_t>(r.head));
        case Expr::Kind::Intersection:
            return instance_satisfies_all(a, r.children);
        case Expr::Kind::Some:
            for (const auto& [q, objects] : edges_[static_cast<size_t>(a)]) {
                if (!prop_supers_[static_cast<size_t>(q)].test(static_cast<size_t>(r.head)))
                    continue;
                for (int b : objects)
                    if (instance_satisfies(b, r.children.front()))
                        return true;
            }
            return false;
        case Expr::Kind::FacetRestriction: {
            auto it = data_[static_cast<size_t>(a)].find(r.head);
            if (it == data_[static_cast<size_t>(a)].end() || it->second.empty())
                return false;
            return std::all_of(it->second.begin(), it->second.end(),
                               [&](long long v) { return facet_value_meets(r.facet, r.bound, v); });
        }
        }
        return false;
    }

public:
    void seed_asserted_types() {
        for (const auto& [a, c] : asserted_types_) {
            types_[static_cast<size_t>(a)].set(static_cast<size_t>(c));
            types_[static_cast<size_t>(a)].or_with(supers_[c]);
        }
    }

private:
    const KnowledgeBase& kb_;

    std::vector<Iri> class_iris_, prop_iris_, ind_iris_;
    std::map<Iri, int> class_ids_, prop_ids_, ind_ids_;
    std::vector<Expr> exprs_;

    int n_classes_ = 0;
    std::vector<std::optional<std::vector<int>>> defs_;
    std::vector<std::vector<int>> told_;
    std::vector<int> defined_;
    std::vector<Bits> supers_;
    std::vector<Bits> prop_supers_;

    std::vector<std::vector<std::pair<int, int>>> pool_some_; // (property, filler expr)
    std::vector<std::vector<std::tuple<int, Facet, long long>>> pool_facet_;

    std::vector<Bits> types_;
    std::vector<std::pair<int, int>> asserted_types_;
    std::vector<std::map<int, std::vector<int>>> edges_;
    std::vector<std::map<int, std::vector<long long>>> data_;
};

} // namespace

SubsumptionMap classify(const KnowledgeBase& kb) {
    Engine engine(kb);
    engine.classify();
    return engine.subsumption_map();
}

TypeMap realize(const KnowledgeBase& kb, const SubsumptionMap& /*subs*/) {
    // The engine recomputes the class closure internally; `subs` is the
    // caller's evidence that classification ran on this KB.
    Engine engine(kb);
    engine.classify();
    engine.seed_asserted_types();
    engine.realize();
    return engine.type_map();
}

namespace {

bool instance_satisfies_iri(const KnowledgeBase& kb, const SubsumptionMap& subs,
                            const TypeMap& types, const Iri& individual,
                            const ClassExpression& expr) {
    switch (expr.kind()) {
    case ClassExpression::Kind::Named:
        return types.has(individual, expr.head());
    case ClassExpression::Kind::Intersection:
        return std::all_of(expr.conjuncts().begin(), expr.conjuncts().end(),
                           [&](const ClassExpression& c) {
                               return instance_satisfies_iri(kb, subs, types, individual, c);
                           });
    case ClassExpression::Kind::ObjectSome:
        for (const auto& as : kb.assertions_by_subject(individual)) {
            const auto* o = std::get_if<ObjectPropertyAssertion>(&as);
            if (!o || !subs.property_subsumed(o->property, expr.head()))
                continue;
            if (instance_satisfies_iri(kb, subs, types, o->object, expr.filler()))
                return true;
        }
        return false;
    case ClassExpression::Kind::DataFacet: {
        std::vector<long long> values = kb.data_values(individual, expr.head());
        if (values.empty())
            return false;
        return std::all_of(values.begin(), values.end(), [&](long long v) {
            return facet_value_meets(expr.facet(), expr.bound(), v);
        });
    }
    }
    return false;
}

} // namespace

bool entails_instance(const KnowledgeBase& kb, const SubsumptionMap& subs, const TypeMap& types,
                      const Iri& individual, const ClassExpression& expr) {
    if (!kb.is_declared(individual, DeclKind::Individual))
        throw UnknownIndividualError("unknown individual " + individual.to_string());
    return instance_satisfies_iri(kb, subs, types, individual, expr.normalized());
}

bool entails_instance(const KnowledgeBase& kb, const SubsumptionMap& subs, const Iri& individual,
                      const ClassExpression& expr) {
    return entails_instance(kb, subs, realize(kb, subs), individual, expr);
}

} // namespace nischeck
