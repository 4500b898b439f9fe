#include <map>
#include <sstream>

#include "nischeck/turtle.hpp"

namespace nischeck {

namespace {

std::string render_iri(const PrefixMap& prefixes, const Iri& iri) {
    if (iri.has_curie()) {
        auto exp = prefixes.expansion_of(iri.prefix());
        if (exp && *exp + iri.local() == iri.expanded())
            return iri.prefix() + ":" + iri.local();
    }
    Iri recompacted = prefixes.from_expanded(iri.expanded());
    if (recompacted.has_curie())
        return recompacted.prefix() + ":" + recompacted.local();
    return "<" + iri.expanded() + ">";
}

std::string render_int(long long v) { return "\"" + std::to_string(v) + "\"^^xsd:int"; }

class Writer {
public:
    explicit Writer(const KnowledgeBase& kb) : kb_(kb), prefixes_(kb.prefixes()) {}

    std::string run() {
        prefix_block();
        collect();
        for (const auto& [subject, block] : blocks_)
            emit_block(subject, block);
        return out_.str();
    }

private:
    struct Block {
        std::vector<Iri> types; // objects of rdf:type
        std::vector<ClassExpression> super_classes;
        std::vector<Iri> super_properties;
        std::optional<ClassExpression> definition;
        std::vector<std::pair<Iri, Iri>> object_facts;       // (property, object)
        std::vector<std::pair<Iri, long long>> data_facts;   // (property, value)
    };

    std::string iri(const Iri& i) const { return render_iri(prefixes_, i); }

    void prefix_block() {
        for (const auto& [label, exp] : prefixes_.entries())
            out_ << "@prefix " << label << ": <" << exp << "> .\n";
        out_ << "\n";
    }

    Iri decl_type(DeclKind kind) const {
        switch (kind) {
        case DeclKind::Class:
            return vocab::owl_class();
        case DeclKind::ObjectProperty:
            return vocab::owl_object_property();
        case DeclKind::DataProperty:
            return vocab::owl_datatype_property();
        case DeclKind::Individual:
            return vocab::owl_named_individual();
        }
        return vocab::owl_class();
    }

    void collect() {
        for (const auto& ax : kb_.tbox()) {
            if (const auto* d = std::get_if<DeclarationAxiom>(&ax))
                blocks_[d->iri].types.push_back(decl_type(d->kind));
            else if (const auto* s = std::get_if<SubClassOfAxiom>(&ax))
                blocks_[s->sub].super_classes.push_back(s->sup);
            else if (const auto* p = std::get_if<SubPropertyOfAxiom>(&ax))
                blocks_[p->sub].super_properties.push_back(p->sup);
            else if (const auto* e = std::get_if<EquivalentClassesAxiom>(&ax))
                blocks_[e->named].definition = e->definition;
        }
        for (const auto& as : kb_.abox()) {
            if (const auto* c = std::get_if<ClassAssertion>(&as))
                blocks_[c->individual].types.push_back(c->cls);
            else if (const auto* o = std::get_if<ObjectPropertyAssertion>(&as))
                blocks_[o->subject].object_facts.emplace_back(o->property, o->object);
            else if (const auto* d = std::get_if<DataPropertyAssertion>(&as))
                blocks_[d->subject].data_facts.emplace_back(d->property, d->value);
        }
        for (auto& [subject, block] : blocks_)
            std::sort(block.types.begin(), block.types.end());
    }

    std::string expr(const ClassExpression& e, int indent) const {
        switch (e.kind()) {
        case ClassExpression::Kind::Named:
            return iri(e.head());
        case ClassExpression::Kind::ObjectSome:
            return "[ a owl:Restriction ; owl:onProperty " + iri(e.head()) +
                   " ; owl:someValuesFrom " + expr(e.filler(), indent) + " ]";
        case ClassExpression::Kind::DataFacet: {
            const char* pred = e.facet() == Facet::MaxInclusive   ? "xsd:maxInclusive"
                               : e.facet() == Facet::MinInclusive ? "xsd:minInclusive"
                                                                  : "owl:hasValue";
            return "[ a owl:Restriction ; owl:onProperty " + iri(e.head()) + " ; " + pred + " " +
                   render_int(e.bound()) + " ]";
        }
        case ClassExpression::Kind::Intersection:
            return collection(e.conjuncts(), indent);
        }
        return "";
    }

    /// `[ owl:intersectionOf ( ... ) ]`, one element per line.
    std::string collection(const std::vector<ClassExpression>& elems, int indent) const {
        std::string pad(static_cast<size_t>(indent), ' ');
        std::string s = "[ owl:intersectionOf (\n";
        for (const auto& e : elems)
            s += pad + "    " + expr(e, indent + 4) + "\n";
        s += pad + ") ]";
        return s;
    }

    void emit_block(const Iri& subject, const Block& b) {
        std::vector<std::string> lines;
        if (!b.types.empty()) {
            std::string line = "a ";
            for (size_t i = 0; i < b.types.size(); ++i) {
                if (i)
                    line += " , ";
                line += iri(b.types[i]);
            }
            lines.push_back(line);
        }
        for (const auto& sup : b.super_classes)
            lines.push_back("rdfs:subClassOf " + expr(sup, 4));
        for (const auto& sup : b.super_properties)
            lines.push_back("rdfs:subPropertyOf " + iri(sup));
        if (b.definition)
            lines.push_back("owl:equivalentClass " +
                            collection(b.definition->conjunct_list(), 4));
        for (const auto& [prop, obj] : b.object_facts)
            lines.push_back(iri(prop) + " " + iri(obj));
        for (const auto& [prop, value] : b.data_facts)
            lines.push_back(iri(prop) + " " + render_int(value));
        if (lines.empty())
            return;
        out_ << iri(subject) << " " << lines.front();
        for (size_t i = 1; i < lines.size(); ++i)
            out_ << " ;\n    " << lines[i];
        out_ << " .\n\n";
    }

    const KnowledgeBase& kb_;
    const PrefixMap& prefixes_;
    std::map<Iri, Block> blocks_;
    std::ostringstream out_;
};

} // namespace

std::string serialize(const KnowledgeBase& kb) { return Writer(kb).run(); }

} // namespace nischeck
