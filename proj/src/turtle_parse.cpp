#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "nischeck/turtle.hpp"

namespace nischeck {

std::string ParseDiagnostic::to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (severity == Severity::Error ? "error: " : "warning: ") + message;
}

TurtleParseError::TurtleParseError(ParseDiagnostic diag)
    : Error(diag.to_string()), diag_(std::move(diag)) {}

LiftError::LiftError(ParseDiagnostic diag) : Error(diag.to_string()), diag_(std::move(diag)) {}

namespace {

[[noreturn]] void fail(int line, int col, const std::string& message) {
    throw TurtleParseError({line, col, message, Severity::Error});
}

[[noreturn]] void fail_lift(int line, int col, const std::string& message) {
    throw LiftError({line, col, message, Severity::Error});
}

struct Token {
    enum class Type {
        PrefixDirective, // @prefix
        PName,           // prefix:local (prefix may be empty)
        IriRef,          // <...>
        BlankLabel,      // _:label
        KeywordA,        // a
        Integer,         // bare or quoted integer literal
        Dot,
        Semicolon,
        Comma,
        LBracket,
        RBracket,
        LParen,
        RParen,
        End,
    };
    Type type;
    std::string text;  // prefix for PName / label / iri body
    std::string local; // local part for PName
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        const int line = line_, col = col_;
        if (eof()) {
            Token t{Token::Type::End, "", "", 0, last_line_, last_col_};
            return t;
        }
        char c = peek();
        switch (c) {
        case '.':
            advance();
            return {Token::Type::Dot, ".", "", 0, line, col};
        case ';':
            advance();
            return {Token::Type::Semicolon, ";", "", 0, line, col};
        case ',':
            advance();
            return {Token::Type::Comma, ",", "", 0, line, col};
        case '[':
            advance();
            return {Token::Type::LBracket, "[", "", 0, line, col};
        case ']':
            advance();
            return {Token::Type::RBracket, "]", "", 0, line, col};
        case '(':
            advance();
            return {Token::Type::LParen, "(", "", 0, line, col};
        case ')':
            advance();
            return {Token::Type::RParen, ")", "", 0, line, col};
        case '<':
            return iri_ref(line, col);
        case '"':
            return string_literal(line, col);
        case '@':
            return at_directive(line, col);
        default:
            break;
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return integer(line, col);
        if (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':')
            return blank_label(line, col);
        if (is_name_start(c))
            return pname_or_keyword(line, col);
        fail(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        last_line_ = line_;
        last_col_ = col_;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    static bool is_name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    }

    std::string read_name() {
        std::string out;
        while (!eof() && is_name_char(peek())) {
            out += peek();
            advance();
        }
        // A trailing dot belongs to the statement, not the name.
        while (!out.empty() && out.back() == '.') {
            out.pop_back();
            --pos_;
            --col_;
        }
        return out;
    }

    Token iri_ref(int line, int col) {
        advance(); // <
        std::string body;
        while (!eof() && peek() != '>') {
            if (peek() == '\n')
                fail(line, col, "unterminated IRI reference");
            if (peek() == '\\')
                fail(line_, col_, "escape sequences are not supported");
            body += peek();
            advance();
        }
        if (eof())
            fail(line, col, "unterminated IRI reference");
        advance(); // >
        return {Token::Type::IriRef, body, "", 0, line, col};
    }

    Token at_directive(int line, int col) {
        advance(); // @
        std::string word = read_name();
        if (word == "prefix")
            return {Token::Type::PrefixDirective, word, "", 0, line, col};
        if (word == "base")
            fail(line, col, "@base is not supported by this Turtle subset");
        fail(line, col, "unsupported directive '@" + word + "'");
    }

    Token integer(int line, int col) {
        std::string digits;
        if (peek() == '+' || peek() == '-') {
            digits += peek();
            advance();
        }
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.empty() || digits == "+" || digits == "-")
            fail(line, col, "malformed integer literal");
        if (!eof() && peek() == '.' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
            fail(line, col, "only integer literals are supported");
        return {Token::Type::Integer, digits, "", std::stoll(digits), line, col};
    }

    Token string_literal(int line, int col) {
        advance(); // "
        if (!eof() && peek() == '"' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"')
            fail(line, col, "multiline strings are not supported");
        std::string body;
        while (!eof() && peek() != '"') {
            if (peek() == '\n')
                fail(line, col, "unterminated string literal");
            if (peek() == '\\')
                fail(line_, col_, "escape sequences are not supported");
            body += peek();
            advance();
        }
        if (eof())
            fail(line, col, "unterminated string literal");
        advance(); // "
        // Only integer-valued literals exist in this fragment.
        if (!eof() && peek() == '@')
            fail(line_, col_, "language tags are not supported");
        std::string datatype_prefix, datatype_local;
        bool typed = false;
        if (pos_ + 1 < text_.size() && peek() == '^' && text_[pos_ + 1] == '^') {
            advance();
            advance();
            typed = true;
            if (eof() || !is_name_start(peek()))
                fail(line_, col_, "expected a datatype after '^^'");
            datatype_prefix = read_name();
            if (eof() || peek() != ':')
                fail(line_, col_, "expected a prefixed datatype name");
            advance();
            datatype_local = read_name();
        }
        if (typed && !(datatype_prefix == "xsd" && (datatype_local == "int" ||
                                                    datatype_local == "integer")))
            fail(line, col, "unsupported literal datatype '" + datatype_prefix + ":" +
                                datatype_local + "' (only xsd:int/xsd:integer)");
        bool numeric = !body.empty();
        for (size_t i = 0; i < body.size(); ++i) {
            char c = body[i];
            if (i == 0 && (c == '+' || c == '-') && body.size() > 1)
                continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                numeric = false;
        }
        if (!numeric)
            fail(line, col, "only integer literals are supported, got \"" + body + "\"");
        return {Token::Type::Integer, body, "", std::stoll(body), line, col};
    }

    Token blank_label(int line, int col) {
        advance(); // _
        advance(); // :
        std::string label = read_name();
        if (label.empty())
            fail(line, col, "empty blank node label");
        return {Token::Type::BlankLabel, label, "", 0, line, col};
    }

    Token pname_or_keyword(int line, int col) {
        std::string name = read_name();
        if (!eof() && peek() == ':') {
            advance();
            std::string local = read_name();
            return {Token::Type::PName, name, local, 0, line, col};
        }
        if (name == "a")
            return {Token::Type::KeywordA, name, "", 0, line, col};
        if (name == "true" || name == "false")
            fail(line, col, "boolean literals are not supported");
        fail(line, col, "expected a prefixed name, got '" + name + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    int last_line_ = 1, last_col_ = 1;
};

struct PTriple {
    Term subject;
    Iri predicate;
    Term object;
    int line;
    int col;
};

// Recursive-descent statement parser; produces raw triples.
class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text), prefixes_(PrefixMap::builtins()) {
        advance();
    }

    void run() {
        while (cur_.type != Token::Type::End) {
            if (cur_.type == Token::Type::PrefixDirective)
                prefix_directive();
            else
                statement();
        }
    }

    std::vector<PTriple>& triples() { return triples_; }
    const PrefixMap& prefixes() const { return prefixes_; }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Type type, const char* what) {
        if (cur_.type != type)
            fail(cur_.line, cur_.col, std::string("expected ") + what);
        advance();
    }

    void prefix_directive() {
        advance(); // @prefix
        if (cur_.type != Token::Type::PName || !cur_.local.empty())
            fail(cur_.line, cur_.col, "expected a prefix label ending in ':'");
        std::string label = cur_.text;
        advance();
        if (cur_.type != Token::Type::IriRef)
            fail(cur_.line, cur_.col, "expected <iri> in @prefix directive");
        prefixes_.bind(label, cur_.text);
        advance();
        expect(Token::Type::Dot, "'.' after @prefix directive");
    }

    Iri resolve_pname(const Token& t) {
        auto exp = prefixes_.expansion_of(t.text);
        if (!exp)
            fail(t.line, t.col, "unknown prefix '" + t.text + ":'");
        return Iri(t.text, t.local, *exp);
    }

    BlankNode fresh_blank() { return BlankNode{"g" + std::to_string(blank_counter_++)}; }

    void statement() {
        Term subject = subject_term();
        predicate_object_list(subject);
        expect(Token::Type::Dot, "'.' at end of statement");
    }

    Term subject_term() {
        switch (cur_.type) {
        case Token::Type::PName: {
            Iri iri = resolve_pname(cur_);
            advance();
            return iri;
        }
        case Token::Type::IriRef: {
            Iri iri = prefixes_.from_expanded(cur_.text);
            advance();
            return iri;
        }
        case Token::Type::BlankLabel: {
            BlankNode b{cur_.text};
            advance();
            return b;
        }
        case Token::Type::LBracket:
            return blank_property_list();
        default:
            fail(cur_.line, cur_.col, "expected a subject");
        }
    }

    Iri verb() {
        if (cur_.type == Token::Type::KeywordA) {
            advance();
            return vocab::rdf_type();
        }
        if (cur_.type == Token::Type::PName) {
            Iri iri = resolve_pname(cur_);
            advance();
            return iri;
        }
        if (cur_.type == Token::Type::IriRef) {
            Iri iri = prefixes_.from_expanded(cur_.text);
            advance();
            return iri;
        }
        fail(cur_.line, cur_.col, "expected a predicate");
    }

    void predicate_object_list(const Term& subject) {
        while (true) {
            Iri pred = verb();
            object_list(subject, pred);
            if (cur_.type == Token::Type::Semicolon) {
                advance();
                // Trailing ';' before '.' or ']' is allowed.
                if (cur_.type == Token::Type::Dot || cur_.type == Token::Type::RBracket)
                    return;
                continue;
            }
            return;
        }
    }

    void object_list(const Term& subject, const Iri& pred) {
        while (true) {
            int line = cur_.line, col = cur_.col;
            Term obj = object_term();
            triples_.push_back({subject, pred, obj, line, col});
            if (cur_.type == Token::Type::Comma) {
                advance();
                continue;
            }
            return;
        }
    }

    Term object_term() {
        switch (cur_.type) {
        case Token::Type::PName: {
            Iri iri = resolve_pname(cur_);
            advance();
            return iri;
        }
        case Token::Type::IriRef: {
            Iri iri = prefixes_.from_expanded(cur_.text);
            advance();
            return iri;
        }
        case Token::Type::BlankLabel: {
            BlankNode b{cur_.text};
            advance();
            return b;
        }
        case Token::Type::Integer: {
            IntLiteral lit{cur_.value};
            advance();
            return lit;
        }
        case Token::Type::LBracket:
            return blank_property_list();
        case Token::Type::LParen:
            return collection();
        default:
            fail(cur_.line, cur_.col, "expected an object");
        }
    }

    Term blank_property_list() {
        advance(); // [
        BlankNode node = fresh_blank();
        if (cur_.type != Token::Type::RBracket)
            predicate_object_list(node);
        expect(Token::Type::RBracket, "']' closing blank node");
        return node;
    }

    Term collection() {
        int line = cur_.line, col = cur_.col;
        advance(); // (
        std::vector<std::pair<Term, std::pair<int, int>>> elems;
        while (cur_.type != Token::Type::RParen) {
            if (cur_.type == Token::Type::End)
                fail(line, col, "unterminated collection");
            int eline = cur_.line, ecol = cur_.col;
            elems.push_back({object_term(), {eline, ecol}});
        }
        advance(); // )
        Term head = vocab::rdf_nil();
        for (size_t i = elems.size(); i-- > 0;) {
            BlankNode cell = fresh_blank();
            triples_.push_back(
                {cell, vocab::rdf_first(), elems[i].first, elems[i].second.first,
                 elems[i].second.second});
            triples_.push_back(
                {cell, vocab::rdf_rest(), head, elems[i].second.first, elems[i].second.second});
            head = cell;
        }
        return head;
    }

    Lexer lexer_;
    Token cur_;
    PrefixMap prefixes_;
    std::vector<PTriple> triples_;
    int blank_counter_ = 0;
};

// Lifts raw triples into axioms and assertions.
class Lifter {
public:
    Lifter(std::vector<PTriple> triples, PrefixMap prefixes)
        : triples_(std::move(triples)), kb_(std::move(prefixes)) {
        for (size_t i = 0; i < triples_.size(); ++i)
            by_subject_[triples_[i].subject].push_back(i);
        consumed_.assign(triples_.size(), false);
    }

    ParseResult run() {
        lift_declarations();
        lift_axioms();
        lift_assertions();
        report_leftovers();
        return {std::move(kb_), std::move(diagnostics_)};
    }

private:
    static const Iri* as_iri(const Term& t) { return std::get_if<Iri>(&t); }

    bool is_decl_class(const Iri& iri, DeclKind& kind) const {
        if (iri == vocab::owl_class())
            kind = DeclKind::Class;
        else if (iri == vocab::owl_object_property())
            kind = DeclKind::ObjectProperty;
        else if (iri == vocab::owl_datatype_property())
            kind = DeclKind::DataProperty;
        else if (iri == vocab::owl_named_individual())
            kind = DeclKind::Individual;
        else
            return false;
        return true;
    }

    void lift_declarations() {
        for (size_t i = 0; i < triples_.size(); ++i) {
            const PTriple& t = triples_[i];
            const Iri* s = as_iri(t.subject);
            const Iri* o = as_iri(t.object);
            if (!s || !o || !(t.predicate == vocab::rdf_type()))
                continue;
            DeclKind kind;
            if (is_decl_class(*o, kind)) {
                kb_.add(DeclarationAxiom{kind, *s});
                consumed_[i] = true;
            }
        }
    }

    void lift_axioms() {
        for (size_t i = 0; i < triples_.size(); ++i) {
            if (consumed_[i])
                continue;
            const PTriple& t = triples_[i];
            const Iri* s = as_iri(t.subject);
            if (!s)
                continue;
            if (t.predicate == vocab::owl_equivalent_class()) {
                consumed_[i] = true;
                kb_.add(EquivalentClassesAxiom{*s, lift_expr(t.object, t.line, t.col)});
            } else if (t.predicate == vocab::rdfs_sub_class_of()) {
                consumed_[i] = true;
                kb_.add(SubClassOfAxiom{*s, lift_expr(t.object, t.line, t.col)});
            } else if (t.predicate == vocab::rdfs_sub_property_of()) {
                const Iri* o = as_iri(t.object);
                if (!o)
                    fail_lift(t.line, t.col, "rdfs:subPropertyOf requires a named property");
                consumed_[i] = true;
                kb_.add(SubPropertyOfAxiom{*s, *o});
            }
        }
    }

    void lift_assertions() {
        for (size_t i = 0; i < triples_.size(); ++i) {
            if (consumed_[i])
                continue;
            const PTriple& t = triples_[i];
            const Iri* s = as_iri(t.subject);
            if (!s)
                continue;
            if (t.predicate == vocab::rdf_type()) {
                const Iri* o = as_iri(t.object);
                if (o && !vocab::is_reserved(*o)) {
                    consumed_[i] = true;
                    kb_.add(ClassAssertion{*o, *s});
                }
                continue;
            }
            if (vocab::is_reserved(t.predicate))
                continue; // unhandled reserved predicate -> warning below
            if (const Iri* o = as_iri(t.object)) {
                consumed_[i] = true;
                kb_.add(ObjectPropertyAssertion{t.predicate, *s, *o});
            } else if (const auto* lit = std::get_if<IntLiteral>(&t.object)) {
                consumed_[i] = true;
                kb_.add(DataPropertyAssertion{t.predicate, *s, lit->value});
            }
        }
    }

    void report_leftovers() {
        for (size_t i = 0; i < triples_.size(); ++i) {
            if (consumed_[i])
                continue;
            const PTriple& t = triples_[i];
            diagnostics_.push_back({t.line, t.col,
                                    "triple not lifted: " + to_string(t.subject) + " " +
                                        t.predicate.to_string() + " " + to_string(t.object),
                                    Severity::Warning});
        }
    }

    // --- expression lifting ---

    struct NodeView {
        std::map<Iri, std::vector<size_t>> by_pred;
    };

    NodeView view_of(const BlankNode& b) {
        NodeView v;
        auto it = by_subject_.find(Term(b));
        if (it != by_subject_.end())
            for (size_t idx : it->second)
                v.by_pred[triples_[idx].predicate].push_back(idx);
        return v;
    }

    std::optional<size_t> single(const NodeView& v, const Iri& pred) {
        auto it = v.by_pred.find(pred);
        if (it == v.by_pred.end() || it->second.empty())
            return std::nullopt;
        return it->second.front();
    }

    ClassExpression lift_expr(const Term& term, int line, int col) {
        if (const Iri* iri = as_iri(term))
            return ClassExpression::named(*iri);
        if (std::holds_alternative<IntLiteral>(term))
            fail_lift(line, col, "integer literal where a class expression is expected");
        const BlankNode& b = std::get<BlankNode>(term);
        NodeView v = view_of(b);
        if (auto list = single(v, vocab::owl_intersection_of())) {
            consume(*list);
            consume_type(v, vocab::owl_class());
            std::vector<ClassExpression> conjuncts;
            for (size_t idx : walk_list(triples_[*list].object, line, col))
                conjuncts.push_back(
                    lift_expr(triples_[idx].object, triples_[idx].line, triples_[idx].col));
            if (conjuncts.empty())
                fail_lift(line, col, "owl:intersectionOf with an empty list");
            return ClassExpression::intersection(std::move(conjuncts));
        }
        if (auto onprop = single(v, vocab::owl_on_property())) {
            const Iri* prop = as_iri(triples_[*onprop].object);
            if (!prop)
                fail_lift(triples_[*onprop].line, triples_[*onprop].col,
                          "owl:onProperty requires a named property");
            consume(*onprop);
            consume_type(v, vocab::owl_restriction());
            if (auto some = single(v, vocab::owl_some_values_from())) {
                consume(*some);
                return ClassExpression::object_some(
                    *prop,
                    lift_expr(triples_[*some].object, triples_[*some].line, triples_[*some].col));
            }
            if (auto maxi = single(v, vocab::xsd_max_inclusive()))
                return facet_from(*prop, *maxi, Facet::MaxInclusive);
            if (auto mini = single(v, vocab::xsd_min_inclusive()))
                return facet_from(*prop, *mini, Facet::MinInclusive);
            if (auto has = single(v, vocab::owl_has_value()))
                return facet_from(*prop, *has, Facet::Exact);
            fail_lift(line, col, "restriction node lacks a recognized filler "
                                 "(owl:someValuesFrom or an integer bound)");
        }
        if (single(v, vocab::rdf_type()) &&
            has_type(v, vocab::owl_restriction()))
            fail_lift(line, col, "owl:Restriction node lacks owl:onProperty");
        fail_lift(line, col, "blank node is not a recognized class expression");
    }

    ClassExpression facet_from(const Iri& prop, size_t idx, Facet facet) {
        const PTriple& t = triples_[idx];
        const auto* lit = std::get_if<IntLiteral>(&t.object);
        if (!lit)
            fail_lift(t.line, t.col, "facet bound must be an integer literal");
        consume(idx);
        return ClassExpression::data_facet(prop, facet, lit->value);
    }

    bool has_type(const NodeView& v, const Iri& type) {
        auto it = v.by_pred.find(vocab::rdf_type());
        if (it == v.by_pred.end())
            return false;
        for (size_t idx : it->second) {
            const Iri* o = as_iri(triples_[idx].object);
            if (o && *o == type)
                return true;
        }
        return false;
    }

    void consume_type(const NodeView& v, const Iri& type) {
        auto it = v.by_pred.find(vocab::rdf_type());
        if (it == v.by_pred.end())
            return;
        for (size_t idx : it->second) {
            const Iri* o = as_iri(triples_[idx].object);
            if (o && *o == type)
                consumed_[idx] = true;
        }
    }

    void consume(size_t idx) { consumed_[idx] = true; }

    /// Cell indices of the rdf:first triples along an rdf:first/rdf:rest chain.
    std::vector<size_t> walk_list(const Term& head, int line, int col) {
        std::vector<size_t> firsts;
        Term cur = head;
        std::set<Term> seen;
        while (!(std::holds_alternative<Iri>(cur) && std::get<Iri>(cur) == vocab::rdf_nil())) {
            if (!std::holds_alternative<BlankNode>(cur))
                fail_lift(line, col, "malformed RDF list");
            if (!seen.insert(cur).second)
                fail_lift(line, col, "cyclic RDF list");
            NodeView v = view_of(std::get<BlankNode>(cur));
            auto first = single(v, vocab::rdf_first());
            auto rest = single(v, vocab::rdf_rest());
            if (!first || !rest)
                fail_lift(line, col, "malformed RDF list (missing rdf:first/rdf:rest)");
            consume(*first);
            consume(*rest);
            firsts.push_back(*first);
            cur = triples_[*rest].object;
        }
        return firsts;
    }

    std::vector<PTriple> triples_;
    KnowledgeBase kb_;
    std::map<Term, std::vector<size_t>> by_subject_;
    std::vector<bool> consumed_;
    std::vector<ParseDiagnostic> diagnostics_;
};

} // namespace

ParseResult parse_turtle(std::string_view text) {
    Parser parser(text);
    parser.run();
    return Lifter(std::move(parser.triples()), parser.prefixes()).run();
}

} // namespace nischeck
