#include "ckspectra/io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ckspectra {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

enum class Tok { Ident, Nat, Comma, Semi, Colon, Arrow, Star, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size())
            return t;
        const char c = src_[pos_];
        if (ident_start(c)) {
            t.kind = Tok::Ident;
            while (pos_ < src_.size() && ident_char(src_[pos_]))
                t.text += take();
            while (pos_ < src_.size() && src_[pos_] == '\'')
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Nat;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                t.text += take();
            return t;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            t.kind = Tok::Arrow;
            t.text = "->";
            take();
            take();
            return t;
        }
        switch (c) {
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case ':': t.kind = Tok::Colon; break;
        case '*': t.kind = Tok::Star; break;
        default: throw ParseError(t.line, t.col, "a token, found '" + std::string(1, c) + "'");
        }
        t.text = std::string(1, take());
        return t;
    }

private:
    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

const char* describe(Tok k) {
    switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::End: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { advance(); }

    Graph run() {
        while (cur_.kind != Tok::End) {
            if (cur_.kind == Tok::Ident && cur_.text == "vertex")
                vertex_stmt();
            else if (cur_.kind == Tok::Ident && cur_.text == "edge")
                edge_stmt();
            else
                fail("'vertex' or 'edge'");
        }
        return std::move(builder_).build();
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(cur_.line, cur_.col, expected + ", found " +
                                                  (cur_.kind == Tok::End ? std::string("end of input")
                                                                         : "'" + cur_.text + "'"));
    }

    void advance() { cur_ = lex_.next(); }

    Token expect(Tok k) {
        if (cur_.kind != k)
            fail(describe(k));
        Token t = cur_;
        advance();
        return t;
    }

    void vertex_stmt() {
        advance();
        do {
            const Token name = expect(Tok::Ident);
            if (builder_.find(name.text))
                throw ParseError(name.line, name.col, "a new vertex name, '" + name.text + "' is already declared");
            if (builder_.vertex_count() >= kMaxVertices)
                throw ParseError(name.line, name.col, "at most " + std::to_string(kMaxVertices) + " vertices");
            builder_.add_vertex(name.text);
        } while (cur_.kind == Tok::Comma && (advance(), true));
        expect(Tok::Semi);
    }

    Vertex declared(const Token& t) const {
        const auto v = builder_.find(t.text);
        if (!v)
            throw UndeclaredVertex(t.line, t.col, t.text);
        return *v;
    }

    void edge_stmt() {
        advance();
        const Token first = expect(Tok::Ident);
        std::optional<Token> label;
        Token src = first;
        if (cur_.kind == Tok::Colon) {
            advance();
            label = first;
            src = expect(Tok::Ident);
        }
        const Vertex s = declared(src);
        expect(Tok::Arrow);
        const Token dst = expect(Tok::Ident);
        const Vertex d = declared(dst);
        Multiplicity m{1};
        if (cur_.kind == Tok::Star) {
            advance();
            if (cur_.kind == Tok::Ident && cur_.text == "inf") {
                m = Multiplicity::omega();
            } else if (cur_.kind == Tok::Nat) {
                std::uint64_t n = 0;
                const auto [ptr, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), n);
                if (ec != std::errc{} || n == 0)
                    fail("a positive multiplicity that fits in 64 bits");
                m = Multiplicity{n};
            } else {
                fail("a multiplicity (number or 'inf')");
            }
            advance();
        }
        if (label && labels_.contains(label->text))
            throw DuplicateLabel(label->line, label->col, label->text);
        try {
            builder_.add_bundle(s, d, m, label ? std::optional(label->text) : std::nullopt);
        } catch (const std::overflow_error&) {
            throw ParseError(first.line, first.col, "merged multiplicity that fits in 64 bits");
        }
        if (label)
            labels_.insert(label->text);
        expect(Tok::Semi);
    }

    Lexer lex_;
    Token cur_;
    GraphBuilder builder_;
    std::set<std::string> labels_;
};

void require_identifier(std::string_view s) {
    if (!is_identifier(s))
        throw std::invalid_argument("'" + std::string(s) + "' is not a valid identifier");
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

bool is_identifier(std::string_view s) {
    if (s.empty() || !ident_start(s.front()))
        return false;
    std::size_t i = 1;
    while (i < s.size() && ident_char(s[i]))
        ++i;
    while (i < s.size() && s[i] == '\'')
        ++i;
    return i == s.size();
}

Graph parse_graph(std::string_view text) { return Parser(text).run(); }

std::string emit_graph(const Graph& g) {
    std::ostringstream os;
    if (g.vertex_count() > 0) {
        os << "vertex ";
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            require_identifier(g.names()[i]);
            os << (i ? ", " : "") << g.names()[i];
        }
        os << ";\n";
    }
    for (const Bundle& b : g.bundles()) {
        os << "edge ";
        if (b.label) {
            require_identifier(*b.label);
            os << *b.label << ": ";
        }
        os << g.name(b.src) << " -> " << g.name(b.dst);
        if (b.mult != Multiplicity{1})
            os << " * " << b.mult.to_string();
        os << ";\n";
    }
    return os.str();
}

std::string emit_dot(const Graph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (const std::string& n : g.names())
        os << "  " << dot_quote(n) << ";\n";
    for (const Bundle& b : g.bundles()) {
        os << "  " << dot_quote(g.name(b.src)) << " -> " << dot_quote(g.name(b.dst));
        std::string label = b.label.value_or("");
        if (b.mult.is_omega())
            label += label.empty() ? "∞" : " ∞";
        else if (b.mult != Multiplicity{1})
            label += (label.empty() ? "" : " ") + b.mult.to_string();
        if (!label.empty())
            os << " [label=" << dot_quote(label) << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

Json to_json(Multiplicity m) {
    if (m.is_omega())
        return "inf";
    return m.value();
}

Json to_json(const Graph& g, VertexSet s) {
    Json out = Json::array();
    for (Vertex v : s)
        out.push_back(g.name(v));
    return out;
}

Json to_json(const Graph& g) {
    Json out;
    out["vertices"] = Json(std::vector<std::string>(g.names().begin(), g.names().end()));
    Json bundles = Json::array();
    for (const Bundle& b : g.bundles()) {
        Json e;
        e["label"] = b.label ? Json(*b.label) : Json(nullptr);
        e["src"] = g.name(b.src);
        e["dst"] = g.name(b.dst);
        e["multiplicity"] = to_json(b.mult);
        bundles.push_back(std::move(e));
    }
    out["bundles"] = std::move(bundles);
    return out;
}

} // namespace ckspectra
