#include "mint/parse.hpp"

#include <cctype>

namespace mint {

const Definition* SourceFile::find(std::string_view name) const {
    for (const auto& d : defs)
        if (d.name == name) return &d;
    return nullptr;
}

Parser::Parser(std::string_view text, const DefTable* defs, std::size_t first_line)
    : text_(text), line_(first_line), defs_(defs) {}

void Parser::fail(const std::string& message, SourceLoc loc) { throw ParseError(loc, message); }

void Parser::lex_more() {
    auto at = [&](std::size_t i) -> char { return pos_ + i < text_.size() ? text_[pos_ + i] : '\0'; };
    auto advance = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    };
    for (;;) {
        char c = at(0);
        if (c == '\0') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '-' && at(1) == '-') {
            while (at(0) != '\0' && at(0) != '\n') advance(1);
        } else {
            break;
        }
    }
    SourceLoc loc{line_, col_};
    char c = at(0);
    if (c == '\0') {
        buf_.push_back({Token::End, "", loc});
        return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t n = 0;
        while (std::isalnum(static_cast<unsigned char>(at(n))) || at(n) == '_' || at(n) == '\'') ++n;
        buf_.push_back({Token::Ident, std::string(text_.substr(pos_, n)), loc});
        advance(n);
        return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t n = 0;
        while (std::isdigit(static_cast<unsigned char>(at(n)))) ++n;
        buf_.push_back({Token::Nat, std::string(text_.substr(pos_, n)), loc});
        advance(n);
        return;
    }
    for (const char* sym : {"->", ":=", "[]"}) {
        if (c == sym[0] && at(1) == sym[1]) {
            buf_.push_back({Token::Sym, sym, loc});
            advance(2);
            return;
        }
    }
    if (std::string_view("():.;#").find(c) != std::string_view::npos) {
        buf_.push_back({Token::Sym, std::string(1, c), loc});
        advance(1);
        return;
    }
    fail(std::string("unexpected character '") + c + "'", loc);
}

const Parser::Token& Parser::peek(std::size_t ahead) {
    while (buf_.size() <= ahead) {
        if (!buf_.empty() && buf_.back().kind == Token::End) return buf_.back();
        lex_more();
    }
    return buf_[ahead];
}

Parser::Token Parser::next() {
    Token t = peek();
    if (t.kind != Token::End) buf_.erase(buf_.begin());
    return t;
}

bool Parser::at_symbol(std::string_view symbol) {
    const Token& t = peek();
    return t.kind == Token::Sym && t.text == symbol;
}

bool Parser::at_end() { return peek().kind == Token::End; }
SourceLoc Parser::loc() { return peek().loc; }

bool Parser::accept(std::string_view symbol) {
    const Token& t = peek();
    if ((t.kind == Token::Sym || t.kind == Token::Ident) && t.text == symbol) {
        next();
        return true;
    }
    return false;
}

void Parser::expect(std::string_view symbol) {
    if (!accept(symbol)) {
        const Token& t = peek();
        fail("expected '" + std::string(symbol) + "' but found " + (t.kind == Token::End ? "end of input" : "'" + t.text + "'"),
             t.loc);
    }
}

std::string Parser::ident() {
    const Token& t = peek();
    if (t.kind != Token::Ident || is_keyword(t.text))
        fail("expected an identifier but found " + (t.kind == Token::End ? std::string("end of input") : "'" + t.text + "'"),
             t.loc);
    return next().text;
}

std::size_t Parser::number() {
    const Token& t = peek();
    if (t.kind != Token::Nat) fail("expected a natural number", t.loc);
    SourceLoc l = t.loc;
    std::string s = next().text;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail("number out of range", l);
    }
}

namespace {
NameStack with(const NameStack& names, const std::string& n) {
    NameStack r = names;
    r.back().push_back(n);
    return r;
}
}  // namespace

TermPtr Parser::resolve(const std::string& name, const NameStack& names, SourceLoc loc) {
    const auto& w = names.back();
    for (std::size_t i = w.size(); i-- > 0;)
        if (w[i] == name) return var(w.size() - 1 - i);
    if (defs_) {
        auto it = defs_->find(name);
        if (it != defs_->end()) return it->second;
    }
    fail("unknown identifier '" + name + "'", loc);
}

bool Parser::starts_atom() {
    const Token& t = peek();
    if (t.kind == Token::Ident) {
        if (t.text == "Ty" || t.text == "Nat" || t.text == "zero" || t.text == "succ") return true;
        return !is_keyword(t.text);
    }
    if (t.kind == Token::Sym) {
        if (t.text == "[]") return true;
        // A `(` opening the step of a rec is not an argument.
        if (t.text == "(") {
            const Token& a = peek(1);
            const Token& b = peek(2);
            const Token& c = peek(3);
            bool step = a.kind == Token::Ident && !is_keyword(a.text) && b.kind == Token::Ident && c.kind == Token::Sym && c.text == ".";
            return !step;
        }
    }
    return false;
}

TermPtr Parser::atom(const NameStack& names) {
    const Token t = peek();
    if (t.kind == Token::Ident) {
        if (t.text == "Ty") {
            next();
            return univ(number());
        }
        if (t.text == "Nat") {
            next();
            return nat();
        }
        if (t.text == "zero") {
            next();
            return zero();
        }
        if (t.text == "succ") {
            next();
            return succ(atom(names));
        }
        return resolve(ident(), names, t.loc);
    }
    if (accept("[]")) {
        NameStack up = names;
        up.emplace_back();
        return box_ty(atom(up));
    }
    if (accept("(")) {
        TermPtr inner = term(names);
        expect(")");
        return inner;
    }
    fail(t.kind == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.loc);
}

TermPtr Parser::head(const NameStack& names) {
    if (accept("box")) {
        NameStack up = names;
        up.emplace_back();
        return box(atom(up));
    }
    if (accept("unbox")) {
        std::size_t n = number();
        NameStack lower = n < names.size() ? NameStack(names.begin(), names.end() - static_cast<std::ptrdiff_t>(n))
                                           : NameStack{{}};
        return unbox(n, atom(lower));
    }
    if (accept("rec")) {
        expect("(");
        std::string x = ident();
        expect(".");
        TermPtr motive = term(with(names, x));
        expect(")");
        TermPtr base = term(names);
        expect("(");
        std::string p = ident();
        std::string r = ident();
        expect(".");
        TermPtr step = term(with(with(names, p), r));
        expect(")");
        TermPtr scrut = atom(names);
        return nat_elim(motive, base, step, scrut);
    }
    return atom(names);
}

TermPtr Parser::application(const NameStack& names) {
    TermPtr t = head(names);
    while (starts_atom()) t = app(t, atom(names));
    return t;
}

TermPtr Parser::arrow_or_app(const NameStack& names) {
    TermPtr lhs = application(names);
    if (accept("->")) return pi(lhs, term(with(names, "")));
    return lhs;
}

TermPtr Parser::term(const NameStack& names) {
    if (accept("fn")) {
        std::string x = ident();
        expect(".");
        return lam(term(with(names, x)));
    }
    const Token& t = peek();
    if (t.kind == Token::Sym && t.text == "(") {
        const Token& a = peek(1);
        const Token& b = peek(2);
        if (a.kind == Token::Ident && !is_keyword(a.text) && b.kind == Token::Sym && b.text == ":") {
            next();
            std::string x = ident();
            expect(":");
            TermPtr dom = term(names);
            expect(")");
            expect("->");
            return pi(dom, term(with(names, x)));
        }
    }
    return arrow_or_app(names);
}

std::optional<Flavor> Parser::pragma() {
    SourceLoc l = loc();
    expect("#");
    std::string word = ident();
    if (word != "flavor") fail("unknown pragma '" + word + "'", l);
    SourceLoc fl = loc();
    std::string f = next().text;
    auto flavor = parse_flavor(f);
    if (!flavor) fail("unknown flavor '" + f + "'", fl);
    expect(";");
    return flavor;
}

std::optional<Definition> Parser::definition(const DefTable& defs) {
    if (at_end()) return std::nullopt;
    const DefTable* saved = defs_;
    defs_ = &defs;
    Definition d;
    d.loc = loc();
    expect("def");
    SourceLoc name_loc = loc();
    d.name = ident();
    if (defs.count(d.name)) fail("duplicate definition '" + d.name + "'", name_loc);
    expect(":");
    d.type = term(NameStack{{}});
    expect(":=");
    d.body = term(NameStack{{}});
    expect(";");
    defs_ = saved;
    return d;
}

SourceFile parse_file(std::string_view text) {
    SourceFile file;
    Parser p(text);
    DefTable defs;
    while (!p.at_end()) {
        if (p.at_symbol("#")) {
            file.flavor = p.pragma();
            continue;
        }
        Definition d = *p.definition(defs);
        defs[d.name] = d.body;
        file.defs.push_back(std::move(d));
    }
    return file;
}

TermPtr parse_core(std::string_view text, const NameStack& names, const DefTable& defs) {
    Parser p(text, &defs);
    TermPtr t = p.term(names.empty() ? NameStack{{}} : names);
    if (!p.at_end()) {
        SourceLoc l = p.loc();
        throw ParseError(l, "unexpected input after term");
    }
    return t;
}

}  // namespace mint
