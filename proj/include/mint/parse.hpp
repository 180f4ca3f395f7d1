#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mint/print.hpp"
#include "mint/syntax.hpp"

namespace mint {

struct Definition {
    std::string name;
    TermPtr type;
    TermPtr body;
    SourceLoc loc;
};

struct SourceFile {
    std::optional<Flavor> flavor;
    std::vector<Definition> defs;

    const Definition* find(std::string_view name) const;
};

/// Earlier definitions, by name, that identifiers may refer to (inlined).
using DefTable = std::map<std::string, TermPtr, std::less<>>;

SourceFile parse_file(std::string_view text);

/// Parses a single term. Unknown identifiers are looked up in `defs`.
TermPtr parse_core(std::string_view text, const NameStack& names = NameStack{{}}, const DefTable& defs = {});

/// Incremental parser for REPL lines and other callers that need a cursor.
class Parser {
public:
    Parser(std::string_view text, const DefTable* defs = nullptr, std::size_t first_line = 1);

    TermPtr term(const NameStack& names);
    TermPtr atom(const NameStack& names);
    /// Consumes the symbol if it is next.
    bool accept(std::string_view symbol);
    void expect(std::string_view symbol);
    bool at_symbol(std::string_view symbol);
    bool at_end();
    SourceLoc loc();

    std::optional<Definition> definition(const DefTable& defs);
    std::optional<Flavor> pragma();

private:
    struct Token {
        enum Kind { Ident, Nat, Sym, End } kind;
        std::string text;
        SourceLoc loc;
    };

    const Token& peek(std::size_t ahead = 0);
    Token next();
    void lex_more();
    [[noreturn]] void fail(const std::string& message, SourceLoc loc);
    std::string ident();
    std::size_t number();
    bool starts_atom();
    TermPtr arrow_or_app(const NameStack& names);
    TermPtr application(const NameStack& names);
    TermPtr head(const NameStack& names);
    TermPtr resolve(const std::string& name, const NameStack& names, SourceLoc loc);

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_ = 1;
    std::vector<Token> buf_;
    const DefTable* defs_;
};

}  // namespace mint
