#include "mint/driver.hpp"

#include <cctype>
#include <sstream>

namespace mint {

std::string Report::text() const {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
}

std::string format_error(const Error& e, SourceLoc loc, std::string_view what) {
    std::string prefix = (loc.known() ? loc.str() : std::string("-")) + ": ";
    std::string subject = what.empty() ? "" : std::string(what) + ": ";
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) return pe->loc().str() + ": parse-error: " + pe->message();
    if (const auto* ce = dynamic_cast<const CheckError*>(&e)) {
        std::string msg = ce->message();
        if (ce->kind() == CheckErrorKind::ConversionFailure && ce->expected() && ce->got())
            msg = "expected " + print_term(ce->expected()) + " but got " + print_term(ce->got());
        SourceLoc l = ce->loc().known() ? ce->loc() : loc;
        return (l.known() ? l.str() : std::string("-")) + ": " + std::string(check_error_name(ce->kind())) + ": " +
               subject + msg;
    }
    if (const auto* ee = dynamic_cast<const EvalError*>(&e))
        return prefix + std::string(eval_error_name(ee->kind())) + ": " + subject + ee->snapshot();
    if (dynamic_cast<const ReadbackError*>(&e)) return prefix + "readback-error: " + subject + e.what();
    return prefix + "internal-error: " + subject + e.what();
}

namespace {

struct Loaded {
    SourceFile file;
    Flavor flavor = Flavor::S4;
};

// Parses or reports; exit 2 on failure.
std::optional<Loaded> load(std::string_view source, std::optional<Flavor> override_, Report& r) {
    try {
        Loaded l;
        l.file = parse_file(source);
        l.flavor = override_ ? *override_ : l.file.flavor.value_or(Flavor::S4);
        return l;
    } catch (const ParseError& e) {
        r.lines.push_back(format_error(e, e.loc()));
        r.exit_code = 2;
        return std::nullopt;
    }
}

// Checks one definition; on failure appends a finding and returns false.
bool check_def(const Checker& ck, const Definition& d, Report& r) {
    try {
        ck.check_typed(CtxStack::initial(), d.body, d.type);
        return true;
    } catch (const Error& e) {
        r.lines.push_back(format_error(e, d.loc, d.name));
        return false;
    }
}

const Definition* require(const Loaded& l, std::string_view name, Report& r) {
    const Definition* d = l.file.find(name);
    if (!d) {
        r.lines.push_back("-: unknown-definition: " + std::string(name));
        r.exit_code = 2;
    }
    return d;
}

}  // namespace

Report run_check(std::string_view source, std::optional<Flavor> flavor_override) {
    Report r;
    auto l = load(source, flavor_override, r);
    if (!l) return r;
    Checker ck(l->flavor);
    for (const auto& d : l->file.defs) {
        if (check_def(ck, d, r))
            r.lines.push_back(d.loc.str() + ": ok: " + d.name + " : " + print_term(nbe_type(CtxStack::initial(), d.type)));
        else
            r.exit_code = 1;
    }
    return r;
}

Report run_norm(std::string_view source, std::string_view name, std::optional<Flavor> flavor_override) {
    Report r;
    auto l = load(source, flavor_override, r);
    if (!l) return r;
    const Definition* d = require(*l, name, r);
    if (!d) return r;
    Checker ck(l->flavor);
    if (!check_def(ck, *d, r)) {
        r.exit_code = 1;
        return r;
    }
    r.lines.push_back(print_term(nbe(CtxStack::initial(), d->body, d->type)));
    return r;
}

Report run_eq(std::string_view source, std::string_view a, std::string_view b, std::optional<Flavor> flavor_override) {
    Report r;
    auto l = load(source, flavor_override, r);
    if (!l) return r;
    const Definition* da = require(*l, a, r);
    const Definition* db = require(*l, b, r);
    if (!da || !db) return r;
    Checker ck(l->flavor);
    bool ok_a = check_def(ck, *da, r);
    bool ok_b = check_def(ck, *db, r);
    if (!ok_a || !ok_b) {
        r.exit_code = 1;
        return r;
    }
    CtxStack g = CtxStack::initial();
    TermPtr ta = nbe_type(g, da->type), tb = nbe_type(g, db->type);
    if (!equal(ta, tb)) {
        r.lines.push_back(db->loc.str() + ": not-equal: " + std::string(a) + " : " + print_term(ta) + " but " +
                          std::string(b) + " : " + print_term(tb));
        r.exit_code = 1;
        return r;
    }
    TermPtr na = nbe(g, da->body, da->type), nb = nbe(g, db->body, db->type);
    if (equal(na, nb)) {
        r.lines.push_back("-: equal: " + std::string(a) + " = " + std::string(b) + " = " + print_term(na));
    } else {
        r.lines.push_back("-: not-equal: " + std::string(a) + " = " + print_term(na) + " but " + std::string(b) + " = " +
                          print_term(nb));
        r.exit_code = 1;
    }
    return r;
}

namespace {
std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool starts_with_word(std::string_view s, std::string_view w) {
    return s.substr(0, w.size()) == w && (s.size() == w.size() || std::isspace(static_cast<unsigned char>(s[w.size()])));
}
}  // namespace

std::string Repl::handle(std::string_view raw) {
    std::string_view line = trim(raw);
    if (line.empty() || line.substr(0, 2) == "--") return "";
    Checker ck(flavor_);
    CtxStack g = CtxStack::initial();
    NameStack names{{}};
    try {
        if (starts_with_word(line, ":quit") || starts_with_word(line, ":q")) {
            done_ = true;
            return "";
        }
        if (starts_with_word(line, ":flavor")) {
            auto f = parse_flavor(trim(line.substr(7)));
            if (!f) return "-: parse-error: unknown flavor";
            flavor_ = *f;
            return "flavor " + std::string(flavor_name(flavor_));
        }
        if (starts_with_word(line, ":check") || starts_with_word(line, ":norm")) {
            bool norm = line[1] == 'n';
            Parser p(line.substr(norm ? 5 : 6), &defs_);
            TermPtr t = p.term(names);
            p.expect(":");
            TermPtr ty = p.term(names);
            if (!p.at_end()) throw ParseError(p.loc(), "unexpected input after type");
            ck.check_typed(g, t, ty);
            if (norm) return print_term(nbe(g, t, ty));
            return "ok: " + print_term(nbe_type(g, ty));
        }
        if (starts_with_word(line, ":eq")) {
            Parser p(line.substr(3), &defs_);
            TermPtr a = p.atom(names);
            TermPtr b = p.atom(names);
            p.expect(":");
            TermPtr ty = p.term(names);
            if (!p.at_end()) throw ParseError(p.loc(), "unexpected input after type");
            ck.check_typed(g, a, ty);
            ck.check_typed(g, b, ty);
            TermPtr na = nbe(g, a, ty), nb = nbe(g, b, ty);
            if (equal(na, nb)) return "equal: " + print_term(na);
            return "not-equal: " + print_term(na) + " vs " + print_term(nb);
        }
        if (starts_with_word(line, "def")) {
            Parser p(line, &defs_);
            Definition d = *p.definition(defs_);
            if (!p.at_end()) throw ParseError(p.loc(), "unexpected input after definition");
            ck.check_typed(g, d.body, d.type);
            defs_[d.name] = d.body;
            return "defined " + d.name;
        }
        if (line.front() == ':') return "-: parse-error: unknown command " + std::string(line.substr(0, line.find(' ')));
        return "-: parse-error: expected a command or a definition";
    } catch (const Error& e) {
        return format_error(e, SourceLoc{});
    }
}

}  // namespace mint
