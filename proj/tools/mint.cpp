#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "mint/driver.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int emit(const mint::Report& r) {
    std::cout << r.text();
    return r.exit_code;
}

int repl(mint::Flavor flavor) {
    mint::Repl session(flavor);
    std::string line;
    bool tty = isatty(0) != 0;
    for (;;) {
        if (tty) std::cout << "mint> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::string out = session.handle(line);
        if (!out.empty()) std::cout << out << "\n";
        if (session.done()) break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mint: check and normalize modal dependent type theory terms"};
    app.require_subcommand(1);

    std::string flavor_text;
    app.add_option("--flavor", flavor_text, "modal flavor: k, t, k4 or s4")->check(CLI::IsMember({"k", "t", "k4", "s4", "K", "T", "K4", "S4"}));

    std::string file, def_name, name_a, name_b;
    auto* check = app.add_subcommand("check", "type-check every definition of a file");
    check->add_option("FILE", file)->required();
    auto* norm = app.add_subcommand("norm", "print the normal form of a definition");
    norm->add_option("FILE", file)->required();
    norm->add_option("--def", def_name, "definition to normalize")->required();
    auto* eq = app.add_subcommand("eq", "compare the normal forms of two definitions");
    eq->add_option("FILE", file)->required();
    eq->add_option("NAME1", name_a)->required();
    eq->add_option("NAME2", name_b)->required();
    auto* rp = app.add_subcommand("repl", "interactive session");
    for (auto* sc : {check, norm, eq, rp})
        sc->add_option("--flavor", flavor_text, "modal flavor: k, t, k4 or s4")
            ->check(CLI::IsMember({"k", "t", "k4", "s4", "K", "T", "K4", "S4"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::optional<mint::Flavor> flavor;
    if (!flavor_text.empty()) flavor = mint::parse_flavor(flavor_text);

    if (rp->parsed()) return repl(flavor.value_or(mint::Flavor::S4));

    std::string source;
    if (!read_file(file, source)) {
        std::cout << file << ": io-error: cannot read file\n";
        return 2;
    }
    if (check->parsed()) return emit(mint::run_check(source, flavor));
    if (norm->parsed()) return emit(mint::run_norm(source, def_name, flavor));
    return emit(mint::run_eq(source, name_a, name_b, flavor));
}
