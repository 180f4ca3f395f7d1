#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mint/parse.hpp"
#include "mint/typecheck.hpp"

namespace mint {

struct Report {
    int exit_code = 0;
    std::vector<std::string> lines;

    std::string text() const;
};

/// Type-checks every definition of a file in the initial stack.
Report run_check(std::string_view source, std::optional<Flavor> flavor_override = std::nullopt);
/// Prints the normal form of one definition.
Report run_norm(std::string_view source, std::string_view name, std::optional<Flavor> flavor_override = std::nullopt);
/// Exit 0 when both definitions have the same type and the same normal form.
Report run_eq(std::string_view source, std::string_view a, std::string_view b,
              std::optional<Flavor> flavor_override = std::nullopt);

/// Line-oriented interactive session.
class Repl {
public:
    explicit Repl(Flavor flavor = Flavor::S4) : flavor_(flavor) {}

    /// Output for one input line (possibly empty).
    std::string handle(std::string_view line);
    bool done() const { return done_; }
    Flavor flavor() const { return flavor_; }

private:
    Flavor flavor_;
    DefTable defs_;
    bool done_ = false;
};

/// Renders a kernel error as `LOC: KIND: message`.
std::string format_error(const Error& e, SourceLoc loc, std::string_view what = {});

}  // namespace mint
