#pragma once

#include <string>
#include <vector>

#include "mint/syntax.hpp"

namespace mint {

/// Binder names per world, bottom first, innermost binder last.
using NameStack = std::vector<std::vector<std::string>>;

/// Surface rendering. Free variables are named from `names`; missing ones print
/// as `#k`. Sub nodes have no surface form and print in the debug notation.
std::string print_term(const TermPtr& t, const NameStack& names = NameStack{{}});

bool is_keyword(const std::string& word);

}  // namespace mint
