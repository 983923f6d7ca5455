#pragma once

#include <string>

#include "satgame/digraph.hpp"
#include "satgame/ugraph.hpp"

namespace satgame {

// Line-oriented text format shared by the CLI and test fixtures:
// first line "n <count>", then one "u v" pair per arc/edge, ascending.
std::string to_text(const Digraph& g);
std::string to_text(const UGraph& g);

Digraph digraph_from_text(const std::string& text);
UGraph ugraph_from_text(const std::string& text);

}  // namespace satgame
