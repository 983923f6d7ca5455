#include "satgame/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace satgame {

namespace {

int parse_header(std::istringstream& in) {
    std::string tag;
    int n = -1;
    if (!(in >> tag >> n) || tag != "n" || n < 0)
        throw std::invalid_argument("graph text: expected header \"n <count>\"");
    return n;
}

}  // namespace

std::string to_text(const Digraph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const Arc& a : g.arcs()) out << a.from << " " << a.to << "\n";
    return out.str();
}

std::string to_text(const UGraph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

Digraph digraph_from_text(const std::string& text) {
    std::istringstream in(text);
    Digraph g(parse_header(in));
    int u, v;
    while (in >> u >> v) g = add_arc(g, Arc{u, v});
    return g;
}

UGraph ugraph_from_text(const std::string& text) {
    std::istringstream in(text);
    UGraph g(parse_header(in));
    int u, v;
    while (in >> u >> v) g = add_edge(g, Edge{u, v});
    return g;
}

}  // namespace satgame
