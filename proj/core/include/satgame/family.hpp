#pragma once

#include <variant>
#include <vector>

#include "satgame/digraph.hpp"

namespace satgame {

enum class ContainmentMode { homomorphism, subdigraph };

/**
 * The forbidden family. WalkOnK(k) forbids the directed path on k vertices;
 * under homomorphism containment that is any directed walk visiting k
 * vertices and gets a dedicated fast path. Explicit lists cover small
 * hand-built families.
 */
struct FamilySpec {
    struct WalkOnK {
        int k = 0;
    };
    struct ExplicitDigraphs {
        std::vector<Digraph> members;
    };

    std::variant<WalkOnK, ExplicitDigraphs> family;
    ContainmentMode mode = ContainmentMode::homomorphism;

    static FamilySpec walk_on_k(int k, ContainmentMode mode);
    static FamilySpec explicit_digraphs(std::vector<Digraph> members, ContainmentMode mode);

    bool is_walk() const { return std::holds_alternative<WalkOnK>(family); }
    int walk_k() const { return std::get<WalkOnK>(family).k; }
    const std::vector<Digraph>& members() const {
        return std::get<ExplicitDigraphs>(family).members;
    }
};

}  // namespace satgame
