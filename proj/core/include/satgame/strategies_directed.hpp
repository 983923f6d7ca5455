#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "satgame/scores.hpp"
#include "satgame/strategy.hpp"

namespace satgame {

// Maximiser for the 3-vertex-walk game: keep the source class and the sink
// class within one vertex of each other.
std::unique_ptr<Strategy> make_prolonger_k3(const GameConfig& cfg, Player side);

// Minimiser for walk games with k >= 4: build a path on k-1 vertices, then
// force every newcomer into the first or the last two classes.
std::unique_ptr<Strategy> make_shortener_path(const GameConfig& cfg, Player side);

// Maximiser for walk games with k >= 4: build the k-1 path, then grow
// disjoint path structures of low normalised score over the leftover
// vertices.
std::unique_ptr<Strategy> make_prolonger_structure(const GameConfig& cfg, Player side);

// One growing structure: a directed path plus the non-path vertices attached
// to it. lambda = path length in arcs; the off-path budget shrinks by one
// per dead extension end.
struct StructureRecord {
    StructureKind kind = StructureKind::A;
    int lambda = 0;
    std::vector<int> path_vertices;
    std::vector<int> off_path_vertices;
    bool closed = false;
};

// Introspection for playout checks.
class PathStrategyView {
public:
    virtual ~PathStrategyView() = default;
    virtual int phase() const = 0;
    virtual const std::vector<int>& main_path() const = 0;
    virtual std::optional<int> floater() const = 0;
    virtual bool phase1_excess_touch() const = 0;
    virtual const std::vector<int>* forced_classes() const { return nullptr; }
};

class StructureStrategyView : public PathStrategyView {
public:
    struct Snapshot {
        int move_index = 0;  // board move count after the actor's turn
        int structure_id = -1;
        StructureKind kind = StructureKind::A;
        int lambda = 0;
        bool fresh_structure = false;  // first snapshot of this structure
        bool had_free = false;         // degree-0 vertices were available
        bool endgame = false;          // fallback move, no structural effect
    };

    virtual const std::vector<StructureRecord>& structures() const = 0;
    virtual const std::vector<Snapshot>& growth_log() const = 0;
    virtual const std::vector<int>& discarded() const = 0;
};

}  // namespace satgame
