#pragma once

#include <memory>
#include <string>
#include <vector>

#include "satgame/strategy.hpp"

namespace satgame {

// Maximiser for the orientation game. Splits the vertices into target-clique
// sets; edges inside a set are Red, the rest Blue. Answers each endpoint of
// an opponent Blue edge with up to c = floor(a/2b) Red edges, then plays
// spare Red edges, then Blue edges that keep the Red/Blue ratio intact.
std::unique_ptr<Strategy> make_orient_prolonger_rb(const GameConfig& cfg, Player side,
                                                   const StrategyOptions& opts);

// Minimiser for the orientation game. Builds a clique on a pivot set S,
// treats edges touching S as Red, and answers opponent Red edges with
// c' = floor(b/2a) Blue edges at the outside endpoint; spare turns play Blue.
std::unique_ptr<Strategy> make_orient_shortener_rb(const GameConfig& cfg, Player side,
                                                   const StrategyOptions& opts);

// Red/Blue bookkeeping exposed for invariant checks. Tests recompute degree
// splits from the board; the view supplies the vertex grouping and the
// events where the strategy could not restore its invariant.
class RedBlueView {
public:
    virtual ~RedBlueView() = default;
    virtual Player role() const = 0;
    virtual int ratio() const = 0;
    virtual bool degenerate() const = 0;
    // maximiser: target-set id per vertex; minimiser: 1 iff in the pivot set
    virtual const std::vector<int>& groups() const = 0;
    virtual const std::vector<std::string>& interference() const = 0;
};

}  // namespace satgame
