#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "satgame/errors.hpp"
#include "satgame/game.hpp"

namespace satgame {

/**
 * Deterministic move selector with per-game memory. An instance is confined
 * to one playout. observe() is called for every applied move, both sides',
 * so stateful strategies track the position as it evolves.
 */
class Strategy {
public:
    virtual ~Strategy() = default;

    // The move to play, or nullopt when the strategy sees no legal move.
    virtual std::optional<Move> choose(const GameState& s) = 0;

    virtual void observe(const GameState& before, Move m, Player who) {
        (void)before;
        (void)m;
        (void)who;
    }

    virtual std::unique_ptr<Strategy> clone() const = 0;

    // Serialized memory for search transposition keys; empty = stateless.
    virtual std::string memory_key() const { return {}; }

    // True when the strategy's behaviour depends on untouched (degree-0)
    // vertices only through their count, never their indices beyond
    // lowest-first representatives. Lets searches against a fixed strategy
    // branch on one representative per interchangeable move.
    virtual bool untouched_symmetric() const { return true; }
};

struct StrategyOptions {
    std::optional<int> rb_set_size;    // maximiser's target-clique set size
    std::optional<int> rb_pivot_size;  // minimiser's pivot-set size
};

// Stable identifiers: shortener-path, prolonger-structure, prolonger-k3,
// orient-prolonger-rb, orient-shortener-rb, random, greedy.
std::unique_ptr<Strategy> make_strategy(const std::string& name, const GameConfig& cfg,
                                        Player side, std::uint64_t seed,
                                        const StrategyOptions& opts = {});

std::vector<std::string> strategy_names();

// A strategy produced an illegal move or claimed a dead position while legal
// moves remain; carries the partial game for diagnosis.
class playout_abort : public strategy_error {
public:
    playout_abort(const std::string& what, Transcript partial)
        : strategy_error(what), partial_transcript(std::move(partial)) {}

    Transcript partial_transcript;
};

// Runs cfg to termination. Deterministic given the strategies' seeds.
Transcript playout(const GameConfig& cfg, Strategy& prolonger, Strategy& shortener);

Transcript playout_named(const GameConfig& cfg, const std::string& prolonger_name,
                         const std::string& shortener_name, std::uint64_t seed,
                         const StrategyOptions& opts = {});

}  // namespace satgame
