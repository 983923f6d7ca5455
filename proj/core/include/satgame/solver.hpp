#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satgame/game.hpp"
#include "satgame/strategy.hpp"

namespace satgame {

struct SolveResult {
    long long score = 0;
    std::vector<Move> principal_variation;
    std::uint64_t nodes_explored = 0;
};

struct SolveLimits {
    // Hard budgets; exceeding them raises budget_error rather than degrading.
    int directed_max_n_canonical = 6;
    int directed_max_n_raw = 5;
    int orientation_max_n = 5;
    bool use_canonicalization = true;
    bool enforce_budget = true;
    int root_threads = 1;
};

// Exact game value under optimal play: the maximiser picks the final edge
// count up, the minimiser down. Memoised on (board key, schedule position)
// with alpha-beta over the terminal-count range.
SolveResult solve(const GameConfig& cfg, const SolveLimits& lim = {});

// Independent oracle: plain exhaustive recursion, no memo, no pruning, no
// bound reasoning. Small boards only.
SolveResult solve_plain(const GameConfig& cfg);

struct BestResponseLimits {
    int max_n = 12;
    bool enforce_budget = true;
};

// Exact optimum for the free side against a fixed published strategy; the
// fixed side's moves are forced, so only the free side branches. Memoised on
// (board, schedule position, fixed strategy memory).
SolveResult best_response_score(const GameConfig& cfg, const std::string& fixed_strategy,
                                Player fixed_side, const BestResponseLimits& lim = {});

}  // namespace satgame
