#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satgame/digraph.hpp"
#include "satgame/game.hpp"

namespace satgame::checks {

/**
 * Verification suites shared by the CLI verify command and the acceptance
 * harness. All checks recompute their quantities from the raw boards rather
 * than trusting strategy bookkeeping.
 */
struct CheckCounts {
    int passed = 0;
    int total = 0;
    std::vector<std::string> notes;

    bool ok() const { return passed == total; }
    void tally(bool good, const std::string& why_not) {
        ++total;
        if (good)
            ++passed;
        else
            notes.push_back(why_not);
    }
    void merge(const CheckCounts& o) {
        passed += o.passed;
        total += o.total;
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

// A terminal walk-game board must be acyclic, decompose into k-1 fully
// populated classes (when n >= k), carry every cross-class arc, and hit the
// class-size edge-count formula.
bool terminal_board_layered(const Digraph& g, int k, std::string* why);

// Seeded playouts with mixed strategies; every terminal board must pass
// terminal_board_layered.
CheckCounts terminal_structure_playouts(int playouts, int max_n, std::uint64_t seed);

// Orientation-freeness by 2^e enumeration vs exact colourability.
CheckCounts ghrv_exhaustive_small();
CheckCounts ghrv_random(int samples, std::uint64_t seed);

// Memoised+pruned solver vs plain exhaustive recursion, full small sweep.
CheckCounts solver_oracle_sweep();

// Both first movers give the same value on 1:1 games.
CheckCounts first_mover_independence(int max_n, const std::vector<int>& ks);

// Exact k = 3 values: floor(n^2/4).
CheckCounts theorem1_k3(int max_n);

// One Red/Blue orientation playout with per-block invariant checkpoints.
struct RedBlueRun {
    CheckCounts counts;
    long long score = 0;
    bool clique_family_complete = false;
    int group_count = 0;
    int min_group_size = 0;
    std::vector<std::string> interference;
};

RedBlueRun redblue_checkpoint_run(int n, int k, int a, int b, std::uint64_t seed);

// Structure-strategy playouts: phase-1 invariant plus growth-log discipline.
CheckCounts structure_strategy_playouts(int playouts, int n, const std::vector<int>& ks,
                                        std::uint64_t seed);

// Path-strategy (minimiser) playouts: phase-1 invariant plus the forced-class
// ledger staying one floater away from complete.
CheckCounts path_strategy_playouts(int playouts, int n, const std::vector<int>& ks,
                                   std::uint64_t seed);

}  // namespace satgame::checks
