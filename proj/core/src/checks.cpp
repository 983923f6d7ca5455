#include "satgame/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "satgame/coloring.hpp"
#include "satgame/oracle.hpp"
#include "satgame/solver.hpp"
#include "satgame/strategies_directed.hpp"
#include "satgame/strategies_orient.hpp"
#include "satgame/strategy.hpp"
#include "satgame/walk_oracle.hpp"

namespace satgame::checks {

namespace {

UGraph random_ugraph(int n, int max_edges, std::mt19937_64& rng) {
    UGraph g(n);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    const int count = static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges + 1));
    for (int i = 0; i < count && i < static_cast<int>(all.size()); ++i)
        g.insert_edge(all[i].u, all[i].v);
    return g;
}

}  // namespace

bool terminal_board_layered(const Digraph& g, int k, std::string* why) {
    const auto set_why = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const LongestPathOrder lp = longest_path_order(g);
    if (lp.has_cycle) return set_why("terminal board has a directed cycle");
    if (lp.vertices > k - 1) return set_why("terminal board hosts a forbidden walk");

    const VertexClassAssignment classes = vertex_classes(g, k);
    if (g.order() >= k)
        for (int i = 0; i < k - 1; ++i)
            if (classes.sizes[static_cast<std::size_t>(i)] == 0)
                return set_why("class " + std::to_string(i + 1) + " is empty");

    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            const int cu = classes.class_of[u], cv = classes.class_of[v];
            if (cu < cv && !g.has_arc(u, v))
                return set_why("missing cross-class arc " + std::to_string(u) + "->" +
                               std::to_string(v));
            if (cu == cv && g.has_arc(u, v))
                return set_why("arc inside a class");
        }

    if (g.arc_count() != saturated_edge_count(classes.sizes, g.order()))
        return set_why("edge count disagrees with the class-size formula");
    return true;
}

CheckCounts terminal_structure_playouts(int playouts, int max_n, std::uint64_t seed) {
    const std::vector<std::string> prolongers{"prolonger-structure", "random", "greedy"};
    const std::vector<std::string> shorteners{"shortener-path", "random", "greedy"};
    CheckCounts out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < playouts; ++i) {
        const int k = 4 + static_cast<int>(rng() % 2);
        const int n = k + 1 + static_cast<int>(rng() % std::max(1, max_n - k));
        const auto& pn = prolongers[i % prolongers.size()];
        const auto& sn = shorteners[(i / 3) % shorteners.size()];
        const GameConfig cfg = directed_config(std::min(n, max_n), k);
        const Transcript t = playout_named(cfg, pn, sn, rng());
        std::string why;
        const bool good = terminal_board_layered(replay(t).digraph(), k, &why);
        out.tally(good, "playout " + std::to_string(i) + " (" + pn + " vs " + sn +
                            "): " + why);
    }
    return out;
}

CheckCounts ghrv_exhaustive_small() {
    CheckCounts out;
    for (int n = 1; n <= 4; ++n) {
        const int slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            UGraph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if ((mask >> bit) & 1) g.insert_edge(u, v);
                    ++bit;
                }
            bool good = true;
            for (int k = 1; k <= 4 && good; ++k)
                good = orientation_free_bruteforce(g, k) == chromatic_at_most(g, k);
            out.tally(good, "disagreement on n=" + std::to_string(n) +
                                " mask=" + std::to_string(mask));
        }
    }
    return out;
}

CheckCounts ghrv_random(int samples, std::uint64_t seed) {
    CheckCounts out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const UGraph g = random_ugraph(n, std::min(12, n * (n - 1) / 2), rng);
        bool good = true;
        for (int k = 2; k <= 4 && good; ++k)
            good = orientation_free_bruteforce(g, k) == chromatic_at_most(g, k);
        out.tally(good, "disagreement on sample " + std::to_string(i));
    }
    return out;
}

CheckCounts solver_oracle_sweep() {
    CheckCounts out;
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 4; ++k) {
            const GameConfig cfg = directed_config(n, k);
            const bool good = solve(cfg).score == solve_plain(cfg).score;
            out.tally(good, "directed n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 3; ++k) {
            const GameConfig cfg = orientation_config(n, k);
            const bool good = solve(cfg).score == solve_plain(cfg).score;
            out.tally(good,
                      "orientation n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    return out;
}

CheckCounts first_mover_independence(int max_n, const std::vector<int>& ks) {
    CheckCounts out;
    for (int n = 2; n <= max_n; ++n)
        for (int k : ks) {
            const auto p = solve(directed_config(n, k, 1, 1, Player::prolonger));
            const auto s = solve(directed_config(n, k, 1, 1, Player::shortener));
            out.tally(p.score == s.score,
                      "first-mover mismatch at n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
        }
    return out;
}

CheckCounts theorem1_k3(int max_n) {
    CheckCounts out;
    for (int n = 2; n <= max_n; ++n) {
        const long long expected = static_cast<long long>(n) * n / 4;
        const auto res = solve(directed_config(n, 3));
        out.tally(res.score == expected,
                  "k=3 value at n=" + std::to_string(n) + ": got " +
                      std::to_string(res.score) + ", expected " + std::to_string(expected));
    }
    return out;
}

RedBlueRun redblue_checkpoint_run(int n, int k, int a, int b, std::uint64_t seed) {
    const GameConfig cfg = orientation_config(n, k, a, b);
    auto p = make_strategy("orient-prolonger-rb", cfg, Player::prolonger, seed);
    auto s = make_strategy("orient-shortener-rb", cfg, Player::shortener, seed + 1);
    const auto* pv = dynamic_cast<const RedBlueView*>(p.get());
    const auto* sv = dynamic_cast<const RedBlueView*>(s.get());

    RedBlueRun run;
    const std::vector<int>& groups = pv->groups();
    const std::vector<int>& pivot = sv->groups();
    const int c = pv->ratio();
    const int cp = sv->ratio();

    const auto pivot_complete = [&](const UGraph& g) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (pivot[u] == 1 && pivot[v] == 1 && !g.has_edge(u, v)) return false;
        return true;
    };

    const auto check_prolonger_block = [&](const UGraph& g) {
        for (int v = 0; v < n; ++v) {
            long long red = 0, blue = 0;
            int missing_red = 0;
            for (int w = 0; w < n; ++w) {
                if (w == v) continue;
                const bool same = groups[v] == groups[w];
                if (g.has_edge(v, w)) {
                    (same ? red : blue) += 1;
                } else if (same) {
                    ++missing_red;
                }
            }
            if (missing_red > 0 && red < static_cast<long long>(c) * blue) return false;
        }
        return true;
    };

    const auto check_shortener_block = [&](const UGraph& g) {
        if (!pivot_complete(g)) return true;  // invariant applies after the clique phase
        for (int v = 0; v < n; ++v) {
            if (pivot[v] == 1) continue;
            long long red = 0, blue = 0;
            for (int w = 0; w < n; ++w) {
                if (w == v || !g.has_edge(v, w)) continue;
                (pivot[w] == 1 ? red : blue) += 1;
            }
            if (blue < static_cast<long long>(cp) * red) return false;
        }
        return true;
    };

    GameState state = GameState::initial(cfg);
    while (true) {
        const Player side = state.current_player();
        Strategy& actor = side == Player::prolonger ? *p : *s;
        auto mv = actor.choose(state);
        if (!mv) break;
        GameState next = state.after(*mv);
        p->observe(state, *mv, side);
        s->observe(state, *mv, side);
        state = std::move(next);

        const int pos = state.schedule_pos();
        const bool p_block_end = pos == a % (a + b) && side == Player::prolonger;
        const bool s_block_end = pos == 0 && side == Player::shortener;
        if (p_block_end)
            run.counts.tally(check_prolonger_block(state.ugraph()),
                             "maximiser invariant broke at move " +
                                 std::to_string(state.moves_made()));
        if (s_block_end)
            run.counts.tally(check_shortener_block(state.ugraph()),
                             "minimiser invariant broke at move " +
                                 std::to_string(state.moves_made()));
    }

    // terminal block (possibly partial) and terminal structure
    run.counts.tally(check_prolonger_block(state.ugraph()),
                     "maximiser invariant broke at the terminal board");
    run.counts.tally(check_shortener_block(state.ugraph()),
                     "minimiser invariant broke at the terminal board");

    run.score = state.moves_made();
    const int group_count = 1 + *std::max_element(groups.begin(), groups.end());
    run.group_count = group_count;
    run.min_group_size = n;
    run.clique_family_complete = true;
    for (int grp = 0; grp < group_count; ++grp) {
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (groups[v] == grp) ++size;
        run.min_group_size = std::min(run.min_group_size, size);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (groups[u] == grp && groups[v] == grp && !state.ugraph().has_edge(u, v))
                    run.clique_family_complete = false;
    }
    run.interference = pv->interference();
    run.interference.insert(run.interference.end(), sv->interference().begin(),
                            sv->interference().end());
    return run;
}

CheckCounts structure_strategy_playouts(int playouts, int n, const std::vector<int>& ks,
                                        std::uint64_t seed) {
    const std::vector<std::string> opponents{"shortener-path", "random", "greedy"};
    CheckCounts out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < playouts; ++i) {
        const int k = ks[static_cast<std::size_t>(i) % ks.size()];
        const auto& opp = opponents[static_cast<std::size_t>(i / 2) % opponents.size()];
        const GameConfig cfg = directed_config(n, k);
        auto p = make_strategy("prolonger-structure", cfg, Player::prolonger, rng());
        auto s = make_strategy(opp, cfg, Player::shortener, rng());
        const Transcript t = playout(cfg, *p, *s);
        const auto* view = dynamic_cast<const StructureStrategyView*>(p.get());
        const Digraph terminal = replay(t).digraph();

        std::string why;
        bool good = true;
        if (view->phase() != 2) {
            good = false;
            why = "main path never completed";
        } else if (view->phase1_excess_touch()) {
            good = false;
            why = "more than one touched vertex beside the main path";
        } else if (static_cast<int>(view->main_path().size()) != k - 1) {
            good = false;
            why = "main path has the wrong length";
        }

        if (good) {
            const auto& path = view->main_path();
            for (std::size_t j = 0; j + 1 < path.size(); ++j)
                if (!terminal.has_arc(path[j], path[j + 1])) {
                    good = false;
                    why = "main path is not a directed path on the board";
                }
        }

        if (good) {
            // growth discipline: within one structure, lambda strictly rises
            // and the kind never relaxes while free vertices remain
            const auto& log = view->growth_log();
            for (std::size_t j = 1; j < log.size() && good; ++j) {
                const auto& prev = log[j - 1];
                const auto& cur = log[j];
                if (cur.structure_id < 0 || prev.structure_id != cur.structure_id)
                    continue;
                if (cur.endgame || prev.endgame || cur.fresh_structure) continue;
                if (static_cast<int>(cur.kind) < static_cast<int>(prev.kind)) {
                    good = false;
                    why = "structure kind relaxed";
                }
                if (cur.lambda <= prev.lambda && cur.had_free) {
                    good = false;
                    why = "structure failed to grow with free vertices available";
                }
            }
        }

        if (good) {
            for (const StructureRecord& r : view->structures()) {
                for (std::size_t j = 0; j + 1 < r.path_vertices.size(); ++j)
                    if (!terminal.has_arc(r.path_vertices[j], r.path_vertices[j + 1])) {
                        good = false;
                        why = "structure path is not a directed path";
                    }
                const int blocked = r.kind == StructureKind::A ? 0
                                    : r.kind == StructureKind::B ? 1
                                                                 : 2;
                if (static_cast<int>(r.off_path_vertices.size()) >
                    std::max(0, r.lambda - blocked)) {
                    good = false;
                    why = "off-path budget exceeded";
                }
            }
        }

        out.tally(good, "playout " + std::to_string(i) + " vs " + opp + " (k=" +
                            std::to_string(k) + "): " + why);
    }
    return out;
}

CheckCounts path_strategy_playouts(int playouts, int n, const std::vector<int>& ks,
                                   std::uint64_t seed) {
    const std::vector<std::string> opponents{"prolonger-structure", "random", "greedy"};
    CheckCounts out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < playouts; ++i) {
        const int k = ks[static_cast<std::size_t>(i) % ks.size()];
        const auto& opp = opponents[static_cast<std::size_t>(i / 2) % opponents.size()];
        const GameConfig cfg = directed_config(n, k);
        auto p = make_strategy(opp, cfg, Player::prolonger, rng());
        auto s = make_strategy("shortener-path", cfg, Player::shortener, rng());
        const auto* view = dynamic_cast<const PathStrategyView*>(s.get());

        bool good = true;
        std::string why;
        GameState state = GameState::initial(cfg);
        while (good) {
            const Player side = state.current_player();
            Strategy& actor = side == Player::prolonger ? *p : *s;
            auto mv = actor.choose(state);
            if (!mv) break;
            GameState next = state.after(*mv);
            p->observe(state, *mv, side);
            s->observe(state, *mv, side);
            state = std::move(next);

            if (side != Player::shortener || view->phase() != 2) continue;

            // every component vertex except one floater has a pinned class,
            // and the floater sits in one of the top two classes
            const Digraph& g = state.digraph();
            const auto& forced = *view->forced_classes();
            const WalkCaches caches = compute_walk_caches(g);
            int unforced = 0;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) == 0 || forced[static_cast<std::size_t>(v)] != 0) continue;
                ++unforced;
                if (caches.ending[v] != k - 2 && caches.ending[v] != k - 1) {
                    good = false;
                    why = "unpinned vertex " + std::to_string(v) + " outside the top classes";
                }
            }
            if (unforced > 1) {
                good = false;
                why = "more than one unpinned component vertex";
            }
        }

        if (good && view->phase() == 2 && view->phase1_excess_touch()) {
            good = false;
            why = "path construction touched two extra vertices";
        }

        out.tally(good, "playout " + std::to_string(i) + " vs " + opp + " (k=" +
                            std::to_string(k) + "): " + why);
    }
    return out;
}

}  // namespace satgame::checks
