#include "satgame/solver.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <unordered_map>

#include "satgame/canonical.hpp"
#include "satgame/coloring.hpp"
#include "satgame/errors.hpp"
#include "satgame/oracle.hpp"
#include "satgame/walk_oracle.hpp"

namespace satgame {

namespace {

constexpr int int_min = std::numeric_limits<int>::min() / 4;
constexpr int int_max = std::numeric_limits<int>::max() / 4;

Player player_at(const GameConfig& cfg, int pos) {
    if (cfg.first_mover == Player::prolonger)
        return pos < cfg.bias_prolonger ? Player::prolonger : Player::shortener;
    return pos < cfg.bias_shortener ? Player::shortener : Player::prolonger;
}

// Row-major packed adjacency, usable as an exact key for n <= 8.
std::uint64_t raw_bits(const Digraph& g) {
    std::uint64_t bits = 0;
    for (int u = 0; u < g.order(); ++u) bits |= g.out_neighbours(u) << (8 * u);
    return bits;
}

std::uint64_t raw_bits(const UGraph& g) {
    std::uint64_t bits = 0;
    for (const Edge& e : g.edges())
        bits |= (std::uint64_t{1} << (8 * e.u + e.v)) | (std::uint64_t{1} << (8 * e.v + e.u));
    return bits;
}

Digraph to_symmetric_digraph(const UGraph& g) {
    Digraph d(g.order());
    for (const Edge& e : g.edges()) {
        d.insert_arc(e.u, e.v);
        d.insert_arc(e.v, e.u);
    }
    return d;
}

enum class Flag : std::uint8_t { exact, lower, upper };

struct Entry {
    int value = 0;
    Flag flag = Flag::exact;
    Move best{-1, -1};
};

// Admissible window on the final edge count of a walk game, derived from the
// current vertex classes. Classes only rise, so terminal class counts f are
// prefix-dominated by the current counts; the score (n^2 - sum f_i^2)/2 is
// bracketed by extremising sum f_i^2 under that constraint.
struct ClassBounds {
    int upper;
    int lower;
};

ClassBounds class_bounds(const Digraph& g, const WalkCaches& caches, int k) {
    const int n = g.order();
    const int classes = k - 1;
    std::vector<int> count(static_cast<std::size_t>(classes) + 1, 0);
    for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(caches.ending[v])];
    std::vector<int> prefix(static_cast<std::size_t>(classes) + 1, 0);
    for (int i = 1; i <= classes; ++i) prefix[i] = prefix[i - 1] + count[i];

    // min sum of squares: DP over classes, s vertices placed so far
    std::vector<int> dp(static_cast<std::size_t>(n) + 1, int_max);
    dp[0] = 0;
    for (int i = 1; i <= classes; ++i) {
        std::vector<int> next(static_cast<std::size_t>(n) + 1, int_max);
        const int cap = prefix[i];
        for (int s = 0; s <= cap; ++s) {
            if (dp[s] == int_max) continue;
            for (int f = 0; s + f <= (i == classes ? n : prefix[i]); ++f) {
                const int t = s + f;
                if (i < classes && t > prefix[i]) break;
                next[t] = std::min(next[t], dp[s] + f * f);
            }
        }
        dp = std::move(next);
    }
    const int min_sq = dp[static_cast<std::size_t>(n)];

    ClassBounds out{};
    out.upper = (n * n - min_sq) / 2;
    if (n >= k) {
        const int spread = n - k + 2;
        out.lower = (n * n - spread * spread - (k - 2)) / 2;
    } else {
        out.lower = 0;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Directed walk-game solver.

class DirectedSolver {
public:
    DirectedSolver(const GameConfig& cfg, bool canonical)
        : cfg_(cfg), k_(cfg.family.walk_k()), canonical_(canonical),
          memo_(static_cast<std::size_t>(cfg.block_length())) {}

    std::uint64_t nodes() const { return nodes_; }

    std::uint64_t key_of(const Digraph& g) const {
        return canonical_ ? canonical_key(g).bits : raw_bits(g);
    }

    int search(const Digraph& g, int pos, int alpha, int beta) {
        ++nodes_;
        WalkCaches caches = compute_walk_caches(g);
        std::vector<Arc> moves;
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                if (u != v && arc_keeps_walk_free(g, caches, k_, u, v))
                    moves.push_back({u, v});
        if (moves.empty()) return g.arc_count();

        const ClassBounds cb = class_bounds(g, caches, k_);
        const int lower_here = std::max(cb.lower, g.arc_count() + 1);
        if (cb.upper <= alpha) return cb.upper;
        if (lower_here >= beta) return lower_here;

        const std::uint64_t key = key_of(g);
        auto& table = memo_[static_cast<std::size_t>(pos)];
        Move remembered{-1, -1};
        if (auto it = table.find(key); it != table.end()) {
            const Entry& e = it->second;
            if (e.flag == Flag::exact) return e.value;
            if (e.flag == Flag::lower) {
                if (e.value >= beta) return e.value;
                alpha = std::max(alpha, e.value);
            } else {
                if (e.value <= alpha) return e.value;
                beta = std::min(beta, e.value);
            }
            remembered = e.best;
        }

        if (remembered.u >= 0) {
            const Arc pref{remembered.u, remembered.v};
            auto it = std::find(moves.begin(), moves.end(), pref);
            if (it != moves.end()) std::rotate(moves.begin(), it, it + 1);
        }

        const bool maximising = player_at(cfg_, pos) == Player::prolonger;
        const int alpha0 = alpha, beta0 = beta;
        int best = maximising ? int_min : int_max;
        Move best_move{-1, -1};
        for (const Arc& a : moves) {
            const int v =
                search(g.with_arc(a), (pos + 1) % cfg_.block_length(), alpha, beta);
            if (maximising) {
                if (v > best) {
                    best = v;
                    best_move = {a.from, a.to};
                }
                alpha = std::max(alpha, best);
            } else {
                if (v < best) {
                    best = v;
                    best_move = {a.from, a.to};
                }
                beta = std::min(beta, best);
            }
            if (alpha >= beta) break;
        }

        Entry e;
        e.value = best;
        e.best = best_move;
        e.flag = best <= alpha0 ? Flag::upper : best >= beta0 ? Flag::lower : Flag::exact;
        table[key] = e;
        return best;
    }

    std::vector<Move> principal_variation(Digraph g, int pos) {
        std::vector<Move> pv;
        while (true) {
            WalkCaches caches = compute_walk_caches(g);
            bool any = false;
            for (int u = 0; u < g.order() && !any; ++u)
                for (int v = 0; v < g.order() && !any; ++v)
                    if (u != v && arc_keeps_walk_free(g, caches, k_, u, v)) any = true;
            if (!any) break;
            auto& table = memo_[static_cast<std::size_t>(pos)];
            auto it = table.find(key_of(g));
            if (it == table.end() || it->second.flag != Flag::exact ||
                it->second.best.u < 0) {
                search(g, pos, int_min, int_max);
                it = table.find(key_of(g));
                if (it == table.end() || it->second.best.u < 0) break;
            }
            const Move m = it->second.best;
            pv.push_back(m);
            g = g.with_arc({m.u, m.v});
            pos = (pos + 1) % cfg_.block_length();
        }
        return pv;
    }

private:
    GameConfig cfg_;
    int k_;
    bool canonical_;
    std::vector<std::unordered_map<std::uint64_t, Entry>> memo_;
    std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Orientation solver (small boards; legality is exact colourability).

class OrientationSolver {
public:
    OrientationSolver(const GameConfig& cfg, bool canonical)
        : cfg_(cfg), canonical_(canonical),
          memo_(static_cast<std::size_t>(cfg.block_length())) {}

    std::uint64_t nodes() const { return nodes_; }

    std::uint64_t key_of(const UGraph& g) const {
        return canonical_ ? canonical_key(to_symmetric_digraph(g)).bits : raw_bits(g);
    }

    std::vector<Edge> legal_edges(const UGraph& g) const {
        std::vector<Edge> out;
        for (const Edge& e : missing_edges(g))
            if (chromatic_at_most(g.with_edge(e), cfg_.k)) out.push_back(e);
        return out;
    }

    int search(const UGraph& g, int pos, int alpha, int beta) {
        ++nodes_;
        const std::vector<Edge> moves = legal_edges(g);
        if (moves.empty()) return g.edge_count();

        const std::uint64_t key = key_of(g);
        auto& table = memo_[static_cast<std::size_t>(pos)];
        if (auto it = table.find(key); it != table.end()) {
            const Entry& e = it->second;
            if (e.flag == Flag::exact) return e.value;
            if (e.flag == Flag::lower) {
                if (e.value >= beta) return e.value;
                alpha = std::max(alpha, e.value);
            } else {
                if (e.value <= alpha) return e.value;
                beta = std::min(beta, e.value);
            }
        }

        const bool maximising = player_at(cfg_, pos) == Player::prolonger;
        const int alpha0 = alpha, beta0 = beta;
        int best = maximising ? int_min : int_max;
        Move best_move{-1, -1};
        for (const Edge& e : moves) {
            const int v =
                search(g.with_edge(e), (pos + 1) % cfg_.block_length(), alpha, beta);
            if (maximising) {
                if (v > best) {
                    best = v;
                    best_move = {e.u, e.v};
                }
                alpha = std::max(alpha, best);
            } else {
                if (v < best) {
                    best = v;
                    best_move = {e.u, e.v};
                }
                beta = std::min(beta, best);
            }
            if (alpha >= beta) break;
        }

        Entry en;
        en.value = best;
        en.best = best_move;
        en.flag = best <= alpha0 ? Flag::upper : best >= beta0 ? Flag::lower : Flag::exact;
        table[key] = en;
        return best;
    }

    std::vector<Move> principal_variation(UGraph g, int pos) {
        std::vector<Move> pv;
        while (!legal_edges(g).empty()) {
            auto& table = memo_[static_cast<std::size_t>(pos)];
            auto it = table.find(key_of(g));
            if (it == table.end() || it->second.flag != Flag::exact ||
                it->second.best.u < 0) {
                search(g, pos, int_min, int_max);
                it = table.find(key_of(g));
                if (it == table.end() || it->second.best.u < 0) break;
            }
            const Move m = it->second.best;
            pv.push_back(m);
            g = g.with_edge({m.u, m.v});
            pos = (pos + 1) % cfg_.block_length();
        }
        return pv;
    }

private:
    GameConfig cfg_;
    bool canonical_;
    std::vector<std::unordered_map<std::uint64_t, Entry>> memo_;
    std::uint64_t nodes_ = 0;
};

void check_budget(const GameConfig& cfg, const SolveLimits& lim) {
    if (!lim.enforce_budget) return;
    if (cfg.kind == GameKind::directed_hom) {
        const int cap = lim.use_canonicalization && cfg.n <= canonical_max_order
                            ? lim.directed_max_n_canonical
                            : lim.directed_max_n_raw;
        if (cfg.n > cap)
            throw budget_error("solve: directed board size " + std::to_string(cfg.n) +
                               " above budget " + std::to_string(cap));
    } else if (cfg.n > lim.orientation_max_n) {
        throw budget_error("solve: orientation board size " + std::to_string(cfg.n) +
                           " above budget " + std::to_string(lim.orientation_max_n));
    }
}

int start_pos(const GameConfig&) { return 0; }

}  // namespace

SolveResult solve(const GameConfig& cfg, const SolveLimits& lim) {
    check_budget(cfg, lim);
    const bool canonical = lim.use_canonicalization && cfg.n <= canonical_max_order;
    SolveResult out;

    if (cfg.kind == GameKind::directed_hom) {
        if (!cfg.family.is_walk())
            throw std::invalid_argument("solve: explicit families are not solver-supported");
        const Digraph g0(cfg.n);
        if (lim.root_threads > 1) {
            // split over first moves; each worker owns its memo
            const auto first = legal_walk_arcs(g0, cfg.family.walk_k());
            std::vector<std::future<std::pair<int, std::uint64_t>>> jobs;
            for (const Arc& a : first)
                jobs.push_back(std::async(std::launch::async, [&, a] {
                    DirectedSolver worker(cfg, canonical);
                    const int v = worker.search(g0.with_arc(a), 1 % cfg.block_length(),
                                                int_min, int_max);
                    return std::make_pair(v, worker.nodes());
                }));
            const bool maximising = player_at(cfg, 0) == Player::prolonger;
            int best = first.empty() ? 0 : (maximising ? int_min : int_max);
            for (auto& j : jobs) {
                auto [v, n] = j.get();
                out.nodes_explored += n;
                best = maximising ? std::max(best, v) : std::min(best, v);
            }
            out.score = first.empty() ? 0 : best;
            DirectedSolver pvs(cfg, canonical);
            pvs.search(g0, start_pos(cfg), int_min, int_max);
            out.principal_variation = pvs.principal_variation(g0, start_pos(cfg));
            out.nodes_explored += pvs.nodes();
            return out;
        }
        DirectedSolver solver(cfg, canonical);
        out.score = solver.search(g0, start_pos(cfg), int_min, int_max);
        out.principal_variation = solver.principal_variation(g0, start_pos(cfg));
        out.nodes_explored = solver.nodes();
        return out;
    }

    OrientationSolver solver(cfg, canonical);
    const UGraph g0(cfg.n);
    out.score = solver.search(g0, start_pos(cfg), int_min, int_max);
    out.principal_variation = solver.principal_variation(g0, start_pos(cfg));
    out.nodes_explored = solver.nodes();
    return out;
}

namespace {

// Plain exhaustive recursion, the correctness oracle for the memoised path.
struct PlainRecursion {
    std::uint64_t nodes = 0;

    int run(const GameState& s) {
        ++nodes;
        const std::vector<Move> moves = s.legal_moves();
        if (moves.empty()) return s.moves_made();
        const bool maximising = s.current_player() == Player::prolonger;
        int best = maximising ? int_min : int_max;
        for (const Move& m : moves) {
            const int v = run(s.after(m));
            best = maximising ? std::max(best, v) : std::min(best, v);
        }
        return best;
    }
};

}  // namespace

SolveResult solve_plain(const GameConfig& cfg) {
    if (cfg.n > 5)
        throw budget_error("solve_plain: boards above n = 5 are not oracle material");
    PlainRecursion rec;
    SolveResult out;
    out.score = rec.run(GameState::initial(cfg));
    out.nodes_explored = rec.nodes;
    return out;
}

// ---------------------------------------------------------------------------
// Best response against a fixed strategy.

namespace {

struct BestResponseSearch {
    Player fixed_side;
    std::uint64_t nodes = 0;
    std::unordered_map<std::string, Entry> memo;

    std::string key_of(const GameState& s, const Strategy& fixed) const {
        std::string key;
        if (s.config().kind == GameKind::directed_hom) {
            const Digraph& g = s.digraph();
            for (int u = 0; u < g.order(); ++u) {
                const std::uint64_t row = g.out_neighbours(u);
                key.append(reinterpret_cast<const char*>(&row), sizeof(row));
            }
        } else {
            const UGraph& g = s.ugraph();
            for (int u = 0; u < g.order(); ++u)
                for (std::uint64_t w : g.neighbours(u).words())
                    key.append(reinterpret_cast<const char*>(&w), sizeof(w));
        }
        key.push_back(static_cast<char>('0' + s.schedule_pos()));
        key += fixed.memory_key();
        return key;
    }

    int run(const GameState& s, Strategy& fixed, int alpha, int beta) {
        ++nodes;
        if (s.current_player() == fixed_side) {
            auto mv = fixed.choose(s);
            if (!mv) {
                if (!s.is_terminal())
                    throw strategy_error("fixed strategy passed in a live position");
                return s.moves_made();
            }
            GameState next = [&] {
                try {
                    return s.after(*mv);
                } catch (const illegal_move_error& e) {
                    throw strategy_error(std::string("fixed strategy illegal move: ") +
                                         e.what());
                }
            }();
            fixed.observe(s, *mv, fixed_side);
            return run(next, fixed, alpha, beta);
        }

        std::vector<Move> moves = s.legal_moves();
        if (moves.empty()) return s.moves_made();

        // Untouched vertices are interchangeable: against an index-oblivious
        // fixed strategy, one representative per move class suffices.
        if (fixed.untouched_symmetric() && s.config().kind == GameKind::directed_hom) {
            const Digraph& g = s.digraph();
            int iso1 = -1, iso2 = -1;
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) != 0) continue;
                if (iso1 < 0)
                    iso1 = v;
                else if (iso2 < 0) {
                    iso2 = v;
                    break;
                }
            }
            std::vector<Move> kept;
            for (const Move& m : moves) {
                const bool ui = g.degree(m.u) == 0, vi = g.degree(m.v) == 0;
                if (ui && vi) {
                    if (m.u == iso1 && m.v == iso2) kept.push_back(m);
                } else if (ui) {
                    if (m.u == iso1) kept.push_back(m);
                } else if (vi) {
                    if (m.v == iso1) kept.push_back(m);
                } else {
                    kept.push_back(m);
                }
            }
            moves = std::move(kept);
        }

        const bool walk_game =
            s.config().kind == GameKind::directed_hom && s.config().family.is_walk();
        if (walk_game) {
            const ClassBounds cb =
                class_bounds(s.digraph(), s.walk_caches(), s.config().family.walk_k());
            const int lower_here = std::max(cb.lower, s.moves_made() + 1);
            if (cb.upper <= alpha) return cb.upper;
            if (lower_here >= beta) return lower_here;
        }

        const std::string key = key_of(s, fixed);
        if (auto it = memo.find(key); it != memo.end()) {
            const Entry& e = it->second;
            if (e.flag == Flag::exact) return e.value;
            if (e.flag == Flag::lower) {
                if (e.value >= beta) return e.value;
                alpha = std::max(alpha, e.value);
            } else {
                if (e.value <= alpha) return e.value;
                beta = std::min(beta, e.value);
            }
        }

        const bool maximising = s.current_player() == Player::prolonger;

        // explore promising branches first so the window tightens early
        if (walk_game && moves.size() > 1) {
            const int k = s.config().family.walk_k();
            std::vector<std::pair<int, Move>> scored;
            scored.reserve(moves.size());
            for (const Move& m : moves) {
                const Digraph child = s.digraph().with_arc({m.u, m.v});
                const WalkCaches cc = compute_walk_caches(child);
                scored.emplace_back(class_bounds(child, cc, k).upper, m);
            }
            std::stable_sort(scored.begin(), scored.end(),
                             [&](const auto& a, const auto& b) {
                                 return maximising ? a.first > b.first
                                                   : a.first < b.first;
                             });
            for (std::size_t i = 0; i < moves.size(); ++i) moves[i] = scored[i].second;
        }
        const int alpha0 = alpha, beta0 = beta;
        int best = maximising ? int_min : int_max;
        Move best_move{-1, -1};
        for (const Move& m : moves) {
            auto branch_fixed = fixed.clone();
            branch_fixed->observe(s, m, s.current_player());
            const int v = run(s.after(m), *branch_fixed, alpha, beta);
            if (maximising) {
                if (v > best) {
                    best = v;
                    best_move = m;
                }
                alpha = std::max(alpha, best);
            } else {
                if (v < best) {
                    best = v;
                    best_move = m;
                }
                beta = std::min(beta, best);
            }
            if (alpha >= beta) break;
        }

        Entry e;
        e.value = best;
        e.best = best_move;
        e.flag = best <= alpha0 ? Flag::upper : best >= beta0 ? Flag::lower : Flag::exact;
        memo[key] = e;
        return best;
    }
};

}  // namespace

SolveResult best_response_score(const GameConfig& cfg, const std::string& fixed_strategy,
                                Player fixed_side, const BestResponseLimits& lim) {
    if (lim.enforce_budget && cfg.n > lim.max_n)
        throw budget_error("best_response_score: board size above budget");
    auto fixed = make_strategy(fixed_strategy, cfg, fixed_side, 0);
    BestResponseSearch search;
    search.fixed_side = fixed_side;
    SolveResult out;
    out.score = search.run(GameState::initial(cfg), *fixed, int_min, int_max);
    out.nodes_explored = search.nodes;
    return out;
}

}  // namespace satgame
