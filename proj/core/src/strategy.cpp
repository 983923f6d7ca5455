#include "satgame/strategy.hpp"

#include <random>
#include <sstream>

#include "satgame/strategies_directed.hpp"
#include "satgame/strategies_orient.hpp"

namespace satgame {

namespace {

class GreedyStrategy final : public Strategy {
public:
    std::optional<Move> choose(const GameState& s) override {
        const int n = s.config().n;
        if (s.is_directed()) {
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && s.is_legal({u, v})) return Move{u, v};
            return std::nullopt;
        }
        for (int u = 0; u < n; ++u) {
            // cross-colour candidates are legal without any search; try them
            // before paying for same-colour legality decisions
            for (int v = u + 1; v < n; ++v) {
                if (s.ugraph().has_edge(u, v)) continue;
                if (s.witness_colours()[u] != s.witness_colours()[v]) return Move{u, v};
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!s.ugraph().has_edge(u, v) && s.is_legal({u, v})) return Move{u, v};
        return std::nullopt;
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<GreedyStrategy>(*this);
    }
};

class RandomStrategy final : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}

    std::optional<Move> choose(const GameState& s) override {
        std::vector<Move> moves = s.legal_moves();
        if (moves.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        return moves[pick(rng_)];
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<RandomStrategy>(*this);
    }

    std::string memory_key() const override {
        std::ostringstream out;
        out << rng_;  // full engine state: positions only merge when draws align
        return out.str();
    }

    bool untouched_symmetric() const override { return false; }

private:
    std::mt19937_64 rng_;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(const std::string& name, const GameConfig& cfg,
                                        Player side, std::uint64_t seed,
                                        const StrategyOptions& opts) {
    if (name == "greedy") return std::make_unique<GreedyStrategy>();
    if (name == "random") return std::make_unique<RandomStrategy>(seed);
    if (name == "prolonger-k3") return make_prolonger_k3(cfg, side);
    if (name == "shortener-path") return make_shortener_path(cfg, side);
    if (name == "prolonger-structure") return make_prolonger_structure(cfg, side);
    if (name == "orient-prolonger-rb") return make_orient_prolonger_rb(cfg, side, opts);
    if (name == "orient-shortener-rb") return make_orient_shortener_rb(cfg, side, opts);
    throw std::invalid_argument("unknown strategy: " + name);
}

std::vector<std::string> strategy_names() {
    return {"shortener-path",     "prolonger-structure", "prolonger-k3",
            "orient-prolonger-rb", "orient-shortener-rb", "random",
            "greedy"};
}

Transcript playout(const GameConfig& cfg, Strategy& prolonger, Strategy& shortener) {
    GameState state = GameState::initial(cfg);
    Transcript t;
    t.config = cfg;

    while (true) {
        const Player side = state.current_player();
        Strategy& actor = side == Player::prolonger ? prolonger : shortener;
        std::optional<Move> mv = actor.choose(state);
        if (!mv) {
            if (!state.is_terminal())
                throw playout_abort("strategy passed in a live position", t);
            break;
        }
        GameState next = [&] {
            try {
                return state.after(*mv);
            } catch (const illegal_move_error& e) {
                t.final_score = state.moves_made();
                throw playout_abort(std::string("strategy returned an illegal move: ") +
                                        e.what(),
                                    t);
            }
        }();
        prolonger.observe(state, *mv, side);
        shortener.observe(state, *mv, side);
        t.moves.emplace_back(side, *mv);
        state = std::move(next);
    }
    t.final_score = state.moves_made();
    return t;
}

Transcript playout_named(const GameConfig& cfg, const std::string& prolonger_name,
                         const std::string& shortener_name, std::uint64_t seed,
                         const StrategyOptions& opts) {
    auto p = make_strategy(prolonger_name, cfg, Player::prolonger, seed, opts);
    auto s = make_strategy(shortener_name, cfg, Player::shortener, seed + 0x9e3779b9ULL, opts);
    return playout(cfg, *p, *s);
}

}  // namespace satgame
