#include "satgame/strategies_orient.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "satgame/bounds.hpp"

namespace satgame {

namespace {

long long floor_times(long long k, const Rational& r) {
    return k * r.numerator() / r.denominator();
}

bitset_row above_mask(int n, int u) {
    bitset_row out(n);
    for (int v = u + 1; v < n; ++v) out.set(v);
    return out;
}

// ---------------------------------------------------------------------------

class OrientProlongerRB final : public Strategy, public RedBlueView {
public:
    OrientProlongerRB(const GameConfig& cfg, Player side, const StrategyOptions& opts) {
        if (cfg.kind != GameKind::orientation)
            throw strategy_error("orient-prolonger-rb plays the orientation game");
        if (side != Player::prolonger)
            throw strategy_error("orient-prolonger-rb plays the maximiser");
        n_ = cfg.n;
        k_ = cfg.k;
        const long long a = cfg.bias_prolonger, b = cfg.bias_shortener;
        c_ = static_cast<int>(a / (2 * b));

        int m = 0;
        if (opts.rb_set_size) {
            m = *opts.rb_set_size;
        } else {
            const Rational lam_lo = lambda_bounds(a, b).first;
            const long long m1 = floor_times(k_, lam_lo) - a - 1;
            const long long m2 = floor_times(k_, Rational(c_, c_ + 1)) - a - 1;
            const long long m3 = k_ - a - 1;
            m = static_cast<int>(m1 >= 2 ? m1 : m2 >= 2 ? m2 : m3);
        }
        m = std::clamp(m, 2, std::max(2, std::min(k_, n_)));
        set_size_ = m;

        const int q = (n_ + m - 1) / m;
        const int base = n_ / q, extra = n_ % q;
        group_of_.assign(static_cast<std::size_t>(n_), 0);
        int v = 0;
        for (int s = 0; s < q; ++s) {
            const int size = base + (s < extra ? 1 : 0);
            group_bits_.push_back(bitset_row(n_));
            missing_red_.push_back(size * (size - 1) / 2);
            for (int i = 0; i < size; ++i, ++v) {
                group_of_[static_cast<std::size_t>(v)] = s;
                group_bits_.back().set(v);
            }
        }
        d_red_.assign(static_cast<std::size_t>(n_), 0);
        d_blue_.assign(static_cast<std::size_t>(n_), 0);
    }

    Player role() const override { return Player::prolonger; }
    int ratio() const override { return c_; }
    bool degenerate() const override { return c_ == 0; }
    const std::vector<int>& groups() const override { return group_of_; }
    const std::vector<std::string>& interference() const override { return log_; }

    void observe(const GameState&, Move m, Player who) override {
        const bool red = group_of_[m.u] == group_of_[m.v];
        if (red) {
            ++d_red_[m.u];
            ++d_red_[m.v];
            --missing_red_[group_of_[m.u]];
        } else {
            ++d_blue_[m.u];
            ++d_blue_[m.v];
            if (who == Player::shortener && c_ >= 1) {
                repair_.push_back(m.u);
                repair_.push_back(m.v);
            }
        }
    }

    std::optional<Move> choose(const GameState& s) override {
        const UGraph& g = s.ugraph();

        // 1. restore the Red/Blue ratio at endpoints the opponent touched
        while (!repair_.empty()) {
            const int v = repair_.front();
            if (d_red_[v] >= static_cast<long long>(c_) * d_blue_[v] || red_complete(g, v)) {
                repair_.pop_front();
                continue;
            }
            if (auto m = red_move_at(s, g, v)) return m;
            log_.push_back("no legal red edge at vertex " + std::to_string(v));
            repair_.pop_front();
        }

        // 2. spare red edges, lowest set first
        for (std::size_t grp = 0; grp < group_bits_.size(); ++grp) {
            if (missing_red_[grp] == 0) continue;
            for (int u = group_bits_[grp].next(0); u != -1; u = group_bits_[grp].next(u + 1))
                if (auto m = red_move_at(s, g, u, u + 1)) return m;
        }

        // 3. blue edges whose endpoints keep the ratio after the bump
        if (auto m = blue_move(s, g, /*safe_only=*/true)) return m;

        // 4. any legal edge
        if (auto m = blue_move(s, g, /*safe_only=*/false)) {
            if (c_ >= 1 && (!safe_after_blue(g, m->u) || !safe_after_blue(g, m->v)))
                log_.push_back("forced unsafe blue edge " + std::to_string(m->u) + "-" +
                               std::to_string(m->v));
            return m;
        }
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!g.has_edge(u, v) && s.is_legal({u, v})) return Move{u, v};
        return std::nullopt;
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<OrientProlongerRB>(*this);
    }

    int set_size() const { return set_size_; }

private:
    bool red_complete(const UGraph& g, int v) const {
        bitset_row missing = group_bits_[group_of_[v]];
        missing.subtract(g.neighbours(v));
        missing.reset(v);
        return !missing.any();
    }

    bool safe_after_blue(const UGraph& g, int v) const {
        return red_complete(g, v) ||
               d_red_[v] >= static_cast<long long>(c_) * (d_blue_[v] + 1);
    }

    std::optional<Move> red_move_at(const GameState& s, const UGraph& g, int v,
                                    int from = 0) {
        bitset_row cand = group_bits_[group_of_[v]];
        cand.subtract(g.neighbours(v));
        cand.reset(v);
        for (int w = cand.next(from); w != -1; w = cand.next(w + 1))
            if (s.is_legal({std::min(v, w), std::max(v, w)}))
                return Move{std::min(v, w), std::max(v, w)};
        return std::nullopt;
    }

    std::optional<Move> blue_move(const GameState& s, const UGraph& g, bool safe_only) {
        for (int u = 0; u < n_; ++u) {
            if (safe_only && !safe_after_blue(g, u)) continue;
            bitset_row cand = above_mask(n_, u);
            cand.subtract(g.neighbours(u));
            cand.subtract(group_bits_[group_of_[u]]);
            for (int v = cand.next(0); v != -1; v = cand.next(v + 1)) {
                if (safe_only && !safe_after_blue(g, v)) continue;
                if (s.is_legal({u, v})) return Move{u, v};
            }
        }
        return std::nullopt;
    }

    int n_ = 0, k_ = 0, c_ = 0, set_size_ = 0;
    std::vector<int> group_of_;
    std::vector<bitset_row> group_bits_;
    std::vector<int> missing_red_;
    std::vector<long long> d_red_, d_blue_;
    std::deque<int> repair_;
    std::vector<std::string> log_;
};

// ---------------------------------------------------------------------------

class OrientShortenerRB final : public Strategy, public RedBlueView {
public:
    OrientShortenerRB(const GameConfig& cfg, Player side, const StrategyOptions& opts) {
        if (cfg.kind != GameKind::orientation)
            throw strategy_error("orient-shortener-rb plays the orientation game");
        if (side != Player::shortener)
            throw strategy_error("orient-shortener-rb plays the minimiser");
        n_ = cfg.n;
        k_ = cfg.k;
        const long long a = cfg.bias_prolonger, b = cfg.bias_shortener;
        c_ = static_cast<int>(b / (2 * a));

        long long sz;
        if (opts.rb_pivot_size) {
            sz = *opts.rb_pivot_size;
        } else {
            const Rational lam_hi = lambda_bounds(a, b).second;
            sz = floor_times(k_, Rational(1) - lam_hi) - b - 1;
        }
        pivot_size_ = static_cast<int>(std::clamp(sz, 0LL,
                                                  static_cast<long long>(std::min(n_, k_ - 1))));
        in_pivot_.assign(static_cast<std::size_t>(n_), 0);
        pivot_bits_ = bitset_row(n_);
        for (int v = 0; v < pivot_size_; ++v) {
            in_pivot_[static_cast<std::size_t>(v)] = 1;
            pivot_bits_.set(v);
        }
        d_red_.assign(static_cast<std::size_t>(n_), 0);
        d_blue_.assign(static_cast<std::size_t>(n_), 0);
    }

    Player role() const override { return Player::shortener; }
    int ratio() const override { return c_; }
    bool degenerate() const override { return c_ == 0; }
    const std::vector<int>& groups() const override { return in_pivot_; }
    const std::vector<std::string>& interference() const override { return log_; }

    bool phase1_done(const UGraph& g) const {
        for (int u = 0; u < pivot_size_; ++u)
            for (int v = u + 1; v < pivot_size_; ++v)
                if (!g.has_edge(u, v) && !skipped_.count(encode(u, v))) return false;
        return true;
    }

    void observe(const GameState&, Move m, Player who) override {
        const bool red = in_pivot_[m.u] || in_pivot_[m.v];
        if (red) {
            ++d_red_[m.u];
            ++d_red_[m.v];
            if (who == Player::prolonger && c_ >= 1) {
                if (!in_pivot_[m.u] && in_pivot_[m.v]) repair_.push_back(m.u);
                if (!in_pivot_[m.v] && in_pivot_[m.u]) repair_.push_back(m.v);
            }
        } else {
            ++d_blue_[m.u];
            ++d_blue_[m.v];
        }
    }

    std::optional<Move> choose(const GameState& s) override {
        const UGraph& g = s.ugraph();

        // phase 1: complete the pivot clique
        for (int u = 0; u < pivot_size_; ++u)
            for (int v = u + 1; v < pivot_size_; ++v) {
                if (g.has_edge(u, v) || skipped_.count(encode(u, v))) continue;
                if (s.is_legal({u, v})) return Move{u, v};
                skipped_.insert(encode(u, v));  // once illegal, always illegal
                log_.push_back("pivot edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " unplayable");
            }

        // phase 2: answer red edges with blue edges at the outside endpoint
        while (!repair_.empty()) {
            const int v = repair_.front();
            if (d_blue_[v] >= static_cast<long long>(c_) * d_red_[v]) {
                repair_.pop_front();
                continue;
            }
            if (auto m = blue_move_at(s, g, v)) return m;
            log_.push_back("no legal blue edge at vertex " + std::to_string(v));
            repair_.pop_front();
        }

        // spare blue edges
        for (int u = pivot_size_; u < n_; ++u) {
            bitset_row cand = above_mask(n_, u);
            cand.subtract(g.neighbours(u));
            cand.subtract(pivot_bits_);
            for (int v = cand.next(0); v != -1; v = cand.next(v + 1))
                if (s.is_legal({u, v})) return Move{u, v};
        }
        // all blue exhausted: any legal edge
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!g.has_edge(u, v) && s.is_legal({u, v})) return Move{u, v};
        return std::nullopt;
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<OrientShortenerRB>(*this);
    }

    int pivot_size() const { return pivot_size_; }

private:
    static long long encode(int u, int v) { return static_cast<long long>(u) * 100000 + v; }

    std::optional<Move> blue_move_at(const GameState& s, const UGraph& g, int v) {
        bitset_row cand(n_);
        for (int w = 0; w < n_; ++w)
            if (w != v) cand.set(w);
        cand.subtract(g.neighbours(v));
        cand.subtract(pivot_bits_);
        for (int w = cand.next(0); w != -1; w = cand.next(w + 1))
            if (s.is_legal({std::min(v, w), std::max(v, w)}))
                return Move{std::min(v, w), std::max(v, w)};
        return std::nullopt;
    }

    int n_ = 0, k_ = 0, c_ = 0, pivot_size_ = 0;
    std::vector<int> in_pivot_;
    bitset_row pivot_bits_;
    std::vector<long long> d_red_, d_blue_;
    std::deque<int> repair_;
    std::set<long long> skipped_;
    std::vector<std::string> log_;
};

}  // namespace

std::unique_ptr<Strategy> make_orient_prolonger_rb(const GameConfig& cfg, Player side,
                                                   const StrategyOptions& opts) {
    return std::make_unique<OrientProlongerRB>(cfg, side, opts);
}

std::unique_ptr<Strategy> make_orient_shortener_rb(const GameConfig& cfg, Player side,
                                                   const StrategyOptions& opts) {
    return std::make_unique<OrientShortenerRB>(cfg, side, opts);
}

}  // namespace satgame
