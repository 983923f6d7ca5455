#include "satgame/strategies_directed.hpp"

#include <algorithm>
#include <sstream>

namespace satgame {

namespace {

std::optional<Move> first_legal_directed(const GameState& s) {
    const int n = s.config().n;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && s.is_legal({u, v})) return Move{u, v};
    return std::nullopt;
}

std::vector<int> isolated_vertices(const Digraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// prolonger-k3

class ProlongerK3 final : public Strategy {
public:
    ProlongerK3(const GameConfig& cfg, Player side) {
        if (cfg.kind != GameKind::directed_hom || !cfg.family.is_walk() ||
            cfg.family.walk_k() != 3)
            throw strategy_error("prolonger-k3 plays the 3-vertex walk game only");
        if (side != Player::prolonger)
            throw strategy_error("prolonger-k3 plays the maximiser");
    }

    std::optional<Move> choose(const GameState& s) override {
        const Digraph& g = s.digraph();
        const int n = g.order();
        std::vector<int> sources, sinks, free;
        for (int v = 0; v < n; ++v) {
            if (g.out_degree(v) > 0)
                sources.push_back(v);
            else if (g.in_degree(v) > 0)
                sinks.push_back(v);
            else
                free.push_back(v);
        }
        if (sources.size() != sinks.size() && !free.empty()) {
            const Move m = sources.size() < sinks.size()
                               ? Move{free.front(), sinks.front()}
                               : Move{sources.front(), free.front()};
            if (s.is_legal(m)) return m;
        }
        if (sources.size() == sinks.size() && free.size() >= 2) {
            const Move m{free[0], free[1]};
            if (s.is_legal(m)) return m;
        }
        return first_legal_directed(s);
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<ProlongerK3>(*this);
    }
};

// ---------------------------------------------------------------------------
// Shared phase-1 machinery: building the main path on k-1 vertices.

struct ArcEvent {
    Move arc;
    bool from_free = false;  // endpoint degrees before the move
    bool to_free = false;
};

struct PathBookkeeping {
    int k = 0;
    int phase = 1;
    std::vector<int> path;
    std::optional<int> floater;
    bool phase1_excess = false;

    struct Planned {
        Move move;
        std::vector<int> new_path;
        std::optional<int> new_floater;
    };
    std::optional<Planned> planned;

    bool on_path(int v) const {
        return std::find(path.begin(), path.end(), v) != path.end();
    }

    void generic_update(const ArcEvent& e) {
        if (path.empty()) {
            path = {e.arc.u, e.arc.v};
            return;
        }
        if (phase != 1) return;
        if (e.arc.u == path.back() && e.to_free)
            path.push_back(e.arc.v);
        else if (e.arc.v == path.front() && e.from_free)
            path.insert(path.begin(), e.arc.u);
    }

    // Returns true when this move completed the path.
    bool apply(const ArcEvent& e, const Digraph& before_board, bool own) {
        if (own && planned && planned->move == e.arc) {
            path = planned->new_path;
            if (planned->new_floater) floater = planned->new_floater;
            planned.reset();
        } else {
            if (own) planned.reset();
            generic_update(e);
        }
        if (phase == 1 && static_cast<int>(path.size()) >= k - 1) {
            phase = 2;
            finish_phase1(before_board, e.arc);
            return true;
        }
        return false;
    }

    void finish_phase1(const Digraph& before_board, Move just_played) {
        int extra = 0;
        std::optional<int> single;
        for (int v = 0; v < before_board.order(); ++v) {
            int deg = before_board.degree(v);
            if (v == just_played.u || v == just_played.v) ++deg;
            if (deg > 0 && !on_path(v)) {
                ++extra;
                single = v;
            }
        }
        if (extra > 1) phase1_excess = true;
        if (extra == 1 && !floater) floater = single;
    }

    std::string serialize() const {
        std::ostringstream out;
        out << phase << '|';
        for (int v : path) out << v << ',';
        out << '|' << (floater ? *floater : -1) << '|';
        if (planned) out << planned->move.u << '>' << planned->move.v;
        return out.str();
    }
};

// Absorb a just-played isolated edge x -> y into the path. Behind the tail
// while two more vertices fit; once the path has k-2 vertices, hang it below
// the third-from-last vertex, completing the path and leaving the displaced
// end vertex as the floater.
std::optional<Move> absorb_isolated_edge(const GameState& s, PathBookkeeping& book,
                                         const ArcEvent& ev) {
    auto& path = book.path;
    const int l = static_cast<int>(path.size());
    const int k = book.k;
    if (l <= k - 3) {
        Move m{path.back(), ev.arc.u};
        if (s.is_legal(m)) {
            auto np = path;
            np.push_back(ev.arc.u);
            np.push_back(ev.arc.v);
            book.planned = {m, np, std::nullopt};
            return m;
        }
    } else if (l == k - 2) {
        Move m{path[static_cast<std::size_t>(k - 4)], ev.arc.u};
        if (s.is_legal(m)) {
            std::vector<int> np(path.begin(), path.begin() + (k - 3));
            np.push_back(ev.arc.u);
            np.push_back(ev.arc.v);
            book.planned = {m, np, path[static_cast<std::size_t>(k - 3)]};
            return m;
        }
    }
    return std::nullopt;
}

std::optional<Move> extend_main_path(const GameState& s, PathBookkeeping& book,
                                     const Digraph& g) {
    auto& path = book.path;
    if (static_cast<int>(path.size()) >= book.k - 1) return std::nullopt;
    for (int w : isolated_vertices(g)) {
        Move m{path.back(), w};
        if (s.is_legal(m)) {
            auto np = path;
            np.push_back(w);
            book.planned = {m, np, std::nullopt};
            return m;
        }
        Move m2{w, path.front()};
        if (s.is_legal(m2)) {
            auto np = path;
            np.insert(np.begin(), w);
            book.planned = {m2, np, std::nullopt};
            return m2;
        }
    }
    return std::nullopt;
}

// One phase-1 turn for either side: react to the opponent's last move, else
// keep growing the path.
std::optional<Move> phase1_turn(const GameState& s, PathBookkeeping& book,
                                const std::optional<ArcEvent>& ev) {
    const Digraph& g = s.digraph();
    if (book.path.empty()) {
        Move m{0, 1};
        if (s.is_legal(m)) {
            book.planned = {m, {0, 1}, std::nullopt};
            return m;
        }
        return first_legal_directed(s);
    }
    if (ev && !(book.path.size() == 2 && ev->arc.u == book.path[0] &&
                ev->arc.v == book.path[1])) {
        const ArcEvent& e = *ev;
        const bool u_on = book.on_path(e.arc.u);
        const bool v_on = book.on_path(e.arc.v);
        if (e.from_free && e.to_free) {
            if (auto m = absorb_isolated_edge(s, book, e)) return m;
        } else if (u_on && !v_on && e.to_free) {
            // attachment hanging off the path: reroute the tail through it
            Move m{book.path.back(), e.arc.v};
            if (e.arc.u != book.path.back() && s.is_legal(m)) {
                auto np = book.path;
                np.push_back(e.arc.v);
                book.planned = {m, np, std::nullopt};
                return m;
            }
        } else if (!u_on && v_on && e.from_free) {
            Move m{e.arc.u, book.path.front()};
            if (e.arc.v != book.path.front() && s.is_legal(m)) {
                auto np = book.path;
                np.insert(np.begin(), e.arc.u);
                book.planned = {m, np, std::nullopt};
                return m;
            }
        }
    }
    if (auto m = extend_main_path(s, book, g)) return m;
    return first_legal_directed(s);
}

// ---------------------------------------------------------------------------
// shortener-path

class ShortenerPath final : public Strategy, public PathStrategyView {
public:
    ShortenerPath(const GameConfig& cfg, Player side) {
        if (cfg.kind != GameKind::directed_hom || !cfg.family.is_walk() ||
            cfg.family.walk_k() < 4)
            throw strategy_error("shortener-path requires the walk game with k >= 4");
        if (side != Player::shortener)
            throw strategy_error("shortener-path plays the minimiser");
        book_.k = cfg.family.walk_k();
        forced_.assign(static_cast<std::size_t>(cfg.n), 0);
    }

    int phase() const override { return book_.phase; }
    const std::vector<int>& main_path() const override { return book_.path; }
    std::optional<int> floater() const override { return book_.floater; }
    bool phase1_excess_touch() const override { return book_.phase1_excess; }
    const std::vector<int>* forced_classes() const override { return &forced_; }

    void observe(const GameState& before, Move m, Player who) override {
        const Digraph& g = before.digraph();
        ArcEvent e{m, g.degree(m.u) == 0, g.degree(m.v) == 0};
        const bool own = who == Player::shortener;
        book_.apply(e, g, own);
        if (own && pending_marks_) {
            for (auto [v, c] : pending_marks_->assign)
                forced_[static_cast<std::size_t>(v)] = c;
            pending_marks_.reset();
        }
        if (!own) pending_.push_back(e);
        if (book_.phase == 2 && !path_marked_) {
            path_marked_ = true;
            for (std::size_t i = 0; i < book_.path.size(); ++i)
                forced_[static_cast<std::size_t>(book_.path[i])] = static_cast<int>(i) + 1;
        }
    }

    std::optional<Move> choose(const GameState& s) override {
        std::optional<ArcEvent> ev;
        if (!pending_.empty()) {
            ev = pending_.front();
            pending_.erase(pending_.begin());
        }
        if (book_.phase == 1) return phase1_turn(s, book_, ev);
        return choose_phase2(s, ev);
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<ShortenerPath>(*this);
    }

    std::string memory_key() const override {
        std::ostringstream out;
        out << book_.serialize() << '#';
        for (const auto& e : pending_) out << e.arc.u << '>' << e.arc.v << ',';
        out << '#';
        for (int f : forced_) out << f << ',';
        return out.str();
    }

private:
    struct Marks {
        std::vector<std::pair<int, int>> assign;
    };

    std::optional<Move> choose_phase2(const GameState& s, const std::optional<ArcEvent>& ev) {
        const Digraph& g = s.digraph();
        const int k = book_.k;
        const auto& path = book_.path;
        const int v2 = path[1];
        const int vk2 = path[static_cast<std::size_t>(k - 3)];  // second-to-last class
        const int vk3 = path[static_cast<std::size_t>(k - 4)];

        if (ev) {
            const ArcEvent& e = *ev;
            if (e.from_free && e.to_free) {
                // fresh isolated edge u -> u': hang it below the path so both
                // ends land in the top two classes
                Move m{vk3, e.arc.u};
                if (s.is_legal(m)) {
                    pending_marks_ = Marks{{{e.arc.u, k - 2}, {e.arc.v, k - 1}}};
                    return m;
                }
            } else if (!e.from_free && e.to_free) {
                Move m{vk2, e.arc.v};
                if (s.is_legal(m)) {
                    pending_marks_ = Marks{{{e.arc.v, k - 1}}};
                    return m;
                }
                if (g.has_arc(vk2, e.arc.v))
                    forced_[static_cast<std::size_t>(e.arc.v)] = k - 1;
            } else if (e.from_free && !e.to_free) {
                Move m{e.arc.u, v2};
                if (s.is_legal(m)) {
                    pending_marks_ = Marks{{{e.arc.u, 1}}};
                    return m;
                }
                if (g.has_arc(e.arc.u, v2)) forced_[static_cast<std::size_t>(e.arc.u)] = 1;
            }
            // internal move, or the designated reply was unavailable: pin an
            // isolated vertex to the top class while any remain
            for (int w : isolated_vertices(g)) {
                Move m{vk2, w};
                if (s.is_legal(m)) {
                    pending_marks_ = Marks{{{w, k - 1}}};
                    return m;
                }
            }
        }
        return first_legal_directed(s);
    }

    PathBookkeeping book_;
    std::vector<ArcEvent> pending_;
    std::vector<int> forced_;
    std::optional<Marks> pending_marks_;
    bool path_marked_ = false;
};

// ---------------------------------------------------------------------------
// prolonger-structure

class ProlongerStructure final : public Strategy, public StructureStrategyView {
public:
    ProlongerStructure(const GameConfig& cfg, Player side) : n_(cfg.n) {
        if (cfg.kind != GameKind::directed_hom || !cfg.family.is_walk() ||
            cfg.family.walk_k() < 4)
            throw strategy_error("prolonger-structure requires the walk game with k >= 4");
        if (side != Player::prolonger)
            throw strategy_error("prolonger-structure plays the maximiser");
        book_.k = cfg.family.walk_k();
        assigned_.assign(static_cast<std::size_t>(n_), false);
    }

    int phase() const override { return book_.phase; }
    const std::vector<int>& main_path() const override { return book_.path; }
    std::optional<int> floater() const override { return book_.floater; }
    bool phase1_excess_touch() const override { return book_.phase1_excess; }
    const std::vector<StructureRecord>& structures() const override { return records_; }
    const std::vector<Snapshot>& growth_log() const override { return log_; }
    const std::vector<int>& discarded() const override { return discard_; }

    void observe(const GameState& before, Move m, Player who) override {
        const Digraph& g = before.digraph();
        ArcEvent e{m, g.degree(m.u) == 0, g.degree(m.v) == 0};
        const bool own = who == Player::prolonger;
        if (book_.phase == 1) {
            book_.apply(e, g, own);
            if (!own) pending_.push_back(e);
            if (book_.phase == 2) {
                enter_phase2();
                if (own)
                    log_.push_back({before.moves_made() + 1, -1, StructureKind::A, 0,
                                    false, true, false});
            }
            return;
        }
        if (own) {
            apply_own_phase2(before, e);
        } else {
            pending_.push_back(e);
        }
    }

    std::optional<Move> choose(const GameState& s) override {
        std::optional<ArcEvent> ev;
        if (book_.phase == 1) {
            if (!pending_.empty()) {
                ev = pending_.front();
                pending_.erase(pending_.begin());
            }
            return phase1_turn(s, book_, ev);
        }
        return choose_phase2(s);
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<ProlongerStructure>(*this);
    }

    std::string memory_key() const override {
        std::ostringstream out;
        out << book_.serialize() << '#';
        for (const auto& r : records_) {
            out << (r.closed ? 'c' : 'o');
            for (int v : r.path_vertices) out << v << ',';
            out << '/';
            for (int v : r.off_path_vertices) out << v << ',';
            out << ';';
        }
        out << '#' << cur_;
        for (const auto& e : pending_) out << e.arc.u << '>' << e.arc.v << ',';
        return out.str();
    }

private:
    struct RecFlags {
        bool blocked_front = false;
        bool blocked_back = false;
    };

    struct Planned2 {
        Move move;
        int record = -1;
        std::vector<int> new_path;
        std::vector<int> newly_assigned;
        std::vector<int> drop_from_off;
        bool close_after = false;
        bool fresh_structure = false;
        bool had_free = false;
        bool endgame = false;
    };

    void enter_phase2() {
        for (int v : book_.path) assigned_[static_cast<std::size_t>(v)] = true;
        if (book_.floater) assigned_[static_cast<std::size_t>(*book_.floater)] = true;
    }

    static StructureKind kind_of(const RecFlags& f) {
        const int blocked = (f.blocked_front ? 1 : 0) + (f.blocked_back ? 1 : 0);
        return blocked == 0 ? StructureKind::A
                            : blocked == 1 ? StructureKind::B : StructureKind::C;
    }

    void refresh_record(int idx) {
        StructureRecord& r = records_[static_cast<std::size_t>(idx)];
        r.lambda = static_cast<int>(r.path_vertices.size()) - 1;
        r.kind = kind_of(flags_[static_cast<std::size_t>(idx)]);
    }

    int off_budget(int idx) const {
        const StructureRecord& r = records_[static_cast<std::size_t>(idx)];
        const RecFlags& f = flags_[static_cast<std::size_t>(idx)];
        const int blocked = (f.blocked_front ? 1 : 0) + (f.blocked_back ? 1 : 0);
        return std::max(0, r.lambda - blocked);
    }

    void discard_vertex(int v) {
        if (!assigned_[static_cast<std::size_t>(v)]) {
            assigned_[static_cast<std::size_t>(v)] = true;
            discard_.push_back(v);
        }
    }

    int record_of(int v) const {
        for (std::size_t i = 0; i < records_.size(); ++i) {
            const auto& r = records_[i];
            if (std::find(r.path_vertices.begin(), r.path_vertices.end(), v) !=
                    r.path_vertices.end() ||
                std::find(r.off_path_vertices.begin(), r.off_path_vertices.end(), v) !=
                    r.off_path_vertices.end())
                return static_cast<int>(i);
        }
        return -1;
    }

    // Digest the opponent moves gathered since our last turn.
    void bookkeep_events(std::optional<Move>& indep, std::optional<int>& attach) {
        for (const ArcEvent& e : pending_) {
            const int x = e.arc.u, y = e.arc.v;
            const bool x_fresh = e.from_free && !assigned_[static_cast<std::size_t>(x)];
            const bool y_fresh = e.to_free && !assigned_[static_cast<std::size_t>(y)];
            if (x_fresh && y_fresh) {
                if (indep) {  // a newer pair supersedes: drop the older one
                    discard_vertex(indep->u);
                    discard_vertex(indep->v);
                }
                indep = e.arc;
                continue;
            }
            // blocked-end flags on whichever record got touched
            for (std::size_t i = 0; i < records_.size(); ++i) {
                auto& r = records_[i];
                if (r.path_vertices.empty()) continue;
                if (y == r.path_vertices.front()) flags_[i].blocked_front = true;
                if (x == r.path_vertices.back()) flags_[i].blocked_back = true;
                refresh_record(static_cast<int>(i));
            }
            for (int fresh : {x_fresh ? x : -1, y_fresh ? y : -1}) {
                if (fresh < 0) continue;
                const int anchor = fresh == x ? y : x;
                const int rec = record_of(anchor);
                if (rec >= 0 && !records_[static_cast<std::size_t>(rec)].closed &&
                    static_cast<int>(records_[static_cast<std::size_t>(rec)]
                                         .off_path_vertices.size()) < off_budget(rec)) {
                    records_[static_cast<std::size_t>(rec)].off_path_vertices.push_back(fresh);
                    assigned_[static_cast<std::size_t>(fresh)] = true;
                    if (rec == cur_) attach = fresh;
                } else {
                    discard_vertex(fresh);
                }
            }
        }
        pending_.clear();
    }

    std::vector<int> free_vertices(const Digraph& g) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (g.degree(v) == 0 && !assigned_[static_cast<std::size_t>(v)])
                out.push_back(v);
        return out;
    }

    std::optional<Move> choose_phase2(const GameState& s) {
        const Digraph& g = s.digraph();
        const int k = book_.k;
        std::optional<Move> indep;
        std::optional<int> attach;
        bookkeep_events(indep, attach);

        std::vector<int> free = free_vertices(g);
        const bool had_free = !free.empty();

        // Absorb a fresh independent edge x -> y while the path can take two
        // more vertices; a partial absorption keeps one endpoint off-path.
        if (indep) {
            const int x = indep->u, y = indep->v;
            if (cur_ >= 0 && !records_[static_cast<std::size_t>(cur_)].closed) {
                auto& r = records_[static_cast<std::size_t>(cur_)];
                auto& f = flags_[static_cast<std::size_t>(cur_)];
                const int len = static_cast<int>(r.path_vertices.size());
                if (len + 2 <= k - 1) {
                    if (!f.blocked_back) {
                        Move m{r.path_vertices.back(), x};
                        if (s.is_legal(m)) {
                            auto np = r.path_vertices;
                            np.push_back(x);
                            np.push_back(y);
                            planned_ = Planned2{m, cur_, np, {x, y}, {}, false, false,
                                                had_free, false};
                            return m;
                        }
                    }
                    if (!f.blocked_front) {
                        Move m{y, r.path_vertices.front()};
                        if (s.is_legal(m)) {
                            std::vector<int> np{x, y};
                            np.insert(np.end(), r.path_vertices.begin(),
                                      r.path_vertices.end());
                            planned_ = Planned2{m, cur_, np, {x, y}, {}, false, false,
                                                had_free, false};
                            return m;
                        }
                    }
                }
                if (len + 1 <= k - 1 && !f.blocked_back) {
                    Move m{r.path_vertices.back(), x};
                    if (s.is_legal(m) &&
                        static_cast<int>(r.off_path_vertices.size()) < off_budget(cur_)) {
                        auto np = r.path_vertices;
                        np.push_back(x);
                        r.off_path_vertices.push_back(y);
                        assigned_[static_cast<std::size_t>(y)] = true;
                        planned_ = Planned2{m, cur_, np, {x}, {}, false, false, had_free,
                                            false};
                        return m;
                    }
                }
            } else {
                // no active structure: the pair seeds a new one
                start_structure(x, y);
                Move m = extend_record(s, cur_, attach, free, had_free);
                if (m.u != m.v) return m;
                return fallback(s, had_free);
            }
            discard_vertex(x);
            discard_vertex(y);
        }

        for (int attempt = 0; attempt < 2; ++attempt) {
            if (cur_ < 0 || records_[static_cast<std::size_t>(cur_)].closed) {
                if (free.empty()) break;
                start_structure(free.front(), -1);
                free.erase(free.begin());
            }
            Move m = extend_record(s, cur_, attach, free, had_free);
            if (m.u != m.v) return m;
            // both ends dead: close and retry with a fresh structure
            records_[static_cast<std::size_t>(cur_)].closed = true;
            refresh_record(cur_);
        }
        return fallback(s, had_free);
    }

    void start_structure(int seed, int second) {
        StructureRecord r;
        r.path_vertices = second >= 0 ? std::vector<int>{seed, second}
                                      : std::vector<int>{seed};
        records_.push_back(std::move(r));
        flags_.push_back({});
        cur_ = static_cast<int>(records_.size()) - 1;
        refresh_record(cur_);
        assigned_[static_cast<std::size_t>(seed)] = true;
        if (second >= 0) assigned_[static_cast<std::size_t>(second)] = true;
        fresh_pending_ = true;
    }

    // Try to grow records_[idx] by one vertex; a Move with u == v means no
    // extension was possible.
    Move extend_record(const GameState& s, int idx, std::optional<int> attach,
                       const std::vector<int>& free, bool had_free) {
        auto& r = records_[static_cast<std::size_t>(idx)];
        auto& f = flags_[static_cast<std::size_t>(idx)];
        const int k = book_.k;
        const int len = static_cast<int>(r.path_vertices.size());
        if (len >= k - 1) return {0, 0};

        std::vector<int> targets;
        if (len == k - 2) {
            // last slot: prefer the structure's own off-path vertices
            targets = r.off_path_vertices;
            if (attach) targets.push_back(*attach);
            targets.insert(targets.end(), free.begin(), free.end());
        } else {
            if (attach) targets.push_back(*attach);
            targets.insert(targets.end(), free.begin(), free.end());
        }

        for (int pass = 0; pass < 2; ++pass) {
            const bool tail = pass == 0;
            bool& blocked = tail ? f.blocked_back : f.blocked_front;
            if (blocked) continue;
            bool tried = false;
            for (int t : targets) {
                if (std::find(r.path_vertices.begin(), r.path_vertices.end(), t) !=
                    r.path_vertices.end())
                    continue;
                tried = true;
                Move m = tail ? Move{r.path_vertices.back(), t}
                              : Move{t, r.path_vertices.front()};
                if (!s.is_legal(m)) continue;
                auto np = r.path_vertices;
                if (tail)
                    np.push_back(t);
                else
                    np.insert(np.begin(), t);
                Planned2 p;
                p.move = m;
                p.record = idx;
                p.new_path = np;
                if (!assigned_[static_cast<std::size_t>(t)]) p.newly_assigned = {t};
                const auto off_it =
                    std::find(r.off_path_vertices.begin(), r.off_path_vertices.end(), t);
                if (off_it != r.off_path_vertices.end()) p.drop_from_off = {t};
                p.close_after = static_cast<int>(np.size()) == k - 1;
                p.fresh_structure = fresh_pending_;
                p.had_free = had_free;
                planned_ = p;
                return m;
            }
            if (tried) blocked = true;  // every candidate at this end is illegal
        }
        refresh_record(idx);
        return {0, 0};
    }

    std::optional<Move> fallback(const GameState& s, bool had_free) {
        auto m = first_legal_directed(s);
        if (m) {
            Planned2 p;
            p.move = *m;
            p.record = cur_;
            p.endgame = true;
            p.had_free = had_free;
            planned_ = p;
        }
        return m;
    }

    void apply_own_phase2(const GameState& before, const ArcEvent& e) {
        Snapshot snap;
        snap.move_index = before.moves_made() + 1;
        if (planned_ && planned_->move == e.arc) {
            const Planned2& p = *planned_;
            if (p.record >= 0 && !p.endgame) {
                auto& r = records_[static_cast<std::size_t>(p.record)];
                r.path_vertices = p.new_path;
                for (int v : p.newly_assigned) assigned_[static_cast<std::size_t>(v)] = true;
                for (int v : p.drop_from_off)
                    std::erase(r.off_path_vertices, v);
                if (p.close_after) r.closed = true;
                refresh_record(p.record);
            }
            snap.structure_id = p.record;
            snap.fresh_structure = p.fresh_structure;
            snap.had_free = p.had_free;
            snap.endgame = p.endgame;
            if (p.record >= 0) {
                snap.kind = records_[static_cast<std::size_t>(p.record)].kind;
                snap.lambda = records_[static_cast<std::size_t>(p.record)].lambda;
            }
            if (!p.endgame) fresh_pending_ = false;
        } else {
            snap.structure_id = cur_;
            snap.endgame = true;
        }
        planned_.reset();
        log_.push_back(snap);
    }

    int n_;
    PathBookkeeping book_;
    std::vector<ArcEvent> pending_;
    std::vector<StructureRecord> records_;
    std::vector<RecFlags> flags_;
    int cur_ = -1;
    std::vector<bool> assigned_;
    std::vector<int> discard_;
    std::vector<Snapshot> log_;
    std::optional<Planned2> planned_;
    bool fresh_pending_ = false;
};

}  // namespace

std::unique_ptr<Strategy> make_prolonger_k3(const GameConfig& cfg, Player side) {
    return std::make_unique<ProlongerK3>(cfg, side);
}

std::unique_ptr<Strategy> make_shortener_path(const GameConfig& cfg, Player side) {
    return std::make_unique<ShortenerPath>(cfg, side);
}

std::unique_ptr<Strategy> make_prolonger_structure(const GameConfig& cfg, Player side) {
    return std::make_unique<ProlongerStructure>(cfg, side);
}

}  // namespace satgame
