#include "mbtd/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>

namespace mbtd {
namespace {

constexpr std::uint32_t kInf = GameValue::kInf;

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

std::size_t pick_table_size(int n, std::size_t max_entries) {
    // Roughly one slot per reachable position, capped; collisions are
    // resolved by replace-always and only cost recomputation.
    std::size_t est = 1;
    for (int i = 0; i < n && est < (std::size_t{1} << 23); ++i)
        est *= 3;
    est = std::min({est, max_entries, std::size_t{1} << 23});
    std::size_t size = 1 << 12;
    while (size < est)
        size <<= 1;
    return size;
}

// Fixed-size lossy hash table of exact values keyed by the two claimed sets.
// Eviction is replace-always; striped locks are engaged only in parallel mode.
class TranspositionTable {
public:
    TranspositionTable(int n, std::size_t max_entries, bool concurrent)
        : slots_(pick_table_size(n, max_entries)), mask_(slots_.size() - 1),
          concurrent_(concurrent) {}

    bool lookup(std::uint64_t d, std::uint64_t s, std::uint32_t& out) {
        std::size_t i = index(d, s);
        auto guard = lock(i);
        const Entry& e = slots_[i];
        if (e.used && e.d == d && e.s == s) {
            out = e.value;
            return true;
        }
        return false;
    }

    void store(std::uint64_t d, std::uint64_t s, std::uint32_t value) {
        std::size_t i = index(d, s);
        auto guard = lock(i);
        slots_[i] = Entry{d, s, value, true};
    }

private:
    struct Entry {
        std::uint64_t d = 0, s = 0;
        std::uint32_t value = 0;
        bool used = false;
    };

    std::size_t index(std::uint64_t d, std::uint64_t s) const {
        return (mix(d) ^ mix(s * 0x9e3779b97f4a7c15ULL)) & mask_;
    }

    std::unique_lock<std::mutex> lock(std::size_t i) {
        if (!concurrent_)
            return {};
        return std::unique_lock(stripes_[i & (stripes_.size() - 1)]);
    }

    std::vector<Entry> slots_;
    std::size_t mask_;
    bool concurrent_;
    std::array<std::mutex, 64> stripes_;
};

class Engine {
public:
    Engine(const Graph& g, SolveSpec spec, const SolverOptions& opts)
        : g_(g), spec_(spec),
          table_(g.order(), opts.table_max_entries, opts.threads > 1) {
        for (int v = 0; v < g.order(); ++v)
            req_.push_back(spec.variant == GameVariant::MBTD ? g.open_neighborhood(v)
                                                             : g.closed_neighborhood(v));
        if (opts.budget)
            deadline_ = std::chrono::steady_clock::now() + *opts.budget;
    }

    // Exact value of the position (claimed_d, claimed_s); whose turn it is
    // follows from the move count and the fixed starter.
    std::uint32_t eval(VertexSet d, VertexSet s) {
        if (((++nodes_) & 0xFFF) == 0 && deadline_ &&
            std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded("search budget exceeded");

        // Vertices not yet (totally) dominated by the Dominator's set.
        VertexSet uncovered;
        bool staller_won = false;
        for (int v = 0; v < g_.order(); ++v) {
            VertexSet req = req_[static_cast<std::size_t>(v)];
            if (!req.intersects(d)) {
                uncovered = uncovered.with(v);
                if (req.subset_of(s))
                    staller_won = true;
            }
        }
        bool dominator_won = uncovered.empty();
        bool scored_is_dominator = spec_.scored == Role::Dominator;
        if (scored_is_dominator ? dominator_won : staller_won)
            return 0;
        if (scored_is_dominator ? staller_won : dominator_won)
            return kInf;

        std::uint32_t cached;
        if (table_.lookup(d.bits(), s.bits(), cached)) {
            ++hits_;
            return cached;
        }

        VertexSet legal = (d | s).complement(g_.order());
        assert(!legal.empty());
        int moves_made = d.size() + s.size();
        Role mover = (moves_made % 2 == 0) ? spec_.starter : other(spec_.starter);
        bool mover_scored = mover == spec_.scored;

        std::uint32_t value = has_one_move_win(mover, legal, s, uncovered)
                                  ? (mover_scored ? 1 : kInf)
                                  : search(d, s, legal, uncovered, mover, mover_scored);
        table_.store(d.bits(), s.bits(), value);
        return value;
    }

    std::uint32_t eval_child(VertexSet d, VertexSet s, Role mover, int move) {
        return mover == Role::Dominator ? eval(d.with(move), s) : eval(d, s.with(move));
    }

    std::vector<int> ordered_moves(VertexSet d, VertexSet s, Role mover) const {
        VertexSet uncovered;
        for (int v = 0; v < g_.order(); ++v)
            if (!req_[static_cast<std::size_t>(v)].intersects(d))
                uncovered = uncovered.with(v);
        return order_moves((d | s).complement(g_.order()), s, uncovered, mover);
    }

    std::uint64_t nodes() const { return nodes_.load(); }
    std::uint64_t table_hits() const { return hits_.load(); }

private:
    bool has_one_move_win(Role mover, VertexSet legal, VertexSet s, VertexSet uncovered) const {
        if (mover == Role::Dominator) {
            VertexSet finishers = legal;
            for (int v : uncovered)
                finishers = finishers & req_[static_cast<std::size_t>(v)];
            return !finishers.empty();
        }
        for (int v : uncovered) {
            VertexSet missing = req_[static_cast<std::size_t>(v)] - s;
            if (missing.size() == 1)
                return true;
        }
        return false;
    }

    // Heuristic only; values are ordering-independent. Dominator prefers
    // moves covering many uncovered vertices, Staller prefers moves closing
    // in on a nearly-complete neighborhood transversal.
    std::vector<int> order_moves(VertexSet legal, VertexSet s, VertexSet uncovered,
                                 Role mover) const {
        std::vector<std::pair<int, int>> scored;
        scored.reserve(static_cast<std::size_t>(legal.size()));
        for (int m : legal)
            scored.emplace_back(0, m);
        if (mover == Role::Dominator) {
            for (auto& [score, m] : scored)
                for (int v : uncovered)
                    if (req_[static_cast<std::size_t>(v)].contains(m))
                        ++score;
        } else {
            for (auto& [score, m] : scored)
                for (int v : uncovered) {
                    VertexSet req = req_[static_cast<std::size_t>(v)];
                    if (!req.contains(m))
                        continue;
                    int remaining = (req - s).size() - 1;
                    score = std::max(score, g_.order() - remaining);
                }
        }
        std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        std::vector<int> out;
        out.reserve(scored.size());
        for (auto& [score, m] : scored)
            out.push_back(m);
        return out;
    }

    std::uint32_t search(VertexSet d, VertexSet s, VertexSet legal, VertexSet uncovered,
                         Role mover, bool mover_scored) {
        std::vector<int> moves = order_moves(legal, s, uncovered, mover);
        if (mover_scored) {
            std::uint32_t best = kInf;
            for (int m : moves) {
                std::uint32_t child = eval_child(d, s, mover, m);
                if (child != kInf)
                    best = std::min(best, child + 1);
                if (best == 1)
                    break;  // cannot improve on an immediate finish
            }
            return best;
        }
        std::uint32_t best = 0;
        for (int m : moves) {
            best = std::max(best, eval_child(d, s, mover, m));
            if (best == kInf)
                break;
        }
        return best;
    }

    const Graph& g_;
    SolveSpec spec_;
    std::vector<VertexSet> req_;
    TranspositionTable table_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> hits_{0};
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

bool scored_has_won(const Graph& g, SolveSpec spec, const GameState& st) {
    return spec.scored == Role::Dominator ? dominator_has_won(g, spec.variant, st)
                                          : staller_has_won(g, spec.variant, st);
}

bool opponent_has_won(const Graph& g, SolveSpec spec, const GameState& st) {
    return spec.scored == Role::Dominator ? staller_has_won(g, spec.variant, st)
                                          : dominator_has_won(g, spec.variant, st);
}

}  // namespace

SolveResult solve_value(const Graph& g, SolveSpec spec, const SolverOptions& opts) {
    auto start_time = std::chrono::steady_clock::now();
    Engine engine(g, spec, opts);

    SolveResult result;
    GameState root = new_game(g, spec.starter);
    if (scored_has_won(g, spec, root)) {
        result.value = GameValue::finite(0);
    } else if (opponent_has_won(g, spec, root)) {
        result.value = GameValue::infinity();
    } else {
        int n = g.order();
        std::vector<std::uint32_t> child(static_cast<std::size_t>(n), 0);
        int threads = std::max(1, opts.threads);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&](int t) {
            try {
                for (int m = t; m < n; m += threads)
                    child[static_cast<std::size_t>(m)] =
                        engine.eval_child(VertexSet(), VertexSet(), spec.starter, m);
            } catch (...) {
                std::scoped_lock lk(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(worker, t);
            for (auto& th : pool)
                th.join();
        }
        if (failure)
            std::rethrow_exception(failure);

        if (spec.starter == spec.scored) {
            std::uint32_t best = kInf;
            for (int m = 0; m < n; ++m)
                if (child[static_cast<std::size_t>(m)] != kInf)
                    best = std::min(best, child[static_cast<std::size_t>(m)] + 1);
            result.value = best == kInf ? GameValue::infinity() : GameValue::finite(best);
            if (best != kInf)
                for (int m = 0; m < n; ++m)
                    if (child[static_cast<std::size_t>(m)] == best - 1)
                        result.optimal_first_moves = result.optimal_first_moves.with(m);
        } else {
            std::uint32_t best = 0;
            for (int m = 0; m < n; ++m)
                best = std::max(best, child[static_cast<std::size_t>(m)]);
            result.value = best == kInf ? GameValue::infinity() : GameValue::finite(best);
            for (int m = 0; m < n; ++m)
                if (child[static_cast<std::size_t>(m)] == best)
                    result.optimal_first_moves = result.optimal_first_moves.with(m);
        }
    }

    result.stats.nodes = engine.nodes();
    result.stats.table_hits = engine.table_hits();
    result.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time)
            .count();
    return result;
}

Outcome outcome(const Graph& g, GameVariant variant, const SolverOptions& opts) {
    GameValue d_start = solve_value(g, {variant, Role::Dominator, Role::Dominator}, opts).value;
    GameValue s_start = solve_value(g, {variant, Role::Dominator, Role::Staller}, opts).value;
    if (d_start.is_finite() && s_start.is_finite())
        return Outcome::D;
    if (!d_start.is_finite() && !s_start.is_finite())
        return Outcome::S;
    if (d_start.is_finite())
        return Outcome::N;
    // Dominator losing the D-game but winning the S-game contradicts the
    // no-skip monotonicity; a solver bug, so fail loudly.
    throw std::logic_error("inconsistent outcome pattern on graph " + g.name());
}

namespace {

GameValue naive_rec(const Graph& g, SolveSpec spec, const GameState& st) {
    if (scored_has_won(g, spec, st))
        return GameValue::finite(0);
    VertexSet moves = legal_moves(g, st);
    if (moves.empty())
        return GameValue::infinity();
    if (st.to_move == spec.scored) {
        GameValue best = GameValue::infinity();
        for (int m : moves)
            best = min(best, naive_rec(g, spec, apply_move(g, st, m)).plus_one());
        return best;
    }
    GameValue best = GameValue::finite(0);
    for (int m : moves)
        best = max(best, naive_rec(g, spec, apply_move(g, st, m)));
    return best;
}

}  // namespace

GameValue naive_value(const Graph& g, SolveSpec spec, int max_order) {
    if (g.order() > max_order)
        throw std::invalid_argument("naive_value refused: order " + std::to_string(g.order()) +
                                    " exceeds cap " + std::to_string(max_order));
    return naive_rec(g, spec, new_game(g, spec.starter));
}

std::vector<int> best_line(const Graph& g, SolveSpec spec, const SolverOptions& opts) {
    Engine engine(g, spec, opts);
    GameState st = new_game(g, spec.starter);
    if (engine.eval(st.claimed_d, st.claimed_s) == kInf)
        throw NoLineError("no winning strategy for the scored player");

    std::vector<int> line;
    while (!scored_has_won(g, spec, st)) {
        std::uint32_t current = engine.eval(st.claimed_d, st.claimed_s);
        int chosen = -1;
        for (int m : legal_moves(g, st)) {
            std::uint32_t child = engine.eval_child(st.claimed_d, st.claimed_s, st.to_move, m);
            bool optimal = st.to_move == spec.scored ? (child != kInf && child + 1 == current)
                                                     : (child == current);
            if (optimal) {
                chosen = m;
                break;  // moves iterate ascending, keep the lowest index
            }
        }
        assert(chosen >= 0);
        st = apply_move(g, st, chosen);
        line.push_back(chosen);
    }
    return line;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::D: return "D";
        case Outcome::S: return "S";
        default: return "N";
    }
}

const char* to_string(GameVariant v) { return v == GameVariant::MBD ? "mbd" : "mbtd"; }

const char* to_string(Role r) { return r == Role::Dominator ? "dominator" : "staller"; }

}  // namespace mbtd
