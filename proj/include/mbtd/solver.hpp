#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "mbtd/game.hpp"
#include "mbtd/game_value.hpp"
#include "mbtd/graph.hpp"

namespace mbtd {

// Which invariant to compute: the variant picks the winning-set family, the
// scored role is the player whose move count is minimized, and the starter
// distinguishes D-game from S-game.
//   (MBTD, Dominator, Dominator) -> gamma_MBT     (MBTD, Dominator, Staller) -> gamma_MBT'
//   (MBD,  Dominator, Dominator) -> gamma_MB      (MBD,  Dominator, Staller) -> gamma_MB'
//   (MBD,  Staller,   Dominator) -> gamma_SMB     (MBD,  Staller,   Staller) -> gamma_SMB'
struct SolveSpec {
    GameVariant variant = GameVariant::MBTD;
    Role scored = Role::Dominator;
    Role starter = Role::Dominator;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t table_hits = 0;
    double millis = 0.0;
};

struct SolveResult {
    GameValue value;
    // When the scored player starts: all first moves realizing the optimum.
    // Otherwise: all value-optimal first moves of the starter.
    VertexSet optimal_first_moves;
    SearchStats stats;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    int threads = 1;  // >1 splits root moves across workers sharing the table
    std::size_t table_max_entries = std::size_t{1} << 26;
    std::optional<std::chrono::milliseconds> budget;
};

// Exact optimal-play value by memoized minimax: the scored player minimizes
// his move count (1 + min over children), the opponent maximizes, infinity
// is absorbing. Deterministic across runs and thread counts.
SolveResult solve_value(const Graph& g, SolveSpec spec, const SolverOptions& opts = {});

enum class Outcome { D, S, N };

// D: Dominator wins both starts; S: Staller wins both; N: first player wins.
// The fourth finiteness pattern contradicts the no-skip monotonicity and
// raises std::logic_error.
Outcome outcome(const Graph& g, GameVariant variant, const SolverOptions& opts = {});

// Reference oracle: the same recursion with no memoization, no pruning and
// no move ordering, playing every game to the end. Refuses graphs above
// max_order to avoid accidental blowup.
GameValue naive_value(const Graph& g, SolveSpec spec, int max_order = 8);

struct NoLineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One optimal play trace realizing a finite value; lowest-index optimal move
// at every turn, so the trace is deterministic.
std::vector<int> best_line(const Graph& g, SolveSpec spec, const SolverOptions& opts = {});

const char* to_string(Outcome o);
const char* to_string(GameVariant v);
const char* to_string(Role r);

}  // namespace mbtd
