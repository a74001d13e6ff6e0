#ifndef GRAHAM_SOLVER_HPP_
#define GRAHAM_SOLVER_HPP_

// Stochastic flip search for assignments with no violated constraint.
//
// One step picks a variable uniformly at random and flips it with a
// probability computed from
//   n_B  violated constraints containing the variable, and
//   n_G  satisfied constraints that the flip would violate.
// Both counts are maintained incrementally from per-constraint ones-counts and
// the xor of the variables coloured 1.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graham/quotient.hpp"

namespace graham {

/// Seeded 64-bit Mersenne Twister with bias-free bounded draws; the output
/// sequence is fixed by the standard, so traces replay on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), by rejection of the low remainder band.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

enum class PolicyVariant { A, B };

struct FlipPolicy {
  PolicyVariant variant = PolicyVariant::B;
  double base = 10.0;
  double scale = 100.0;
  double weight = 5.0;

  /// A: min(n_B / (10 + 100 n_G), 1)
  /// B: min(n_B / (10 + 100 max(5 n_G - n_B, 0)), 1)
  double probability(std::uint32_t nb, std::uint32_t ng) const {
    if (nb == 0) return 0.0;
    double penalty;
    if (variant == PolicyVariant::A) {
      penalty = static_cast<double>(ng);
    } else {
      penalty = std::max(weight * static_cast<double>(ng) - static_cast<double>(nb), 0.0);
    }
    return std::min(static_cast<double>(nb) / (base + scale * penalty), 1.0);
  }
};

/// Read-only view of a constraint problem.
struct ProblemView {
  std::size_t variable_count = 0;
  std::span<const ReducedConstraint> constraints;
  bool infeasible = false;

  static ProblemView of(const QuotientProblem& qp) {
    return {qp.variable_count, qp.constraints, qp.infeasible};
  }
};

/// Incremental bookkeeping for one assignment. Constraints can be switched
/// off; inactive constraints contribute nothing to n_B, n_G or the active
/// violation count unless `count_inactive` is set.
class SearchState {
 public:
  explicit SearchState(ProblemView problem, bool count_inactive = false)
      : problem_(problem), count_inactive_(count_inactive) {
    for (const auto& c : problem.constraints) {
      if (c.size < 1 || c.size > 6) throw std::invalid_argument("SearchState: bad constraint size");
      for (var_t v : c)
        if (v >= problem.variable_count)
          throw std::invalid_argument("SearchState: variable id out of range");
    }
    const std::size_t nv = problem.variable_count;
    const std::size_t nc = problem.constraints.size();
    start_.assign(nv + 1, 0);
    for (const auto& c : problem.constraints)
      for (var_t v : c) ++start_[v + 1];
    for (std::size_t v = 0; v < nv; ++v) start_[v + 1] += start_[v];
    occ_.resize(start_.back());
    {
      std::vector<std::uint64_t> fill(start_.begin(), start_.end() - 1);
      for (std::uint32_t i = 0; i < nc; ++i)
        for (var_t v : problem.constraints[i]) occ_[fill[v]++] = i;
    }
    all_xor_.resize(nc);
    for (std::uint32_t i = 0; i < nc; ++i) {
      var_t x = 0;
      for (var_t v : problem.constraints[i]) x ^= v;
      all_xor_[i] = x;
    }
    assign_.assign(nv, 0);
    nb_.assign(nv, 0);
    ng_.assign(nv, 0);
    ones_.assign(nc, 0);
    set_xor_.assign(nc, 0);
    active_.assign(nc, 0);
    // Everything 0: every constraint is violated.
    violated_total_ = nc;
    if (count_inactive_)
      for (std::uint32_t i = 0; i < nc; ++i) contribute(i, +1);
  }

  std::size_t variable_count() const { return problem_.variable_count; }
  std::size_t constraint_count() const { return problem_.constraints.size(); }
  const Assignment& assignment() const { return assign_; }
  std::uint32_t nb(var_t v) const { return nb_[v]; }
  std::uint32_t ng(var_t v) const { return ng_[v]; }
  std::size_t violated_total() const { return violated_total_; }
  std::size_t violated_active() const { return violated_active_; }
  bool active(std::uint32_t c) const { return active_[c] != 0; }
  std::span<const std::uint32_t> occurrences(var_t v) const {
    return {occ_.data() + start_[v], occ_.data() + start_[v + 1]};
  }
  std::uint32_t degree(var_t v) const {
    return static_cast<std::uint32_t>(start_[v + 1] - start_[v]);
  }

  bool violated(std::uint32_t c) const {
    return ones_[c] == 0 || ones_[c] == problem_.constraints[c].size;
  }

  void set_active(std::uint32_t c, bool on) {
    if ((active_[c] != 0) == on) return;
    if (!count_inactive_) contribute(c, on ? +1 : -1);
    if (violated(c)) violated_active_ += on ? 1 : static_cast<std::size_t>(-1);
    active_[c] = on ? 1 : 0;
  }

  void flip(var_t v) {
    const bool up = assign_[v] == 0;
    for (std::uint64_t k = start_[v]; k < start_[v + 1]; ++k) {
      const std::uint32_t c = occ_[k];
      const bool counted = count_inactive_ || active_[c];
      const bool was = violated(c);
      if (counted) contribute(c, -1);
      ones_[c] = static_cast<std::uint8_t>(up ? ones_[c] + 1 : ones_[c] - 1);
      set_xor_[c] ^= v;
      const bool now = violated(c);
      if (was != now) {
        violated_total_ += now ? 1 : static_cast<std::size_t>(-1);
        if (active_[c]) violated_active_ += now ? 1 : static_cast<std::size_t>(-1);
      }
      if (counted) contribute(c, +1);
    }
    assign_[v] ^= 1U;
  }

  /// Starts recording which variables had n_B or n_G change.
  void track_changes() {
    track_ = true;
    is_dirty_.assign(variable_count(), 0);
  }

  /// Calls f(v) once for every variable changed since the last drain.
  template <class F>
  void drain_changes(F&& f) {
    for (var_t v : dirty_) {
      is_dirty_[v] = 0;
      f(v);
    }
    dirty_.clear();
  }

  /// From-scratch values, for coherence checks.
  struct Snapshot {
    std::vector<std::uint32_t> nb, ng;
    std::size_t violated_total = 0, violated_active = 0;
  };

  Snapshot recompute() const {
    Snapshot s;
    s.nb.assign(variable_count(), 0);
    s.ng.assign(variable_count(), 0);
    for (std::uint32_t i = 0; i < constraint_count(); ++i) {
      const auto& c = problem_.constraints[i];
      const bool bad = is_violated(c, assign_);
      s.violated_total += bad;
      if (active_[i]) s.violated_active += bad;
      if (!(count_inactive_ || active_[i])) continue;
      for (var_t v : c) {
        if (bad) {
          ++s.nb[v];
          continue;
        }
        // Would flipping v make every variable of c equal?
        bool others_equal = true;
        for (var_t w : c)
          if (w != v && assign_[w] == assign_[v]) others_equal = false;
        if (others_equal) ++s.ng[v];
      }
    }
    return s;
  }

 private:
  // Adds sign to n_B or n_G of the variables c currently affects.
  void contribute(std::uint32_t c, int sign) {
    const auto& con = problem_.constraints[c];
    const std::uint8_t k = ones_[c];
    const auto delta = static_cast<std::uint32_t>(sign);
    if (k == 0 || k == con.size) {
      for (var_t v : con) {
        nb_[v] += delta;
        touch(v);
      }
      return;
    }
    if (k == 1) {
      ng_[set_xor_[c]] += delta;
      touch(set_xor_[c]);
    }
    if (k == con.size - 1) {
      ng_[all_xor_[c] ^ set_xor_[c]] += delta;
      touch(all_xor_[c] ^ set_xor_[c]);
    }
  }

  void touch(var_t v) {
    if (track_ && !is_dirty_[v]) {
      is_dirty_[v] = 1;
      dirty_.push_back(v);
    }
  }

  ProblemView problem_;
  bool count_inactive_;
  std::vector<std::uint64_t> start_;
  std::vector<std::uint32_t> occ_;
  std::vector<var_t> all_xor_;
  Assignment assign_;
  std::vector<std::uint32_t> nb_, ng_;
  std::vector<std::uint8_t> ones_;
  std::vector<var_t> set_xor_;
  std::vector<std::uint8_t> active_;
  bool track_ = false;
  std::vector<std::uint8_t> is_dirty_;
  std::vector<var_t> dirty_;
  std::size_t violated_total_ = 0;
  std::size_t violated_active_ = 0;
};

/// A few recently flipped variables that may not be flipped. Each flip
/// overwrites a uniformly chosen slot.
class Blacklist {
 public:
  static constexpr var_t kEmpty = std::numeric_limits<var_t>::max();

  explicit Blacklist(std::size_t size) : slots_(size, kEmpty) {}

  bool contains(var_t v) const { return std::find(slots_.begin(), slots_.end(), v) != slots_.end(); }
  /// Returns the variable that was overwritten, or kEmpty.
  var_t record(var_t v, Rng& rng) {
    if (slots_.empty()) return kEmpty;
    var_t& slot = slots_[rng.below(slots_.size())];
    const var_t old = slot;
    slot = v;
    return old;
  }
  std::size_t size() const { return slots_.size(); }
  void clear() { std::fill(slots_.begin(), slots_.end(), kEmpty); }

 private:
  std::vector<var_t> slots_;
};

struct KappaEvent {
  enum class Kind { Reduce, Recovery, Reset };
  std::uint64_t flips;
  std::uint32_t kappa;
  Kind kind;
};

/// Literal: pick uniformly, then flip with probability P.
/// Direct: draw the flipped variable from the distribution the literal loop
/// induces, P-weighted over unlisted variables, and add a geometric number of
/// picks. Both run the same Markov chain on assignments.
enum class Sampling { Literal, Direct };

struct SolverConfig {
  FlipPolicy policy{};
  Sampling sampling = Sampling::Direct;
  std::size_t blacklist_size = 3;
  bool cutoff = true;
  std::uint64_t max_flips = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_picks = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  /// Flips without a cutoff reduction before the zero-cutoff recovery phase,
  /// which then lasts as many flips.
  std::uint64_t cutoff_budget = 2'000'000;
  /// Let ignored constraints still feed n_B and n_G.
  bool count_ignored = false;
  std::uint64_t log_interval = 1'000'000;
  std::function<void(const std::string&)> log;
  /// Polled every few thousand picks; true stops the search.
  std::function<bool()> should_stop;
  /// Called after every flip with the blacklist as it was at pick time.
  std::function<void(var_t, const Blacklist&, std::size_t violated, std::size_t best)> on_flip;
};

struct SolverStats {
  std::uint64_t seed = 0;
  std::uint64_t flips = 0;
  std::uint64_t picks = 0;
  std::size_t best_violated = 0;
  std::size_t final_violated = 0;
  std::uint32_t kappa = 0;
  std::uint64_t recoveries = 0;
  std::uint64_t resets = 0;
  std::uint64_t blacklist_clears = 0;
  double seconds = 0.0;
  std::vector<KappaEvent> kappa_trace;
};

enum class SolveStatus { Solved, Timeout, Cancelled };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Timeout: return "timeout";
    case SolveStatus::Cancelled: return "cancelled";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  Assignment assignment;  // the solution, or the best assignment seen
  SolverStats stats;
  bool solved() const { return status == SolveStatus::Solved; }
};

/// Deterministic summary line; wall time is deliberately left out.
inline std::string stats_line(const SolveResult& r) {
  std::ostringstream os;
  os << "stats status=" << to_string(r.status) << " seed=" << r.stats.seed
     << " flips=" << r.stats.flips << " picks=" << r.stats.picks
     << " violated=" << r.stats.final_violated << " best=" << r.stats.best_violated
     << " kappa=" << r.stats.kappa << " recoveries=" << r.stats.recoveries
     << " resets=" << r.stats.resets << " clears=" << r.stats.blacklist_clears;
  return os.str();
}

/// Score of a constraint: the largest number of constraints on any one of its
/// variables.
inline std::vector<std::uint32_t> constraint_scores(const SearchState& st, ProblemView problem) {
  std::vector<std::uint32_t> x(problem.constraints.size(), 0);
  for (std::uint32_t i = 0; i < x.size(); ++i)
    for (var_t v : problem.constraints[i]) x[i] = std::max(x[i], st.degree(v));
  return x;
}

namespace detail {

/// Complete binary tree of partial sums over non-negative weights. Parents
/// are recomputed from their children on update, so no rounding drift
/// accumulates.
class SumTree {
 public:
  explicit SumTree(std::size_t n) : size_(std::bit_ceil(std::max<std::size_t>(n, 1))), t_(2 * size_, 0.0) {}

  void set(std::size_t i, double w) {
    i += size_;
    if (t_[i] == w) return;
    t_[i] = w;
    for (i >>= 1; i > 0; i >>= 1) t_[i] = t_[2 * i] + t_[2 * i + 1];
  }
  double get(std::size_t i) const { return t_[size_ + i]; }
  double total() const { return t_[1]; }

  /// Leaf whose prefix interval contains u, for 0 <= u < total().
  std::size_t find(double u) const {
    std::size_t i = 1;
    while (i < size_) {
      if (u < t_[2 * i]) {
        i = 2 * i;
      } else {
        u -= t_[2 * i];
        i = 2 * i + 1;
      }
    }
    return i - size_;
  }

 private:
  std::size_t size_;
  std::vector<double> t_;
};

/// Tracks the best assignment seen without copying it on every improvement:
/// flips since the last snapshot go to a trail, the best state is a prefix.
class BestTracker {
 public:
  BestTracker(const Assignment& initial, std::size_t violated)
      : snapshot_(initial), best_(violated) {}

  void on_flip(var_t v, std::size_t violated) {
    trail_.push_back(v);
    if (violated < best_) {
      best_ = violated;
      best_len_ = trail_.size();
    }
    if (trail_.size() > 2 * snapshot_.size() + 1024) compact();
  }

  std::size_t best() const { return best_; }

  Assignment best_assignment() const {
    Assignment a = snapshot_;
    for (std::size_t i = 0; i < best_len_; ++i) a[trail_[i]] ^= 1U;
    return a;
  }

 private:
  void compact() {
    for (std::size_t i = 0; i < best_len_; ++i) snapshot_[trail_[i]] ^= 1U;
    trail_.erase(trail_.begin(), trail_.begin() + static_cast<std::ptrdiff_t>(best_len_));
    best_len_ = 0;
  }

  Assignment snapshot_;
  std::vector<var_t> trail_;
  std::size_t best_len_ = 0;
  std::size_t best_;
};

}  // namespace detail

/// The search loop. With `config.cutoff` the cutoff schedule is used:
/// constraints with score x <= kappa are ignored; kappa starts at the largest
/// score and drops to the next smaller score whenever all active constraints
/// hold. After `cutoff_budget` flips without a drop, kappa is held at 0 for
/// `cutoff_budget` flips, then restarts from the largest score.
inline SolveResult solve(ProblemView problem, const SolverConfig& config, std::uint64_t seed) {
  if (problem.infeasible) throw std::invalid_argument("solve: problem is infeasible");
  if (config.max_flips < 1) throw std::invalid_argument("solve: max_flips must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult result;
  result.stats.seed = seed;
  SearchState st(problem, config.count_ignored);
  if (config.sampling == Sampling::Direct) st.track_changes();
  Rng rng(seed);
  Blacklist blacklist(config.blacklist_size);
  // With no more free variables than slots, picks could stall forever.
  const bool use_blacklist = config.blacklist_size > 0 && problem.variable_count > config.blacklist_size;
  const std::size_t nc = problem.constraints.size();
  auto& stats = result.stats;

  // Constraints in activation order: score descending, then index.
  std::vector<std::uint32_t> scores, order, levels;
  std::size_t level = 0;      // kappa = levels[level], or 0 past the end
  std::size_t activated = 0;  // order[0..activated) are active
  if (config.cutoff) {
    scores = constraint_scores(st, problem);
    order.resize(nc);
    for (std::uint32_t i = 0; i < nc; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return scores[a] > scores[b]; });
    for (std::uint32_t i : order)
      if (levels.empty() || levels.back() != scores[i]) levels.push_back(scores[i]);
  } else {
    for (std::uint32_t i = 0; i < nc; ++i) st.set_active(i, true);
  }
  auto kappa = [&]() -> std::uint32_t { return level < levels.size() ? levels[level] : 0; };
  auto activate_down_to = [&](std::uint32_t k) {
    while (activated < nc && scores[order[activated]] > k) st.set_active(order[activated++], true);
  };
  auto reset_kappa = [&] {
    for (std::size_t i = 0; i < activated; ++i) st.set_active(order[i], false);
    activated = 0;
    level = 0;
  };
  stats.kappa = kappa();

  detail::BestTracker best(st.assignment(), st.violated_total());
  std::uint64_t flips_since_drop = 0;
  bool recovering = false;
  std::uint64_t next_log = config.log_interval;
  std::uint64_t steps = 0;

  // Direct sampling keeps every variable's flip probability in a sum tree,
  // weight 0 while blacklisted.
  const bool direct = config.sampling == Sampling::Direct;
  detail::SumTree weights(direct ? problem.variable_count : 0);
  auto weight_of = [&](var_t v) {
    if (use_blacklist && blacklist.contains(v)) return 0.0;
    return config.policy.probability(st.nb(v), st.ng(v));
  };
  if (direct)
    for (var_t v = 0; v < problem.variable_count; ++v) weights.set(v, weight_of(v));
  const auto n_vars = static_cast<double>(problem.variable_count);

  // Literal picking: when every variable with n_B > 0 is listed no flip can
  // happen and the blacklist would never change again. This is checked after
  // enough idle picks that the scan costs at most a quarter of a pick each.
  std::uint64_t idle_picks = 0;
  const std::uint64_t stall_check = std::max<std::uint64_t>(4096, 4 * problem.variable_count);
  auto stalled = [&] {
    for (var_t v = 0; v < problem.variable_count; ++v)
      if (st.nb(v) > 0 && !blacklist.contains(v)) return false;
    return true;
  };
  auto clear_blacklist = [&] {
    std::vector<var_t> listed;
    for (var_t v = 0; v < problem.variable_count && listed.size() < blacklist.size(); ++v)
      if (blacklist.contains(v)) listed.push_back(v);
    blacklist.clear();
    ++stats.blacklist_clears;
    if (direct)
      for (var_t v : listed) weights.set(v, weight_of(v));
  };

  auto finish = [&](SolveStatus status) {
    result.status = status;
    stats.final_violated = st.violated_total();
    stats.best_violated = best.best();
    stats.kappa = kappa();
    result.assignment = status == SolveStatus::Solved ? st.assignment() : best.best_assignment();
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  };

  while (true) {
    // Drop kappa while every active constraint holds.
    if (config.cutoff) {
      while (st.violated_active() == 0 && !recovering && level < levels.size()) {
        ++level;
        activate_down_to(kappa());
        flips_since_drop = 0;
        stats.kappa_trace.push_back({stats.flips, kappa(), KappaEvent::Kind::Reduce});
      }
    }
    if (st.violated_total() == 0 && st.violated_active() == 0) return finish(SolveStatus::Solved);
    if (stats.flips >= config.max_flips || stats.picks >= config.max_picks)
      return finish(SolveStatus::Timeout);
    if ((steps++ & 4095U) == 0) {
      if (config.should_stop && config.should_stop()) return finish(SolveStatus::Cancelled);
      if (std::isfinite(config.max_seconds) &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
              config.max_seconds)
        return finish(SolveStatus::Timeout);
    }

    var_t v;
    if (direct) {
      st.drain_changes([&](var_t w) { weights.set(w, weight_of(w)); });
      const double total = weights.total();
      if (!(total > 0.0)) {
        if (!use_blacklist) throw std::logic_error("solve: violated constraints but nothing to flip");
        clear_blacklist();
        continue;
      }
      // Picks up to and including the accepted one: geometric in total / N.
      std::uint64_t picks = 1;
      const double hit = total / n_vars;
      if (hit < 1.0) {
        const double extra = std::floor(std::log(1.0 - rng.unit()) / std::log1p(-hit));
        picks += extra < 4e18 ? static_cast<std::uint64_t>(extra) : std::uint64_t{4'000'000'000'000'000'000};
      }
      if (config.max_picks - stats.picks < picks) {
        stats.picks = config.max_picks;
        return finish(SolveStatus::Timeout);
      }
      stats.picks += picks;
      do {
        v = static_cast<var_t>(weights.find(rng.unit() * total));
      } while (weights.get(v) <= 0.0);
    } else {
      ++stats.picks;
      if (use_blacklist && ++idle_picks >= stall_check) {
        idle_picks = 0;
        if (stalled()) clear_blacklist();
      }
      v = static_cast<var_t>(rng.below(problem.variable_count));
      if (use_blacklist && blacklist.contains(v)) continue;
      const double p = config.policy.probability(st.nb(v), st.ng(v));
      if (p <= 0.0 || (p < 1.0 && rng.unit() >= p)) continue;
      idle_picks = 0;
    }

    st.flip(v);
    ++stats.flips;
    best.on_flip(v, st.violated_total());
    if (config.on_flip) config.on_flip(v, blacklist, st.violated_total(), best.best());
    if (use_blacklist) {
      const var_t evicted = blacklist.record(v, rng);
      if (direct) {
        weights.set(v, 0.0);
        if (evicted != Blacklist::kEmpty) weights.set(evicted, weight_of(evicted));
      }
    }

    if (config.log && stats.flips >= next_log) {
      next_log += config.log_interval;
      std::ostringstream os;
      os << "flips=" << stats.flips << " violated=" << st.violated_total() << " best=" << best.best()
         << " kappa=" << kappa();
      config.log(os.str());
    }

    if (config.cutoff) {
      ++flips_since_drop;
      if (flips_since_drop >= config.cutoff_budget) {
        flips_since_drop = 0;
        if (!recovering) {
          recovering = true;
          ++stats.recoveries;
          level = levels.size();
          activate_down_to(0);
          stats.kappa_trace.push_back({stats.flips, 0, KappaEvent::Kind::Recovery});
        } else {
          recovering = false;
          ++stats.resets;
          reset_kappa();
          stats.kappa_trace.push_back({stats.flips, kappa(), KappaEvent::Kind::Reset});
        }
      }
    }
  }
}

inline SolveResult solve_basic(ProblemView problem, const FlipPolicy& policy, std::uint64_t seed,
                               std::uint64_t max_flips, std::size_t blacklist_size = 0) {
  SolverConfig config;
  config.policy = policy;
  config.cutoff = false;
  config.blacklist_size = blacklist_size;
  config.max_flips = max_flips;
  return solve(problem, config, seed);
}

inline SolveResult solve_cutoff(ProblemView problem, SolverConfig config, std::uint64_t seed) {
  config.cutoff = true;
  return solve(problem, config, seed);
}

struct AttemptsResult {
  std::optional<std::size_t> winner;  // index of the first solved attempt
  std::vector<SolveResult> attempts;
};

/// Independent attempts in parallel; the first solution stops the rest.
inline AttemptsResult run_attempts(ProblemView problem, const SolverConfig& config,
                                   std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) throw std::invalid_argument("run_attempts: need at least one seed");
  {
    std::vector<std::uint64_t> sorted(seeds.begin(), seeds.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("run_attempts: seeds must be distinct");
  }
  AttemptsResult out;
  out.attempts.resize(seeds.size());
  if (seeds.size() == 1) {
    out.attempts[0] = solve(problem, config, seeds[0]);
    if (out.attempts[0].solved()) out.winner = 0;
    return out;
  }
  std::atomic<bool> found{false};
  std::mutex mu;
  std::vector<std::exception_ptr> errors(seeds.size());
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      threads.emplace_back([&, i] {
        SolverConfig local = config;
        local.should_stop = [&] {
          return found.load(std::memory_order_relaxed) || (config.should_stop && config.should_stop());
        };
        if (config.log)
          local.log = [&, i](const std::string& line) {
            std::lock_guard lock(mu);
            config.log("attempt " + std::to_string(i) + " " + line);
          };
        try {
          out.attempts[i] = solve(problem, local, seeds[i]);
          if (out.attempts[i].solved()) {
            std::lock_guard lock(mu);
            if (!out.winner) out.winner = i;
            found = true;
          }
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace graham

#endif  // GRAHAM_SOLVER_HPP_
