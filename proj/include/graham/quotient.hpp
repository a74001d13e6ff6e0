#ifndef GRAHAM_QUOTIENT_HPP_
#define GRAHAM_QUOTIENT_HPP_

// The colouring problem reduced by a coordinate-permutation symmetry.
//
// Every edge orbit becomes one variable. A planar quad becomes the set of
// distinct variables of its six edges; it is violated iff all of them carry
// the same colour. The constraint set is then normalized to a fixpoint:
//   - a one-variable constraint makes the problem infeasible,
//   - {a,b} and {b,c} force a = c, so a and c are merged,
//   - a constraint that is a superset of another is dropped.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graham/colouring.hpp"
#include "graham/cube.hpp"
#include "graham/groups.hpp"

namespace graham {

using var_t = std::uint32_t;

struct ReducedConstraint {
  std::array<var_t, 6> slots{};
  std::uint8_t size = 0;

  std::span<const var_t> vars() const { return {slots.data(), size}; }
  const var_t* begin() const { return slots.data(); }
  const var_t* end() const { return slots.data() + size; }

  /// Sorts and removes duplicate ids.
  void canonicalize() {
    std::sort(slots.begin(), slots.begin() + size);
    size = static_cast<std::uint8_t>(std::unique(slots.begin(), slots.begin() + size) -
                                     slots.begin());
    std::fill(slots.begin() + size, slots.end(), var_t{0});
  }

  static ReducedConstraint of(std::initializer_list<var_t> ids) {
    if (ids.size() < 1 || ids.size() > 6)
      throw std::invalid_argument("ReducedConstraint: 1..6 variables");
    ReducedConstraint c;
    for (var_t v : ids) c.slots[c.size++] = v;
    c.canonicalize();
    return c;
  }

  friend bool operator==(const ReducedConstraint& a, const ReducedConstraint& b) {
    return a.size == b.size && std::equal(a.begin(), a.end(), b.begin());
  }
  /// Orders by size, then lexicographically.
  friend bool operator<(const ReducedConstraint& a, const ReducedConstraint& b) {
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Constraint counts indexed by size; index 0 is unused.
using Profile = std::array<std::uint64_t, 7>;

inline Profile profile_of(std::span<const ReducedConstraint> cs) {
  Profile p{};
  for (const auto& c : cs) ++p[c.size];
  return p;
}

struct ConstraintSystem {
  std::size_t variable_count = 0;
  std::vector<ReducedConstraint> constraints;
};

/// One parity-pair merge: constraints {a,pivot} and {pivot,c} identified a, c.
struct Merge {
  var_t a;
  var_t c;
  var_t pivot;
};

struct NormalizeResult {
  ConstraintSystem system;          // dense variables, canonical order
  std::vector<var_t> var_map;       // input variable -> output variable
  std::vector<Merge> merges;        // in input variable ids
  bool infeasible = false;
  std::size_t subsumed = 0;
  int rounds = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), var_t{0});
  }
  var_t find(var_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Roots are always the smaller id.
  bool unite(var_t a, var_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
    return true;
  }

 private:
  std::vector<var_t> parent_;
};

inline void sort_unique(std::vector<ReducedConstraint>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

/// Drops every constraint that strictly contains another. Returns the count.
inline std::size_t remove_subsumed(std::vector<ReducedConstraint>& cs, std::size_t nvars) {
  // cs is sorted by size, so candidates for subsuming come first.
  if (cs.empty() || cs.front().size == cs.back().size) return 0;
  std::vector<std::uint32_t> start(nvars + 1, 0);
  for (const auto& c : cs)
    for (var_t v : c) ++start[v + 1];
  for (std::size_t v = 0; v < nvars; ++v) start[v + 1] += start[v];
  std::vector<std::uint32_t> occ(start.back());
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint32_t i = 0; i < cs.size(); ++i)
      for (var_t v : cs[i]) occ[fill[v]++] = i;
  }
  std::vector<bool> dropped(cs.size(), false);
  std::size_t count = 0;
  const std::uint8_t max_size = cs.back().size;
  for (std::uint32_t i = 0; i < cs.size() && cs[i].size < max_size; ++i) {
    if (dropped[i]) continue;
    const auto& a = cs[i];
    var_t pivot = a.slots[0];
    for (var_t v : a)
      if (start[v + 1] - start[v] < start[pivot + 1] - start[pivot]) pivot = v;
    for (std::uint32_t k = start[pivot]; k < start[pivot + 1]; ++k) {
      const std::uint32_t j = occ[k];
      if (dropped[j] || cs[j].size <= a.size) continue;
      if (std::includes(cs[j].begin(), cs[j].end(), a.begin(), a.end())) {
        dropped[j] = true;
        ++count;
      }
    }
  }
  if (count == 0) return 0;
  std::size_t w = 0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!dropped[i]) cs[w++] = cs[i];
  cs.resize(w);
  return count;
}

}  // namespace detail

/// Applies deduplication, parity-pair merging and subsumption until nothing
/// changes, then renumbers the surviving variables densely (by smallest
/// member) and sorts the constraints canonically.
inline NormalizeResult normalize(ConstraintSystem input) {
  NormalizeResult out;
  const std::size_t nvars = input.variable_count;
  auto& cs = input.constraints;
  for (auto& c : cs) {
    c.canonicalize();
    if (c.size == 0) throw std::invalid_argument("normalize: empty constraint");
    for (var_t v : c)
      if (v >= nvars) throw std::invalid_argument("normalize: variable id out of range");
  }
  detail::UnionFind uf(nvars);
  detail::sort_unique(cs);
  bool changed = true;
  while (changed) {
    changed = false;
    ++out.rounds;

    // Parity pairs: every partner of a variable b in some {b,x} joins one class.
    std::vector<var_t> first_partner(nvars, static_cast<var_t>(-1));
    bool merged = false;
    for (const auto& c : cs) {
      if (c.size != 2) continue;
      for (int side = 0; side < 2; ++side) {
        const var_t b = c.slots[side];
        const var_t x = c.slots[1 - side];
        if (first_partner[b] == static_cast<var_t>(-1)) {
          first_partner[b] = x;
        } else if (uf.find(first_partner[b]) != uf.find(x)) {
          out.merges.push_back({first_partner[b], x, b});
          uf.unite(first_partner[b], x);
          merged = true;
        }
      }
    }
    if (merged) {
      for (auto& c : cs) {
        for (int i = 0; i < c.size; ++i) c.slots[i] = uf.find(c.slots[i]);
        c.canonicalize();
      }
      detail::sort_unique(cs);
      changed = true;
    }

    const std::size_t dropped = detail::remove_subsumed(cs, nvars);
    out.subsumed += dropped;
    if (dropped > 0) changed = true;
  }

  out.var_map.assign(nvars, 0);
  std::vector<var_t> dense(nvars, static_cast<var_t>(-1));
  var_t next = 0;
  for (var_t v = 0; v < nvars; ++v) {
    const var_t r = uf.find(v);
    if (dense[r] == static_cast<var_t>(-1)) dense[r] = next++;
    out.var_map[v] = dense[r];
  }
  for (auto& c : cs) {
    for (int i = 0; i < c.size; ++i) c.slots[i] = out.var_map[c.slots[i]];
    c.canonicalize();
  }
  std::sort(cs.begin(), cs.end());
  out.infeasible = !cs.empty() && cs.front().size == 1;
  out.system.variable_count = next;
  out.system.constraints = std::move(cs);
  return out;
}

namespace detail {

/// Open-addressing set of constraints, storing indices into a vector.
class ConstraintSet {
 public:
  explicit ConstraintSet(std::vector<ReducedConstraint>& store) : store_(store) {
    table_.assign(1U << 16, kEmpty);
  }

  void insert(const ReducedConstraint& c) {
    if ((store_.size() + 1) * 2 > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    for (std::size_t i = hash(c) & mask;; i = (i + 1) & mask) {
      if (table_[i] == kEmpty) {
        table_[i] = static_cast<std::uint32_t>(store_.size());
        store_.push_back(c);
        return;
      }
      if (store_[table_[i]] == c) return;
    }
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffU;

  static std::size_t hash(const ReducedConstraint& c) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ c.size;
    for (var_t v : c) {
      h ^= v;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 32;
    }
    return static_cast<std::size_t>(h);
  }

  void grow() {
    std::vector<std::uint32_t> bigger(table_.size() * 2, kEmpty);
    const std::size_t mask = bigger.size() - 1;
    for (std::uint32_t idx = 0; idx < store_.size(); ++idx) {
      std::size_t i = hash(store_[idx]) & mask;
      while (bigger[i] != kEmpty) i = (i + 1) & mask;
      bigger[i] = idx;
    }
    table_.swap(bigger);
  }

  std::vector<ReducedConstraint>& store_;
  std::vector<std::uint32_t> table_;
};

}  // namespace detail

/// Maps every planar quad of K(C_n) through an edge-to-variable map and keeps
/// one copy of each distinct variable set. Quads are streamed, never stored.
inline std::vector<ReducedConstraint> collect_constraints(int n,
                                                          std::span<const std::uint32_t> var_of_edge,
                                                          bool injective) {
  std::vector<ReducedConstraint> out;
  auto reduce = [&](vertex_t a, vertex_t b, vertex_t c, vertex_t d) {
    ReducedConstraint r;
    r.size = 6;
    r.slots = {var_of_edge[edge_index_unchecked(a, b)], var_of_edge[edge_index_unchecked(a, c)],
               var_of_edge[edge_index_unchecked(a, d)], var_of_edge[edge_index_unchecked(b, c)],
               var_of_edge[edge_index_unchecked(b, d)], var_of_edge[edge_index_unchecked(c, d)]};
    r.canonicalize();
    return r;
  };
  if (injective) {
    // Distinct quads have distinct edge sets, so nothing can collide.
    out.reserve(static_cast<std::size_t>(count_row(std::max(n, 2)).quads));
    for_each_planar_quad_raw(n, [&](vertex_t a, vertex_t b, vertex_t c, vertex_t d) {
      out.push_back(reduce(a, b, c, d));
    });
  } else {
    detail::ConstraintSet set(out);
    for_each_planar_quad_raw(n, [&](vertex_t a, vertex_t b, vertex_t c, vertex_t d) {
      set.insert(reduce(a, b, c, d));
    });
  }
  return out;
}

struct QuotientProblem {
  int n = 0;
  std::string group;
  std::size_t variable_count = 0;
  std::vector<ReducedConstraint> constraints;
  OrbitMap orbits;
  std::vector<var_t> orbit_to_var;
  std::vector<Merge> merges;  // orbit ids
  bool infeasible = false;
  Profile profile{};
  // Before merging and subsumption: orbit count and deduplicated profile.
  std::size_t raw_variable_count = 0;
  Profile raw_profile{};

  var_t edge_to_var(edge_t e) const { return orbit_to_var[orbits.orbit_of[e]]; }
};

inline QuotientProblem build_quotient(int n, const GroupSpec& g) {
  if (n < 2) throw std::invalid_argument("build_quotient: n must be >= 2");
  QuotientProblem qp;
  qp.n = n;
  qp.group = g.name;
  qp.orbits = edge_orbits(n, g);
  qp.raw_variable_count = qp.orbits.count();
  const bool injective = qp.orbits.count() == edge_count(n);
  ConstraintSystem raw;
  raw.variable_count = qp.orbits.count();
  try {
    raw.constraints = collect_constraints(n, qp.orbits.orbit_of, injective);
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("build_quotient: out of memory collecting constraints for " +
                             g.name + " at n=" + std::to_string(n));
  }
  qp.raw_profile = profile_of(raw.constraints);
  NormalizeResult norm = normalize(std::move(raw));
  qp.variable_count = norm.system.variable_count;
  qp.constraints = std::move(norm.system.constraints);
  qp.orbit_to_var = std::move(norm.var_map);
  qp.merges = std::move(norm.merges);
  qp.infeasible = norm.infeasible;
  qp.profile = profile_of(qp.constraints);
  return qp;
}

inline bool is_violated(const ReducedConstraint& c, std::span<const std::uint8_t> a) {
  const std::uint8_t first = a[c.slots[0]];
  for (int i = 1; i < c.size; ++i)
    if (a[c.slots[i]] != first) return false;
  return true;
}

inline std::size_t count_violated(std::span<const ReducedConstraint> cs,
                                  std::span<const std::uint8_t> a) {
  std::size_t k = 0;
  for (const auto& c : cs) k += is_violated(c, a) ? 1 : 0;
  return k;
}

/// Full colouring in which every edge takes the colour of its variable.
inline Colouring expand_assignment(const QuotientProblem& qp, std::span<const std::uint8_t> a) {
  if (a.size() != qp.variable_count)
    throw std::invalid_argument("expand_assignment: assignment has " + std::to_string(a.size()) +
                                " values, problem has " + std::to_string(qp.variable_count) +
                                " variables");
  Colouring c(qp.n);
  c.symmetry = qp.group;
  for (edge_t e = 0; e < c.bits.size(); ++e) c.bits[e] = a[qp.edge_to_var(e)] & 1U;
  return c;
}

/// The assignment a symmetric colouring induces (colour of each variable's
/// first edge). Callers should check symmetry first.
inline Assignment restrict_colouring(const QuotientProblem& qp, const Colouring& c) {
  Assignment a(qp.variable_count, 0);
  std::vector<bool> seen(qp.variable_count, false);
  for (edge_t e = 0; e < c.bits.size(); ++e) {
    const var_t v = qp.edge_to_var(e);
    if (!seen[v]) {
      seen[v] = true;
      a[v] = c.bits[e];
    }
  }
  return a;
}

/// Debug dump: header line, then one constraint per line.
inline void write_quotient_dump(std::ostream& os, const QuotientProblem& qp) {
  os << "n=" << qp.n << " group=" << qp.group << " vars=" << qp.variable_count
     << " infeasible=" << (qp.infeasible ? 1 : 0) << '\n';
  for (const auto& c : qp.constraints) {
    for (int i = 0; i < c.size; ++i) os << (i ? " " : "") << c.slots[i];
    os << '\n';
  }
}

}  // namespace graham

#endif  // GRAHAM_QUOTIENT_HPP_
