#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "graham/quotient.hpp"

using namespace graham;

namespace {

Profile prof(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3, std::uint64_t p4,
             std::uint64_t p5, std::uint64_t p6) {
  return {0, p1, p2, p3, p4, p5, p6};
}

bool satisfies(const std::vector<ReducedConstraint>& cs, const Assignment& a) {
  return count_violated(cs, a) == 0;
}

ConstraintSystem raw_system(int n, const GroupSpec& g) {
  const OrbitMap m = edge_orbits(n, g);
  return {m.count(), collect_constraints(n, m.orbit_of, m.count() == edge_count(n))};
}

}  // namespace

TEST(Normalize, ParityPairMerge) {
  ConstraintSystem s{4, {ReducedConstraint::of({0, 1}), ReducedConstraint::of({1, 2}),
                         ReducedConstraint::of({0, 2, 3})}};
  const auto r = normalize(s);
  EXPECT_FALSE(r.infeasible);
  EXPECT_EQ(r.system.variable_count, 2U);
  EXPECT_EQ(r.var_map[0], r.var_map[2]);
  EXPECT_EQ(r.var_map[1], r.var_map[3]);
  ASSERT_EQ(r.merges.size(), 2U);
  EXPECT_EQ(r.merges[0].pivot, 1U);
  // {0,2,3} becomes {0,3} after the first merge, which then pairs with {0,1}.
  EXPECT_EQ(profile_of(r.system.constraints), prof(0, 1, 0, 0, 0, 0));
}

TEST(Normalize, OddCycleIsInfeasible) {
  ConstraintSystem s{3, {ReducedConstraint::of({0, 1}), ReducedConstraint::of({1, 2}),
                         ReducedConstraint::of({0, 2})}};
  EXPECT_TRUE(normalize(s).infeasible);
}

TEST(Normalize, Subsumption) {
  ConstraintSystem s{5, {ReducedConstraint::of({0, 1, 2}), ReducedConstraint::of({0, 1, 2, 3}),
                         ReducedConstraint::of({1, 2, 3, 4}), ReducedConstraint::of({0, 1, 2})}};
  const auto r = normalize(s);
  EXPECT_EQ(r.subsumed, 1U);
  EXPECT_EQ(profile_of(r.system.constraints), prof(0, 0, 1, 1, 0, 0));
}

TEST(Normalize, RejectsBadInput) {
  EXPECT_THROW(normalize({2, {ReducedConstraint::of({0, 5})}}), std::invalid_argument);
}

TEST(Normalize, ParityMergeTruthTable) {
  // {a,b} and {b,c} both satisfied forces a == c.
  for (unsigned m = 0; m < 8; ++m) {
    const Assignment x{static_cast<std::uint8_t>(m & 1), static_cast<std::uint8_t>((m >> 1) & 1),
                       static_cast<std::uint8_t>((m >> 2) & 1)};
    const bool ok = !is_violated(ReducedConstraint::of({0, 1}), x) &&
                    !is_violated(ReducedConstraint::of({1, 2}), x);
    if (ok) {
      EXPECT_EQ(x[0], x[2]);
    }
  }
}

TEST(Normalize, SubsumptionTruthTable) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int size_b = 2 + static_cast<int>(rng() % 5);
    std::vector<var_t> b(static_cast<std::size_t>(size_b));
    std::iota(b.begin(), b.end(), var_t{0});
    const int size_a = 1 + static_cast<int>(rng() % (size_b - 1));
    std::shuffle(b.begin(), b.end(), rng);
    ReducedConstraint cb, ca;
    for (int i = 0; i < size_b; ++i) cb.slots[cb.size++] = b[i];
    for (int i = 0; i < size_a; ++i) ca.slots[ca.size++] = b[i];
    cb.canonicalize();
    ca.canonicalize();
    for (unsigned m = 0; m < 64; ++m) {
      Assignment x(6);
      for (int i = 0; i < 6; ++i) x[i] = (m >> i) & 1U;
      if (!is_violated(ca, x)) {
        EXPECT_FALSE(is_violated(cb, x));
      }
    }
  }
}

TEST(Normalize, OrderIndependent) {
  for (const char* name : {"S_9", "S_10"}) {
    const GroupSpec g = find_group(name);
    ConstraintSystem base = raw_system(g.degree, g);
    const auto ref = normalize(base);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
      ConstraintSystem s = base;
      std::shuffle(s.constraints.begin(), s.constraints.end(), rng);
      std::vector<var_t> relabel(s.variable_count);
      std::iota(relabel.begin(), relabel.end(), var_t{0});
      std::shuffle(relabel.begin(), relabel.end(), rng);
      for (auto& c : s.constraints) {
        for (int i = 0; i < c.size; ++i) c.slots[i] = relabel[c.slots[i]];
        c.canonicalize();
      }
      const auto r = normalize(s);
      EXPECT_EQ(r.system.variable_count, ref.system.variable_count) << name;
      EXPECT_EQ(profile_of(r.system.constraints), profile_of(ref.system.constraints)) << name;
      EXPECT_EQ(r.infeasible, ref.infeasible);
    }
  }
}

TEST(Quotient, IdentityN3) {
  const auto qp = build_quotient(3, identity_group(3));
  EXPECT_EQ(qp.variable_count, 28U);
  EXPECT_EQ(qp.profile, prof(0, 0, 0, 0, 0, 12));
  EXPECT_FALSE(qp.infeasible);
}

TEST(Quotient, S9) {
  const auto qp = build_quotient(9, find_group("S_9"));
  EXPECT_EQ(qp.variable_count, 111U);
  EXPECT_EQ(qp.profile, prof(0, 6, 0, 106, 0, 141));
  EXPECT_FALSE(qp.infeasible);
  EXPECT_EQ(qp.raw_variable_count, 115U);
}

TEST(Quotient, S10Infeasible) {
  const auto qp = build_quotient(10, find_group("S_10"));
  EXPECT_TRUE(qp.infeasible);
  EXPECT_GE(qp.profile[1], 1U);
}

TEST(Quotient, S5At10) {
  const auto qp = build_quotient(10, find_group("S_5"));
  EXPECT_EQ(qp.variable_count, 5432U);
  EXPECT_EQ(qp.profile, prof(0, 12, 64, 3090, 420, 62015));
}

TEST(Quotient, InvariantsHold) {
  const auto qp = build_quotient(9, find_group("S_9"));
  std::uint64_t total = 0;
  for (int k = 1; k <= 6; ++k) total += qp.profile[k];
  EXPECT_EQ(total, qp.constraints.size());
  for (const auto& c : qp.constraints) {
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_EQ(std::adjacent_find(c.begin(), c.end()), c.end());
    for (var_t v : c) EXPECT_LT(v, qp.variable_count);
  }
  for (edge_t e = 0; e < edge_count(9); ++e) ASSERT_LT(qp.edge_to_var(e), qp.variable_count);
}

TEST(Expand, IdentityIsIdentityMap) {
  const auto qp = build_quotient(3, identity_group(3));
  std::mt19937_64 rng(4);
  Assignment a(qp.variable_count);
  for (auto& x : a) x = rng() & 1U;
  const Colouring c = expand_assignment(qp, a);
  EXPECT_EQ(c.bits, a);
}

TEST(Expand, AllZeroSquare) {
  const auto qp = build_quotient(2, identity_group(2));
  const Colouring c = expand_assignment(qp, Assignment(qp.variable_count, 0));
  EXPECT_EQ(verify(c).violated, 1U);
}

TEST(Expand, WrongLengthRejected) {
  const auto qp = build_quotient(2, identity_group(2));
  EXPECT_THROW(expand_assignment(qp, Assignment(3, 0)), std::invalid_argument);
}

TEST(Expand, ResultIsSymmetric) {
  const GroupSpec g = find_group("S_5");
  const auto qp = build_quotient(10, g);
  std::mt19937_64 rng(8);
  Assignment a(qp.variable_count);
  for (auto& x : a) x = rng() & 1U;
  EXPECT_TRUE(is_symmetric(expand_assignment(qp, a), g));
}

// Exhaustive soundness in both directions for small groups: an assignment of
// the reduced variables satisfies the reduced constraints iff its expansion
// has no monochromatic planar quad; and every violation-free symmetric
// colouring (over raw orbit variables) induces a satisfying assignment.
TEST(Soundness, ExhaustiveSmallGroups) {
  std::vector<std::pair<int, GroupSpec>> cases{
      {3, symmetric_group(3)}, {4, symmetric_group(4)}, {5, symmetric_group(5)},
      {6, symmetric_group(6)}, {4, make_group("C_4", 4, {"(1 2 3 4)"})},
      {4, make_group("V", 4, {"(1 2)(3 4)", "(1 3)(2 4)"})},
      {5, make_group("D_5", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"})},
      {3, make_group("swap", 3, {"(1 2)"})}};
  int checked = 0;
  for (const auto& [n, g] : cases) {
    const auto qp = build_quotient(n, g);
    if (qp.variable_count <= 20) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << qp.variable_count); ++m) {
        Assignment a(qp.variable_count);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (m >> i) & 1U;
        const bool reduced_ok = !qp.infeasible && satisfies(qp.constraints, a);
        const bool full_ok = verify(expand_assignment(qp, a), 0).valid();
        ASSERT_EQ(reduced_ok, full_ok) << g.name << "@" << n << " m=" << m;
      }
      ++checked;
    }
    if (qp.raw_variable_count <= 20) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << qp.raw_variable_count); ++m) {
        Colouring c(n);
        for (edge_t e = 0; e < c.bits.size(); ++e) c.bits[e] = (m >> qp.orbits.orbit_of[e]) & 1U;
        if (!verify(c, 0).valid()) continue;
        ASSERT_FALSE(qp.infeasible);
        ASSERT_TRUE(satisfies(qp.constraints, restrict_colouring(qp, c))) << g.name;
        // Merged variables really are forced equal.
        ASSERT_EQ(expand_assignment(qp, restrict_colouring(qp, c)).bits, c.bits);
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 6);
}

TEST(Dump, Format) {
  const auto qp = build_quotient(2, identity_group(2));
  std::ostringstream os;
  write_quotient_dump(os, qp);
  EXPECT_EQ(os.str(), "n=2 group=I vars=6 infeasible=0\n0 1 2 3 4 5\n");
}
