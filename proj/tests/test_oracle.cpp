/// Brute-force oracle, corpora and theorem batteries.

#include "support.hpp"

using namespace bccore;
using namespace bccore::testing;

namespace {

const FiniteRing Z6 = FiniteRing::integers_mod(6);
using ZIn = InverseInputs<FiniteElement>;

std::string stable(const TheoremBatteryReport& rep) { return to_json(rep, false).dump(); }

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force(Z6, InverseKind::left_dual_bc_core, ZIn::bc(z(1), z(2), z(2))).witnesses,
            ElementSet(std::vector<std::uint32_t>{2}));
  EXPECT_EQ(brute_force(Z6, InverseKind::left_dual_bc_core, ZIn::bc(z(5), z(3), z(1))).witnesses,
            ElementSet(std::vector<std::uint32_t>{1, 3, 5}));
  for (auto r : {Z6, FiniteRing::matrices_mod(2, 2)}) {
    for (auto a : r.elements())
      ASSERT_EQ(brute_force(r, InverseKind::left_dual_bc_core, ZIn::bc(a, r.zero(), r.one())).witnesses.size(), r.order());
  }
}

/// Every kind with a compute path: the canonical answer exists exactly when
/// the brute-force set is non-empty, and lies inside it.
TEST(BruteForce, AgreesWithComputeForEveryKind) {
  for (auto r : {FiniteRing::integers_mod(8), FiniteRing::integers_mod(12), FiniteRing::matrices_mod(2, 2)}) {
    const FiniteOracle o(r);
    for (auto kind : kAllInverseKinds) {
      if (!has_compute_path(kind)) continue;
      for (auto a : r.elements()) {
        for (auto b : r.elements()) {
          std::vector<ZIn> ins;
          if (arity(kind) == Arity::element_bc) {
            for (auto c : r.elements()) ins.push_back(ZIn::bc(a, b, c));
          } else if (arity(kind) == Arity::element_v) {
            ins.push_back(ZIn::with_v(a, b));
          } else if (b == r.zero()) {
            ins.push_back(ZIn::element(a));
          }
          for (const auto& in : ins) {
            const auto rep = compute(r, kind, in);
            const auto set = brute_force(o, kind, in);
            ASSERT_EQ(rep.candidate.has_value(), !set.witnesses.empty()) << to_string(kind);
            if (rep.candidate) {
              ASSERT_TRUE(set.witnesses.contains(*rep.candidate)) << to_string(kind);
              ASSERT_TRUE(rep.overall) << to_string(kind);
            }
          }
        }
      }
    }
  }
}

TEST(Battery, ExistenceCriteriaZ6) {
  const auto rep = run_battery(Theorem::existence_criteria, Z6, std::nullopt, 0);
  EXPECT_EQ(rep.tuples, 216u);
  EXPECT_TRUE(rep.disagreements.empty());
  EXPECT_TRUE(rep.clean());
}

TEST(Battery, Equivalence14MatZp2) {
  const auto rep = run_battery(Theorem::equivalence_14, FiniteRing::matrices_mod(2, 2), std::nullopt, 0);
  EXPECT_EQ(rep.tuples, 4096u);
  EXPECT_TRUE(rep.clean());
}

TEST(Battery, DecompositionRationalCorpus) {
  MatrixCorpusSpec spec;
  spec.dim_max = 3;
  spec.count = 200;
  spec.seed = 11;
  const auto rep = run_battery(Theorem::decomposition, spec);
  EXPECT_EQ(rep.tuples, 200u);
  EXPECT_TRUE(rep.clean());
}

TEST(Battery, EveryTheoremCleanOnZ6) {
  for (auto th : kAllTheorems) {
    const auto rep = run_battery(th, Z6, std::nullopt, 0);
    EXPECT_TRUE(rep.clean()) << rep.theorem << ": " << (rep.disagreements.empty() ? "" : rep.disagreements.front().tuple);
    EXPECT_GT(rep.tuples, 0u) << rep.theorem;
  }
}

TEST(Battery, SampledMatZp3) {
  const auto rep = run_battery(Theorem::existence_criteria, FiniteRing::matrices_mod(3, 2), 2000, 7);
  EXPECT_EQ(rep.drawn, 2000u);
  EXPECT_EQ(rep.seed, 7u);
  EXPECT_TRUE(rep.clean());
}

TEST(Battery, CorpusTooLarge) {
  EXPECT_THROW(run_battery(Theorem::existence_criteria, FiniteRing::integers_mod(100), std::nullopt, 0), CorpusTooLarge);
}

TEST(Battery, ReportsIndependentOfWorkerCount) {
  MatrixCorpusSpec spec;
  spec.count = 60;
  BatteryOptions one, four;
  four.workers = 4;
  EXPECT_EQ(stable(run_battery(Theorem::formulas, spec, one)), stable(run_battery(Theorem::formulas, spec, four)));
  const auto m2 = FiniteRing::matrices_mod(2, 2);
  EXPECT_EQ(stable(run_battery(Theorem::coincidence, m2, std::nullopt, 0, one)),
            stable(run_battery(Theorem::coincidence, m2, std::nullopt, 0, four)));
}

TEST(Corpus, DeterministicForSeed) {
  MatrixCorpusSpec spec;
  spec.count = 10;
  spec.seed = 42;
  const auto first = random_matrix_corpus(spec, 3);
  const auto second = random_matrix_corpus(spec, 3);
  EXPECT_EQ(first, second);
  spec.seed = 43;
  EXPECT_NE(first, random_matrix_corpus(spec, 3));
}

TEST(Corpus, DimensionOneIsScalar) {
  MatrixCorpusSpec spec;
  spec.dim_min = spec.dim_max = 1;
  spec.count = 20;
  for (const auto& t : random_matrix_corpus(spec, 3))
    for (const auto& m : t) EXPECT_EQ(m.rows() * m.cols(), 1u);
  EXPECT_TRUE(run_battery(Theorem::existence_criteria, spec).clean());
}

TEST(Corpus, NilpotentFamily) {
  MatrixCorpusSpec spec;
  spec.family = MatrixFamily::nilpotent;
  spec.dim_min = 2;
  spec.count = 50;
  for (const auto& t : random_matrix_corpus(spec, 1)) {
    const auto r = q_ring(t[0].rows());
    EXPECT_EQ(power(r, t[0], static_cast<unsigned>(t[0].rows())), r.zero());
  }
}

TEST(Theorems, NamesRoundTrip) {
  for (auto th : kAllTheorems) EXPECT_EQ(parse_theorem(to_string(th)), th);
  EXPECT_EQ(std::size(kAllTheorems), 16u);
}
