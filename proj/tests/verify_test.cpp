#include <gtest/gtest.h>

#include "support.hpp"
#include "weylspecht/verify.hpp"

namespace {

using namespace weylspecht;
using fixtures::build;

TEST(Useful, A3Example) {
  const auto b = build(fixtures::kA3);
  EXPECT_TRUE(is_useful_subsystem(b->group, b->module.psi(), b->module.psi_prime()));
  EXPECT_TRUE(is_useful_system(b->group, b->module.psi(), b->module.psi_prime()));
}

TEST(Useful, G2IsUsefulSystemOnly) {
  const auto b = build(fixtures::kG2);
  EXPECT_TRUE(is_useful_system(b->group, b->module.psi(), b->module.psi_prime()));
  EXPECT_FALSE(is_useful_subsystem(b->group, b->module.psi(), b->module.psi_prime()));
  const auto w = sign_involution_witness(b->group, b->module.psi(), b->module.psi_prime());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(b->group.element(*w), word_to_element(b->phi, Word{2, 1, 2, 1, 2}));
  const GoodnessReport g = is_good_subsystem(b->module);
  EXPECT_FALSE(g.good);
  EXPECT_FALSE(g.useful);
}

TEST(Useful, OverlapIsRejected) {
  const RootSystem a2 = build_root_system("A2");
  const WeylGroup w = generate_group(a2);
  const std::vector<Root> j{{1, 0}};
  const Subsystem psi = closure_from_simples(a2, j);
  EXPECT_THROW(require_disjoint(psi, psi), std::invalid_argument);
  EXPECT_THROW(is_useful_system(w, psi, psi), std::invalid_argument);
  const TabloidModule m(w, psi, psi);
  EXPECT_EQ(is_good_subsystem(m).reason, "Psi' meets Psi");
}

TEST(Good, D4Case1) {
  const auto b = build(fixtures::kD4a);
  const GoodnessReport g = is_good_subsystem(b->module);
  EXPECT_TRUE(g.good);
  EXPECT_TRUE(g.witnesses.empty());
  // d Psi misses Psi' exactly for d = e and d = tau_1 tau_2 tau_3.
  std::vector<Word> disjoint;
  for (const Tabloid& t : b->module.tabloids()) {
    if (std::none_of(t.key.begin(), t.key.end(), [&](RootId r) { return b->module.psi_prime().contains(r); }))
      disjoint.push_back(b->group.reduced_word(t.rep));
  }
  EXPECT_EQ(disjoint, (std::vector<Word>{{}, {1, 2, 3}}));
}

TEST(Good, D4Case2) {
  const auto b = build(fixtures::kD4b);
  EXPECT_TRUE(is_good_subsystem(b->module).good);
  EXPECT_EQ(b->module.normalizer().of_subsystem.size(), 12u);
}

// Useful sub-system implies useful system; the two agree when N(J) is trivial.
// An obstruction forces e_{J,J'} = 0.
class PredicateCorpus : public ::testing::TestWithParam<const char*> {};

TEST_P(PredicateCorpus, UsefulImpliesUsefulSystemAndObstructionKills) {
  const RootSystem phi = build_root_system(GetParam());
  const WeylGroup group = generate_group(phi);
  for (const auto& inst : fixtures::small_pairs(phi)) {
    const TabloidModule m(group, closure_from_simples(phi, inst.psi), closure_from_simples(phi, inst.psi_prime));
    const bool sub = is_useful_subsystem(group, m.psi(), m.psi_prime());
    const bool sys = is_useful_system(group, m.psi(), m.psi_prime());
    if (sub) EXPECT_TRUE(sys);
    if (m.normalizer().of_simples.size() == 1) EXPECT_EQ(sub, sys);
    if (sign_involution_witness(group, m.psi(), m.psi_prime())) {
      EXPECT_TRUE(polytabloid_coefficients(m, 0).empty());
      EXPECT_FALSE(sub);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, PredicateCorpus, ::testing::Values("A3", "G2", "B2"));

TEST(CyclicSubmodule, TabloidGeneratesEverything) {
  const auto b = build(fixtures::kD4b);
  const Field q = Field::rationals();
  EXPECT_EQ(cyclic_submodule(b->module, {b->module.basis_vector(0, q)}).rank(), 16u);
  SparseVector all(16, q);
  for (std::size_t t = 0; t < 16; ++t) all.set(t, Scalar::one(q));
  EXPECT_EQ(cyclic_submodule(b->module, {all}).rank(), 1u);
}

TEST(Dichotomy, ExtremeSubmodules) {
  const auto b = build(fixtures::kD4a);
  const Field q = Field::rationals();
  const auto s = build_specht_module(b->module, q);
  EXPECT_EQ(classify_submodule(s, SubspaceBasis::full(4, q)), Dichotomy::kContainsS);
  EXPECT_EQ(classify_submodule(s, SubspaceBasis(4, q)), Dichotomy::kInsidePerp);
  SparseVector ones(4, q);
  for (std::size_t t = 0; t < 4; ++t) ones.set(t, Scalar::one(q));
  EXPECT_EQ(classify_submodule(s, cyclic_submodule(b->module, {ones})), Dichotomy::kInsidePerp);
  // A vector neither in S nor orthogonal to it, with no W-invariance imposed.
  SubspaceBasis u(4, q);
  u.insert(b->module.basis_vector(0, q));
  EXPECT_EQ(classify_submodule(s, u), Dichotomy::kViolation);
}

TEST(Probe, NoViolationsAndDeterministic) {
  for (const auto& inst : {fixtures::kD4a, fixtures::kD4b, fixtures::kA3}) {
    const auto b = build(inst);
    for (const char* field : {"Q", "F2", "F3"}) {
      const auto s = build_specht_module(b->module, Field::parse(field));
      const ProbeReport r = submodule_theorem_probe(s, 30, 11);
      EXPECT_EQ(r.violations, 0u) << inst.type << " " << field;
      EXPECT_EQ(r.contains_s + r.inside_perp, 30u);
      const ProbeReport again = submodule_theorem_probe(s, 30, 11);
      EXPECT_EQ(again.contains_s, r.contains_s);
      EXPECT_TRUE(quotient_irreducibility_probe(s)) << inst.type << " " << field;
    }
  }
}

}  // namespace
