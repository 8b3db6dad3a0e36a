#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "weylspecht/verify.hpp"

namespace {

using namespace weylspecht;

using fixtures::build;
using fixtures::kA3;
using fixtures::kD4a;
using fixtures::kD4b;
using fixtures::kG2;

// Literal definition: kappa_{wJ'} {wJ} summed over the group generated by the
// reflections in w(J'), signs from inversion counts.
std::map<std::size_t, long> literal_polytabloid(const TabloidModule& m, ElementId w) {
  const RootSystem& phi = m.root_system();
  const GroupElement& g = m.group().element(w);
  std::vector<Root> gens;
  for (RootId j : m.psi_prime().simples()) gens.push_back(phi.root(g(j)));
  std::map<std::size_t, long> out;
  for (const GroupElement& s : subgroup_generated(phi, gens)) {
    out[m.tabloid_of(compose(s, g))] += sign(phi, s);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TEST(Tabloids, A3Displays) {
  const auto b = build(kA3);
  const TabloidModule& m = b->module;
  ASSERT_EQ(m.dimension(), 3u);
  const char* displays[] = {"{100,001;110}", "{110,011;100}", "{010,111;-100}"};
  const Word reps[] = {{}, {2}, {1, 2}};
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_EQ(format_tabloid(b->phi, m.tabloids()[t]), displays[t]);
    EXPECT_EQ(b->group.reduced_word(m.tabloids()[t].rep), reps[t]);
  }
}

TEST(Tabloids, D4Displays) {
  const auto b = build(kD4a);
  const char* displays[] = {"{1000,0100,0001;1110}", "{1000,0110,0001;1100}",
                            "{1100,0010,0101;1000}", "{0100,0010,1101;-1000}"};
  ASSERT_EQ(b->module.dimension(), 4u);
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(format_tabloid(b->phi, b->module.tabloids()[t]), displays[t]);
}

TEST(Tabloids, ActionIsAGroupAction) {
  const auto b = build(kD4b);
  const TabloidModule& m = b->module;
  EXPECT_EQ(m.dimension(), 16u);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const ElementId x = rng() % b->group.order(), y = rng() % b->group.order();
    const std::size_t t = rng() % m.dimension();
    EXPECT_EQ(m.act(b->group.element(b->group.multiply(x, y)), t),
              m.act(b->group.element(x), m.act(b->group.element(y), t)));
  }
  for (ElementId x = 0; x < b->group.order(); ++x) EXPECT_EQ(m.tabloid_of(x), m.act(b->group.element(x), 0));
}

TEST(Polytabloid, A3Example) {
  const auto b = build(kA3);
  const auto e = polytabloid_coefficients(b->module, 0);
  EXPECT_EQ(e, (std::map<std::size_t, long>{{0, 1}, {2, -1}}));
}

TEST(Polytabloid, D4Example) {
  const auto b = build(kD4a);
  EXPECT_EQ(polytabloid_coefficients(b->module, 0), (std::map<std::size_t, long>{{0, 1}, {3, -1}}));
}

TEST(Polytabloid, G2VanishesAtIdentity) {
  const auto b = build(kG2);
  EXPECT_EQ(b->module.column_group().size(), 6u);
  EXPECT_TRUE(polytabloid_coefficients(b->module, 0).empty());
  const auto s = build_specht_module(b->module, Field::rationals(), true);
  EXPECT_EQ(s.dimension(), 0u);
  EXPECT_EQ(s.cross_check, true);
}

// Equivariance and agreement with the literal definition on every element.
TEST(Polytabloid, MatchesLiteralDefinition) {
  for (const auto& inst : {kA3, kG2, kD4a, kD4b}) {
    const auto b = build(inst);
    const Field q = Field::rationals();
    const SparseVector e = polytabloid(b->module, 0, q);
    for (ElementId w = 0; w < b->group.order(); ++w) {
      ASSERT_EQ(polytabloid_coefficients(b->module, w), literal_polytabloid(b->module, w)) << inst.type;
      ASSERT_EQ(polytabloid(b->module, w, q), b->module.act(b->group.element(w), e));
    }
  }
}

TEST(Polytabloid, KappaOnBasisVectorIsPolytabloid) {
  const auto b = build(kD4b);
  const Field q = Field::rationals();
  EXPECT_EQ(apply_kappa(b->module, b->module.basis_vector(0, q)), polytabloid(b->module, 0, q));
}

TEST(SpechtModule, Dimensions) {
  struct Case {
    fixtures::Instance inst;
    const char* field;
    QuotientDimensions dims;
  };
  // D4 case 1 Gram matrix on e_1, e_2, e_3 is [[2,1,1],[1,2,1],[1,1,2]] with
  // determinant 4: nondegenerate over Q and F3, corank 1 over F2.
  const Case cases[] = {
      {kA3, "Q", {2, 0, 2}}, {kD4a, "Q", {3, 0, 3}}, {kD4a, "F3", {3, 0, 3}},
      {kD4a, "F2", {3, 1, 2}}, {kD4b, "Q", {6, 0, 6}}, {kG2, "Q", {0, 0, 0}},
  };
  for (const auto& c : cases) {
    const auto b = build(c.inst);
    const auto s = build_specht_module(b->module, Field::parse(c.field), true);
    EXPECT_EQ(quotient_dimension(s), c.dims) << c.inst.type << " " << c.field;
    EXPECT_EQ(s.cross_check, true);
  }
}

TEST(SpechtModule, D4ActionOnGeneratingPolytabloids) {
  const auto b = build(kD4a);
  const Field q = Field::rationals();
  const auto s = build_specht_module(b->module, q);
  const Word words[] = {{}, {3}, {2, 3}};
  std::vector<SparseVector> gens;
  for (const Word& w : words) gens.push_back(polytabloid(b->module, b->group.id_of(word_to_element(b->phi, w)), q));
  const Frame frame(gens);
  const GroupElement w = word_to_element(b->phi, Word{1, 3, 2});
  const Matrix m = matrix_of(s, w, frame);
  // w e1 = e2 - e3, w e2 = -e3, w e3 = e1 - e3 (columns). Tabloid-level:
  // w {J} = {t3 J}, w {t3 J} = {t1t2t3 J}, w {t2t3 J} = {J}, w {t1t2t3 J} = {t2t3 J}.
  const long expect[3][3] = {{0, 0, 1}, {1, 0, 0}, {-1, -1, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), Scalar(q, expect[i][j])) << i << "," << j;
  EXPECT_EQ(character_value(s, w), Scalar(q, -1L));
  EXPECT_EQ(matrix_of(s, w).trace(), Scalar(q, -1L));
  EXPECT_EQ(character_norm(s), 1);
}

TEST(SpechtModule, MatricesFormARepresentation) {
  const auto b = build(kD4b);
  const auto s = build_specht_module(b->module, Field::rationals());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const ElementId x = rng() % b->group.order(), y = rng() % b->group.order();
    const GroupElement& gx = b->group.element(x);
    const GroupElement& gy = b->group.element(y);
    EXPECT_EQ(matrix_of(s, compose(gx, gy)), matrix_of(s, gx) * matrix_of(s, gy));
    EXPECT_EQ(character_value(s, gx), matrix_of(s, gx).trace());
  }
  EXPECT_EQ(character_norm(s), 1);
}

TEST(SpechtModule, CharacterNormNeedsCharacteristicZero) {
  const auto b = build(kD4a);
  const auto s = build_specht_module(b->module, Field::prime(5));
  EXPECT_THROW(character_norm(s), std::domain_error);
  const auto g2 = build(kG2);
  const auto zero = build_specht_module(g2->module, Field::rationals());
  EXPECT_THROW(matrix_of(zero, GroupElement::identity(12)), std::invalid_argument);
}

// Lemma-level properties over every useful pair of the A3 and G2 corpora.
class UsefulCorpus : public ::testing::TestWithParam<const char*> {};

TEST_P(UsefulCorpus, PolytabloidLemmas) {
  const RootSystem phi = build_root_system(GetParam());
  const WeylGroup group = generate_group(phi);
  const Field q = Field::rationals();
  std::size_t useful_count = 0;
  for (const auto& inst : fixtures::small_pairs(phi)) {
    const TabloidModule m(group, closure_from_simples(phi, inst.psi), closure_from_simples(phi, inst.psi_prime));
    if (!is_useful_subsystem(group, m.psi(), m.psi_prime())) continue;
    ++useful_count;
    const auto e = polytabloid_coefficients(m, 0);
    EXPECT_FALSE(e.empty());
    for (ElementId w = 0; w < group.order(); ++w)
      for (const auto& [t, c] : polytabloid_coefficients(m, w)) EXPECT_TRUE(c == 1 || c == -1);

    std::set<std::size_t> reachable;  // tabloids {sigma rho J}
    for (ElementId s : m.column_group())
      for (ElementId r : m.normalizer().of_subsystem) reachable.insert(m.tabloid_of(group.multiply(s, r)));
    const SparseVector ev = polytabloid(m, 0, q);
    const bool good = is_good_subsystem(m).good;
    for (std::size_t t = 0; t < m.dimension(); ++t) {
      const Tabloid& tab = m.tabloids()[t];
      const bool meets = std::any_of(tab.key.begin(), tab.key.end(), [&](RootId r) { return m.psi_prime().contains(r); });
      EXPECT_EQ(e.contains(t), reachable.contains(t));
      if (e.contains(t)) EXPECT_FALSE(meets);
      const SparseVector k = apply_kappa(m, m.basis_vector(t, q));
      if (meets) EXPECT_TRUE(k.is_zero());
      if (good) EXPECT_TRUE(k.is_zero() || k == ev || k == -ev);
    }
  }
  EXPECT_GT(useful_count, 0u);
}

INSTANTIATE_TEST_SUITE_P(Corpus, UsefulCorpus, ::testing::Values("A3", "G2"));

}  // namespace
