#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trisym/braid.hpp"
#include "trisym/errors.hpp"
#include "trisym/pd.hpp"

using namespace trisym;
using braid::BraidWord;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, w);
}

// Rewrites of a word by braid relations, for the invariance property tests.
BraidWord apply_relation_somewhere(std::mt19937& rng, const BraidWord& w) {
  // insert sigma_i sigma_i^-1, or a braid-relation conjugate swap
  std::uniform_int_distribution<int> gen(1, w.strands - 1);
  std::uniform_int_distribution<std::size_t> pos(0, w.letters.size());
  BraidWord out = w;
  int i = gen(rng);
  auto it = out.letters.begin() + pos(rng);
  it = out.letters.insert(it, -i);
  out.letters.insert(it, i);
  return out;
}

}  // namespace

TEST_CASE("word algebra basics") {
  BraidWord s1(2, {1}), s1i(2, {-1});
  CHECK(braid::free_reduce(braid::compose(s1, s1i)).letters.empty());

  BraidWord w(3, {1, 2});
  BraidWord wi = braid::invert(w);
  CHECK(wi.letters == std::vector<int>{-2, -1});

  BraidWord r = braid::free_reduce(BraidWord(3, {1, 2, -2, 1}));
  CHECK(r.letters == std::vector<int>{1, 1});

  CHECK_THROWS_AS(braid::compose(BraidWord(2, {1}), BraidWord(3, {1})), InputError);
  CHECK_THROWS_AS(BraidWord(2, {2}), InputError);
  CHECK_THROWS_AS(BraidWord(2, {0}), InputError);
}

TEST_CASE("artin equality on the defining relations") {
  CHECK(braid::artin_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK(braid::artin_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(braid::artin_equal(BraidWord(2, {1}), BraidWord(2, {-1})));
  CHECK_FALSE(braid::artin_equal(BraidWord(3, {1}), BraidWord(3, {2})));
}

TEST_CASE("artin equality respects composition and relation rewrites") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + trial % 3;
    BraidWord a = random_word(rng, n, 8);
    BraidWord a2 = apply_relation_somewhere(rng, a);
    BraidWord b = random_word(rng, n, 8);
    CHECK(braid::artin_equal(a, a2));
    CHECK(braid::artin_equal(braid::compose(a, b), braid::compose(a2, b)));
    CHECK(a.exponent_sum() == a2.exponent_sum());
    CHECK(braid::underlying_permutation(a) == braid::underlying_permutation(a2));
  }
}

TEST_CASE("full twist shape and centrality") {
  BraidWord d2 = braid::full_twist(2);
  CHECK(d2.letters == std::vector<int>{1, 1});
  BraidWord d3 = braid::full_twist(3);
  CHECK(d3.letters.size() == 6);
  CHECK(d3.exponent_sum() == 6);
  CHECK_THROWS_AS(braid::full_twist(1), InputError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 4;
    BraidWord w = random_word(rng, n, 10);
    BraidWord tw = braid::full_twist(n);
    CHECK(braid::artin_equal(braid::compose(tw, w), braid::compose(w, tw)));
  }
}

TEST_CASE("free word length cap fails loudly") {
  // (sigma_1 sigma_2^-1)^k images grow exponentially; a tiny cap must trip.
  BraidWord w(3, {});
  for (int i = 0; i < 40; ++i) {
    w.letters.push_back(1);
    w.letters.push_back(-2);
  }
  CHECK_THROWS_AS(braid::artin_equal(w, w, 100), BudgetError);
}

TEST_CASE("verify_factorization stages") {
  using FR = braid::FactorizationRecord;
  FR ok;
  ok.degree = 2;
  ok.factors = {{BraidWord(2, {}), 2}};
  Verdict v = braid::verify_factorization(ok);
  CHECK(v.status == Status::Holds);

  FR bad_sum;
  bad_sum.degree = 2;
  bad_sum.factors = {{BraidWord(2, {}), 1}};
  v = braid::verify_factorization(bad_sum);
  CHECK(v.status == Status::Violated);
  CHECK(v.witness == "exponent-sum");

  FR bad_exp;
  bad_exp.degree = 2;
  bad_exp.factors = {{BraidWord(2, {}), -1}};
  v = braid::verify_factorization(bad_exp);
  CHECK(v.status == Status::Violated);
  CHECK(v.witness == "exponent-set");

  // d=3 with two cusp factors: exponent sum matches, the braid does not.
  FR cusps;
  cusps.degree = 3;
  cusps.factors = {{BraidWord(3, {}), 3}, {BraidWord(3, {}), 3}};
  v = braid::verify_factorization(cusps);
  CHECK(v.status == Status::Violated);
  // sigma_1^6 has nontrivial permutation?  No: even power, permutation is
  // the identity, so this must fail at the artin stage.
  CHECK(v.witness == "artin");

  // d=2 via two conjugated single twists: sigma_1 * (w sigma_1 w^-1).
  FR conj;
  conj.degree = 2;
  conj.factors = {{BraidWord(2, {1}), 1}, {BraidWord(2, {}), 1}};
  v = braid::verify_factorization(conj);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("verify_factorization never holds when the exponent sum fails") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> expd(0, 3);
  const int exps[4] = {-2, 1, 2, 3};
  for (int trial = 0; trial < 30; ++trial) {
    braid::FactorizationRecord f;
    f.degree = 2 + trial % 2;
    int count = 1 + trial % 4;
    long long sum = 0;
    for (int i = 0; i < count; ++i) {
      int e = exps[expd(rng)];
      sum += e;
      f.factors.push_back({random_word(rng, f.degree, 3), e});
    }
    Verdict v = braid::verify_factorization(f);
    if (sum != (long long)f.degree * (f.degree - 1)) {
      CHECK(v.status == Status::Violated);
      CHECK(v.witness == "exponent-sum");
    }
  }
}

TEST_CASE("closures") {
  pd::PlanarDiagram unknot1 = braid::closure_pd(BraidWord(2, {1}));
  CHECK(unknot1.crossings.size() == 1);
  CHECK(unknot1.components() == 1);

  pd::PlanarDiagram trefoil = braid::closure_pd(BraidWord(2, {1, 1, 1}));
  CHECK(trefoil.crossings.size() == 3);
  CHECK(trefoil.components() == 1);
  CHECK(trefoil.n_plus() == 3);

  pd::PlanarDiagram hopf = braid::closure_pd(BraidWord(2, {1, 1}));
  CHECK(hopf.components() == 2);

  pd::PlanarDiagram split = braid::closure_pd(BraidWord(3, {1}));
  CHECK(split.components() == 2);
  CHECK(split.free_loops == 1);
}

TEST_CASE("transverse self-linking") {
  CHECK(braid::transverse_self_linking(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(braid::transverse_self_linking(BraidWord(1, {})) == -1);
  // positive stabilization preserves sl, negative drops it by 2
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    BraidWord w = random_word(rng, n, 6);
    BraidWord pos(n + 1, w.letters);
    pos.letters.push_back(n);
    BraidWord neg(n + 1, w.letters);
    neg.letters.push_back(-n);
    long long sl = braid::transverse_self_linking(w);
    CHECK(braid::transverse_self_linking(pos) == sl);
    CHECK(braid::transverse_self_linking(neg) == sl - 2);
  }
}

TEST_CASE("pd validation and mirror involution") {
  pd::PlanarDiagram t = braid::closure_pd(BraidWord(2, {1, 1, 1}));
  pd::PlanarDiagram m = t.mirror();
  m.validate();
  CHECK(m.n_minus() == 3);
  pd::PlanarDiagram mm = m.mirror();
  for (std::size_t i = 0; i < t.crossings.size(); ++i) {
    CHECK(mm.crossings[i].e == t.crossings[i].e);
    CHECK(mm.crossings[i].sign == t.crossings[i].sign);
  }
}
