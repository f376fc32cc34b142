#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pseudocat/theory.hpp"

using namespace pcat;

TEST_CASE("bar_map reproduces the worked block-permutation value") {
  // f = (1->3, 2->2, 3->4), arities (1,2,3,1): bar maps (1..6) to (4,5,6,2,3,7)
  IndexMap f{3, 4, {2, 1, 3}};
  IndexMap bar = bar_map(f, {1, 2, 3, 1});
  CHECK(bar.dom == 6);
  CHECK(bar.cod == 7);
  CHECK(bar.map == std::vector<int>{3, 4, 5, 1, 2, 6});  // 0-based: (4,5,6,2,3,7)
}

TEST_CASE("bar_map of the identity is the identity") {
  IndexMap f = IndexMap::id(3);
  IndexMap bar = bar_map(f, {2, 1, 3});
  CHECK(bar == IndexMap::id(6));
}

TEST_CASE("bar_map at a constant map agrees with definition unfolding") {
  // f constant at 1 on {1,2}, arities (2,1): every block maps to block 1
  IndexMap f{2, 2, {0, 0}};
  IndexMap bar = bar_map(f, {2, 1});
  // oracle by unfolding: block B1 = {1,2}; order B_{f1}, B_{f2} = B1, B1
  CHECK(bar.dom == 4);
  CHECK(bar.cod == 3);
  CHECK(bar.map == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("bar_map composition law with transported arities") {
  // bar over g∘f equals bar_g after bar_f with arities pulled back along g
  for (int k = 0; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m) {
        std::vector<IndexMap> fs, gs;
        {
          IndexMap f{k, l, std::vector<int>(k, 0)};
          for (;;) {
            fs.push_back(f);
            int i = k - 1;
            for (; i >= 0; --i) {
              if (++f.map[i] < l) break;
              f.map[i] = 0;
            }
            if (i < 0) break;
          }
          IndexMap g{l, m, std::vector<int>(l, 0)};
          for (;;) {
            gs.push_back(g);
            int i = l - 1;
            for (; i >= 0; --i) {
              if (++g.map[i] < m) break;
              g.map[i] = 0;
            }
            if (i < 0) break;
          }
        }
        std::vector<int> arities;
        for (int i = 0; i < m; ++i) arities.push_back(1 + (i % 3));
        for (auto& f : fs)
          for (auto& g : gs) {
            IndexMap lhs = bar_map(compose_map(g, f), arities);
            std::vector<int> pulled;
            for (int i = 0; i < l; ++i) pulled.push_back(arities[g.map[i]]);
            IndexMap rhs = compose_map(bar_map(g, arities), bar_map(f, pulled));
            CHECK(lhs == rhs);
          }
      }
}

TEST_CASE("iota_wrap wraps the domain around the codomain") {
  IndexMap i23 = iota_wrap(2, 3);
  CHECK(i23.map == std::vector<int>{0, 1, 2, 0, 1, 2});
}

TEST_CASE("block_sum of identities is the identity; iota_block selects a block") {
  CHECK(block_sum({IndexMap::id(2), IndexMap::id(3)}) == IndexMap::id(5));
  IndexMap b = iota_block(1, {1, 2, 3});
  CHECK(b.dom == 2);
  CHECK(b.cod == 6);
  CHECK(b.map == std::vector<int>{1, 2});
}

TEST_CASE("tuple_compose satisfies the projection and identity laws") {
  auto t = cmon_theory();
  // pr_i ∘ (w_1..w_l) = w_i
  std::vector<Word> ws = {Word{2, {1, 1}}, Word{2, {2, 0}}, Word{2, {0, 1}}};
  for (int i = 0; i < 3; ++i) {
    auto r = tuple_compose(*t, {t->projection(i, 3)}, ws, 2);
    REQUIRE(r.size() == 1);
    CHECK(t->eq(r[0], ws[i]));
  }
  // compose with the projection tuple recovers the inputs
  std::vector<Word> prs = {t->projection(0, 2), t->projection(1, 2)};
  auto r = tuple_compose(*t, ws, prs, 2);
  for (int i = 0; i < 3; ++i) CHECK(t->eq(r[i], ws[i]));
  // associativity on tuples of commutative-monoid words of size <= 3
  std::vector<Word> us = {Word{1, {2}}, Word{1, {1}}};
  auto left = tuple_compose(*t, tuple_compose(*t, ws, prs, 2), us, 1);
  auto right = tuple_compose(*t, ws, tuple_compose(*t, prs, us, 1), 1);
  REQUIRE(left.size() == right.size());
  for (std::size_t i = 0; i < left.size(); ++i) CHECK(t->eq(left[i], right[i]));
}

TEST_CASE("trivial theory: axioms, projections, counts") {
  auto t = trivial_theory();
  CHECK(check_theory(*t, 3, 3).ok());
  CHECK(t->enumerate(0, 5).empty());
  CHECK(t->enumerate(3, 5).size() == 3);
  // eq on all same-arity words holds at arity <= 1
  CHECK(t->eq(t->unit(), t->unit()));
  CHECK(t->enumerate(1, 5).size() == 1);
}

TEST_CASE("cmon theory: gamma substitutes and collects coefficients") {
  auto t = cmon_theory();
  // gamma(x1+x2; x1+x1, x1) has coefficient vector (2,1)
  Word sum{2, {1, 1}};
  Word twox{1, {2}};
  Word onex{1, {1}};
  Word r = t->gamma(sum, {twox, onex});
  CHECK(r == Word{2, {2, 1}});
  CHECK(check_theory(*t, 2, 3).ok());
}

TEST_CASE("end theory of the terminal category has one word per arity") {
  auto t = end_theory(terminal_cat());
  for (int n = 0; n <= 3; ++n) CHECK(t->enumerate(n, 1).size() == 1);
  CHECK(check_theory(*t, 2, 2).ok());
}

TEST_CASE("end theory of the walking arrow passes the axiom suite") {
  auto t = end_theory(walking_arrow());
  CHECK(t->enumerate(1, 1).size() == 3);  // functors arrow -> arrow
  CHECK(check_theory(*t, 2, 2).ok());
}

TEST_CASE("free theory: enumeration, axioms, and the depth-2 binary-generator words") {
  auto t = free_theory({{"mu", 2}}, 2);
  // T(1) with no generators applied: just x1 at size 0
  auto t0 = free_theory({}, 3);
  auto w1 = t0->enumerate(1, 3);
  REQUIRE(w1.size() == 1);
  CHECK(t0->eq(w1[0], t0->unit()));

  auto w2 = t->enumerate(2, 1);
  // x1, x2, mu(x1,x1), mu(x1,x2), mu(x2,x1), mu(x2,x2)
  CHECK(w2.size() == 6);
  CHECK(check_theory(*t, 2, 2).ok());
}

TEST_CASE("free theory equivariance instance is syntactic equality") {
  auto t = free_theory({{"mu", 2}}, 2);
  // gamma(w_f, w1..wl) = gamma(w, w_{f1}..w_{fk})_{bar f} over depth-<=2 data
  for (auto& w : t->enumerate(2, 1))
    for (auto& wa : t->enumerate(1, 1))
      for (auto& wb : t->enumerate(2, 1)) {
        std::vector<Word> ws = {wa, wb};
        std::vector<IndexMap> maps;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) maps.push_back(IndexMap{2, 2, {a, b}});
        for (auto& f : maps) {
          std::vector<Word> pick = {ws[f.map[0]], ws[f.map[1]]};
          Word lhs = t->gamma(t->subst(w, f), ws);
          Word rhs = t->subst(t->gamma(w, pick), bar_map(f, {wa.arity, wb.arity}));
          CHECK(t->eq(lhs, rhs));
        }
      }
}

TEST_CASE("a broken substitution is caught by the axiom suite") {
  // wrap cmon with a substitution that forgets to collect coefficients
  class Broken final : public Theory {
   public:
    Broken() : inner_(cmon_theory()) {}
    std::string name() const override { return "broken"; }
    std::vector<Word> enumerate(int a, int s) const override { return inner_->enumerate(a, s); }
    Word gamma(const Word& w, const std::vector<Word>& ws) const override {
      return inner_->gamma(w, ws);
    }
    Word subst(const Word& w, const IndexMap& f) const override {
      Word r{f.cod, std::vector<long long>(f.cod, 0)};
      for (int i = 0; i < w.arity; ++i) r.data[f.map[i]] = w.data[i];  // overwrite, not add
      return r;
    }
    Word unit() const override { return inner_->unit(); }
    bool eq(const Word& a, const Word& b) const override { return a == b; }
    int size(const Word& w) const override { return inner_->size(w); }
    std::string show(const Word& w) const override { return inner_->show(w); }

   private:
    TheoryPtr inner_;
  } broken;
  auto rep = check_theory(broken, 2, 3);
  CHECK(!rep.ok());
}

TEST_CASE("theory morphisms: identity, trivial-to-cmon, fold, and a broken one") {
  auto c = cmon_theory();
  CHECK(check_theory_morphism(identity_theory_morphism(c), 2, 3).ok());
  CHECK(check_theory_morphism(trivial_to(c), 3, 3).ok());

  // fold of the free theory on one binary generator onto cmon: mu -> x1+x2
  auto f = free_theory({{"mu", 2}}, 3);
  TheoryMorphism fold{f, c, {}, "fold"};
  fold.map = [c, f](const Word& w) {
    std::function<Word(std::size_t&)> rec = [&](std::size_t& pos) -> Word {
      long long v = w.data[pos++];
      if (v >= 0) return c->projection(static_cast<int>(v), w.arity);
      Word a = rec(pos);
      Word b = rec(pos);
      Word sum = c->gamma(Word{2, {1, 1}}, {a, b});
      // both arguments live on the same variables; merge the doubled blocks
      IndexMap merge{2 * w.arity, w.arity, {}};
      for (int i = 0; i < 2 * w.arity; ++i) merge.map.push_back(i % w.arity);
      return c->subst(sum, merge);
    };
    std::size_t pos = 0;
    return rec(pos);
  };
  CHECK(check_theory_morphism(fold, 2, 2).ok());

  TheoryMorphism broken = fold;
  broken.map = [c](const Word& w) { return Word{w.arity, std::vector<long long>(w.arity, 0)}; };
  CHECK(!check_theory_morphism(broken, 2, 2).ok());
}

TEST_CASE("monad on the trivial theory returns the category itself") {
  auto t = trivial_theory();
  auto X = walking_arrow();
  auto M = monad_c(t, X, 2, 2);
  CHECK(M.law_report.ok());
  CHECK(M.cx->check().ok());
  CHECK(M.cx->num_objects() == X->num_objects());
  CHECK(M.cx->num_mors() == X->num_mors());
  CHECK(M.eta.check().ok());
}

TEST_CASE("monad on cmon over discrete-2 counts multisets") {
  auto t = cmon_theory();
  auto X = discrete_cat(2);
  int bound = 3;
  auto M = monad_c(t, X, bound, bound);
  CHECK(M.law_report.ok());
  CHECK(M.cx->check().ok());
  // oracle: multisets over two elements of total size <= bound, counted
  // directly as pairs (i,j) with i+j <= bound
  int expect = 0;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= bound; ++j)
      if (i + j <= bound) ++expect;
  CHECK(M.cx->num_objects() == expect);
}

TEST_CASE("monad unit laws: eta then mu is the identity on depth-1 classes") {
  auto t = cmon_theory();
  auto X = discrete_cat(2);
  auto M = monad_c(t, X, 2, 2);
  for (std::size_t c = 0; c < M.objs.size(); ++c) {
    int r = M.mu_obj(t->unit(), {M.objs[c]});
    CHECK(r == static_cast<int>(c));
  }
}
