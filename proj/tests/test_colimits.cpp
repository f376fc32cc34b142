#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "pseudocat/colimits.hpp"

using namespace pcat;

namespace {

std::shared_ptr<const PseudoFunctor> one_object_diagram(const FinCatPtr& c) {
  return std::make_shared<const PseudoFunctor>(
      strict_pseudofunctor(terminal_cat(), {c}, {identity_fun(c)}));
}

// parallel pair of two-object groupoids, one arrow twisted by the swap
std::shared_ptr<const PseudoFunctor> twisted_parallel_pair() {
  auto J = parallel_pair_cat();
  auto I = iso_pair();
  Fun idf = identity_fun(I);
  PseudoFunctor F0 = strict_pseudofunctor(J, {I, I}, {idf, idf, idf, idf});
  Fun swap{I, I, {1, 0}, {}};
  swap.mmap = {I->identity(1), I->identity(0), I->mor_index("v").value(),
               I->mor_index("u").value()};
  std::vector<Nat> twist;
  for (int m = 0; m < J->num_mors(); ++m) twist.push_back(identity_nat(F0.arrow[m]));
  twist[J->mor_index("f").value()] =
      Nat{idf, swap, {I->mor_index("u").value(), I->mor_index("v").value()}};
  return std::make_shared<const PseudoFunctor>(gauge_pseudofunctor(F0, twist));
}


// walking-arrow index, iso-pair fibers, the arrow twisted by the swap; the
// colimit is finite and equivalent to the target fiber
std::shared_ptr<const PseudoFunctor> twisted_arrow() {
  auto J = walking_arrow();
  auto I = iso_pair();
  Fun idf = identity_fun(I);
  PseudoFunctor F0 = strict_pseudofunctor(J, {I, I}, {idf, idf, idf});
  Fun swap{I, I, {1, 0}, {}};
  swap.mmap = {I->identity(1), I->identity(0), I->mor_index("v").value(),
               I->mor_index("u").value()};
  std::vector<Nat> twist;
  for (int m = 0; m < J->num_mors(); ++m) twist.push_back(identity_nat(F0.arrow[m]));
  twist[J->mor_index("f").value()] =
      Nat{idf, swap, {I->mor_index("u").value(), I->mor_index("v").value()}};
  return std::make_shared<const PseudoFunctor>(gauge_pseudofunctor(F0, twist));
}

// Literal bounded congruence closure over explicit word lists: enumerate all
// composable generator words up to the length bound, seed the relation pairs,
// and close under right composition with union-find. Used as the independent
// oracle against the class-table engine.
struct WordOracle {
  const ColimPresentation& p;
  int bound;
  std::vector<std::pair<int, std::vector<int>>> words;  // (source vertex, word)
  std::map<std::pair<int, std::string>, int> index;
  std::vector<int> parent;

  static std::string spell(const std::vector<int>& w) {
    std::string s;
    for (int g : w) s += std::to_string(g) + ".";
    return s;
  }

  WordOracle(const ColimPresentation& pres, int b) : p(pres), bound(b) {
    for (std::size_t v = 0; v < p.vertices.size(); ++v) grow(static_cast<int>(v), {});
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto [sv, w] = words[i];
      int end = end_vertex(sv, w);
      if (static_cast<int>(w.size()) == bound) continue;
      for (std::size_t g = 0; g < p.gens.size(); ++g)
        if (p.gens[g].src == end) {
          auto w2 = w;
          w2.push_back(static_cast<int>(g));
          grow(sv, w2);
        }
    }
    parent.resize(words.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto [sv, w] = words[i];
        int end = end_vertex(sv, w);
        for (auto& r : p.relations) {
          if (r.src != end) continue;
          auto a = w, b = w;
          a.insert(a.end(), r.lhs.begin(), r.lhs.end());
          b.insert(b.end(), r.rhs.begin(), r.rhs.end());
          if (static_cast<int>(a.size()) > bound || static_cast<int>(b.size()) > bound) continue;
          changed |= unite(lookup(sv, a), lookup(sv, b));
        }
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        int ri = find(static_cast<int>(i));
        for (std::size_t k = i + 1; k < words.size(); ++k) {
          if (find(static_cast<int>(k)) != ri) continue;
          if (words[i].first != words[k].first) continue;
          int end = end_vertex(words[i].first, words[i].second);
          for (std::size_t g = 0; g < p.gens.size(); ++g) {
            if (p.gens[g].src != end) continue;
            auto a = words[i].second;
            auto b = words[k].second;
            a.push_back(static_cast<int>(g));
            b.push_back(static_cast<int>(g));
            if (static_cast<int>(a.size()) > bound || static_cast<int>(b.size()) > bound)
              continue;
            changed |= unite(lookup(words[i].first, a), lookup(words[k].first, b));
          }
        }
      }
    }
  }

  int end_vertex(int sv, const std::vector<int>& w) const {
    int v = sv;
    for (int g : w) v = p.gens[g].tgt;
    return v;
  }

  void grow(int sv, std::vector<int> w) {
    auto key = std::make_pair(sv, spell(w));
    if (index.count(key)) return;
    index[key] = static_cast<int>(words.size());
    words.emplace_back(sv, std::move(w));
  }

  int lookup(int sv, const std::vector<int>& w) const {
    return index.at(std::make_pair(sv, spell(w)));
  }

  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }

  int num_classes() {
    std::set<int> s;
    for (std::size_t i = 0; i < words.size(); ++i) s.insert(find(static_cast<int>(i)));
    return static_cast<int>(s.size());
  }
};

int eval_word(const ColimitResult& R, int srcv, const std::vector<int>& w) {
  int cur = R.carrier->identity(srcv);
  for (int g : w) cur = R.carrier->compose(R.gen_class[g], cur);
  return cur;
}

}  // namespace

TEST_CASE("one-object strict diagram: colimit is the fiber") {
  auto A = walking_arrow();
  auto R = pseudo_colimit(one_object_diagram(A));
  CHECK(R.carrier->check().ok());
  REQUIRE(R.carrier->num_objects() == A->num_objects());
  REQUIRE(R.carrier->num_mors() == A->num_mors());
  CHECK(check_pseudonat(R.pi).ok());
  CHECK(R.certificate.closed);
}

TEST_CASE("discrete index: colimit is the disjoint union") {
  auto J = discrete_cat(2);
  auto A1 = walking_arrow();
  auto A2 = iso_pair();
  auto F = std::make_shared<const PseudoFunctor>(
      strict_pseudofunctor(J, {A1, A2}, {identity_fun(A1), identity_fun(A2)}));
  auto R = pseudo_colimit(F);
  CHECK(R.carrier->check().ok());
  CHECK(R.carrier->num_objects() == A1->num_objects() + A2->num_objects());
  CHECK(R.carrier->num_mors() == A1->num_mors() + A2->num_mors());
}

TEST_CASE("arrow index along an isomorphism collapses to the target groupoid") {
  auto J = walking_arrow();
  auto I = iso_pair();
  Fun swap{I, I, {1, 0}, {}};
  swap.mmap = {I->identity(1), I->identity(0), I->mor_index("v").value(),
               I->mor_index("u").value()};
  REQUIRE(swap.check().ok());
  auto F = std::make_shared<const PseudoFunctor>(
      strict_pseudofunctor(J, {I, I}, {identity_fun(I), identity_fun(I), swap}));
  auto R = pseudo_colimit(F);
  CHECK(R.carrier->check().ok());
  CHECK(R.carrier->num_objects() == 4);
  CHECK(R.carrier->num_mors() == 16);
  Fun incl = R.pi.comp[1];
  auto w = is_equivalence(incl);
  CHECK(w.has_value());
}

TEST_CASE("twisted arrow diagram: certified colimit matches the word oracle") {
  auto F = twisted_arrow();
  auto R = pseudo_colimit(F, 8);
  CHECK(R.certificate.closed);
  CHECK(R.certificate.max_rep_length <= 8);
  CHECK(R.carrier->check().ok());
  CHECK(check_pseudonat(R.pi).ok());

  WordOracle oracle(R.pres, 5);
  std::map<int, int> engine_of_oracle;
  for (std::size_t i = 0; i < oracle.words.size(); ++i) {
    int oc = oracle.find(static_cast<int>(i));
    int ec = eval_word(R, oracle.words[i].first, oracle.words[i].second);
    auto it = engine_of_oracle.find(oc);
    if (it == engine_of_oracle.end())
      engine_of_oracle[oc] = ec;
    else
      CHECK(it->second == ec);
  }
  WordOracle oracle4(R.pres, 4);
  REQUIRE(oracle4.num_classes() == oracle.num_classes());
  CHECK(oracle.num_classes() == R.carrier->num_mors());
}

TEST_CASE("universality of the certified colimit on point and iso-pair probes") {
  auto F = twisted_arrow();
  auto R = pseudo_colimit(F, 8);
  auto rep = verify_colimit_universality(R, {terminal_cat(), iso_pair()});
  for (auto& p : rep.probes) {
    INFO(p.probe);
    CHECK(p.passed);
  }
  CHECK(rep.ok());
}

TEST_CASE("the naturality relations hold in the certified carrier") {
  auto F = twisted_arrow();
  auto R = pseudo_colimit(F, 8);
  for (auto& r : R.pres.relations) {
    if (r.family != "R3") continue;
    CHECK(eval_word(R, r.src, r.lhs) == eval_word(R, r.src, r.rhs));
  }
}

TEST_CASE("each connector class is invertible in the carrier") {
  auto F = twisted_arrow();
  auto R = pseudo_colimit(F, 8);
  for (int f = 0; f < F->index->num_mors(); ++f)
    for (int c : R.pi.tau[f].comp) CHECK(R.carrier->is_iso(c));
}

TEST_CASE("bound exceeded is an error, never a wrong answer") {
  auto F = twisted_arrow();
  CHECK_THROWS_AS(pseudo_colimit(F, 0), bound_exceeded);
  CHECK_THROWS_AS(pseudo_colimit(F, 8, 2), bound_exceeded);
}

TEST_CASE("parallel-pair colimits have unbounded hom classes and are refused") {
  // the two connector families generate a free loop, so the closure cannot
  // certify stability at any cap
  auto F = twisted_parallel_pair();
  CHECK_THROWS_AS(pseudo_colimit(F, 8, 3000), bound_exceeded);
}

TEST_CASE("tensor with the terminal category gives back the category") {
  auto F = iso_pair();
  auto tr = tensor(terminal_cat(), F);
  CHECK(tr.carrier->num_objects() == F->num_objects());
  CHECK(tr.carrier->num_mors() == F->num_mors());
}

TEST_CASE("tensor of walking arrows has the product counts") {
  auto a = walking_arrow();
  auto tr = tensor(a, a);
  CHECK(tr.carrier->num_objects() == 4);
  CHECK(tr.carrier->num_mors() == 9);
}

TEST_CASE("tensor unit condition: currying is a bijection for the arrow probe") {
  auto a = walking_arrow();
  auto tr = tensor(a, a);
  auto rep = verify_tensor(tr, a, a, {walking_arrow()});
  CHECK(rep.ok());
}
