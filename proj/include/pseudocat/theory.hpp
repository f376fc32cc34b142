#pragma once

#include <functional>

#include "pseudocat/fincat.hpp"

namespace pcat {

/// A function {1..dom} -> {1..cod}, stored 0-based.
struct IndexMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> map;

  static IndexMap id(int n);
  static IndexMap point(int i, int n);  // {1} -> {1..n}, 1 -> i
  int operator()(int i) const { return map[i]; }
  bool operator==(const IndexMap& o) const = default;
};

IndexMap compose_map(const IndexMap& g, const IndexMap& f);  // g∘f

/// The block-moving function: for f : {1..k} -> {1..l} and arities n_1..n_l
/// (indexed by the codomain), bar_f : {1..n_{f1}+...+n_{fk}} -> {1..n_1+...+n_l}
/// parses the codomain into blocks and writes them in the order B_{f1}..B_{fk}.
IndexMap bar_map(const IndexMap& f, const std::vector<int>& arities);

/// iota_{l,k} : {1..lk} -> {1..k}, wrapping the domain around the codomain.
IndexMap iota_wrap(int l, int k);

/// g_1 + ... + g_k placed next to each other.
IndexMap block_sum(const std::vector<IndexMap>& gs);

/// The injection of the i-th block into {1..m_1+...+m_n} (i is 0-based).
IndexMap iota_block(int i, const std::vector<int>& ms);

/// An abstract word of a theory. The payload encoding is owned by the theory.
struct Word {
  int arity = 0;
  std::vector<long long> data;
  bool operator==(const Word& o) const = default;
  bool operator<(const Word& o) const {
    if (arity != o.arity) return arity < o.arity;
    return data < o.data;
  }
};

/// Abstract algebraic theory in functorial presentation: per-arity word
/// enumeration up to a size measure, composition gamma, substitution, unit,
/// and decidable equality.
class Theory {
 public:
  virtual ~Theory() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Word> enumerate(int arity, int size) const = 0;
  virtual Word gamma(const Word& w, const std::vector<Word>& ws) const = 0;
  virtual Word subst(const Word& w, const IndexMap& f) const = 0;
  virtual Word unit() const = 0;
  virtual bool eq(const Word& a, const Word& b) const = 0;
  virtual int size(const Word& w) const = 0;
  virtual std::string show(const Word& w) const = 0;

  /// How a word is reached from generators; drives derived coherence data.
  struct Decomp {
    enum Kind { UnitW, Subst, Gamma, Atomic };
    Kind kind = Atomic;
    Word base;
    IndexMap f;
    std::vector<Word> args;
  };
  virtual Decomp decompose(const Word&) const { return {}; }

  Word projection(int i, int n) const { return subst(unit(), IndexMap::point(i, n)); }
};

using TheoryPtr = std::shared_ptr<const Theory>;

/// The initial theory: words of arity n are the n projection variables.
TheoryPtr trivial_theory();
/// Commutative monoids: a word of arity n is a coefficient vector in N^n.
TheoryPtr cmon_theory();
/// The endomorphism theory of a finite category: words are functors X^n -> X.
TheoryPtr end_theory(const FinCatPtr& x, std::size_t cap = 100000);
/// Free theory on arity-indexed generators; words are term trees, equality is
/// syntactic. The depth parameter bounds enumeration only.
TheoryPtr free_theory(const std::vector<std::pair<std::string, int>>& generators, int depth);

TheoryPtr builtin_theory(const std::string& key);

/// The five-axiom suite, exhausted over the enumerated words subject to the
/// combined size bound (every quantifier range is finite and stated).
CheckReport check_theory(const Theory& t, int arity_bound, int size_bound);

struct TheoryMorphism {
  TheoryPtr src;
  TheoryPtr tgt;
  std::function<Word(const Word&)> map;
  std::string label;
};

TheoryMorphism identity_theory_morphism(const TheoryPtr& t);
/// The unique morphism out of the initial theory.
TheoryMorphism trivial_to(const TheoryPtr& t);
CheckReport check_theory_morphism(const TheoryMorphism& m, int arity_bound, int size_bound);

/// Composition of word tuples: (v_1..v_m over l) ∘ (w_1..w_l over k).
std::vector<Word> tuple_compose(const Theory& t, const std::vector<Word>& vs,
                                const std::vector<Word>& ws, int k);

/// The monad C on Cat built from a theory, materialized on a finite category
/// at a word-size bound. Objects of CX are classes [w, x_1..x_n] under the
/// substitution action; morphisms are classes [i_w, g_1..g_n].
struct MonadC {
  TheoryPtr theory;
  FinCatPtr x;
  FinCatPtr cx;
  Fun eta;
  struct ObjRep {
    Word w;
    std::vector<int> xs;
  };
  struct MorRep {
    Word w;
    std::vector<int> gs;
  };
  std::vector<ObjRep> objs;  // canonical representative per CX object
  std::vector<MorRep> mors;
  std::vector<std::vector<ObjRep>> obj_members;
  std::vector<std::vector<MorRep>> mor_members;
  int arity_bound = 0;
  int size_bound = 0;

  int obj_class(const Word& w, const std::vector<int>& xs) const;
  int mor_class(const Word& w, const std::vector<int>& gs) const;
  /// mu on an explicit two-layer representative.
  int mu_obj(const Word& w, const std::vector<ObjRep>& inner) const;
  CheckReport law_report;  // both unit laws and associativity at the bound
};

MonadC monad_c(const TheoryPtr& t, const FinCatPtr& x, int arity_bound, int size_bound);

}  // namespace pcat
