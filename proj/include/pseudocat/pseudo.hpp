#pragma once

#include <map>

#include "pseudocat/fincat.hpp"

namespace pcat {

/// A pseudo functor from a finite 1-category (regarded as a 2-category with
/// only identity 2-cells) into Cat. Coherence data is stored as explicit
/// finite tables: gamma per composable pair, delta per index object.
struct PseudoFunctor {
  FinCatPtr index;
  std::vector<FinCatPtr> fiber;             // per index object j, the category A_j
  std::vector<Fun> arrow;                   // per index morphism f, the functor a_f
  std::map<std::pair<int, int>, Nat> gamma; // (f,g) with g∘f defined: a_g∘a_f ⇒ a_{g∘f}
  std::vector<Nat> delta;                   // per object j: 1_{A_j} ⇒ a_{1_j}

  const Nat& gamma_at(int f, int g) const { return gamma.at({f, g}); }
  /// Component of delta_j at an object x of A_j.
  int delta_comp(int j, int x) const { return delta[j].comp[x]; }
  /// Component of gamma_{f,g} at an object x of A_{src f}.
  int gamma_comp(int f, int g, int x) const { return gamma.at({f, g}).comp[x]; }
};

/// Strict pseudo functor with all fibers/arrows supplied and identity
/// coherences; throws when the assignment does not compose strictly.
PseudoFunctor strict_pseudofunctor(const FinCatPtr& index, std::vector<FinCatPtr> fibers,
                                   std::vector<Fun> arrows);

/// Constant pseudo functor Δ_X with identity coherences.
PseudoFunctor constant_pseudofunctor(const FinCatPtr& index, const FinCatPtr& x);

/// Transport of structure along a family of natural isos m_f : a_f ⇒ b_f,
/// one per index morphism. The result has arrows b_f and coherences
/// γ' = m_{g∘f} ⊙ γ ⊙ (m_g * m_f)⁻¹ and δ'_j = m_{1_j} ⊙ δ_j.
PseudoFunctor gauge_pseudofunctor(const PseudoFunctor& F, const std::vector<Nat>& twist);

CheckReport check_pseudofunctor(const PseudoFunctor& F);

/// A pseudo natural transformation between two pseudo functors on the same
/// index. tau_f : (target a_f)∘π_i ⇒ π_j∘(source a_f) for f : i → j.
struct PseudoNat {
  std::shared_ptr<const PseudoFunctor> src;
  std::shared_ptr<const PseudoFunctor> tgt;
  std::vector<Fun> comp;      // per index object j: π_j : F_j → G_j
  std::vector<Nat> tau;       // per index morphism f

  bool operator==(const PseudoNat& o) const { return comp == o.comp && tau_equal(o); }
  bool tau_equal(const PseudoNat& o) const {
    if (tau.size() != o.tau.size()) return false;
    for (std::size_t i = 0; i < tau.size(); ++i)
      if (!(tau[i].comp == o.tau[i].comp)) return false;
    return true;
  }
};

CheckReport check_pseudonat(const PseudoNat& a);

PseudoNat identity_pseudonat(const std::shared_ptr<const PseudoFunctor>& F);
PseudoNat vcomp_pseudonat(const PseudoNat& b, const PseudoNat& a);  // b after a

/// A modification between parallel pseudo natural transformations.
struct Modification {
  // source/target pseudo nats are referenced by value; they must be parallel
  std::shared_ptr<const PseudoNat> src;
  std::shared_ptr<const PseudoNat> tgt;
  std::vector<Nat> comp;  // per index object j: Ξ_j : π_j ⇒ π'_j

  bool operator==(const Modification& o) const {
    if (!(*src == *o.src) || !(*tgt == *o.tgt)) return false;
    if (comp.size() != o.comp.size()) return false;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (!(comp[i].comp == o.comp[i].comp)) return false;
    return true;
  }
};

CheckReport check_modification(const Modification& m);

/// All pseudo natural transformations F ⇒ G, exhaustively enumerated.
std::vector<PseudoNat> enumerate_pseudonats(const std::shared_ptr<const PseudoFunctor>& F,
                                            const std::shared_ptr<const PseudoFunctor>& G,
                                            std::size_t cap = 1000000);

std::vector<Modification> enumerate_modifications(const std::shared_ptr<const PseudoNat>& a,
                                                  const std::shared_ptr<const PseudoNat>& b,
                                                  std::size_t cap = 1000000);

/// The category of pseudo natural transformations F ⇒ G and modifications.
/// Composition is componentwise vertical composition.
struct TransCat {
  FinCatPtr cat;
  std::shared_ptr<const PseudoFunctor> src_pf;
  std::shared_ptr<const PseudoFunctor> tgt_pf;
  std::vector<std::shared_ptr<const PseudoNat>> trans;  // per object
  std::vector<Modification> mods;                       // per morphism
  int find_trans(const PseudoNat& p) const;
  int find_mod(const Modification& m) const;
};

TransCat trans_category(const std::shared_ptr<const PseudoFunctor>& F,
                        const std::shared_ptr<const PseudoFunctor>& G,
                        std::size_t cap = 1000000);

/// PseudoCone(V, F): pseudo natural transformations Δ_V ⇒ F and modifications.
TransCat pseudocone_category(const FinCatPtr& v, const std::shared_ptr<const PseudoFunctor>& F,
                             std::size_t cap = 1000000);

/// PseudoCone(F, V): pseudo natural transformations F ⇒ Δ_V and modifications.
TransCat pseudocone_co_category(const std::shared_ptr<const PseudoFunctor>& F, const FinCatPtr& v,
                                std::size_t cap = 1000000);

}  // namespace pcat
