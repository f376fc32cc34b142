#pragma once

#include "pseudocat/pseudo.hpp"

namespace pcat {

/// The canonical pseudo limit carrier: objects are tuples
/// (a_j)_j x (eps_f)_f subject to the two cone-point coherences, morphisms
/// are component tuples (xi_j)_j subject to the square per index morphism.
struct LimitResult {
  std::shared_ptr<const PseudoFunctor> diagram;
  FinCatPtr carrier;
  std::shared_ptr<const PseudoFunctor> delta;  // Δ_carrier over the same index
  PseudoNat pi;                                // Δ_carrier ⇒ diagram
  std::vector<std::vector<int>> obj_a;         // per carrier object, per index object
  std::vector<std::vector<int>> obj_eps;       // per carrier object, per index morphism
  std::vector<std::vector<int>> mor_xi;        // per carrier morphism, per index object

  int find_object(const std::vector<int>& a, const std::vector<int>& eps) const;
  int find_mor(int src, int tgt, const std::vector<int>& xi) const;
};

LimitResult pseudo_limit(const std::shared_ptr<const PseudoFunctor>& F,
                         std::size_t cap = 1000000);

struct ProbeVerdict {
  std::string probe;
  bool passed = false;
  std::vector<Violation> violations;
};

struct UniversalityReport {
  std::vector<ProbeVerdict> probes;
  bool ok() const {
    for (auto& p : probes)
      if (!p.passed) return false;
    return !probes.empty();
  }
};

/// Strict universality against the canonical carrier: builds phi(b) = pi∘b
/// and the recursive psi, and asserts phi∘psi and psi∘phi are identities.
UniversalityReport verify_limit_universality(const LimitResult& L,
                                             const std::vector<FinCatPtr>& probes,
                                             std::size_t cap = 1000000);

/// Universality for an arbitrary cone (W, pi): checks that (pi∘) is an
/// isomorphism of categories hom(V, W) -> PseudoCone(V, F) for every probe.
UniversalityReport verify_limit_universality(const std::shared_ptr<const PseudoFunctor>& F,
                                             const FinCatPtr& W, const PseudoNat& pi,
                                             const std::vector<FinCatPtr>& probes,
                                             std::size_t cap = 1000000);

struct BilimitVerdict {
  bool is_bilimit = false;
  std::vector<std::string> probe_names;
  std::vector<bool> probe_ok;
  std::vector<EquivalenceWitness> witnesses;  // one per passing probe
};

/// True iff (pi∘): hom(V, W) -> PseudoCone(V, F) admits an equivalence
/// witness for every probe V.
BilimitVerdict is_bilimit(const std::shared_ptr<const PseudoFunctor>& F, const FinCatPtr& W,
                          const PseudoNat& pi, const std::vector<FinCatPtr>& probes,
                          std::size_t cap = 1000000);

/// Default probe family {terminal, walking arrow, iso pair}.
std::vector<FinCatPtr> default_probes();

struct CotensorResult {
  FinCatPtr carrier;           // the functor category {J, F}
  HomCat carrier_hom;          // functor/nat values behind the carrier
  HomCat carrier_into_f;       // hom_category(carrier, F)
  Fun unit;                    // J -> hom_category(carrier, F)
};

CotensorResult cotensor(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap = 1000000);

/// Unit conditions of the cotensor reformulation, checked per probe:
/// every sigma: J -> hom(C, F) factors uniquely through the unit, and the
/// same for natural transformations.
UniversalityReport verify_cotensor(const CotensorResult& ct, const FinCatPtr& j,
                                   const FinCatPtr& f, const std::vector<FinCatPtr>& probes,
                                   std::size_t cap = 1000000);

struct WeightedLimitResult {
  TransCat carrier;  // pseudo natural transformations J ⇒ F and modifications
};

WeightedLimitResult weighted_pseudo_limit(const std::shared_ptr<const PseudoFunctor>& J,
                                          const std::shared_ptr<const PseudoFunctor>& F,
                                          std::size_t cap = 1000000);

/// The defining hom-category isomorphism of the weighted pseudo limit,
/// checked per probe C by explicit comparison.
UniversalityReport verify_weighted_limit(const WeightedLimitResult& wl,
                                         const std::shared_ptr<const PseudoFunctor>& J,
                                         const std::shared_ptr<const PseudoFunctor>& F,
                                         const std::vector<FinCatPtr>& probes,
                                         std::size_t cap = 1000000);

}  // namespace pcat
