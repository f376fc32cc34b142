#pragma once

#include "pseudocat/limits.hpp"
#include "pseudocat/pseudo.hpp"

namespace pcat {

/// Presentation of the colimit candidate: vertices are the disjoint union of
/// fiber objects; generators are fiber morphisms plus invertible connectors
/// h_{(x,f)}; relations are the five families R1-R5. Fiber identities are
/// represented by empty words rather than generators.
struct ColimPresentation {
  struct Vertex {
    int j;  // index object
    int x;  // fiber object
    std::string name;
  };
  struct Gen {
    enum Kind { Base, H, Hinv };
    Kind kind;
    int j = -1, mor = -1;  // Base: fiber and morphism
    int x = -1, f = -1;    // H/Hinv: fiber object of A_{Sf} and index morphism
    int src = -1, tgt = -1;
    std::string name;
  };
  struct Relation {
    std::vector<int> lhs, rhs;  // generator words, applied left to right
    int src = -1, tgt = -1;     // common endpoints (vertex ids)
    std::string family;         // R1..R5
  };
  std::vector<Vertex> vertices;
  std::vector<Gen> gens;
  std::vector<Relation> relations;

  int vertex_id(int j, int x) const;
};

ColimPresentation colim_presentation(const PseudoFunctor& F);

/// The quotient category with its stability certificate. Morphisms are
/// congruence classes; construction succeeds only when the bounded closure
/// certifies a complete class table with short representatives, and throws
/// bound_exceeded otherwise.
struct ColimitResult {
  std::shared_ptr<const PseudoFunctor> diagram;
  ColimPresentation pres;
  FinCatPtr carrier;  // W
  std::shared_ptr<const PseudoFunctor> delta;
  PseudoNat pi;  // F ⇒ Δ_W
  std::vector<std::vector<int>> class_rep;  // per carrier morphism, generator word
  std::vector<int> gen_class;                // per presentation generator, its class
  struct Certificate {
    int length_bound = 0;
    int max_rep_length = 0;
    std::size_t states_explored = 0;
    std::size_t classes = 0;
    bool closed = false;  // class table total and all relation instances verified
  } certificate;
};

ColimitResult pseudo_colimit(const std::shared_ptr<const PseudoFunctor>& F, int length_bound = 8,
                             std::size_t max_states = 50000);

UniversalityReport verify_colimit_universality(const ColimitResult& W,
                                               const std::vector<FinCatPtr>& probes,
                                               std::size_t cap = 1000000);

struct TensorResult {
  FinCatPtr carrier;  // J x F
  HomCat from_f;      // hom_category(F, J x F)
  Fun unit;           // J -> hom_category(F, J x F)
};

TensorResult tensor(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap = 1000000);

/// Exhaustive currying bijection Cat(J x F, C) <-> Cat(J, Cat(F, C)) per probe.
UniversalityReport verify_tensor(const TensorResult& tr, const FinCatPtr& j, const FinCatPtr& f,
                                 const std::vector<FinCatPtr>& probes, std::size_t cap = 1000000);

}  // namespace pcat
