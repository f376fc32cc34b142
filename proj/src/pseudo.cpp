#include "pseudocat/pseudo.hpp"

#include <algorithm>

namespace pcat {

PseudoFunctor strict_pseudofunctor(const FinCatPtr& index, std::vector<FinCatPtr> fibers,
                                   std::vector<Fun> arrows) {
  PseudoFunctor F;
  F.index = index;
  F.fiber = std::move(fibers);
  F.arrow = std::move(arrows);
  for (int g = 0; g < index->num_mors(); ++g)
    for (int f = 0; f < index->num_mors(); ++f) {
      if (index->tgt(f) != index->src(g)) continue;
      int gf = index->compose(g, f);
      Fun comp = compose_fun(F.arrow[g], F.arrow[f]);
      if (!(comp == F.arrow[gf]))
        throw std::logic_error("strict_pseudofunctor: assignment does not compose strictly");
      F.gamma.emplace(std::make_pair(f, g), identity_nat(comp));
    }
  for (int j = 0; j < index->num_objects(); ++j) {
    Fun idj = identity_fun(F.fiber[j]);
    if (!(F.arrow[index->identity(j)] == idj))
      throw std::logic_error("strict_pseudofunctor: identity arrow is not the identity functor");
    F.delta.push_back(identity_nat(idj));
  }
  return F;
}

PseudoFunctor constant_pseudofunctor(const FinCatPtr& index, const FinCatPtr& x) {
  std::vector<FinCatPtr> fibers(index->num_objects(), x);
  std::vector<Fun> arrows(index->num_mors(), identity_fun(x));
  return strict_pseudofunctor(index, std::move(fibers), std::move(arrows));
}

PseudoFunctor gauge_pseudofunctor(const PseudoFunctor& F, const std::vector<Nat>& twist) {
  const FinCat& j = *F.index;
  if (static_cast<int>(twist.size()) != j.num_mors())
    throw std::logic_error("gauge_pseudofunctor: one twist per index morphism required");
  PseudoFunctor G;
  G.index = F.index;
  G.fiber = F.fiber;
  for (int f = 0; f < j.num_mors(); ++f) {
    if (!(twist[f].src == F.arrow[f]) || !twist[f].is_iso())
      throw std::logic_error("gauge_pseudofunctor: twist must be an iso out of a_f");
    G.arrow.push_back(twist[f].tgt);
  }
  for (int g = 0; g < j.num_mors(); ++g)
    for (int f = 0; f < j.num_mors(); ++f) {
      if (j.tgt(f) != j.src(g)) continue;
      int gf = j.compose(g, f);
      Nat h = hcomp_nat(twist[g], twist[f]);
      G.gamma.emplace(std::make_pair(f, g),
                      vcomp_nat(twist[gf], vcomp_nat(F.gamma_at(f, g), inverse_nat(h))));
    }
  for (int o = 0; o < j.num_objects(); ++o)
    G.delta.push_back(vcomp_nat(twist[j.identity(o)], F.delta[o]));
  return G;
}

CheckReport check_pseudofunctor(const PseudoFunctor& F) {
  CheckReport rep;
  const FinCat& j = *F.index;
  if (static_cast<int>(F.fiber.size()) != j.num_objects() ||
      static_cast<int>(F.arrow.size()) != j.num_mors() ||
      static_cast<int>(F.delta.size()) != j.num_objects()) {
    rep.add("malformed/pf-size", "fiber/arrow/delta table sizes");
    return rep;
  }
  for (int m = 0; m < j.num_mors(); ++m) {
    if (F.arrow[m].src != F.fiber[j.src(m)] || F.arrow[m].tgt != F.fiber[j.tgt(m)]) {
      rep.add("malformed/pf-arrow", j.mor_name(m));
      return rep;
    }
    rep.merge(F.arrow[m].check());
  }
  if (!rep.ok()) return rep;
  // gamma entries: exactly composable pairs, correct boundary, iso
  for (int g = 0; g < j.num_mors(); ++g)
    for (int f = 0; f < j.num_mors(); ++f) {
      if (j.tgt(f) != j.src(g)) continue;
      auto it = F.gamma.find({f, g});
      if (it == F.gamma.end()) {
        rep.add("malformed/pf-gamma-missing", "(" + j.mor_name(f) + ", " + j.mor_name(g) + ")");
        continue;
      }
      const Nat& n = it->second;
      int gf = j.compose(g, f);
      if (!(n.src == compose_fun(F.arrow[g], F.arrow[f]) && n.tgt == F.arrow[gf])) {
        rep.add("malformed/pf-gamma-boundary", "(" + j.mor_name(f) + ", " + j.mor_name(g) + ")");
        continue;
      }
      auto nr = n.check();
      if (!nr.ok()) rep.add("pf/gamma-naturality", "(" + j.mor_name(f) + ", " + j.mor_name(g) + ")");
      if (!n.is_iso())
        rep.add("pf/gamma-iso", "(" + j.mor_name(f) + ", " + j.mor_name(g) + ")");
    }
  for (int o = 0; o < j.num_objects(); ++o) {
    const Nat& d = F.delta[o];
    if (!(d.src == identity_fun(F.fiber[o]) && d.tgt == F.arrow[j.identity(o)])) {
      rep.add("malformed/pf-delta-boundary", j.object_name(o));
      continue;
    }
    auto dr = d.check();
    if (!dr.ok()) rep.add("pf/delta-naturality", j.object_name(o));
    if (!d.is_iso()) rep.add("pf/delta-iso", j.object_name(o));
  }
  if (!rep.ok()) return rep;
  // Unit axiom: for all f:A→B and x ∈ A_A:
  //   γ_{1_A,f}(x) ∘ Ff(δ_{A*}(x)) = 1_{Ff x}   and
  //   γ_{f,1_B}(x) ∘ δ_{B*}(Ff x) = 1_{Ff x}.
  for (int f = 0; f < j.num_mors(); ++f) {
    int A = j.src(f), B = j.tgt(f);
    const FinCat& FA = *F.fiber[A];
    const FinCat& FB = *F.fiber[B];
    for (int x = 0; x < FA.num_objects(); ++x) {
      int ffx = F.arrow[f].omap[x];
      int lhs1 = FB.compose(F.gamma_comp(j.identity(A), f, x),
                            F.arrow[f].mmap[F.delta_comp(A, x)]);
      if (lhs1 != FB.identity(ffx))
        rep.add("pf/unit-axiom",
                "f=" + j.mor_name(f) + " x=" + FA.object_name(x) + " (left unit)");
      int lhs2 = FB.compose(F.gamma_comp(f, j.identity(B), x), F.delta_comp(B, ffx));
      if (lhs2 != FB.identity(ffx))
        rep.add("pf/unit-axiom",
                "f=" + j.mor_name(f) + " x=" + FA.object_name(x) + " (right unit)");
    }
  }
  // Composition axiom: for all composable f,g,h and x:
  //   γ_{g∘f,h}(x) ∘ Fh(γ_{f,g}(x)) = γ_{f,h∘g}(x) ∘ γ_{g,h}(Ff x).
  for (int f = 0; f < j.num_mors(); ++f)
    for (int g = 0; g < j.num_mors(); ++g) {
      if (j.tgt(f) != j.src(g)) continue;
      for (int h = 0; h < j.num_mors(); ++h) {
        if (j.tgt(g) != j.src(h)) continue;
        int gf = j.compose(g, f), hg = j.compose(h, g);
        const FinCat& top = *F.fiber[j.tgt(h)];
        const FinCat& FA = *F.fiber[j.src(f)];
        for (int x = 0; x < FA.num_objects(); ++x) {
          int lhs = top.compose(F.gamma_comp(gf, h, x), F.arrow[h].mmap[F.gamma_comp(f, g, x)]);
          int rhs = top.compose(F.gamma_comp(f, hg, x), F.gamma_comp(g, h, F.arrow[f].omap[x]));
          if (lhs != rhs)
            rep.add("pf/composition-axiom", "(" + j.mor_name(f) + ", " + j.mor_name(g) + ", " +
                                                j.mor_name(h) + ") x=" + FA.object_name(x));
        }
      }
    }
  return rep;
}

CheckReport check_pseudonat(const PseudoNat& a) {
  CheckReport rep;
  const PseudoFunctor& F = *a.src;
  const PseudoFunctor& G = *a.tgt;
  if (F.index != G.index) {
    rep.add("malformed/pn-index", "source and target indices differ");
    return rep;
  }
  const FinCat& j = *F.index;
  if (static_cast<int>(a.comp.size()) != j.num_objects() ||
      static_cast<int>(a.tau.size()) != j.num_mors()) {
    rep.add("malformed/pn-size", "component/tau table sizes");
    return rep;
  }
  for (int o = 0; o < j.num_objects(); ++o) {
    if (a.comp[o].src != F.fiber[o] || a.comp[o].tgt != G.fiber[o]) {
      rep.add("malformed/pn-component", j.object_name(o));
      return rep;
    }
    rep.merge(a.comp[o].check());
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < j.num_mors(); ++f) {
    int A = j.src(f), B = j.tgt(f);
    const Nat& t = a.tau[f];
    Fun lhs = compose_fun(G.arrow[f], a.comp[A]);
    Fun rhs = compose_fun(a.comp[B], F.arrow[f]);
    if (!(t.src == lhs && t.tgt == rhs)) {
      rep.add("malformed/pn-tau-boundary", j.mor_name(f));
      continue;
    }
    auto tr = t.check();
    if (!tr.ok()) rep.add("pn/tau-naturality", j.mor_name(f));
    if (!t.is_iso()) rep.add("pn/tau-iso", j.mor_name(f));
  }
  if (!rep.ok()) return rep;
  // Unit axiom: τ_{1_A}(x) ∘ δ^G_{A*}(π_A x) = π_A(δ^F_{A*}(x)).
  for (int A = 0; A < j.num_objects(); ++A) {
    const FinCat& GA = *G.fiber[A];
    for (int x = 0; x < F.fiber[A]->num_objects(); ++x) {
      int lhs = GA.compose(a.tau[j.identity(A)].comp[x], G.delta_comp(A, a.comp[A].omap[x]));
      int rhs = a.comp[A].mmap[F.delta_comp(A, x)];
      if (lhs != rhs)
        rep.add("pn/unit-axiom", "A=" + j.object_name(A) + " x=" + F.fiber[A]->object_name(x));
    }
  }
  // Composition axiom: for composable f:A→B, g:B→C, x ∈ F_A:
  //   π_C(γ^F_{f,g}(x)) ∘ τ_g(Ff x) ∘ Gg(τ_f(x)) = τ_{g∘f}(x) ∘ γ^G_{f,g}(π_A x).
  for (int f = 0; f < j.num_mors(); ++f)
    for (int g = 0; g < j.num_mors(); ++g) {
      if (j.tgt(f) != j.src(g)) continue;
      int A = j.src(f), C = j.tgt(g);
      int gf = j.compose(g, f);
      const FinCat& GC = *G.fiber[C];
      for (int x = 0; x < F.fiber[A]->num_objects(); ++x) {
        int lhs = GC.compose(
            a.comp[C].mmap[F.gamma_comp(f, g, x)],
            GC.compose(a.tau[g].comp[F.arrow[f].omap[x]], G.arrow[g].mmap[a.tau[f].comp[x]]));
        int rhs = GC.compose(a.tau[gf].comp[x], G.gamma_comp(f, g, a.comp[A].omap[x]));
        if (lhs != rhs)
          rep.add("pn/composition-axiom", "(" + j.mor_name(f) + ", " + j.mor_name(g) + ") x=" +
                                              F.fiber[A]->object_name(x));
      }
    }
  return rep;
}

PseudoNat identity_pseudonat(const std::shared_ptr<const PseudoFunctor>& F) {
  PseudoNat a;
  a.src = F;
  a.tgt = F;
  for (int o = 0; o < F->index->num_objects(); ++o) a.comp.push_back(identity_fun(F->fiber[o]));
  for (int f = 0; f < F->index->num_mors(); ++f) a.tau.push_back(identity_nat(F->arrow[f]));
  return a;
}

PseudoNat vcomp_pseudonat(const PseudoNat& b, const PseudoNat& a) {
  if (a.src->index != b.src->index)
    throw std::logic_error("vcomp_pseudonat: index mismatch");
  PseudoNat r;
  r.src = a.src;
  r.tgt = b.tgt;
  const FinCat& j = *a.src->index;
  for (int o = 0; o < j.num_objects(); ++o) r.comp.push_back(compose_fun(b.comp[o], a.comp[o]));
  // τ^{b⊙a}_f(x) = β_B(τ^a_f(x)) ∘ τ^b_f(α_A(x))
  for (int f = 0; f < j.num_mors(); ++f) {
    int A = j.src(f), B = j.tgt(f);
    Fun lhs = compose_fun(b.tgt->arrow[f], r.comp[A]);
    Fun rhs = compose_fun(r.comp[B], a.src->arrow[f]);
    Nat t{lhs, rhs, {}};
    const FinCat& HB = *b.tgt->fiber[B];
    t.comp.resize(a.src->fiber[A]->num_objects());
    for (int x = 0; x < a.src->fiber[A]->num_objects(); ++x)
      t.comp[x] = HB.compose(b.comp[B].mmap[a.tau[f].comp[x]], b.tau[f].comp[a.comp[A].omap[x]]);
    r.tau.push_back(std::move(t));
  }
  return r;
}

CheckReport check_modification(const Modification& m) {
  CheckReport rep;
  const PseudoNat& a = *m.src;
  const PseudoNat& b = *m.tgt;
  if (a.src.get() != b.src.get() || a.tgt.get() != b.tgt.get()) {
    rep.add("malformed/mod-parallel", "source and target are not parallel");
    return rep;
  }
  const FinCat& j = *a.src->index;
  if (static_cast<int>(m.comp.size()) != j.num_objects()) {
    rep.add("malformed/mod-size", "component count");
    return rep;
  }
  for (int o = 0; o < j.num_objects(); ++o) {
    if (!(m.comp[o].src == a.comp[o] && m.comp[o].tgt == b.comp[o])) {
      rep.add("malformed/mod-boundary", j.object_name(o));
      return rep;
    }
    auto r = m.comp[o].check();
    if (!r.ok()) rep.add("mod/component-naturality", j.object_name(o));
  }
  if (!rep.ok()) return rep;
  // For every f:A→B (only identity 2-cells exist in the index) and x ∈ F_A:
  //   τ^b_f(x) ∘ Gf(Ξ_A(x)) = Ξ_B(Ff x) ∘ τ^a_f(x).
  const PseudoFunctor& F = *a.src;
  const PseudoFunctor& G = *a.tgt;
  for (int f = 0; f < j.num_mors(); ++f) {
    int A = j.src(f), B = j.tgt(f);
    const FinCat& GB = *G.fiber[B];
    for (int x = 0; x < F.fiber[A]->num_objects(); ++x) {
      int lhs = GB.compose(b.tau[f].comp[x], G.arrow[f].mmap[m.comp[A].comp[x]]);
      int rhs = GB.compose(m.comp[B].comp[F.arrow[f].omap[x]], a.tau[f].comp[x]);
      if (lhs != rhs)
        rep.add("mod/coherence", "f=" + j.mor_name(f) + " x=" + F.fiber[A]->object_name(x));
    }
  }
  return rep;
}

std::vector<PseudoNat> enumerate_pseudonats(const std::shared_ptr<const PseudoFunctor>& F,
                                            const std::shared_ptr<const PseudoFunctor>& G,
                                            std::size_t cap) {
  std::vector<PseudoNat> out;
  const FinCat& j = *F->index;
  if (F->index != G->index)
    throw std::logic_error("enumerate_pseudonats: the two pseudo functors must share their index");
  // component functor choices per index object
  std::vector<std::vector<Fun>> comps(j.num_objects());
  for (int o = 0; o < j.num_objects(); ++o)
    comps[o] = enumerate_functors(F->fiber[o], G->fiber[o], cap);
  std::vector<std::size_t> pick(j.num_objects(), 0);
  for (int o = 0; o < j.num_objects(); ++o)
    if (comps[o].empty()) return out;

  std::vector<int> nonid;
  for (int f = 0; f < j.num_mors(); ++f)
    if (!j.is_identity(f)) nonid.push_back(f);

  std::size_t steps = 0;
  for (;;) {
    if (++steps > cap) throw capacity_error("enumerate_pseudonats: component tuples");
    std::vector<Fun> comp;
    for (int o = 0; o < j.num_objects(); ++o) comp.push_back(comps[o][pick[o]]);
    // tau on identities is determined by the unit axiom:
    //   τ_{1_A}(x) = π_A(δ^F_{A*}(x)) ∘ (δ^G_{A*}(π_A x))⁻¹
    std::vector<Nat> tau(j.num_mors());
    bool ok_id = true;
    for (int A = 0; A < j.num_objects() && ok_id; ++A) {
      int f = j.identity(A);
      Fun lhs = compose_fun(G->arrow[f], comp[A]);
      Fun rhs = compose_fun(comp[A], F->arrow[f]);
      Nat t{lhs, rhs, {}};
      const FinCat& GA = *G->fiber[A];
      t.comp.resize(F->fiber[A]->num_objects());
      for (int x = 0; x < F->fiber[A]->num_objects(); ++x) {
        int d = G->delta_comp(A, comp[A].omap[x]);
        int dinv = GA.iso_inverse(d);
        if (dinv < 0) {
          ok_id = false;
          break;
        }
        t.comp[x] = GA.compose(comp[A].mmap[F->delta_comp(A, x)], dinv);
      }
      if (ok_id && !t.check().ok()) ok_id = false;
      tau[f] = std::move(t);
    }
    if (ok_id) {
      // enumerate iso tau on nonidentity morphisms with backtracking
      std::vector<std::vector<Nat>> cands(nonid.size());
      std::vector<std::size_t> ci(nonid.size(), 0);
      std::size_t depth = 0;
      bool dead = false;
      for (std::size_t d = 0; d < nonid.size(); ++d) {
        int f = nonid[d];
        int A = j.src(f), B = j.tgt(f);
        cands[d] = enumerate_nats(compose_fun(G->arrow[f], comp[A]),
                                  compose_fun(comp[B], F->arrow[f]), true, cap);
        if (cands[d].empty()) {
          dead = true;
          break;
        }
      }
      auto partial_ok = [&](std::size_t assigned) {
        // check composition axiom instances whose tau entries are all known;
        // identity taus are always known.
        std::vector<char> known(j.num_mors(), 0);
        for (int A = 0; A < j.num_objects(); ++A) known[j.identity(A)] = 1;
        for (std::size_t d = 0; d <= assigned && d < nonid.size(); ++d) known[nonid[d]] = 1;
        for (int f = 0; f < j.num_mors(); ++f)
          for (int g = 0; g < j.num_mors(); ++g) {
            if (j.tgt(f) != j.src(g)) continue;
            int gf = j.compose(g, f);
            if (!known[f] || !known[g] || !known[gf]) continue;
            int A = j.src(f), C = j.tgt(g);
            const FinCat& GC = *G->fiber[C];
            for (int x = 0; x < F->fiber[A]->num_objects(); ++x) {
              int lhs = GC.compose(comp[C].mmap[F->gamma_comp(f, g, x)],
                                   GC.compose(tau[g].comp[F->arrow[f].omap[x]],
                                              G->arrow[g].mmap[tau[f].comp[x]]));
              int rhs = GC.compose(tau[gf].comp[x], G->gamma_comp(f, g, comp[A].omap[x]));
              if (lhs != rhs) return false;
            }
          }
        return true;
      };
      if (!dead && nonid.empty()) {
        if (partial_ok(0)) {
          PseudoNat a;
          a.src = F;
          a.tgt = G;
          a.comp = comp;
          a.tau = tau;
          out.push_back(std::move(a));
          if (out.size() > cap) throw capacity_error("enumerate_pseudonats: result count");
        }
      } else if (!dead) {
        for (;;) {
          if (++steps > cap * 64) throw capacity_error("enumerate_pseudonats: search space");
          if (ci[depth] < cands[depth].size()) {
            tau[nonid[depth]] = cands[depth][ci[depth]];
            if (partial_ok(depth)) {
              if (depth + 1 == nonid.size()) {
                PseudoNat a;
                a.src = F;
                a.tgt = G;
                a.comp = comp;
                a.tau = tau;
                out.push_back(std::move(a));
                if (out.size() > cap) throw capacity_error("enumerate_pseudonats: result count");
                ++ci[depth];
              } else {
                ++depth;
                ci[depth] = 0;
              }
            } else {
              ++ci[depth];
            }
          } else {
            if (depth == 0) break;
            --depth;
            ++ci[depth];
          }
        }
      }
    }
    // advance component pick
    int o = j.num_objects() - 1;
    for (; o >= 0; --o) {
      if (++pick[o] < comps[o].size()) break;
      pick[o] = 0;
    }
    if (o < 0) break;
  }
  return out;
}

std::vector<Modification> enumerate_modifications(const std::shared_ptr<const PseudoNat>& a,
                                                  const std::shared_ptr<const PseudoNat>& b,
                                                  std::size_t cap) {
  std::vector<Modification> out;
  const FinCat& j = *a->src->index;
  std::vector<std::vector<Nat>> cands(j.num_objects());
  for (int o = 0; o < j.num_objects(); ++o) {
    cands[o] = enumerate_nats(a->comp[o], b->comp[o], false, cap);
    if (cands[o].empty()) return out;
  }
  std::vector<std::size_t> pick(j.num_objects(), 0);
  std::size_t steps = 0;
  for (;;) {
    if (++steps > cap) throw capacity_error("enumerate_modifications");
    Modification m;
    m.src = a;
    m.tgt = b;
    for (int o = 0; o < j.num_objects(); ++o) m.comp.push_back(cands[o][pick[o]]);
    if (check_modification(m).ok()) {
      out.push_back(std::move(m));
      if (out.size() > cap) throw capacity_error("enumerate_modifications: result count");
    }
    int o = j.num_objects() - 1;
    for (; o >= 0; --o) {
      if (++pick[o] < cands[o].size()) break;
      pick[o] = 0;
    }
    if (o < 0) break;
  }
  return out;
}

int TransCat::find_trans(const PseudoNat& p) const {
  for (std::size_t i = 0; i < trans.size(); ++i)
    if (*trans[i] == p) return static_cast<int>(i);
  return -1;
}

int TransCat::find_mod(const Modification& m) const {
  for (std::size_t i = 0; i < mods.size(); ++i)
    if (mods[i] == m) return static_cast<int>(i);
  return -1;
}

TransCat trans_category(const std::shared_ptr<const PseudoFunctor>& F,
                        const std::shared_ptr<const PseudoFunctor>& G, std::size_t cap) {
  TransCat tc;
  tc.src_pf = F;
  tc.tgt_pf = G;
  auto raw = enumerate_pseudonats(F, G, cap);
  for (auto& p : raw) tc.trans.push_back(std::make_shared<const PseudoNat>(std::move(p)));
  auto c = std::make_shared<FinCat>();
  for (std::size_t i = 0; i < tc.trans.size(); ++i) c->add_object("c" + std::to_string(i));
  std::size_t total = 0;
  for (std::size_t x = 0; x < tc.trans.size(); ++x)
    for (std::size_t y = 0; y < tc.trans.size(); ++y) {
      auto ms = enumerate_modifications(tc.trans[x], tc.trans[y], cap);
      for (auto& m : ms) {
        tc.mods.push_back(m);
        c->add_mor("m" + std::to_string(total++), static_cast<int>(x), static_cast<int>(y));
        if (total > cap) throw capacity_error("trans_category: morphism count");
      }
    }
  for (std::size_t x = 0; x < tc.trans.size(); ++x) {
    Modification id;
    id.src = tc.trans[x];
    id.tgt = tc.trans[x];
    for (auto& f : tc.trans[x]->comp) id.comp.push_back(identity_nat(f));
    c->set_identity(static_cast<int>(x), tc.find_mod(id));
  }
  for (std::size_t p = 0; p < tc.mods.size(); ++p)
    for (std::size_t q = 0; q < tc.mods.size(); ++q) {
      if (!(*tc.mods[q].tgt == *tc.mods[p].src)) continue;
      if (c->tgt(static_cast<int>(q)) != c->src(static_cast<int>(p))) continue;
      Modification r;
      r.src = tc.mods[q].src;
      r.tgt = tc.mods[p].tgt;
      for (std::size_t o = 0; o < tc.mods[p].comp.size(); ++o)
        r.comp.push_back(vcomp_nat(tc.mods[p].comp[o], tc.mods[q].comp[o]));
      c->set_compose(static_cast<int>(p), static_cast<int>(q), tc.find_mod(r));
    }
  c->finalize();
  tc.cat = c;
  return tc;
}

TransCat pseudocone_category(const FinCatPtr& v, const std::shared_ptr<const PseudoFunctor>& F,
                             std::size_t cap) {
  auto delta = std::make_shared<const PseudoFunctor>(constant_pseudofunctor(F->index, v));
  return trans_category(delta, F, cap);
}

TransCat pseudocone_co_category(const std::shared_ptr<const PseudoFunctor>& F, const FinCatPtr& v,
                                std::size_t cap) {
  auto delta = std::make_shared<const PseudoFunctor>(constant_pseudofunctor(F->index, v));
  return trans_category(F, delta, cap);
}

}  // namespace pcat
