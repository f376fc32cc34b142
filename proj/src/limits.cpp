#include "pseudocat/limits.hpp"

#include <map>

namespace pcat {

namespace {

std::string tuple_key(const std::vector<int>& t) {
  std::string s;
  for (int v : t) s += std::to_string(v) + ",";
  return s;
}

}  // namespace

int LimitResult::find_object(const std::vector<int>& a, const std::vector<int>& eps) const {
  for (std::size_t p = 0; p < obj_a.size(); ++p)
    if (obj_a[p] == a && obj_eps[p] == eps) return static_cast<int>(p);
  return -1;
}

int LimitResult::find_mor(int src, int tgt, const std::vector<int>& xi) const {
  for (int m = 0; m < carrier->num_mors(); ++m)
    if (carrier->src(m) == src && carrier->tgt(m) == tgt && mor_xi[m] == xi)
      return m;
  return -1;
}

LimitResult pseudo_limit(const std::shared_ptr<const PseudoFunctor>& F, std::size_t cap) {
  const FinCat& J = *F->index;
  LimitResult L;
  L.diagram = F;

  // enumerate cone points: object tuple, then eps with identities determined
  // and composable-pair coherence used for pruning
  std::vector<int> nonid;
  for (int f = 0; f < J.num_mors(); ++f)
    if (!J.is_identity(f)) nonid.push_back(f);

  std::vector<int> a(J.num_objects(), 0);
  bool any_empty_fiber = false;
  for (int j = 0; j < J.num_objects(); ++j)
    if (F->fiber[j]->num_objects() == 0) any_empty_fiber = true;

  std::size_t steps = 0;
  if (!any_empty_fiber && J.num_objects() > 0) {
    for (;;) {
      if (++steps > cap) throw capacity_error("pseudo_limit: object tuples");
      std::vector<int> eps(J.num_mors(), -1);
      bool ok = true;
      for (int j = 0; j < J.num_objects() && ok; ++j) {
        // eps_{1_j} ∘ δ_{j*}(a_j) = 1_{a_j} forces eps on identities
        int d = F->delta_comp(j, a[j]);
        int dinv = F->fiber[j]->iso_inverse(d);
        if (dinv < 0) ok = false;
        else eps[J.identity(j)] = dinv;
      }
      auto pair_ok = [&](int f, int g) {
        // eps_g ∘ Fg(eps_f) = eps_{g∘f} ∘ γ_{f,g}(a_{Sf})
        int gf = J.compose(g, f);
        if (eps[f] < 0 || eps[g] < 0 || eps[gf] < 0) return true;
        const FinCat& A = *F->fiber[J.tgt(g)];
        int lhs = A.compose(eps[g], F->arrow[g].mmap[eps[f]]);
        int rhs = A.compose(eps[gf], F->gamma_comp(f, g, a[J.src(f)]));
        return lhs == rhs;
      };
      auto all_pairs_ok = [&]() {
        for (int f = 0; f < J.num_mors(); ++f)
          for (int g = 0; g < J.num_mors(); ++g)
            if (J.tgt(f) == J.src(g) && !pair_ok(f, g)) return false;
        return true;
      };
      if (ok) {
        if (nonid.empty()) {
          if (all_pairs_ok()) {
            L.obj_a.push_back(a);
            L.obj_eps.push_back(eps);
          }
        } else {
          std::vector<std::vector<int>> cand(nonid.size());
          std::vector<std::size_t> ci(nonid.size(), 0);
          bool dead = false;
          for (std::size_t d = 0; d < nonid.size(); ++d) {
            int f = nonid[d];
            cand[d] = F->fiber[J.tgt(f)]->iso_hom(F->arrow[f].omap[a[J.src(f)]], a[J.tgt(f)]);
            if (cand[d].empty()) dead = true;
          }
          std::size_t depth = 0;
          while (!dead) {
            if (++steps > cap * 64) throw capacity_error("pseudo_limit: eps search");
            if (ci[depth] < cand[depth].size()) {
              eps[nonid[depth]] = cand[depth][ci[depth]];
              if (all_pairs_ok()) {
                if (depth + 1 == nonid.size()) {
                  L.obj_a.push_back(a);
                  L.obj_eps.push_back(eps);
                  if (L.obj_a.size() > cap) throw capacity_error("pseudo_limit: object count");
                  eps[nonid[depth]] = -1;
                  ++ci[depth];
                } else {
                  ++depth;
                  ci[depth] = 0;
                }
              } else {
                eps[nonid[depth]] = -1;
                ++ci[depth];
              }
            } else {
              if (depth == 0) break;
              ci[depth] = 0;
              --depth;
              eps[nonid[depth]] = -1;
              ++ci[depth];
            }
          }
        }
      }
      int j = J.num_objects() - 1;
      for (; j >= 0; --j) {
        if (++a[j] < F->fiber[j]->num_objects()) break;
        a[j] = 0;
      }
      if (j < 0) break;
    }
  } else if (J.num_objects() == 0) {
    // degenerate empty index: terminal limit by the empty-product convention
    L.obj_a.push_back({});
    L.obj_eps.push_back({});
  }

  auto cat = std::make_shared<FinCat>();
  for (std::size_t p = 0; p < L.obj_a.size(); ++p) {
    std::string name = "{a=";
    for (int j = 0; j < J.num_objects(); ++j)
      name += (j ? "," : "") + F->fiber[j]->object_name(L.obj_a[p][j]);
    name += ";e=";
    for (int f = 0; f < J.num_mors(); ++f)
      name += (f ? "," : "") + F->fiber[J.tgt(f)]->mor_name(L.obj_eps[p][f]);
    name += "}";
    cat->add_object(name);
  }

  // morphisms: xi tuples satisfying the square per index morphism
  std::map<std::tuple<int, int, std::string>, int> mor_lookup;
  for (std::size_t p = 0; p < L.obj_a.size(); ++p)
    for (std::size_t q = 0; q < L.obj_a.size(); ++q) {
      std::vector<std::vector<int>> cand(J.num_objects());
      bool dead = false;
      for (int j = 0; j < J.num_objects(); ++j) {
        cand[j] = F->fiber[j]->hom(L.obj_a[p][j], L.obj_a[q][j]);
        if (cand[j].empty()) dead = true;
      }
      if (dead || J.num_objects() == 0) {
        if (J.num_objects() == 0 && p == q) {
          int m = cat->add_mor("xi" + std::to_string(cat->num_mors()), static_cast<int>(p),
                               static_cast<int>(q));
          L.mor_xi.push_back({});
          mor_lookup[{static_cast<int>(p), static_cast<int>(q), tuple_key({})}] = m;
        }
        continue;
      }
      std::vector<std::size_t> pick(J.num_objects(), 0);
      for (;;) {
        if (++steps > cap * 64) throw capacity_error("pseudo_limit: morphism tuples");
        std::vector<int> xi(J.num_objects());
        for (int j = 0; j < J.num_objects(); ++j) xi[j] = cand[j][pick[j]];
        bool ok = true;
        for (int f = 0; f < J.num_mors() && ok; ++f) {
          const FinCat& A = *F->fiber[J.tgt(f)];
          int lhs = A.compose(L.obj_eps[q][f], F->arrow[f].mmap[xi[J.src(f)]]);
          int rhs = A.compose(xi[J.tgt(f)], L.obj_eps[p][f]);
          if (lhs != rhs) ok = false;
        }
        if (ok) {
          int m = cat->add_mor("xi" + std::to_string(cat->num_mors()), static_cast<int>(p),
                               static_cast<int>(q));
          L.mor_xi.push_back(xi);
          mor_lookup[{static_cast<int>(p), static_cast<int>(q), tuple_key(xi)}] = m;
          if (L.mor_xi.size() > cap) throw capacity_error("pseudo_limit: morphism count");
        }
        int j = J.num_objects() - 1;
        for (; j >= 0; --j) {
          if (++pick[j] < cand[j].size()) break;
          pick[j] = 0;
        }
        if (j < 0) break;
      }
    }

  // identities and composition are componentwise
  for (std::size_t p = 0; p < L.obj_a.size(); ++p) {
    std::vector<int> xi(J.num_objects());
    for (int j = 0; j < J.num_objects(); ++j)
      xi[j] = F->fiber[j]->identity(L.obj_a[p][j]);
    cat->set_identity(static_cast<int>(p),
                      mor_lookup.at({static_cast<int>(p), static_cast<int>(p), tuple_key(xi)}));
  }
  for (int m2 = 0; m2 < cat->num_mors(); ++m2)
    for (int m1 = 0; m1 < cat->num_mors(); ++m1) {
      if (cat->tgt(m1) != cat->src(m2)) continue;
      std::vector<int> xi(J.num_objects());
      for (int j = 0; j < J.num_objects(); ++j)
        xi[j] = F->fiber[j]->compose(L.mor_xi[m2][j], L.mor_xi[m1][j]);
      cat->set_compose(m2, m1, mor_lookup.at({cat->src(m1), cat->tgt(m2), tuple_key(xi)}));
    }
  cat->finalize();
  L.carrier = cat;

  // pi: Δ_carrier ⇒ F, pi_j projection, tau component eps
  L.delta = std::make_shared<const PseudoFunctor>(constant_pseudofunctor(F->index, cat));
  PseudoNat pi;
  pi.src = L.delta;
  pi.tgt = F;
  for (int j = 0; j < J.num_objects(); ++j) {
    Fun pj{cat, F->fiber[j], {}, {}};
    for (std::size_t p = 0; p < L.obj_a.size(); ++p) pj.omap.push_back(L.obj_a[p][j]);
    for (int m = 0; m < cat->num_mors(); ++m) pj.mmap.push_back(L.mor_xi[m][j]);
    pi.comp.push_back(std::move(pj));
  }
  for (int f = 0; f < J.num_mors(); ++f) {
    Nat t{compose_fun(F->arrow[f], pi.comp[J.src(f)]),
          compose_fun(pi.comp[J.tgt(f)], L.delta->arrow[f]), {}};
    for (std::size_t p = 0; p < L.obj_a.size(); ++p) t.comp.push_back(L.obj_eps[p][f]);
    pi.tau.push_back(std::move(t));
  }
  L.pi = std::move(pi);
  return L;
}

namespace {

// phi(b) for b: V -> W, as an explicit pseudo cone over F
PseudoNat cone_of(const std::shared_ptr<const PseudoFunctor>& delta_v,
                  const std::shared_ptr<const PseudoFunctor>& F, const PseudoNat& pi,
                  const Fun& b) {
  PseudoNat c;
  c.src = delta_v;
  c.tgt = F;
  const FinCat& J = *F->index;
  for (int j = 0; j < J.num_objects(); ++j) c.comp.push_back(compose_fun(pi.comp[j], b));
  for (int f = 0; f < J.num_mors(); ++f) {
    Nat t{compose_fun(F->arrow[f], c.comp[J.src(f)]),
          compose_fun(c.comp[J.tgt(f)], delta_v->arrow[f]), {}};
    t.comp.resize(b.omap.size());
    for (std::size_t x = 0; x < b.omap.size(); ++x) t.comp[x] = pi.tau[f].comp[b.omap[x]];
    c.tau.push_back(std::move(t));
  }
  return c;
}

struct PhiData {
  HomCat hom;
  TransCat cones;
  std::vector<int> phi_obj;  // hom fun index -> cone index, -1 when invalid
  std::vector<int> phi_mor;  // hom nat index -> modification index
  bool total = true;
};

PhiData build_phi(const std::shared_ptr<const PseudoFunctor>& F, const FinCatPtr& W,
                  const PseudoNat& pi, const FinCatPtr& V, std::size_t cap) {
  PhiData d;
  d.hom = hom_category(V, W, cap);
  d.cones = pseudocone_category(V, F, cap);
  for (auto& b : d.hom.funs) {
    PseudoNat c = cone_of(d.cones.src_pf, F, pi, b);
    int idx = d.cones.find_trans(c);
    if (idx < 0) d.total = false;
    d.phi_obj.push_back(idx);
  }
  for (std::size_t n = 0; n < d.hom.nats.size(); ++n) {
    int bs = d.hom.cat->src(static_cast<int>(n));
    int bt = d.hom.cat->tgt(static_cast<int>(n));
    if (d.phi_obj[bs] < 0 || d.phi_obj[bt] < 0) {
      d.phi_mor.push_back(-1);
      d.total = false;
      continue;
    }
    Modification m;
    m.src = d.cones.trans[d.phi_obj[bs]];
    m.tgt = d.cones.trans[d.phi_obj[bt]];
    const FinCat& J = *F->index;
    for (int j = 0; j < J.num_objects(); ++j) {
      Nat comp{m.src->comp[j], m.tgt->comp[j], {}};
      comp.comp.resize(V->num_objects());
      for (int x = 0; x < V->num_objects(); ++x)
        comp.comp[x] = pi.comp[j].mmap[d.hom.nats[n].comp[x]];
      m.comp.push_back(std::move(comp));
    }
    int idx = d.cones.find_mod(m);
    if (idx < 0) d.total = false;
    d.phi_mor.push_back(idx);
  }
  return d;
}

std::string probe_label(const FinCatPtr& v) {
  return "probe(|O|=" + std::to_string(v->num_objects()) +
         ",|M|=" + std::to_string(v->num_mors()) + ")";
}

}  // namespace

UniversalityReport verify_limit_universality(const LimitResult& L,
                                             const std::vector<FinCatPtr>& probes,
                                             std::size_t cap) {
  UniversalityReport rep;
  const auto& F = L.diagram;
  const FinCat& J = *F->index;
  for (auto& V : probes) {
    ProbeVerdict pv;
    pv.probe = probe_label(V);
    PhiData d = build_phi(F, L.carrier, L.pi, V, cap);
    if (!d.total) pv.violations.push_back({"universality/phi", "phi image is not a valid cone"});
    // psi on objects of PseudoCone(V,F): x ↦ ((σ_j x), (τ_f(x)))
    std::vector<int> psi_obj;
    for (auto& sp : d.cones.trans) {
      Fun b{V, L.carrier, {}, {}};
      bool good = true;
      for (int x = 0; x < V->num_objects(); ++x) {
        std::vector<int> a(J.num_objects()), eps(J.num_mors());
        for (int j = 0; j < J.num_objects(); ++j) a[j] = sp->comp[j].omap[x];
        for (int f = 0; f < J.num_mors(); ++f) eps[f] = sp->tau[f].comp[x];
        int p = L.find_object(a, eps);
        if (p < 0) {
          good = false;
          break;
        }
        b.omap.push_back(p);
      }
      if (good)
        for (int m = 0; m < V->num_mors(); ++m) {
          std::vector<int> xi(J.num_objects());
          for (int j = 0; j < J.num_objects(); ++j) xi[j] = sp->comp[j].mmap[m];
          int mm = L.find_mor(b.omap[V->src(m)], b.omap[V->tgt(m)], xi);
          if (mm < 0) {
            good = false;
            break;
          }
          b.mmap.push_back(mm);
        }
      if (!good) {
        pv.violations.push_back({"universality/psi", "psi image missing from the carrier"});
        psi_obj.push_back(-1);
        continue;
      }
      psi_obj.push_back(d.hom.find_fun(b));
      if (psi_obj.back() < 0)
        pv.violations.push_back({"universality/psi", "psi image is not a functor of hom(V,L)"});
    }
    if (pv.violations.empty()) {
      // phi∘psi = identity on cones, psi∘phi = identity on hom
      for (std::size_t c = 0; c < d.cones.trans.size(); ++c)
        if (psi_obj[c] < 0 || d.phi_obj[psi_obj[c]] != static_cast<int>(c))
          pv.violations.push_back({"universality/phi-psi", "phi∘psi differs from the identity"});
      for (std::size_t b = 0; b < d.hom.funs.size(); ++b)
        if (d.phi_obj[b] < 0 || psi_obj[d.phi_obj[b]] != static_cast<int>(b))
          pv.violations.push_back({"universality/psi-phi", "psi∘phi differs from the identity"});
      // morphism level: psi(Xi)_x = (Xi_j(x))_j, then both composites identity
      for (std::size_t n = 0; n < d.cones.mods.size(); ++n) {
        int cs = d.cones.cat->src(static_cast<int>(n));
        int ct = d.cones.cat->tgt(static_cast<int>(n));
        if (psi_obj[cs] < 0 || psi_obj[ct] < 0) continue;
        Nat nt{d.hom.funs[psi_obj[cs]], d.hom.funs[psi_obj[ct]], {}};
        bool good = true;
        for (int x = 0; x < V->num_objects(); ++x) {
          std::vector<int> xi(J.num_objects());
          for (int j = 0; j < J.num_objects(); ++j) xi[j] = d.cones.mods[n].comp[j].comp[x];
          int mm = L.find_mor(d.hom.funs[psi_obj[cs]].omap[x], d.hom.funs[psi_obj[ct]].omap[x], xi);
          if (mm < 0) {
            good = false;
            break;
          }
          nt.comp.push_back(mm);
        }
        int idx = good ? d.hom.find_nat(nt) : -1;
        if (idx < 0) {
          pv.violations.push_back({"universality/psi", "psi of a modification is not in hom(V,L)"});
          continue;
        }
        if (d.phi_mor[idx] != static_cast<int>(n))
          pv.violations.push_back({"universality/phi-psi", "phi∘psi differs on a modification"});
      }
      for (std::size_t n = 0; n < d.hom.nats.size(); ++n) {
        int image = d.phi_mor[n];
        if (image < 0) continue;
        // psi of that modification must be n again; recompute
        Nat nt{d.hom.nats[n].src, d.hom.nats[n].tgt, {}};
        bool good = true;
        for (int x = 0; x < V->num_objects(); ++x) {
          std::vector<int> xi(J.num_objects());
          for (int j = 0; j < J.num_objects(); ++j)
            xi[j] = d.cones.mods[image].comp[j].comp[x];
          int mm = L.find_mor(d.hom.nats[n].src.omap[x], d.hom.nats[n].tgt.omap[x], xi);
          if (mm < 0) {
            good = false;
            break;
          }
          nt.comp.push_back(mm);
        }
        if (!good || !(nt == d.hom.nats[n]))
          pv.violations.push_back({"universality/psi-phi", "psi∘phi differs on a 2-cell"});
      }
    }
    pv.passed = pv.violations.empty();
    rep.probes.push_back(std::move(pv));
  }
  return rep;
}

UniversalityReport verify_limit_universality(const std::shared_ptr<const PseudoFunctor>& F,
                                             const FinCatPtr& W, const PseudoNat& pi,
                                             const std::vector<FinCatPtr>& probes,
                                             std::size_t cap) {
  UniversalityReport rep;
  auto pirep = check_pseudonat(pi);
  for (auto& V : probes) {
    ProbeVerdict pv;
    pv.probe = probe_label(V);
    if (!pirep.ok()) {
      pv.violations.push_back({"universality/pi", "the given cone is not pseudo natural"});
      pv.passed = false;
      rep.probes.push_back(std::move(pv));
      continue;
    }
    PhiData d = build_phi(F, W, pi, V, cap);
    if (!d.total)
      pv.violations.push_back({"universality/phi", "phi image is not a valid cone"});
    else {
      // isomorphism of categories: phi bijective on objects and morphisms
      std::vector<char> hit(d.cones.trans.size(), 0);
      for (int c : d.phi_obj) {
        if (c < 0 || hit[c]) {
          pv.violations.push_back({"universality/iso", "phi is not injective on objects"});
          break;
        }
        hit[c] = 1;
      }
      if (pv.violations.empty() && d.hom.funs.size() != d.cones.trans.size())
        pv.violations.push_back({"universality/iso", "phi is not bijective on objects"});
      std::vector<char> mhit(d.cones.mods.size(), 0);
      for (int m : d.phi_mor) {
        if (m < 0 || mhit[m]) {
          pv.violations.push_back({"universality/iso", "phi is not injective on morphisms"});
          break;
        }
        mhit[m] = 1;
      }
      if (pv.violations.empty() && d.hom.nats.size() != d.cones.mods.size())
        pv.violations.push_back({"universality/iso", "phi is not bijective on morphisms"});
    }
    pv.passed = pv.violations.empty();
    rep.probes.push_back(std::move(pv));
  }
  return rep;
}

BilimitVerdict is_bilimit(const std::shared_ptr<const PseudoFunctor>& F, const FinCatPtr& W,
                          const PseudoNat& pi, const std::vector<FinCatPtr>& probes,
                          std::size_t cap) {
  BilimitVerdict v;
  v.is_bilimit = true;
  for (auto& probe : probes) {
    v.probe_names.push_back(probe_label(probe));
    PhiData d = build_phi(F, W, pi, probe, cap);
    if (!d.total) {
      v.probe_ok.push_back(false);
      v.is_bilimit = false;
      continue;
    }
    Fun phi{d.hom.cat, d.cones.cat, d.phi_obj, d.phi_mor};
    auto w = is_equivalence(phi, cap);
    if (w.has_value()) {
      v.probe_ok.push_back(true);
      v.witnesses.push_back(*w);
    } else {
      v.probe_ok.push_back(false);
      v.is_bilimit = false;
    }
  }
  return v;
}

std::vector<FinCatPtr> default_probes() {
  return {terminal_cat(), walking_arrow(), iso_pair()};
}

CotensorResult cotensor(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap) {
  CotensorResult ct;
  ct.carrier_hom = hom_category(j, f, cap);
  ct.carrier = ct.carrier_hom.cat;
  ct.carrier_into_f = hom_category(ct.carrier, f, cap);
  Fun unit{j, ct.carrier_into_f.cat, {}, {}};
  for (int x = 0; x < j->num_objects(); ++x) {
    // evaluation at x
    Fun ev{ct.carrier, f, {}, {}};
    for (auto& u : ct.carrier_hom.funs) ev.omap.push_back(u.omap[x]);
    for (auto& n : ct.carrier_hom.nats) ev.mmap.push_back(n.comp[x]);
    int idx = ct.carrier_into_f.find_fun(ev);
    if (idx < 0) throw std::logic_error("cotensor: evaluation functor not enumerated");
    unit.omap.push_back(idx);
  }
  for (int g = 0; g < j->num_mors(); ++g) {
    Fun evs{ct.carrier, f, {}, {}};
    Fun evt{ct.carrier, f, {}, {}};
    for (auto& u : ct.carrier_hom.funs) {
      evs.omap.push_back(u.omap[j->src(g)]);
      evt.omap.push_back(u.omap[j->tgt(g)]);
    }
    for (auto& n : ct.carrier_hom.nats) {
      evs.mmap.push_back(n.comp[j->src(g)]);
      evt.mmap.push_back(n.comp[j->tgt(g)]);
    }
    Nat evg{evs, evt, {}};
    for (auto& u : ct.carrier_hom.funs) evg.comp.push_back(u.mmap[g]);
    int idx = ct.carrier_into_f.find_nat(evg);
    if (idx < 0) throw std::logic_error("cotensor: evaluation nat not enumerated");
    unit.mmap.push_back(idx);
  }
  ct.unit = std::move(unit);
  return ct;
}

UniversalityReport verify_cotensor(const CotensorResult& ct, const FinCatPtr& j,
                                   const FinCatPtr& f, const std::vector<FinCatPtr>& probes,
                                   std::size_t cap) {
  UniversalityReport rep;
  for (auto& C : probes) {
    ProbeVerdict pv;
    pv.probe = probe_label(C);
    HomCat homCF = hom_category(C, f, cap);
    auto sigmas = enumerate_functors(j, homCF.cat, cap);
    auto bs = enumerate_functors(C, ct.carrier, cap);
    // the comparison b ↦ (x ↦ ev_x ∘ b): functor j -> homCF for each b
    auto comparison = [&](const Fun& b) {
      Fun out{j, homCF.cat, {}, {}};
      for (int y = 0; y < j->num_objects(); ++y) {
        Fun val{C, f, {}, {}};
        for (int x = 0; x < C->num_objects(); ++x)
          val.omap.push_back(ct.carrier_hom.funs[b.omap[x]].omap[y]);
        for (int m = 0; m < C->num_mors(); ++m)
          val.mmap.push_back(ct.carrier_hom.nats[b.mmap[m]].comp[y]);
        out.omap.push_back(homCF.find_fun(val));
      }
      for (int g = 0; g < j->num_mors(); ++g) {
        int ys = j->src(g), yt = j->tgt(g);
        if (out.omap[ys] < 0 || out.omap[yt] < 0) {
          out.mmap.push_back(-1);
          continue;
        }
        Nat n{homCF.funs[out.omap[ys]], homCF.funs[out.omap[yt]], {}};
        for (int x = 0; x < C->num_objects(); ++x)
          n.comp.push_back(ct.carrier_hom.funs[b.omap[x]].mmap[g]);
        out.mmap.push_back(homCF.find_nat(n));
      }
      return out;
    };
    std::vector<Fun> images;
    for (auto& b : bs) images.push_back(comparison(b));
    // condition (1): the comparison is a bijection onto all sigmas
    for (auto& sigma : sigmas) {
      int count = 0;
      for (auto& im : images)
        if (im == sigma) ++count;
      if (count != 1) {
        pv.violations.push_back(
            {"cotensor/unique-factorization",
             "a functor J -> hom(C,F) factors " + std::to_string(count) + " times"});
        break;
      }
    }
    // condition (2): same for natural transformations, via hom categories
    if (pv.violations.empty()) {
      HomCat homCarrier = hom_category(C, ct.carrier, cap);
      int nat_count_lhs = static_cast<int>(homCarrier.nats.size());
      HomCat homSigma = hom_category(j, homCF.cat, cap);
      int nat_count_rhs = static_cast<int>(homSigma.nats.size());
      if (nat_count_lhs != nat_count_rhs)
        pv.violations.push_back({"cotensor/2-cells", "2-cell counts differ"});
    }
    pv.passed = pv.violations.empty();
    rep.probes.push_back(std::move(pv));
  }
  return rep;
}

WeightedLimitResult weighted_pseudo_limit(const std::shared_ptr<const PseudoFunctor>& J,
                                          const std::shared_ptr<const PseudoFunctor>& F,
                                          std::size_t cap) {
  WeightedLimitResult wl;
  wl.carrier = trans_category(J, F, cap);
  return wl;
}

UniversalityReport verify_weighted_limit(const WeightedLimitResult& wl,
                                         const std::shared_ptr<const PseudoFunctor>& J,
                                         const std::shared_ptr<const PseudoFunctor>& F,
                                         const std::vector<FinCatPtr>& probes, std::size_t cap) {
  UniversalityReport rep;
  const FinCat& Jx = *F->index;
  for (auto& C : probes) {
    ProbeVerdict pv;
    pv.probe = probe_label(C);
    // hom(C, F-) as a pseudo functor on the same index
    PseudoFunctor H;
    H.index = F->index;
    std::vector<HomCat> homs;
    for (int o = 0; o < Jx.num_objects(); ++o) homs.push_back(hom_category(C, F->fiber[o], cap));
    for (int o = 0; o < Jx.num_objects(); ++o) H.fiber.push_back(homs[o].cat);
    for (int m = 0; m < Jx.num_mors(); ++m) {
      int s = Jx.src(m), t = Jx.tgt(m);
      Fun post{homs[s].cat, homs[t].cat, {}, {}};
      for (auto& u : homs[s].funs)
        post.omap.push_back(homs[t].find_fun(compose_fun(F->arrow[m], u)));
      for (auto& n : homs[s].nats)
        post.mmap.push_back(homs[t].find_nat(whisker_left(F->arrow[m], n)));
      H.arrow.push_back(std::move(post));
    }
    for (int g = 0; g < Jx.num_mors(); ++g)
      for (int f = 0; f < Jx.num_mors(); ++f) {
        if (Jx.tgt(f) != Jx.src(g)) continue;
        int gf = Jx.compose(g, f);
        int s = Jx.src(f), top = Jx.tgt(g);
        Nat n{compose_fun(H.arrow[g], H.arrow[f]), H.arrow[gf], {}};
        for (auto& u : homs[s].funs)
          n.comp.push_back(homs[top].find_nat(whisker_right(F->gamma_at(f, g), u)));
        H.gamma[{f, g}] = std::move(n);
      }
    for (int o = 0; o < Jx.num_objects(); ++o) {
      Nat n{identity_fun(homs[o].cat), H.arrow[Jx.identity(o)], {}};
      for (auto& u : homs[o].funs) n.comp.push_back(homs[o].find_nat(whisker_right(F->delta[o], u)));
      H.delta.push_back(std::move(n));
    }
    auto hrep = check_pseudofunctor(H);
    if (!hrep.ok()) {
      pv.violations.push_back({"weighted/homPF", "hom(C,F-) failed its own checks"});
      pv.passed = false;
      rep.probes.push_back(std::move(pv));
      continue;
    }
    auto Hp = std::make_shared<const PseudoFunctor>(std::move(H));
    TransCat rhs = trans_category(J, Hp, cap);
    HomCat lhs = hom_category(C, wl.carrier.cat, cap);
    // comparison on objects: b: C -> carrier ↦ ν^b: J ⇒ hom(C,F-)
    std::vector<int> image;
    for (auto& b : lhs.funs) {
      PseudoNat nu;
      nu.src = J;
      nu.tgt = Hp;
      bool good = true;
      for (int o = 0; o < Jx.num_objects() && good; ++o) {
        Fun comp{J->fiber[o], homs[o].cat, {}, {}};
        for (int y = 0; y < J->fiber[o]->num_objects(); ++y) {
          Fun val{C, F->fiber[o], {}, {}};
          for (int x = 0; x < C->num_objects(); ++x)
            val.omap.push_back(wl.carrier.trans[b.omap[x]]->comp[o].omap[y]);
          for (int m = 0; m < C->num_mors(); ++m)
            val.mmap.push_back(wl.carrier.mods[b.mmap[m]].comp[o].comp[y]);
          int idx = homs[o].find_fun(val);
          if (idx < 0) good = false;
          comp.omap.push_back(idx);
        }
        for (int u = 0; u < J->fiber[o]->num_mors() && good; ++u) {
          int ys = J->fiber[o]->src(u), yt = J->fiber[o]->tgt(u);
          Nat n{homs[o].funs[comp.omap[ys]], homs[o].funs[comp.omap[yt]], {}};
          for (int x = 0; x < C->num_objects(); ++x)
            n.comp.push_back(wl.carrier.trans[b.omap[x]]->comp[o].mmap[u]);
          int idx = homs[o].find_nat(n);
          if (idx < 0) good = false;
          comp.mmap.push_back(idx);
        }
        nu.comp.push_back(std::move(comp));
      }
      for (int f = 0; f < Jx.num_mors() && good; ++f) {
        int s = Jx.src(f), t = Jx.tgt(f);
        Nat tau{compose_fun(Hp->arrow[f], nu.comp[s]), compose_fun(nu.comp[t], J->arrow[f]), {}};
        for (int y = 0; y < J->fiber[s]->num_objects(); ++y) {
          Nat cell{homs[t].funs[tau.src.omap[y]], homs[t].funs[tau.tgt.omap[y]], {}};
          for (int x = 0; x < C->num_objects(); ++x)
            cell.comp.push_back(wl.carrier.trans[b.omap[x]]->tau[f].comp[y]);
          int idx = homs[t].find_nat(cell);
          if (idx < 0) good = false;
          tau.comp.push_back(idx < 0 ? 0 : idx);
        }
        nu.tau.push_back(std::move(tau));
      }
      int found = good ? rhs.find_trans(nu) : -1;
      image.push_back(found);
      if (found < 0) {
        pv.violations.push_back({"weighted/comparison", "image transformation not found"});
        break;
      }
    }
    if (pv.violations.empty()) {
      std::vector<char> hit(rhs.trans.size(), 0);
      bool bij = lhs.funs.size() == rhs.trans.size();
      for (int c : image) {
        if (c < 0 || hit[c]) bij = false;
        else hit[c] = 1;
      }
      if (!bij)
        pv.violations.push_back({"weighted/iso", "comparison is not bijective on objects"});
      if (lhs.nats.size() != rhs.mods.size())
        pv.violations.push_back({"weighted/iso", "comparison is not bijective on 2-cells"});
    }
    pv.passed = pv.violations.empty();
    rep.probes.push_back(std::move(pv));
  }
  return rep;
}

}  // namespace pcat
