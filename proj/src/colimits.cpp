#include "pseudocat/colimits.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pcat {

int ColimPresentation::vertex_id(int j, int x) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].j == j && vertices[v].x == x) return static_cast<int>(v);
  return -1;
}

namespace {

// a fiber morphism as a (possibly empty) generator word
std::vector<int> base_word(const ColimPresentation& p, const PseudoFunctor& F, int j, int mor) {
  if (F.fiber[j]->is_identity(mor)) return {};
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    if (p.gens[g].kind == ColimPresentation::Gen::Base && p.gens[g].j == j && p.gens[g].mor == mor)
      return {static_cast<int>(g)};
  throw std::logic_error("colim_presentation: missing base generator");
}

int h_gen(const ColimPresentation& p, int x_vertex_fiber_obj, int f, bool inv) {
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    auto kind = inv ? ColimPresentation::Gen::Hinv : ColimPresentation::Gen::H;
    if (p.gens[g].kind == kind && p.gens[g].x == x_vertex_fiber_obj && p.gens[g].f == f)
      return static_cast<int>(g);
  }
  throw std::logic_error("colim_presentation: missing h generator");
}

}  // namespace

ColimPresentation colim_presentation(const PseudoFunctor& F) {
  const FinCat& J = *F.index;
  ColimPresentation p;
  for (int j = 0; j < J.num_objects(); ++j)
    for (int x = 0; x < F.fiber[j]->num_objects(); ++x)
      p.vertices.push_back({j, x, J.object_name(j) + ":" + F.fiber[j]->object_name(x)});

  for (int j = 0; j < J.num_objects(); ++j)
    for (int m = 0; m < F.fiber[j]->num_mors(); ++m) {
      if (F.fiber[j]->is_identity(m)) continue;
      ColimPresentation::Gen g;
      g.kind = ColimPresentation::Gen::Base;
      g.j = j;
      g.mor = m;
      g.src = p.vertex_id(j, F.fiber[j]->src(m));
      g.tgt = p.vertex_id(j, F.fiber[j]->tgt(m));
      g.name = J.object_name(j) + ":" + F.fiber[j]->mor_name(m);
      p.gens.push_back(g);
    }
  for (int f = 0; f < J.num_mors(); ++f) {
    int i = J.src(f), j = J.tgt(f);
    for (int x = 0; x < F.fiber[i]->num_objects(); ++x) {
      ColimPresentation::Gen g;
      g.kind = ColimPresentation::Gen::H;
      g.x = x;
      g.f = f;
      g.src = p.vertex_id(i, x);
      g.tgt = p.vertex_id(j, F.arrow[f].omap[x]);
      g.name = "h(" + F.fiber[i]->object_name(x) + "," + J.mor_name(f) + ")";
      p.gens.push_back(g);
      ColimPresentation::Gen gi = g;
      gi.kind = ColimPresentation::Gen::Hinv;
      std::swap(gi.src, gi.tgt);
      gi.name = "h^-1(" + F.fiber[i]->object_name(x) + "," + J.mor_name(f) + ")";
      p.gens.push_back(gi);
    }
  }

  auto add_rel = [&](std::vector<int> lhs, std::vector<int> rhs, int src, int tgt,
                     const std::string& fam) {
    p.relations.push_back({std::move(lhs), std::move(rhs), src, tgt, fam});
  };

  // R1: internal composition of each fiber
  for (int j = 0; j < J.num_objects(); ++j) {
    const FinCat& A = *F.fiber[j];
    for (int n = 0; n < A.num_mors(); ++n)
      for (int m = 0; m < A.num_mors(); ++m) {
        if (A.tgt(m) != A.src(n)) continue;
        if (A.is_identity(m) || A.is_identity(n)) continue;  // empty-word cases hold on the nose
        std::vector<int> lhs = base_word(p, F, j, m);
        auto tail = base_word(p, F, j, n);
        lhs.insert(lhs.end(), tail.begin(), tail.end());
        add_rel(std::move(lhs), base_word(p, F, j, A.compose(n, m)), p.vertex_id(j, A.src(m)),
                p.vertex_id(j, A.tgt(n)), "R1");
      }
  }
  // R2: gamma compatibility
  for (int f = 0; f < J.num_mors(); ++f)
    for (int g = 0; g < J.num_mors(); ++g) {
      if (J.tgt(f) != J.src(g)) continue;
      int gf = J.compose(g, f);
      int k = J.tgt(g);
      for (int x = 0; x < F.fiber[J.src(f)]->num_objects(); ++x) {
        std::vector<int> lhs = {h_gen(p, x, f, false),
                                h_gen(p, F.arrow[f].omap[x], g, false)};
        auto gw = base_word(p, F, k, F.gamma_comp(f, g, x));
        lhs.insert(lhs.end(), gw.begin(), gw.end());
        add_rel(std::move(lhs), {h_gen(p, x, gf, false)}, p.vertex_id(J.src(f), x),
                p.vertex_id(k, F.arrow[gf].omap[x]), "R2");
      }
    }
  // R3: naturality of the connectors
  for (int f = 0; f < J.num_mors(); ++f) {
    int i = J.src(f), j = J.tgt(f);
    const FinCat& A = *F.fiber[i];
    for (int m = 0; m < A.num_mors(); ++m) {
      if (A.is_identity(m)) continue;
      int x = A.src(m), y = A.tgt(m);
      std::vector<int> lhs = base_word(p, F, i, m);
      lhs.push_back(h_gen(p, y, f, false));
      std::vector<int> rhs = {h_gen(p, x, f, false)};
      auto im = base_word(p, F, j, F.arrow[f].mmap[m]);
      rhs.insert(rhs.end(), im.begin(), im.end());
      add_rel(std::move(lhs), std::move(rhs), p.vertex_id(i, x),
              p.vertex_id(j, F.arrow[f].omap[y]), "R3");
    }
  }
  // R4: delta collapse
  for (int j = 0; j < J.num_objects(); ++j)
    for (int x = 0; x < F.fiber[j]->num_objects(); ++x) {
      add_rel(base_word(p, F, j, F.delta_comp(j, x)), {h_gen(p, x, J.identity(j), false)},
              p.vertex_id(j, x), p.vertex_id(j, F.arrow[J.identity(j)].omap[x]), "R4");
    }
  // R5: invertibility
  for (int f = 0; f < J.num_mors(); ++f) {
    int i = J.src(f), j = J.tgt(f);
    for (int x = 0; x < F.fiber[i]->num_objects(); ++x) {
      add_rel({h_gen(p, x, f, false), h_gen(p, x, f, true)}, {}, p.vertex_id(i, x),
              p.vertex_id(i, x), "R5");
      add_rel({h_gen(p, x, f, true), h_gen(p, x, f, false)}, {},
              p.vertex_id(j, F.arrow[f].omap[x]), p.vertex_id(j, F.arrow[f].omap[x]), "R5");
    }
  }
  return p;
}

namespace {

/// Two-sided coset-style closure over the presentation: states are congruence
/// classes of generator words out of a fixed source vertex. The table is
/// extended until it is total on live states and every relation instance
/// closes at every state; every union performed is an application of a
/// relation in context, so identifications are sound by construction, and a
/// closed table is exact.
struct Closure {
  const ColimPresentation& p;
  std::size_t max_states;
  std::vector<int> parent;       // union-find
  std::vector<int> src_vertex;   // per state
  std::vector<int> tgt_vertex;   // per state
  std::vector<std::map<int, int>> trans;  // per state: gen -> state
  std::deque<std::pair<int, int>> coincidences;

  explicit Closure(const ColimPresentation& pres, std::size_t cap) : p(pres), max_states(cap) {}

  int find(int s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  }

  int new_state(int sv, int tv) {
    if (parent.size() >= max_states) throw bound_exceeded("pseudo_colimit: state cap exceeded");
    parent.push_back(static_cast<int>(parent.size()));
    src_vertex.push_back(sv);
    tgt_vertex.push_back(tv);
    trans.emplace_back();
    return static_cast<int>(parent.size()) - 1;
  }

  int apply(int s, int g, bool fill) {
    s = find(s);
    auto it = trans[s].find(g);
    if (it != trans[s].end()) return find(it->second);
    if (!fill) return -1;
    int t = new_state(src_vertex[s], p.gens[g].tgt);
    trans[s][g] = t;
    return t;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    // fold b's row into a's
    auto row = trans[b];
    trans[b].clear();
    for (auto& [g, t] : row) {
      auto it = trans[a].find(g);
      if (it == trans[a].end())
        trans[a][g] = t;
      else if (find(it->second) != find(t))
        coincidences.emplace_back(it->second, t);
    }
  }

  void settle() {
    while (!coincidences.empty()) {
      auto [a, b] = coincidences.front();
      coincidences.pop_front();
      merge(a, b);
    }
  }

  // trace a word with filling, return end state
  int trace(int s, const std::vector<int>& word) {
    for (int g : word) s = apply(s, g, true);
    return find(s);
  }

  bool relation_applicable(const ColimPresentation::Relation& r, int s) {
    return tgt_vertex[find(s)] == r.src;
  }
};

}  // namespace

ColimitResult pseudo_colimit(const std::shared_ptr<const PseudoFunctor>& F, int length_bound,
                             std::size_t max_states) {
  ColimitResult R;
  R.diagram = F;
  R.pres = colim_presentation(*F);
  const ColimPresentation& p = R.pres;
  Closure cl(p, max_states);
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    cl.new_state(static_cast<int>(v), static_cast<int>(v));

  // saturate: relations at every live state, table total on live states
  bool changed = true;
  std::size_t rounds = 0;
  while (changed) {
    if (++rounds > max_states) throw bound_exceeded("pseudo_colimit: closure did not stabilize");
    changed = false;
    for (int s = 0; s < static_cast<int>(cl.parent.size()); ++s) {
      if (cl.find(s) != s) continue;
      for (auto& r : p.relations) {
        if (!cl.relation_applicable(r, s)) continue;
        std::size_t before = cl.parent.size();
        int a = cl.trace(s, r.lhs);
        int b = cl.trace(s, r.rhs);
        if (a != b) {
          cl.coincidences.emplace_back(a, b);
          cl.settle();
          changed = true;
        }
        if (cl.parent.size() != before) changed = true;
      }
    }
    // fill the table on live states
    for (int s = 0; s < static_cast<int>(cl.parent.size()); ++s) {
      if (cl.find(s) != s) continue;
      for (std::size_t g = 0; g < p.gens.size(); ++g) {
        if (p.gens[g].src != cl.tgt_vertex[cl.find(s)]) continue;
        if (cl.apply(s, static_cast<int>(g), false) < 0) {
          cl.apply(s, static_cast<int>(g), true);
          changed = true;
        }
      }
    }
  }

  // canonical live states and BFS representatives from identity states
  std::vector<int> live;
  std::vector<int> live_index(cl.parent.size(), -1);
  for (int s = 0; s < static_cast<int>(cl.parent.size()); ++s)
    if (cl.find(s) == s) {
      live_index[s] = static_cast<int>(live.size());
      live.push_back(s);
    }
  std::vector<std::vector<int>> rep(live.size());
  std::vector<char> have(live.size(), 0);
  std::deque<int> bfs;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    int s = cl.find(static_cast<int>(v));
    if (!have[live_index[s]]) {
      have[live_index[s]] = 1;
      rep[live_index[s]] = {};
      bfs.push_back(s);
    }
  }
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop_front();
    for (auto& [g, t0] : cl.trans[s]) {
      int t = cl.find(t0);
      if (have[live_index[t]]) continue;
      have[live_index[t]] = 1;
      rep[live_index[t]] = rep[live_index[s]];
      rep[live_index[t]].push_back(g);
      bfs.push_back(t);
    }
  }
  for (std::size_t i = 0; i < live.size(); ++i)
    if (!have[i]) throw bound_exceeded("pseudo_colimit: unreachable class");

  R.certificate.length_bound = length_bound;
  R.certificate.states_explored = cl.parent.size();
  R.certificate.classes = live.size();
  R.certificate.closed = true;
  for (auto& w : rep)
    R.certificate.max_rep_length =
        std::max(R.certificate.max_rep_length, static_cast<int>(w.size()));
  if (R.certificate.max_rep_length > length_bound)
    throw bound_exceeded("pseudo_colimit: representative exceeds the word length bound");

  // assemble W
  auto W = std::make_shared<FinCat>();
  for (auto& v : p.vertices) W->add_object(v.name);
  auto spell = [&](const std::vector<int>& w, int srcv) {
    std::string s = "[" + p.vertices[srcv].name + "|";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + p.gens[w[i]].name;
    return s + "]";
  };
  for (std::size_t i = 0; i < live.size(); ++i) {
    int s = live[i];
    W->add_mor(spell(rep[i], cl.src_vertex[s]), cl.src_vertex[s], cl.tgt_vertex[s]);
    R.class_rep.push_back(rep[i]);
  }
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    W->set_identity(static_cast<int>(v), live_index[cl.find(static_cast<int>(v))]);
  for (std::size_t a = 0; a < live.size(); ++a)
    for (std::size_t b = 0; b < live.size(); ++b) {
      if (cl.tgt_vertex[live[b]] != cl.src_vertex[live[a]]) continue;
      // compose class a after class b: trace a's representative from b
      int s = live[b];
      for (int g : rep[a]) {
        s = cl.apply(s, g, false);
        if (s < 0) throw bound_exceeded("pseudo_colimit: class table is not closed");
      }
      W->set_compose(static_cast<int>(a), static_cast<int>(b), live_index[cl.find(s)]);
    }
  W->finalize();
  R.carrier = W;

  // pi: F ⇒ Δ_W with inclusion components and connector coherences
  R.delta = std::make_shared<const PseudoFunctor>(constant_pseudofunctor(F->index, W));
  PseudoNat pi;
  pi.src = F;
  pi.tgt = R.delta;
  const FinCat& J = *F->index;
  auto class_of_word = [&](int srcv, const std::vector<int>& w) {
    int s = cl.find(srcv);
    for (int g : w) {
      s = cl.apply(s, g, false);
      if (s < 0) throw bound_exceeded("pseudo_colimit: class table is not closed");
    }
    return live_index[cl.find(s)];
  };
  for (int j = 0; j < J.num_objects(); ++j) {
    Fun pj{F->fiber[j], W, {}, {}};
    for (int x = 0; x < F->fiber[j]->num_objects(); ++x) pj.omap.push_back(p.vertex_id(j, x));
    for (int m = 0; m < F->fiber[j]->num_mors(); ++m) {
      auto w = base_word(p, *F, j, m);
      pj.mmap.push_back(class_of_word(p.vertex_id(j, F->fiber[j]->src(m)), w));
    }
    pi.comp.push_back(std::move(pj));
  }
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    R.gen_class.push_back(class_of_word(p.gens[g].src, {static_cast<int>(g)}));
  for (int f = 0; f < J.num_mors(); ++f) {
    int i = J.src(f);
    Nat t{compose_fun(R.delta->arrow[f], pi.comp[i]),
          compose_fun(pi.comp[J.tgt(f)], F->arrow[f]), {}};
    for (int x = 0; x < F->fiber[i]->num_objects(); ++x) {
      int hg = h_gen(p, x, f, false);
      t.comp.push_back(class_of_word(p.vertex_id(i, x), {hg}));
    }
    pi.tau.push_back(std::move(t));
  }
  R.pi = std::move(pi);
  return R;
}

UniversalityReport verify_colimit_universality(const ColimitResult& R,
                                               const std::vector<FinCatPtr>& probes,
                                               std::size_t cap) {
  UniversalityReport rep;
  const auto& F = R.diagram;
  const FinCat& J = *F->index;
  auto pirep = check_pseudonat(R.pi);
  for (auto& V : probes) {
    ProbeVerdict pv;
    pv.probe = "probe(|O|=" + std::to_string(V->num_objects()) +
               ",|M|=" + std::to_string(V->num_mors()) + ")";
    if (!pirep.ok()) {
      pv.violations.push_back({"co-universality/pi", "pi is not pseudo natural"});
      pv.passed = false;
      rep.probes.push_back(std::move(pv));
      continue;
    }
    HomCat hom = hom_category(R.carrier, V, cap);
    TransCat cones = pseudocone_co_category(F, V, cap);
    // phi(b) = Δ_b ∘ pi: components b∘pi_j, coherences b(tau)
    std::vector<int> phi_obj;
    for (auto& b : hom.funs) {
      PseudoNat c;
      c.src = F;
      c.tgt = cones.tgt_pf;
      for (int j = 0; j < J.num_objects(); ++j) c.comp.push_back(compose_fun(b, R.pi.comp[j]));
      for (int f = 0; f < J.num_mors(); ++f) {
        int i = J.src(f);
        Nat t{compose_fun(cones.tgt_pf->arrow[f], c.comp[i]),
              compose_fun(c.comp[J.tgt(f)], F->arrow[f]), {}};
        for (int x = 0; x < F->fiber[i]->num_objects(); ++x)
          t.comp.push_back(b.mmap[R.pi.tau[f].comp[x]]);
        c.tau.push_back(std::move(t));
      }
      int idx = cones.find_trans(c);
      phi_obj.push_back(idx);
      if (idx < 0) pv.violations.push_back({"co-universality/phi", "phi image is not a cone"});
    }
    std::vector<int> phi_mor;
    for (std::size_t n = 0; n < hom.nats.size(); ++n) {
      int bs = hom.cat->src(static_cast<int>(n)), bt = hom.cat->tgt(static_cast<int>(n));
      if (phi_obj[bs] < 0 || phi_obj[bt] < 0) {
        phi_mor.push_back(-1);
        continue;
      }
      Modification m;
      m.src = cones.trans[phi_obj[bs]];
      m.tgt = cones.trans[phi_obj[bt]];
      for (int j = 0; j < J.num_objects(); ++j) {
        Nat cc{m.src->comp[j], m.tgt->comp[j], {}};
        for (int x = 0; x < F->fiber[j]->num_objects(); ++x)
          cc.comp.push_back(hom.nats[n].comp[R.pi.comp[j].omap[x]]);
        m.comp.push_back(std::move(cc));
      }
      int idx = cones.find_mod(m);
      phi_mor.push_back(idx);
      if (idx < 0)
        pv.violations.push_back({"co-universality/phi", "phi image is not a modification"});
    }
    if (pv.violations.empty()) {
      // psi: evaluate the representative word of each class in V via d
      auto eval_cone = [&](const PseudoNat& sigma, int carrier_mor) -> std::optional<int> {
        int srcv = R.carrier->src(carrier_mor);
        int cur = -1;  // morphism of V under construction
        int at = R.pres.vertices[srcv].j;
        int curobj = sigma.comp[at].omap[R.pres.vertices[srcv].x];
        cur = V->identity(curobj);
        for (int g : R.class_rep[carrier_mor]) {
          const auto& gen = R.pres.gens[g];
          int step;
          if (gen.kind == ColimPresentation::Gen::Base)
            step = sigma.comp[gen.j].mmap[gen.mor];
          else {
            int f = gen.f;
            int x = gen.x;
            int t = sigma.tau[f].comp[x];
            if (gen.kind == ColimPresentation::Gen::H)
              step = t;
            else {
              step = V->iso_inverse(t);
              if (step < 0) return std::nullopt;
            }
          }
          if (V->tgt(cur) != V->src(step)) return std::nullopt;
          cur = V->compose(step, cur);
        }
        return cur;
      };
      std::vector<int> psi_obj;
      for (auto& sp : cones.trans) {
        Fun b{R.carrier, V, {}, {}};
        bool good = true;
        for (std::size_t v = 0; v < R.pres.vertices.size(); ++v)
          b.omap.push_back(sp->comp[R.pres.vertices[v].j].omap[R.pres.vertices[v].x]);
        for (int m = 0; m < R.carrier->num_mors() && good; ++m) {
          auto val = eval_cone(*sp, m);
          if (!val) {
            good = false;
            break;
          }
          b.mmap.push_back(*val);
        }
        if (good && !b.check().ok()) good = false;
        int idx = good ? hom.find_fun(b) : -1;
        psi_obj.push_back(idx);
        if (idx < 0)
          pv.violations.push_back({"co-universality/psi", "psi image is ill-defined"});
      }
      if (pv.violations.empty()) {
        for (std::size_t b = 0; b < hom.funs.size(); ++b)
          if (phi_obj[b] < 0 || psi_obj[phi_obj[b]] != static_cast<int>(b))
            pv.violations.push_back({"co-universality/psi-phi", "psi∘phi is not the identity"});
        for (std::size_t c = 0; c < cones.trans.size(); ++c)
          if (psi_obj[c] < 0 || phi_obj[psi_obj[c]] != static_cast<int>(c))
            pv.violations.push_back({"co-universality/phi-psi", "phi∘psi is not the identity"});
        // morphism level: psi of a modification has components Xi on vertices
        for (std::size_t n = 0; n < cones.mods.size(); ++n) {
          int cs = cones.cat->src(static_cast<int>(n)), ct = cones.cat->tgt(static_cast<int>(n));
          if (psi_obj[cs] < 0 || psi_obj[ct] < 0) continue;
          Nat nt{hom.funs[psi_obj[cs]], hom.funs[psi_obj[ct]], {}};
          for (std::size_t v = 0; v < R.pres.vertices.size(); ++v)
            nt.comp.push_back(
                cones.mods[n].comp[R.pres.vertices[v].j].comp[R.pres.vertices[v].x]);
          int idx = hom.find_nat(nt);
          if (idx < 0 || phi_mor[idx] != static_cast<int>(n)) {
            pv.violations.push_back({"co-universality/phi-psi", "mismatch on a modification"});
            break;
          }
        }
        for (std::size_t n = 0; n < hom.nats.size(); ++n) {
          if (phi_mor[n] < 0) continue;
          Nat nt{hom.funs[psi_obj[cones.cat->src(phi_mor[n])]],
                 hom.funs[psi_obj[cones.cat->tgt(phi_mor[n])]], {}};
          for (std::size_t v = 0; v < R.pres.vertices.size(); ++v)
            nt.comp.push_back(
                cones.mods[phi_mor[n]].comp[R.pres.vertices[v].j].comp[R.pres.vertices[v].x]);
          if (!(nt == hom.nats[n])) {
            pv.violations.push_back({"co-universality/psi-phi", "mismatch on a 2-cell"});
            break;
          }
        }
      }
    }
    pv.passed = pv.violations.empty();
    rep.probes.push_back(std::move(pv));
  }
  return rep;
}

TensorResult tensor(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap) {
  TensorResult tr;
  tr.carrier = product_cat({j, f});
  tr.from_f = hom_category(f, tr.carrier, cap);
  Fun unit{j, tr.from_f.cat, {}, {}};
  for (int y = 0; y < j->num_objects(); ++y) {
    Fun ins{f, tr.carrier, {}, {}};
    for (int x = 0; x < f->num_objects(); ++x) {
      std::string nm = "(" + j->object_name(y) + "," + f->object_name(x) + ")";
      ins.omap.push_back(tr.carrier->object_index(nm).value());
    }
    for (int m = 0; m < f->num_mors(); ++m) {
      std::string nm = "(" + j->mor_name(j->identity(y)) + "," + f->mor_name(m) + ")";
      ins.mmap.push_back(tr.carrier->mor_index(nm).value());
    }
    int idx = tr.from_f.find_fun(ins);
    if (idx < 0) throw std::logic_error("tensor: insertion functor not enumerated");
    unit.omap.push_back(idx);
  }
  for (int g = 0; g < j->num_mors(); ++g) {
    Nat n{tr.from_f.funs[unit.omap[j->src(g)]], tr.from_f.funs[unit.omap[j->tgt(g)]], {}};
    for (int x = 0; x < f->num_objects(); ++x) {
      std::string nm = "(" + j->mor_name(g) + "," + f->mor_name(f->identity(x)) + ")";
      n.comp.push_back(tr.carrier->mor_index(nm).value());
    }
    int idx = tr.from_f.find_nat(n);
    if (idx < 0) throw std::logic_error("tensor: unit nat not enumerated");
    unit.mmap.push_back(idx);
  }
  tr.unit = std::move(unit);
  return tr;
}

UniversalityReport verify_tensor(const TensorResult& tr, const FinCatPtr& j, const FinCatPtr& f,
                                 const std::vector<FinCatPtr>& probes, std::size_t cap) {
  UniversalityReport rep;
  for (auto& C : probes) {
    ProbeVerdict pv;
    pv.probe = "probe(|O|=" + std::to_string(C->num_objects()) +
               ",|M|=" + std::to_string(C->num_mors()) + ")";
    auto lhs = enumerate_functors(tr.carrier, C, cap);
    HomCat homFC = hom_category(f, C, cap);
    auto rhs = enumerate_functors(j, homFC.cat, cap);
    // curry: b: J x F -> C into J -> Cat(F, C)
    auto curry = [&](const Fun& b) {
      Fun out{j, homFC.cat, {}, {}};
      for (int y = 0; y < j->num_objects(); ++y) {
        Fun val{f, C, {}, {}};
        for (int x = 0; x < f->num_objects(); ++x)
          val.omap.push_back(b.omap[tr.carrier
                                        ->object_index("(" + j->object_name(y) + "," +
                                                       f->object_name(x) + ")")
                                        .value()]);
        for (int m = 0; m < f->num_mors(); ++m)
          val.mmap.push_back(
              b.mmap[tr.carrier
                         ->mor_index("(" + j->mor_name(j->identity(y)) + "," + f->mor_name(m) +
                                     ")")
                         .value()]);
        out.omap.push_back(homFC.find_fun(val));
      }
      for (int g = 0; g < j->num_mors(); ++g) {
        Nat n{homFC.funs[out.omap[j->src(g)]], homFC.funs[out.omap[j->tgt(g)]], {}};
        for (int x = 0; x < f->num_objects(); ++x)
          n.comp.push_back(
              b.mmap[tr.carrier
                         ->mor_index("(" + j->mor_name(g) + "," + f->mor_name(f->identity(x)) +
                                     ")")
                         .value()]);
        out.mmap.push_back(homFC.find_nat(n));
      }
      return out;
    };
    // exhaustive bijection check
    std::vector<int> image;
    for (auto& b : lhs) {
      Fun cur = curry(b);
      int found = -1;
      for (std::size_t r = 0; r < rhs.size(); ++r)
        if (rhs[r] == cur) found = static_cast<int>(r);
      image.push_back(found);
      if (found < 0) {
        pv.violations.push_back({"tensor/curry", "curried functor not found"});
        break;
      }
    }
    if (pv.violations.empty()) {
      std::vector<char> hit(rhs.size(), 0);
      bool bij = lhs.size() == rhs.size();
      for (int i : image) {
        if (i < 0 || hit[i]) bij = false;
        else hit[i] = 1;
      }
      if (!bij) pv.violations.push_back({"tensor/bijection", "currying is not a bijection"});
    }
    pv.passed = pv.violations.empty();
    rep.probes.push_back(std::move(pv));
  }
  return rep;
}

}  // namespace pcat
