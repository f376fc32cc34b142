#include "pseudocat/fincat.hpp"

#include <algorithm>
#include <cassert>

namespace pcat {

int FinCat::add_object(const std::string& name) {
  if (finalized_) throw std::logic_error("FinCat is finalized");
  if (obj_index_.count(name)) throw parse_error("duplicate object id: " + name);
  objects_.push_back(name);
  identities_.push_back(-1);
  obj_index_[name] = static_cast<int>(objects_.size()) - 1;
  return static_cast<int>(objects_.size()) - 1;
}

int FinCat::add_mor(const std::string& name, int src, int tgt) {
  if (finalized_) throw std::logic_error("FinCat is finalized");
  if (mor_index_.count(name)) throw parse_error("duplicate morphism id: " + name);
  if (src < 0 || src >= num_objects() || tgt < 0 || tgt >= num_objects())
    throw parse_error("morphism " + name + " has dangling endpoint");
  mors_.push_back({name, src, tgt});
  mor_index_[name] = static_cast<int>(mors_.size()) - 1;
  return static_cast<int>(mors_.size()) - 1;
}

void FinCat::set_identity(int obj, int mor) {
  if (finalized_) throw std::logic_error("FinCat is finalized");
  identities_[obj] = mor;
}

void FinCat::set_compose(int g, int f, int result) {
  if (finalized_) throw std::logic_error("FinCat is finalized");
  comp_[key(g, f)] = result;
}

void FinCat::finalize() {
  if (finalized_) return;
  for (int o = 0; o < num_objects(); ++o) {
    if (identities_[o] < 0) throw parse_error("object " + objects_[o] + " has no identity");
  }
  // Identity compositions may be omitted; infer them.
  for (int m = 0; m < num_mors(); ++m) {
    std::uint64_t kl = key(identities_[mors_[m].tgt], m);
    std::uint64_t kr = key(m, identities_[mors_[m].src]);
    if (!comp_.count(kl)) comp_[kl] = m;
    if (!comp_.count(kr)) comp_[kr] = m;
  }
  homs_.assign(static_cast<std::size_t>(num_objects()) * num_objects(), {});
  for (int m = 0; m < num_mors(); ++m)
    homs_[mors_[m].src * num_objects() + mors_[m].tgt].push_back(m);
  // Iso partners: m' with m'∘m = 1 and m∘m' = 1.
  iso_inv_.assign(num_mors(), -1);
  for (int m = 0; m < num_mors(); ++m) {
    int x = mors_[m].src, y = mors_[m].tgt;
    for (int mp : homs_[y * num_objects() + x]) {
      auto a = comp_.find(key(mp, m));
      auto b = comp_.find(key(m, mp));
      if (a != comp_.end() && b != comp_.end() && a->second == identities_[x] &&
          b->second == identities_[y]) {
        iso_inv_[m] = mp;
        break;
      }
    }
  }
  finalized_ = true;
}

std::optional<int> FinCat::object_index(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::mor_index(const std::string& name) const {
  auto it = mor_index_.find(name);
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

int FinCat::compose(int g, int f) const {
  auto it = comp_.find(key(g, f));
  if (it == comp_.end())
    throw std::logic_error("no composition entry for (" + mors_[g].name + ", " + mors_[f].name + ")");
  return it->second;
}

std::optional<int> FinCat::try_compose(int g, int f) const {
  auto it = comp_.find(key(g, f));
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FinCat::iso_hom(int x, int y) const {
  std::vector<int> out;
  for (int m : hom(x, y))
    if (is_iso(m)) out.push_back(m);
  return out;
}

CheckReport FinCat::check() const {
  CheckReport rep;
  // Structural problems are reported distinctly from law violations.
  for (int o = 0; o < num_objects(); ++o) {
    int e = identities_[o];
    if (e < 0 || e >= num_mors()) {
      rep.add("malformed/identity-id", "object " + objects_[o] + " has dangling identity");
      continue;
    }
    if (mors_[e].src != o || mors_[e].tgt != o)
      rep.add("malformed/identity-endpoints",
              "identity of " + objects_[o] + " is " + mors_[e].name + " with wrong endpoints");
  }
  for (auto& [k, r] : comp_) {
    int g = static_cast<int>(k >> 32), f = static_cast<int>(k & 0xffffffffu);
    if (g < 0 || g >= num_mors() || f < 0 || f >= num_mors() || r < 0 || r >= num_mors()) {
      rep.add("malformed/compose-id", "composition entry with dangling morphism id");
      continue;
    }
    if (mors_[f].tgt != mors_[g].src)
      rep.add("malformed/compose-pair",
              "(" + mors_[g].name + ", " + mors_[f].name + ") is not a composable pair");
    else if (mors_[r].src != mors_[f].src || mors_[r].tgt != mors_[g].tgt)
      rep.add("law/compose-typing", "compose(" + mors_[g].name + ", " + mors_[f].name + ") = " +
                                        mors_[r].name + " has wrong endpoints");
  }
  if (!rep.ok()) return rep;  // laws are only meaningful on well-formed data
  // Totality on composable pairs.
  for (int g = 0; g < num_mors(); ++g)
    for (int f = 0; f < num_mors(); ++f)
      if (mors_[f].tgt == mors_[g].src && !comp_.count(key(g, f)))
        rep.add("law/compose-totality",
                "missing compose(" + mors_[g].name + ", " + mors_[f].name + ")");
  if (!rep.ok()) return rep;
  // Identity laws.
  for (int m = 0; m < num_mors(); ++m) {
    if (compose(identities_[mors_[m].tgt], m) != m)
      rep.add("law/left-identity", mors_[m].name);
    if (compose(m, identities_[mors_[m].src]) != m)
      rep.add("law/right-identity", mors_[m].name);
  }
  // Associativity over all composable triples.
  for (int f = 0; f < num_mors(); ++f) {
    for (int g = 0; g < num_mors(); ++g) {
      if (mors_[g].src != mors_[f].tgt) continue;
      int gf = compose(g, f);
      for (int h = 0; h < num_mors(); ++h) {
        if (mors_[h].src != mors_[g].tgt) continue;
        if (compose(h, gf) != compose(compose(h, g), f))
          rep.add("law/associativity",
                  "(" + mors_[h].name + ", " + mors_[g].name + ", " + mors_[f].name + ")");
      }
    }
  }
  return rep;
}

// -- shapes -------------------------------------------------------------------

static FinCatPtr freeze(std::shared_ptr<FinCat> c) {
  c->finalize();
  return c;
}

FinCatPtr terminal_cat() {
  auto c = std::make_shared<FinCat>();
  int o = c->add_object("*");
  c->set_identity(o, c->add_mor("1*", o, o));
  return freeze(c);
}

FinCatPtr discrete_cat(int n) {
  auto c = std::make_shared<FinCat>();
  for (int i = 0; i < n; ++i) {
    int o = c->add_object("d" + std::to_string(i));
    c->set_identity(o, c->add_mor("1d" + std::to_string(i), o, o));
  }
  return freeze(c);
}

FinCatPtr walking_arrow() {
  auto c = std::make_shared<FinCat>();
  int a = c->add_object("a");
  int b = c->add_object("b");
  c->set_identity(a, c->add_mor("1a", a, a));
  c->set_identity(b, c->add_mor("1b", b, b));
  c->add_mor("f", a, b);
  return freeze(c);
}

FinCatPtr iso_pair() {
  auto c = std::make_shared<FinCat>();
  int a = c->add_object("a");
  int b = c->add_object("b");
  int ia = c->add_mor("1a", a, a);
  int ib = c->add_mor("1b", b, b);
  c->set_identity(a, ia);
  c->set_identity(b, ib);
  int u = c->add_mor("u", a, b);
  int v = c->add_mor("v", b, a);
  c->set_compose(v, u, ia);
  c->set_compose(u, v, ib);
  return freeze(c);
}

FinCatPtr chain_cat(int n) {
  auto c = std::make_shared<FinCat>();
  for (int i = 0; i < n; ++i) {
    int o = c->add_object("c" + std::to_string(i));
    c->set_identity(o, c->add_mor("1c" + std::to_string(i), o, o));
  }
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      arrow[i][j] = c->add_mor("le" + std::to_string(i) + std::to_string(j), i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        c->set_compose(arrow[j][k], arrow[i][j], arrow[i][k]);
  return freeze(c);
}

FinCatPtr parallel_pair_cat() {
  auto c = std::make_shared<FinCat>();
  int a = c->add_object("a");
  int b = c->add_object("b");
  c->set_identity(a, c->add_mor("1a", a, a));
  c->set_identity(b, c->add_mor("1b", b, b));
  c->add_mor("f", a, b);
  c->add_mor("g", a, b);
  return freeze(c);
}

FinCatPtr cospan_cat() {
  auto c = std::make_shared<FinCat>();
  int a = c->add_object("a");
  int b = c->add_object("b");
  int m = c->add_object("m");
  c->set_identity(a, c->add_mor("1a", a, a));
  c->set_identity(b, c->add_mor("1b", b, b));
  c->set_identity(m, c->add_mor("1m", m, m));
  c->add_mor("f", a, m);
  c->add_mor("g", b, m);
  return freeze(c);
}

FinCatPtr cyclic_group_cat(int n) {
  auto c = std::make_shared<FinCat>();
  int o = c->add_object("*");
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = c->add_mor("g" + std::to_string(i), o, o);
  c->set_identity(o, g[0]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c->set_compose(g[i], g[j], g[(i + j) % n]);
  return freeze(c);
}

FinCatPtr opposite(const FinCatPtr& c) {
  auto o = std::make_shared<FinCat>();
  for (int i = 0; i < c->num_objects(); ++i) o->add_object(c->object_name(i));
  for (int m = 0; m < c->num_mors(); ++m)
    o->add_mor(c->mor_name(m), c->tgt(m), c->src(m));
  for (int i = 0; i < c->num_objects(); ++i) o->set_identity(i, c->identity(i));
  for (int g = 0; g < c->num_mors(); ++g)
    for (int f = 0; f < c->num_mors(); ++f)
      if (c->tgt(f) == c->src(g)) o->set_compose(f, g, c->compose(g, f));
  return freeze(o);
}

FinCatPtr product_cat(const std::vector<FinCatPtr>& cs) {
  auto c = std::make_shared<FinCat>();
  std::size_t nobj = 1, nmor = 1;
  for (auto& x : cs) {
    nobj *= static_cast<std::size_t>(x->num_objects());
    nmor *= static_cast<std::size_t>(x->num_mors());
  }
  if (nobj > 100000 || nmor > 200000) throw capacity_error("product category too large");
  int k = static_cast<int>(cs.size());
  std::vector<int> oi(k, 0);
  auto oname = [&](const std::vector<int>& t) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) s += (i ? "," : "") + cs[i]->object_name(t[i]);
    return s + ")";
  };
  auto mname = [&](const std::vector<int>& t) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) s += (i ? "," : "") + cs[i]->mor_name(t[i]);
    return s + ")";
  };
  std::vector<std::vector<int>> otuples, mtuples;
  {
    std::vector<int> t(k, 0);
    for (;;) {
      otuples.push_back(t);
      int i = k - 1;
      for (; i >= 0; --i) {
        if (++t[i] < cs[i]->num_objects()) break;
        t[i] = 0;
      }
      if (i < 0) break;
      if (k == 0) break;
    }
    if (k == 0) otuples = {{}};
  }
  {
    std::vector<int> t(k, 0);
    if (k == 0) {
      mtuples = {{}};
    } else {
      for (;;) {
        mtuples.push_back(t);
        int i = k - 1;
        for (; i >= 0; --i) {
          if (++t[i] < cs[i]->num_mors()) break;
          t[i] = 0;
        }
        if (i < 0) break;
      }
    }
  }
  std::unordered_map<std::string, int> oidx;
  for (auto& t : otuples) {
    int id = c->add_object(oname(t));
    oidx[oname(t)] = id;
  }
  for (auto& t : mtuples) {
    std::vector<int> s(k), d(k);
    for (int i = 0; i < k; ++i) {
      s[i] = cs[i]->src(t[i]);
      d[i] = cs[i]->tgt(t[i]);
    }
    c->add_mor(mname(t), oidx.at(oname(s)), oidx.at(oname(d)));
  }
  // identities
  for (std::size_t p = 0; p < otuples.size(); ++p) {
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = cs[i]->identity(otuples[p][i]);
    c->set_identity(static_cast<int>(p), c->mor_index(mname(e)).value());
  }
  // compose componentwise
  for (std::size_t a = 0; a < mtuples.size(); ++a) {
    for (std::size_t b = 0; b < mtuples.size(); ++b) {
      bool composable = true;
      std::vector<int> r(k);
      for (int i = 0; i < k; ++i) {
        if (cs[i]->tgt(mtuples[b][i]) != cs[i]->src(mtuples[a][i])) {
          composable = false;
          break;
        }
        r[i] = cs[i]->compose(mtuples[a][i], mtuples[b][i]);
      }
      if (composable)
        c->set_compose(static_cast<int>(a), static_cast<int>(b), c->mor_index(mname(r)).value());
    }
  }
  return freeze(c);
}

// -- functors ----------------------------------------------------------------

CheckReport Fun::check() const {
  CheckReport rep;
  if (static_cast<int>(omap.size()) != src->num_objects() ||
      static_cast<int>(mmap.size()) != src->num_mors()) {
    rep.add("malformed/fun-size", "object/morphism map sizes do not match source");
    return rep;
  }
  for (int m = 0; m < src->num_mors(); ++m) {
    int im = mmap[m];
    if (im < 0 || im >= tgt->num_mors()) {
      rep.add("malformed/fun-id", src->mor_name(m));
      continue;
    }
    if (tgt->src(im) != omap[src->src(m)] || tgt->tgt(im) != omap[src->tgt(m)])
      rep.add("fun/endpoints", src->mor_name(m));
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < src->num_objects(); ++o)
    if (mmap[src->identity(o)] != tgt->identity(omap[o]))
      rep.add("fun/identity", src->object_name(o));
  for (int g = 0; g < src->num_mors(); ++g)
    for (int f = 0; f < src->num_mors(); ++f)
      if (src->tgt(f) == src->src(g))
        if (mmap[src->compose(g, f)] != tgt->compose(mmap[g], mmap[f]))
          rep.add("fun/composition", "(" + src->mor_name(g) + ", " + src->mor_name(f) + ")");
  return rep;
}

Fun identity_fun(const FinCatPtr& c) {
  Fun f{c, c, {}, {}};
  f.omap.resize(c->num_objects());
  f.mmap.resize(c->num_mors());
  for (int i = 0; i < c->num_objects(); ++i) f.omap[i] = i;
  for (int i = 0; i < c->num_mors(); ++i) f.mmap[i] = i;
  return f;
}

Fun compose_fun(const Fun& g, const Fun& f) {
  if (f.tgt != g.src) throw std::logic_error("compose_fun: middle categories differ");
  Fun r{f.src, g.tgt, {}, {}};
  r.omap.resize(f.omap.size());
  r.mmap.resize(f.mmap.size());
  for (std::size_t i = 0; i < f.omap.size(); ++i) r.omap[i] = g.omap[f.omap[i]];
  for (std::size_t i = 0; i < f.mmap.size(); ++i) r.mmap[i] = g.mmap[f.mmap[i]];
  return r;
}

Fun constant_fun(const FinCatPtr& src, const FinCatPtr& tgt, int obj) {
  Fun f{src, tgt, {}, {}};
  f.omap.assign(src->num_objects(), obj);
  f.mmap.assign(src->num_mors(), tgt->identity(obj));
  return f;
}

// -- natural transformations --------------------------------------------------

CheckReport Nat::check() const {
  CheckReport rep;
  if (!(src.src == tgt.src && src.tgt == tgt.tgt)) {
    rep.add("malformed/nat-parallel", "source and target functors are not parallel");
    return rep;
  }
  const FinCat& j = *src.src;
  const FinCat& d = *src.tgt;
  if (static_cast<int>(comp.size()) != j.num_objects()) {
    rep.add("malformed/nat-size", "component count");
    return rep;
  }
  for (int x = 0; x < j.num_objects(); ++x) {
    int c = comp[x];
    if (c < 0 || c >= d.num_mors()) {
      rep.add("malformed/nat-id", j.object_name(x));
      return rep;
    }
    if (d.src(c) != src.omap[x] || d.tgt(c) != tgt.omap[x])
      rep.add("nat/component-endpoints", j.object_name(x));
  }
  if (!rep.ok()) return rep;
  for (int m = 0; m < j.num_mors(); ++m) {
    int x = j.src(m), y = j.tgt(m);
    if (d.compose(comp[y], src.mmap[m]) != d.compose(tgt.mmap[m], comp[x]))
      rep.add("nat/naturality", j.mor_name(m));
  }
  return rep;
}

bool Nat::is_iso() const {
  for (int c : comp)
    if (!src.tgt->is_iso(c)) return false;
  return true;
}

Nat identity_nat(const Fun& f) {
  Nat n{f, f, {}};
  n.comp.resize(f.omap.size());
  for (std::size_t i = 0; i < f.omap.size(); ++i) n.comp[i] = f.tgt->identity(f.omap[i]);
  return n;
}

Nat vcomp_nat(const Nat& b, const Nat& a) {
  if (!(a.tgt == b.src)) throw std::logic_error("vcomp_nat: not composable");
  Nat r{a.src, b.tgt, {}};
  r.comp.resize(a.comp.size());
  for (std::size_t i = 0; i < a.comp.size(); ++i)
    r.comp[i] = a.src.tgt->compose(b.comp[i], a.comp[i]);
  return r;
}

Nat whisker_left(const Fun& g, const Nat& a) {
  if (a.src.tgt != g.src) throw std::logic_error("whisker_left: boundary mismatch");
  Nat r{compose_fun(g, a.src), compose_fun(g, a.tgt), {}};
  r.comp.resize(a.comp.size());
  for (std::size_t i = 0; i < a.comp.size(); ++i) r.comp[i] = g.mmap[a.comp[i]];
  return r;
}

Nat whisker_right(const Nat& a, const Fun& f) {
  if (f.tgt != a.src.src) throw std::logic_error("whisker_right: boundary mismatch");
  Nat r{compose_fun(a.src, f), compose_fun(a.tgt, f), {}};
  r.comp.resize(f.omap.size());
  for (std::size_t i = 0; i < f.omap.size(); ++i) r.comp[i] = a.comp[f.omap[i]];
  return r;
}

Nat hcomp_nat(const Nat& b, const Nat& a) {
  if (a.src.tgt != b.src.src) throw std::logic_error("hcomp_nat: boundary mismatch");
  Nat r{compose_fun(b.src, a.src), compose_fun(b.tgt, a.tgt), {}};
  const FinCat& top = *b.src.tgt;
  r.comp.resize(a.comp.size());
  for (std::size_t x = 0; x < a.comp.size(); ++x)
    r.comp[x] = top.compose(b.comp[a.tgt.omap[x]], b.src.mmap[a.comp[x]]);
  return r;
}

Nat inverse_nat(const Nat& a) {
  Nat r{a.tgt, a.src, {}};
  r.comp.resize(a.comp.size());
  for (std::size_t i = 0; i < a.comp.size(); ++i) {
    int inv = a.src.tgt->iso_inverse(a.comp[i]);
    if (inv < 0) throw std::logic_error("inverse_nat: component is not iso");
    r.comp[i] = inv;
  }
  return r;
}

// -- enumeration ---------------------------------------------------------------

std::vector<Fun> enumerate_functors(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap) {
  std::vector<Fun> out;
  int no = j->num_objects();
  // candidate count guard on object maps alone
  double cnt = 1;
  for (int i = 0; i < no; ++i) {
    cnt *= f->num_objects();
    if (cnt > static_cast<double>(cap)) throw capacity_error("enumerate_functors: object map count");
  }
  if (f->num_objects() == 0) {
    if (no == 0) out.push_back(Fun{j, f, {}, {}});
    return out;
  }
  std::vector<int> omap(no, 0);
  // nonidentity morphisms, in id order
  std::vector<int> work;
  for (int m = 0; m < j->num_mors(); ++m)
    if (!j->is_identity(m)) work.push_back(m);

  std::size_t produced_candidates = 0;
  for (;;) {
    // assign morphisms by backtracking
    std::vector<int> mmap(j->num_mors(), -1);
    for (int o = 0; o < no; ++o) mmap[j->identity(o)] = f->identity(omap[o]);
    std::vector<std::size_t> choice(work.size(), 0);
    std::size_t depth = 0;
    auto candidates = [&](int m) -> const std::vector<int>& {
      return f->hom(omap[j->src(m)], omap[j->tgt(m)]);
    };
    auto consistent = [&](std::size_t d) {
      int m = work[d];
      // check all compositions where every factor is assigned
      for (int g = 0; g < j->num_mors(); ++g) {
        if (mmap[g] < 0) continue;
        if (j->tgt(m) == j->src(g)) {
          int gm = j->compose(g, m);
          if (mmap[gm] >= 0 && mmap[gm] != f->compose(mmap[g], mmap[m])) return false;
        }
        if (j->tgt(g) == j->src(m)) {
          int mg = j->compose(m, g);
          if (mmap[mg] >= 0 && mmap[mg] != f->compose(mmap[m], mmap[g])) return false;
        }
      }
      return true;
    };
    if (work.empty()) {
      out.push_back(Fun{j, f, omap, mmap});
    } else {
      for (;;) {
        if (++produced_candidates > cap * 16)
          throw capacity_error("enumerate_functors: search space");
        auto& cands = candidates(work[depth]);
        if (choice[depth] < cands.size()) {
          mmap[work[depth]] = cands[choice[depth]];
          if (consistent(depth)) {
            if (depth + 1 == work.size()) {
              out.push_back(Fun{j, f, omap, mmap});
              if (out.size() > cap) throw capacity_error("enumerate_functors: result count");
              mmap[work[depth]] = -1;
              ++choice[depth];
            } else {
              ++depth;
              choice[depth] = 0;
            }
          } else {
            mmap[work[depth]] = -1;
            ++choice[depth];
          }
        } else {
          if (depth == 0) break;
          choice[depth] = 0;
          mmap[work[depth]] = -1;
          --depth;
          mmap[work[depth]] = -1;
          ++choice[depth];
        }
      }
    }
    // next object map
    int i = no - 1;
    for (; i >= 0; --i) {
      if (++omap[i] < f->num_objects()) break;
      omap[i] = 0;
    }
    if (i < 0) break;
    if (no == 0) break;
  }
  return out;
}

std::vector<Nat> enumerate_nats(const Fun& f, const Fun& g, bool iso_only, std::size_t cap) {
  if (!(f.src == g.src && f.tgt == g.tgt)) return {};
  const FinCat& j = *f.src;
  const FinCat& d = *f.tgt;
  std::vector<Nat> out;
  int no = j.num_objects();
  std::vector<std::vector<int>> cands(no);
  for (int x = 0; x < no; ++x) {
    cands[x] = iso_only ? d.iso_hom(f.omap[x], g.omap[x]) : d.hom(f.omap[x], g.omap[x]);
    if (cands[x].empty()) return {};
  }
  std::vector<int> comp(no, -1);
  std::vector<std::size_t> choice(no, 0);
  // naturality for morphisms whose both endpoints are assigned
  auto consistent = [&](int upto) {
    for (int m = 0; m < j.num_mors(); ++m) {
      int x = j.src(m), y = j.tgt(m);
      if (x > upto || y > upto) continue;
      if (d.compose(comp[y], f.mmap[m]) != d.compose(g.mmap[m], comp[x])) return false;
    }
    return true;
  };
  if (no == 0) {
    out.push_back(Nat{f, g, {}});
    return out;
  }
  int depth = 0;
  std::size_t steps = 0;
  for (;;) {
    if (++steps > cap * 64) throw capacity_error("enumerate_nats: search space");
    if (choice[depth] < cands[depth].size()) {
      comp[depth] = cands[depth][choice[depth]];
      if (consistent(depth)) {
        if (depth + 1 == no) {
          out.push_back(Nat{f, g, comp});
          if (out.size() > cap) throw capacity_error("enumerate_nats: result count");
          ++choice[depth];
        } else {
          ++depth;
          choice[depth] = 0;
        }
      } else {
        ++choice[depth];
      }
    } else {
      comp[depth] = -1;
      if (depth == 0) break;
      --depth;
      ++choice[depth];
    }
  }
  return out;
}

// -- hom category ---------------------------------------------------------------

int HomCat::find_fun(const Fun& f) const {
  for (std::size_t i = 0; i < funs.size(); ++i)
    if (funs[i] == f) return static_cast<int>(i);
  return -1;
}

int HomCat::find_nat(const Nat& n) const {
  for (std::size_t i = 0; i < nats.size(); ++i)
    if (nats[i] == n) return static_cast<int>(i);
  return -1;
}

HomCat hom_category(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap) {
  HomCat h;
  h.funs = enumerate_functors(j, f, cap);
  auto c = std::make_shared<FinCat>();
  for (std::size_t i = 0; i < h.funs.size(); ++i) c->add_object("F" + std::to_string(i));
  std::size_t total = 0;
  for (std::size_t a = 0; a < h.funs.size(); ++a) {
    for (std::size_t b = 0; b < h.funs.size(); ++b) {
      auto ns = enumerate_nats(h.funs[a], h.funs[b], false, cap);
      for (auto& n : ns) {
        h.nats.push_back(n);
        c->add_mor("n" + std::to_string(total++), static_cast<int>(a), static_cast<int>(b));
        if (total > cap) throw capacity_error("hom_category: morphism count");
      }
    }
  }
  // identities
  for (std::size_t a = 0; a < h.funs.size(); ++a) {
    Nat id = identity_nat(h.funs[a]);
    int idx = h.find_nat(id);
    c->set_identity(static_cast<int>(a), idx);
  }
  // composition = vertical composition
  for (std::size_t p = 0; p < h.nats.size(); ++p)
    for (std::size_t q = 0; q < h.nats.size(); ++q) {
      if (!(h.nats[q].tgt == h.nats[p].src)) continue;
      Nat r = vcomp_nat(h.nats[p], h.nats[q]);
      int idx = h.find_nat(r);
      c->set_compose(static_cast<int>(p), static_cast<int>(q), idx);
    }
  c->finalize();
  h.cat = c;
  return h;
}

// -- equivalence ------------------------------------------------------------------

CheckReport EquivalenceWitness::check() const {
  CheckReport rep;
  rep.merge(forward.check());
  rep.merge(quasi_inverse.check());
  Fun gf = compose_fun(quasi_inverse, forward);
  Fun fg = compose_fun(forward, quasi_inverse);
  if (!(unit.src == identity_fun(forward.src) && unit.tgt == gf))
    rep.add("equiv/unit-boundary", "unit is not identity ⇒ quasi_inverse∘forward");
  if (!(counit.src == fg && counit.tgt == identity_fun(forward.tgt)))
    rep.add("equiv/counit-boundary", "counit is not forward∘quasi_inverse ⇒ identity");
  rep.merge(unit.check());
  rep.merge(counit.check());
  if (!unit.is_iso()) rep.add("equiv/unit-iso", "unit has a non-iso component");
  if (!counit.is_iso()) rep.add("equiv/counit-iso", "counit has a non-iso component");
  return rep;
}

std::optional<EquivalenceWitness> is_equivalence(const Fun& f, std::size_t cap) {
  auto backs = enumerate_functors(f.tgt, f.src, cap);
  Fun id_src = identity_fun(f.src);
  Fun id_tgt = identity_fun(f.tgt);
  for (auto& g : backs) {
    Fun gf = compose_fun(g, f);
    auto units = enumerate_nats(id_src, gf, true, cap);
    if (units.empty()) continue;
    Fun fg = compose_fun(f, g);
    auto counits = enumerate_nats(fg, id_tgt, true, cap);
    if (counits.empty()) continue;
    return EquivalenceWitness{f, g, units.front(), counits.front()};
  }
  return std::nullopt;
}

bool is_isomorphism_of_cats(const Fun& f) {
  if (!f.check().ok()) return false;
  if (f.src->num_objects() != f.tgt->num_objects()) return false;
  if (f.src->num_mors() != f.tgt->num_mors()) return false;
  std::vector<char> seen_o(f.tgt->num_objects(), 0), seen_m(f.tgt->num_mors(), 0);
  for (int o : f.omap) {
    if (seen_o[o]) return false;
    seen_o[o] = 1;
  }
  for (int m : f.mmap) {
    if (seen_m[m]) return false;
    seen_m[m] = 1;
  }
  return true;
}

}  // namespace pcat
