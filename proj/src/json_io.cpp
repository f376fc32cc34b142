#include "pseudocat/json_io.hpp"

namespace pcat {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

FinCatPtr fincat_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("category document must be an object");
  if (!doc.contains("objects") || !doc.contains("morphisms") || !doc.contains("identities"))
    throw parse_error("category document needs objects/morphisms/identities");
  auto c = std::make_shared<FinCat>();
  for (auto& o : doc.at("objects")) c->add_object(o.get<std::string>());
  for (auto& m : doc.at("morphisms")) {
    auto id = m.at("id").get<std::string>();
    auto s = c->object_index(m.at("src").get<std::string>());
    auto t = c->object_index(m.at("tgt").get<std::string>());
    if (!s || !t) throw parse_error("morphism " + id + " has unknown endpoint");
    c->add_mor(id, *s, *t);
  }
  for (auto& [obj, mor] : doc.at("identities").items()) {
    auto o = c->object_index(obj);
    auto m = c->mor_index(mor.get<std::string>());
    if (!o || !m) throw parse_error("identity entry with unknown id: " + obj);
    c->set_identity(*o, *m);
  }
  if (doc.contains("compose")) {
    for (auto& e : doc.at("compose")) {
      auto g = c->mor_index(e.at("g").get<std::string>());
      auto f = c->mor_index(e.at("f").get<std::string>());
      auto r = c->mor_index(e.at("result").get<std::string>());
      if (!g || !f || !r) throw parse_error("compose entry with unknown morphism id");
      c->set_compose(*g, *f, *r);
    }
  }
  c->finalize();
  return c;
}

json fincat_to_json(const FinCat& c) {
  json doc;
  doc["objects"] = json::array();
  for (int o = 0; o < c.num_objects(); ++o) doc["objects"].push_back(c.object_name(o));
  doc["morphisms"] = json::array();
  for (int m = 0; m < c.num_mors(); ++m)
    doc["morphisms"].push_back({{"id", c.mor_name(m)},
                                {"src", c.object_name(c.src(m))},
                                {"tgt", c.object_name(c.tgt(m))}});
  doc["identities"] = json::object();
  for (int o = 0; o < c.num_objects(); ++o)
    doc["identities"][c.object_name(o)] = c.mor_name(c.identity(o));
  doc["compose"] = json::array();
  for (int g = 0; g < c.num_mors(); ++g)
    for (int f = 0; f < c.num_mors(); ++f) {
      if (c.tgt(f) != c.src(g)) continue;
      int r = c.compose(g, f);
      if (c.is_identity(g) || c.is_identity(f)) continue;  // inferred on load
      doc["compose"].push_back(
          {{"g", c.mor_name(g)}, {"f", c.mor_name(f)}, {"result", c.mor_name(r)}});
    }
  return doc;
}

FinCatPtr fincat_from_doc(const json& doc) {
  if (doc.is_string()) {
    std::string s = doc.get<std::string>();
    if (s == "terminal") return terminal_cat();
    if (s == "arrow") return walking_arrow();
    if (s == "iso_pair") return iso_pair();
    if (s == "parallel_pair") return parallel_pair_cat();
    if (s == "cospan") return cospan_cat();
    if (s.rfind("discrete:", 0) == 0) return discrete_cat(std::stoi(s.substr(9)));
    if (s.rfind("chain:", 0) == 0) return chain_cat(std::stoi(s.substr(6)));
    throw parse_error("unknown category shape: " + s);
  }
  return fincat_from_json(doc);
}

static Fun fun_from_json(const json& doc, const FinCatPtr& src, const FinCatPtr& tgt) {
  Fun f{src, tgt, {}, {}};
  f.omap.assign(src->num_objects(), -1);
  f.mmap.assign(src->num_mors(), -1);
  for (auto& [k, v] : doc.at("objects").items()) {
    auto a = src->object_index(k);
    auto b = tgt->object_index(v.get<std::string>());
    if (!a || !b) throw parse_error("functor object entry with unknown id: " + k);
    f.omap[*a] = *b;
  }
  if (doc.contains("morphisms"))
    for (auto& [k, v] : doc.at("morphisms").items()) {
      auto a = src->mor_index(k);
      auto b = tgt->mor_index(v.get<std::string>());
      if (!a || !b) throw parse_error("functor morphism entry with unknown id: " + k);
      f.mmap[*a] = *b;
    }
  for (int o = 0; o < src->num_objects(); ++o)
    if (f.omap[o] < 0) throw parse_error("functor misses object " + src->object_name(o));
  for (int m = 0; m < src->num_mors(); ++m)
    if (f.mmap[m] < 0) {
      if (src->is_identity(m))
        f.mmap[m] = tgt->identity(f.omap[src->src(m)]);
      else
        throw parse_error("functor misses morphism " + src->mor_name(m));
    }
  return f;
}

PseudoFunctor pseudofunctor_from_json(const json& doc) {
  PseudoFunctor F;
  F.index = fincat_from_doc(doc.at("index"));
  F.fiber.resize(F.index->num_objects());
  for (auto& [k, v] : doc.at("fibers").items()) {
    auto o = F.index->object_index(k);
    if (!o) throw parse_error("fiber for unknown index object: " + k);
    F.fiber[*o] = fincat_from_doc(v);
  }
  for (int o = 0; o < F.index->num_objects(); ++o)
    if (!F.fiber[o]) throw parse_error("missing fiber for " + F.index->object_name(o));
  F.arrow.resize(F.index->num_mors(), Fun{});
  std::vector<char> have(F.index->num_mors(), 0);
  if (doc.contains("arrows"))
    for (auto& [k, v] : doc.at("arrows").items()) {
      auto m = F.index->mor_index(k);
      if (!m) throw parse_error("arrow for unknown index morphism: " + k);
      F.arrow[*m] = fun_from_json(v, F.fiber[F.index->src(*m)], F.fiber[F.index->tgt(*m)]);
      have[*m] = 1;
    }
  for (int m = 0; m < F.index->num_mors(); ++m)
    if (!have[m]) {
      if (F.index->is_identity(m))
        F.arrow[m] = identity_fun(F.fiber[F.index->src(m)]);
      else
        throw parse_error("missing arrow for " + F.index->mor_name(m));
    }
  // delta: default identity when the identity arrow is the identity functor
  F.delta.resize(F.index->num_objects());
  std::vector<char> have_d(F.index->num_objects(), 0);
  if (doc.contains("delta"))
    for (auto& [k, v] : doc.at("delta").items()) {
      auto o = F.index->object_index(k);
      if (!o) throw parse_error("delta for unknown index object: " + k);
      Nat n{identity_fun(F.fiber[*o]), F.arrow[F.index->identity(*o)], {}};
      n.comp.assign(F.fiber[*o]->num_objects(), -1);
      for (auto& [x, mor] : v.items()) {
        auto xo = F.fiber[*o]->object_index(x);
        auto mm = F.fiber[*o]->mor_index(mor.get<std::string>());
        if (!xo || !mm) throw parse_error("delta component with unknown id");
        n.comp[*xo] = *mm;
      }
      for (int x = 0; x < F.fiber[*o]->num_objects(); ++x)
        if (n.comp[x] < 0) throw parse_error("delta misses a component");
      F.delta[*o] = std::move(n);
      have_d[*o] = 1;
    }
  for (int o = 0; o < F.index->num_objects(); ++o)
    if (!have_d[o]) {
      Fun idf = identity_fun(F.fiber[o]);
      if (!(F.arrow[F.index->identity(o)] == idf))
        throw parse_error("delta required for " + F.index->object_name(o));
      F.delta[o] = identity_nat(idf);
    }
  // gamma: default identity on pairs where composition is strict
  if (doc.contains("gamma"))
    for (auto& e : doc.at("gamma")) {
      auto f = F.index->mor_index(e.at("f").get<std::string>());
      auto g = F.index->mor_index(e.at("g").get<std::string>());
      if (!f || !g) throw parse_error("gamma entry with unknown index morphism");
      int gf = F.index->compose(*g, *f);
      Nat n{compose_fun(F.arrow[*g], F.arrow[*f]), F.arrow[gf], {}};
      const FinCatPtr& A = F.fiber[F.index->src(*f)];
      n.comp.assign(A->num_objects(), -1);
      const FinCatPtr& top = F.fiber[F.index->tgt(*g)];
      for (auto& [x, mor] : e.at("components").items()) {
        auto xo = A->object_index(x);
        auto mm = top->mor_index(mor.get<std::string>());
        if (!xo || !mm) throw parse_error("gamma component with unknown id");
        n.comp[*xo] = *mm;
      }
      for (int x = 0; x < A->num_objects(); ++x)
        if (n.comp[x] < 0) throw parse_error("gamma misses a component");
      F.gamma[{*f, *g}] = std::move(n);
    }
  for (int g = 0; g < F.index->num_mors(); ++g)
    for (int f = 0; f < F.index->num_mors(); ++f) {
      if (F.index->tgt(f) != F.index->src(g)) continue;
      if (F.gamma.count({f, g})) continue;
      int gf = F.index->compose(g, f);
      Fun comp = compose_fun(F.arrow[g], F.arrow[f]);
      if (!(comp == F.arrow[gf]))
        throw parse_error("gamma required for (" + F.index->mor_name(f) + ", " +
                          F.index->mor_name(g) + ")");
      F.gamma[{f, g}] = identity_nat(comp);
    }
  return F;
}

}  // namespace pcat
