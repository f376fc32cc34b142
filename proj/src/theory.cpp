#include "pseudocat/theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pcat {

IndexMap IndexMap::id(int n) {
  IndexMap m{n, n, {}};
  m.map.resize(n);
  std::iota(m.map.begin(), m.map.end(), 0);
  return m;
}

IndexMap IndexMap::point(int i, int n) { return IndexMap{1, n, {i}}; }

IndexMap compose_map(const IndexMap& g, const IndexMap& f) {
  if (f.cod != g.dom) throw std::logic_error("compose_map: boundary mismatch");
  IndexMap r{f.dom, g.cod, {}};
  for (int i = 0; i < f.dom; ++i) r.map.push_back(g.map[f.map[i]]);
  return r;
}

IndexMap bar_map(const IndexMap& f, const std::vector<int>& arities) {
  if (static_cast<int>(arities.size()) != f.cod)
    throw std::logic_error("bar_map: one arity per codomain element required");
  std::vector<int> offset(f.cod, 0);
  for (int i = 1; i < f.cod; ++i) offset[i] = offset[i - 1] + arities[i - 1];
  int total = f.cod == 0 ? 0 : offset[f.cod - 1] + arities[f.cod - 1];
  IndexMap r{0, total, {}};
  for (int i = 0; i < f.dom; ++i) {
    int b = f.map[i];
    for (int p = 0; p < arities[b]; ++p) r.map.push_back(offset[b] + p);
  }
  r.dom = static_cast<int>(r.map.size());
  return r;
}

IndexMap iota_wrap(int l, int k) {
  IndexMap r{l * k, k, {}};
  for (int i = 0; i < l * k; ++i) r.map.push_back(i % k);
  return r;
}

IndexMap block_sum(const std::vector<IndexMap>& gs) {
  IndexMap r{0, 0, {}};
  int off = 0;
  for (auto& g : gs) {
    for (int i = 0; i < g.dom; ++i) r.map.push_back(off + g.map[i]);
    off += g.cod;
  }
  r.dom = static_cast<int>(r.map.size());
  r.cod = off;
  return r;
}

IndexMap iota_block(int i, const std::vector<int>& ms) {
  int off = 0;
  for (int p = 0; p < i; ++p) off += ms[p];
  int total = 0;
  for (int m : ms) total += m;
  IndexMap r{ms[i], total, {}};
  for (int p = 0; p < ms[i]; ++p) r.map.push_back(off + p);
  return r;
}

// -- trivial (initial) theory --------------------------------------------------

namespace {

class TrivialTheory final : public Theory {
 public:
  std::string name() const override { return "trivial"; }
  std::vector<Word> enumerate(int arity, int) const override {
    std::vector<Word> out;
    for (int i = 0; i < arity; ++i) out.push_back(Word{arity, {i}});
    return out;
  }
  Word gamma(const Word& w, const std::vector<Word>& ws) const override {
    int i = static_cast<int>(w.data[0]);
    int off = 0;
    for (int p = 0; p < i; ++p) off += ws[p].arity;
    int total = 0;
    for (auto& v : ws) total += v.arity;
    return Word{total, {off + ws[i].data[0]}};
  }
  Word subst(const Word& w, const IndexMap& f) const override {
    if (w.arity != f.dom) throw std::logic_error("trivial subst: arity mismatch");
    return Word{f.cod, {f.map[static_cast<int>(w.data[0])]}};
  }
  Word unit() const override { return Word{1, {0}}; }
  bool eq(const Word& a, const Word& b) const override { return a == b; }
  int size(const Word&) const override { return 1; }
  std::string show(const Word& w) const override {
    return "x" + std::to_string(w.data[0] + 1) + "/" + std::to_string(w.arity);
  }
  Decomp decompose(const Word& w) const override {
    Decomp d;
    if (w.arity == 1 && w.data[0] == 0) {
      d.kind = Decomp::UnitW;
      return d;
    }
    d.kind = Decomp::Subst;
    d.base = unit();
    d.f = IndexMap::point(static_cast<int>(w.data[0]), w.arity);
    return d;
  }
};

// -- commutative monoid theory ---------------------------------------------------

class CmonTheory final : public Theory {
 public:
  std::string name() const override { return "cmon"; }
  std::vector<Word> enumerate(int arity, int sz) const override {
    std::vector<Word> out;
    Word w{arity, std::vector<long long>(arity, 0)};
    enumerate_rec(w, 0, sz, out);
    return out;
  }
  Word gamma(const Word& w, const std::vector<Word>& ws) const override {
    Word r{0, {}};
    for (int i = 0; i < w.arity; ++i) {
      for (int p = 0; p < ws[i].arity; ++p) r.data.push_back(w.data[i] * ws[i].data[p]);
      r.arity += ws[i].arity;
    }
    return r;
  }
  Word subst(const Word& w, const IndexMap& f) const override {
    if (w.arity != f.dom) throw std::logic_error("cmon subst: arity mismatch");
    Word r{f.cod, std::vector<long long>(f.cod, 0)};
    for (int i = 0; i < w.arity; ++i) r.data[f.map[i]] += w.data[i];
    return r;
  }
  Word unit() const override { return Word{1, {1}}; }
  bool eq(const Word& a, const Word& b) const override { return a == b; }
  int size(const Word& w) const override {
    long long s = 0;
    for (auto c : w.data) s += c;
    return static_cast<int>(s);
  }
  std::string show(const Word& w) const override {
    std::string s = "(";
    for (int i = 0; i < w.arity; ++i) s += (i ? "," : "") + std::to_string(w.data[i]);
    return s + ")";
  }
  Decomp decompose(const Word& w) const override {
    Decomp d;
    if (w.arity == 1 && w.data[0] == 1) {
      d.kind = Decomp::UnitW;
      return d;
    }
    long long total = 0;
    for (auto c : w.data) total += c;
    if (total == 0) {
      // w = (zero word)_f along the empty map into arity(w)
      if (w.arity == 0) {
        d.kind = Decomp::Atomic;  // the 0-ary generator
        return d;
      }
      d.kind = Decomp::Subst;
      d.base = Word{0, {}};
      d.f = IndexMap{0, w.arity, {}};
      return d;
    }
    if (w.arity == 2 && w.data[0] == 1 && w.data[1] == 1) {
      d.kind = Decomp::Atomic;  // the binary generator
      return d;
    }
    if (total == 1) {
      // a projection: unit substituted along a point map
      for (int i = 0; i < w.arity; ++i)
        if (w.data[i] == 1) {
          d.kind = Decomp::Subst;
          d.base = unit();
          d.f = IndexMap::point(i, w.arity);
          return d;
        }
    }
    // peel one unit off the first nonzero coefficient:
    //   w = gamma(+, e_i, w - e_i) substituted along the merge map
    int i = 0;
    while (w.data[i] == 0) ++i;
    Word rest = w;
    rest.data[i] -= 1;
    Word ei{w.arity, std::vector<long long>(w.arity, 0)};
    ei.data[i] = 1;
    d.kind = Decomp::Subst;
    Word pre = gamma(Word{2, {1, 1}}, {ei, rest});  // arity 2*arity(w)
    d.base = pre;
    IndexMap m{2 * w.arity, w.arity, {}};
    for (int p = 0; p < 2 * w.arity; ++p) m.map.push_back(p % w.arity);
    d.f = m;
    // base itself decomposes as Gamma at the binary generator
    return d;
  }

 private:
  static void enumerate_rec(Word& w, int pos, int budget, std::vector<Word>& out) {
    if (pos == w.arity) {
      out.push_back(w);
      return;
    }
    for (int c = 0; c <= budget; ++c) {
      w.data[pos] = c;
      enumerate_rec(w, pos + 1, budget - c, out);
    }
    w.data[pos] = 0;
  }
};

// -- endomorphism theory of a finite category ------------------------------------

class EndTheory final : public Theory {
 public:
  EndTheory(FinCatPtr x, std::size_t cap) : x_(std::move(x)), cap_(cap) {}

  std::string name() const override { return "end"; }

  const FinCatPtr& power(int n) const {
    while (static_cast<int>(powers_.size()) <= n)
      powers_.push_back(product_cat(
          std::vector<FinCatPtr>(static_cast<std::size_t>(powers_.size()), x_)));
    return powers_[n];
  }

  // decode tuple index helpers: object/morphism of X^n as tuples of X ids
  std::vector<int> obj_tuple(int n, int o) const {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
      t[i] = o % x_->num_objects();
      o /= x_->num_objects();
    }
    return t;
  }
  std::vector<int> mor_tuple(int n, int m) const {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
      t[i] = m % x_->num_mors();
      m /= x_->num_mors();
    }
    return t;
  }
  int obj_of_tuple(const std::vector<int>& t) const {
    int o = 0;
    for (int v : t) o = o * x_->num_objects() + v;
    return o;
  }
  int mor_of_tuple(const std::vector<int>& t) const {
    int m = 0;
    for (int v : t) m = m * x_->num_mors() + v;
    return m;
  }

  Word of_fun(const Fun& f) const {
    Word w{static_cast<int>(0), {}};
    w.arity = 0;
    // arity recovered from the source power
    int n = 0;
    while (power(n) != f.src) {
      ++n;
      if (n > 12) throw std::logic_error("end theory: functor is not on a cached power");
    }
    w.arity = n;
    for (int o : f.omap) w.data.push_back(o);
    w.data.push_back(-1);
    for (int m : f.mmap) w.data.push_back(m);
    return w;
  }
  Fun to_fun(const Word& w) const {
    const FinCatPtr& p = power(w.arity);
    Fun f{p, x_, {}, {}};
    std::size_t i = 0;
    for (; i < w.data.size() && w.data[i] != -1; ++i) f.omap.push_back(static_cast<int>(w.data[i]));
    for (++i; i < w.data.size(); ++i) f.mmap.push_back(static_cast<int>(w.data[i]));
    return f;
  }

  std::vector<Word> enumerate(int arity, int) const override {
    std::vector<Word> out;
    for (auto& f : enumerate_functors(power(arity), x_, cap_)) out.push_back(of_fun(f));
    return out;
  }

  Word gamma(const Word& w, const std::vector<Word>& ws) const override {
    int total = 0;
    std::vector<int> blocks;
    for (auto& v : ws) {
      blocks.push_back(v.arity);
      total += v.arity;
    }
    Fun fw = to_fun(w);
    std::vector<Fun> fs;
    for (auto& v : ws) fs.push_back(to_fun(v));
    const FinCatPtr& src = power(total);
    Fun r{src, x_, {}, {}};
    for (int o = 0; o < src->num_objects(); ++o) {
      auto t = obj_tuple(total, o);
      std::vector<int> mid;
      int off = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<int> part(t.begin() + off, t.begin() + off + blocks[i]);
        mid.push_back(fs[i].omap[obj_of_tuple_in(blocks[i], part)]);
        off += blocks[i];
      }
      r.omap.push_back(fw.omap[obj_of_tuple_in(w.arity, mid)]);
    }
    for (int m = 0; m < src->num_mors(); ++m) {
      auto t = mor_tuple(total, m);
      std::vector<int> mid;
      int off = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<int> part(t.begin() + off, t.begin() + off + blocks[i]);
        mid.push_back(fs[i].mmap[mor_of_tuple_in(blocks[i], part)]);
        off += blocks[i];
      }
      r.mmap.push_back(fw.mmap[mor_of_tuple_in(w.arity, mid)]);
    }
    return of_fun(r);
  }

  Word subst(const Word& w, const IndexMap& f) const override {
    if (w.arity != f.dom) throw std::logic_error("end subst: arity mismatch");
    Fun fw = to_fun(w);
    const FinCatPtr& src = power(f.cod);
    Fun r{src, x_, {}, {}};
    for (int o = 0; o < src->num_objects(); ++o) {
      auto t = obj_tuple(f.cod, o);
      std::vector<int> sel(f.dom);
      for (int i = 0; i < f.dom; ++i) sel[i] = t[f.map[i]];
      r.omap.push_back(fw.omap[obj_of_tuple_in(f.dom, sel)]);
    }
    for (int m = 0; m < src->num_mors(); ++m) {
      auto t = mor_tuple(f.cod, m);
      std::vector<int> sel(f.dom);
      for (int i = 0; i < f.dom; ++i) sel[i] = t[f.map[i]];
      r.mmap.push_back(fw.mmap[mor_of_tuple_in(f.dom, sel)]);
    }
    return of_fun(r);
  }

  Word unit() const override { return of_fun(identity_fun_on_power1()); }
  bool eq(const Word& a, const Word& b) const override { return a == b; }
  int size(const Word&) const override { return 1; }
  std::string show(const Word& w) const override {
    return "endword/" + std::to_string(w.arity);
  }

 private:
  Fun identity_fun_on_power1() const {
    const FinCatPtr& p1 = power(1);
    // X^1 is the product over a single factor: objects and morphisms align
    Fun f{p1, x_, {}, {}};
    for (int o = 0; o < p1->num_objects(); ++o) f.omap.push_back(o);
    for (int m = 0; m < p1->num_mors(); ++m) f.mmap.push_back(m);
    return f;
  }
  int obj_of_tuple_in(int n, const std::vector<int>& t) const {
    (void)n;
    return obj_of_tuple(t);
  }
  int mor_of_tuple_in(int n, const std::vector<int>& t) const {
    (void)n;
    return mor_of_tuple(t);
  }

  FinCatPtr x_;
  std::size_t cap_;
  mutable std::vector<FinCatPtr> powers_;
};

// -- free theory ---------------------------------------------------------------

// encoding: preorder; leaf x_i -> [i]; generator g with arity k -> [-(g+1), subtrees...]
class FreeTheory final : public Theory {
 public:
  FreeTheory(std::vector<std::pair<std::string, int>> gens, int depth)
      : gens_(std::move(gens)), depth_(depth) {}

  std::string name() const override { return "free"; }

  std::vector<Word> enumerate(int arity, int sz) const override {
    std::vector<Word> out;
    for (auto& t : trees(arity, sz, depth_)) out.push_back(t);
    return out;
  }

  Word gamma(const Word& w, const std::vector<Word>& ws) const override {
    std::vector<int> offs(ws.size(), 0);
    int total = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      offs[i] = total;
      total += ws[i].arity;
    }
    Word r{total, {}};
    std::size_t pos = 0;
    gamma_rec(w, ws, offs, pos, r.data);
    return r;
  }

  Word subst(const Word& w, const IndexMap& f) const override {
    if (w.arity != f.dom) throw std::logic_error("free subst: arity mismatch");
    Word r{f.cod, w.data};
    for (auto& v : r.data)
      if (v >= 0) v = f.map[static_cast<int>(v)];
    return r;
  }

  Word unit() const override { return Word{1, {0}}; }
  bool eq(const Word& a, const Word& b) const override { return a == b; }
  int size(const Word& w) const override {
    int s = 0;
    for (auto v : w.data)
      if (v < 0) ++s;
    return s;
  }
  std::string show(const Word& w) const override {
    std::size_t pos = 0;
    return show_rec(w, pos) + "/" + std::to_string(w.arity);
  }

  Decomp decompose(const Word& w) const override {
    Decomp d;
    if (w.data.size() == 1 && w.data[0] == 0 && w.arity == 1) {
      d.kind = Decomp::UnitW;
      return d;
    }
    if (w.data.size() == 1 && w.data[0] >= 0) {
      d.kind = Decomp::Subst;
      d.base = unit();
      d.f = IndexMap::point(static_cast<int>(w.data[0]), w.arity);
      return d;
    }
    int g = static_cast<int>(-w.data[0] - 1);
    int k = gens_[g].second;
    if (k == 0) {
      if (w.arity == 0) {
        d.kind = Decomp::Atomic;
        return d;
      }
      d.kind = Decomp::Subst;
      d.base = Word{0, w.data};
      d.f = IndexMap{0, w.arity, {}};
      return d;
    }
    // w = gamma(gen, compacted children) substituted along the leaf map
    std::vector<Word> children;
    std::size_t pos = 1;
    for (int c = 0; c < k; ++c) {
      std::size_t start = pos;
      skip_tree(w.data, pos);
      children.push_back(
          Word{w.arity, std::vector<long long>(w.data.begin() + start, w.data.begin() + pos)});
    }
    // is w literally gen applied to whole-arity children blocks? express as
    // subst of a gamma over block-disjoint compactions
    std::vector<Word> compact;
    std::vector<int> leafmap;
    for (auto& c : children) {
      Word cc{0, c.data};
      std::map<int, int> seen;
      for (auto& v : cc.data) {
        if (v < 0) continue;
        int var = static_cast<int>(v);
        auto it = seen.find(var);
        if (it == seen.end()) {
          int nv = static_cast<int>(seen.size());
          seen[var] = nv;
          v = nv;
        } else {
          v = it->second;
        }
      }
      cc.arity = static_cast<int>(seen.size());
      std::vector<int> order(cc.arity);
      for (auto& [orig, nv] : seen) order[nv] = orig;
      for (int o : order) leafmap.push_back(o);
      compact.push_back(cc);
    }
    Word generator{k, {}};
    generator.data.push_back(-(g + 1));
    for (int c = 0; c < k; ++c) generator.data.push_back(c);
    Word base = gamma(generator, compact);
    if (static_cast<int>(leafmap.size()) == w.arity) {
      bool identity = true;
      for (std::size_t i = 0; i < leafmap.size(); ++i)
        if (leafmap[i] != static_cast<int>(i)) identity = false;
      if (identity && eq(base, w)) {
        d.kind = Decomp::Gamma;
        d.base = generator;
        d.args = compact;
        return d;
      }
    }
    d.kind = Decomp::Subst;
    d.base = base;
    d.f = IndexMap{base.arity, w.arity, leafmap};
    return d;
  }

  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }

 private:
  void skip_tree(const std::vector<long long>& data, std::size_t& pos) const {
    long long v = data[pos++];
    if (v < 0) {
      int k = gens_[static_cast<int>(-v - 1)].second;
      for (int c = 0; c < k; ++c) skip_tree(data, pos);
    }
  }

  void gamma_rec(const Word& w, const std::vector<Word>& ws, const std::vector<int>& offs,
                 std::size_t& pos, std::vector<long long>& out) const {
    long long v = w.data[pos++];
    if (v >= 0) {
      const Word& sub = ws[static_cast<int>(v)];
      for (auto s : sub.data) out.push_back(s >= 0 ? s + offs[static_cast<int>(v)] : s);
      return;
    }
    out.push_back(v);
    int k = gens_[static_cast<int>(-v - 1)].second;
    for (int c = 0; c < k; ++c) gamma_rec(w, ws, offs, pos, out);
  }

  std::string show_rec(const Word& w, std::size_t& pos) const {
    long long v = w.data[pos++];
    if (v >= 0) return "x" + std::to_string(v + 1);
    int g = static_cast<int>(-v - 1);
    std::string s = gens_[g].first + "(";
    for (int c = 0; c < gens_[g].second; ++c) s += (c ? "," : "") + show_rec(w, pos);
    return s + ")";
  }

  std::vector<Word> trees(int arity, int sz, int depth) const {
    std::vector<Word> out;
    for (int i = 0; i < arity; ++i) out.push_back(Word{arity, {i}});
    if (depth <= 0 || sz <= 0) return out;
    // build by root generator over all child splits
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      int k = gens_[g].second;
      std::vector<std::vector<Word>> pools;
      auto sub = trees(arity, sz - 1, depth - 1);
      pools.assign(k, sub);
      std::vector<std::size_t> pick(k, 0);
      if (k == 0) {
        out.push_back(Word{arity, {-(static_cast<long long>(g) + 1)}});
        continue;
      }
      if (sub.empty()) continue;
      for (;;) {
        Word w{arity, {-(static_cast<long long>(g) + 1)}};
        int total = 1;
        for (int c = 0; c < k; ++c) {
          for (auto v : pools[c][pick[c]].data) w.data.push_back(v);
          total += size(pools[c][pick[c]]);
        }
        if (total <= sz) out.push_back(std::move(w));
        int c = k - 1;
        for (; c >= 0; --c) {
          if (++pick[c] < pools[c].size()) break;
          pick[c] = 0;
        }
        if (c < 0) break;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<std::pair<std::string, int>> gens_;
  int depth_;
};

}  // namespace

TheoryPtr trivial_theory() { return std::make_shared<TrivialTheory>(); }
TheoryPtr cmon_theory() { return std::make_shared<CmonTheory>(); }
TheoryPtr end_theory(const FinCatPtr& x, std::size_t cap) {
  return std::make_shared<EndTheory>(x, cap);
}
TheoryPtr free_theory(const std::vector<std::pair<std::string, int>>& generators, int depth) {
  return std::make_shared<FreeTheory>(generators, depth);
}

TheoryPtr builtin_theory(const std::string& key) {
  if (key == "trivial") return trivial_theory();
  if (key == "cmon") return cmon_theory();
  if (key == "end:terminal") return end_theory(terminal_cat());
  if (key == "end:arrow") return end_theory(walking_arrow());
  throw parse_error("unknown builtin theory: " + key);
}

// -- axiom suite ----------------------------------------------------------------

namespace {

std::vector<IndexMap> all_maps(int dom, int cod) {
  std::vector<IndexMap> out;
  if (dom == 0) {
    out.push_back(IndexMap{0, cod, {}});
    return out;
  }
  if (cod == 0) return out;
  IndexMap m{dom, cod, std::vector<int>(dom, 0)};
  for (;;) {
    out.push_back(m);
    int i = dom - 1;
    for (; i >= 0; --i) {
      if (++m.map[i] < cod) break;
      m.map[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// all tuples of words (w_1..w_k) with w_i of arity <= arity_bound and
// combined size <= budget
void word_tuples(const Theory& t, int k, int arity_bound, int budget,
                 std::vector<std::vector<Word>>& out) {
  std::vector<std::vector<Word>> pool;
  std::vector<Word> all;
  for (int n = 0; n <= arity_bound; ++n)
    for (auto& w : t.enumerate(n, budget)) all.push_back(w);
  std::vector<Word> cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    for (auto& w : all) {
      if (t.size(w) > left) continue;
      cur.push_back(w);
      rec(i + 1, left - t.size(w));
      cur.pop_back();
    }
  };
  rec(0, budget);
}

}  // namespace

CheckReport check_theory(const Theory& t, int arity_bound, int size_bound) {
  CheckReport rep;
  std::vector<Word> words;
  for (int n = 0; n <= arity_bound; ++n)
    for (auto& w : t.enumerate(n, size_bound)) words.push_back(w);

  // (2) unital, with the unique unit
  Word one = t.unit();
  for (auto& w : words) {
    std::vector<Word> units(w.arity, one);
    if (w.arity > 0 && !t.eq(t.gamma(w, units), w))
      rep.add("theory/unital", "gamma(w,1..1) != w at " + t.show(w));
    if (!t.eq(t.gamma(one, {w}), w)) rep.add("theory/unital", "gamma(1,w) != w at " + t.show(w));
  }
  for (auto& u : t.enumerate(1, size_bound)) {
    if (t.eq(u, one)) continue;
    bool acts_as_unit = true;
    for (auto& w : words) {
      std::vector<Word> us(w.arity, u);
      if (w.arity > 0 && !t.eq(t.gamma(w, us), w)) acts_as_unit = false;
      if (!t.eq(t.gamma(u, {w}), w)) acts_as_unit = false;
      if (!acts_as_unit) break;
    }
    if (acts_as_unit) rep.add("theory/unit-unique", "second unit " + t.show(u));
  }

  // (1) associativity of gamma over nested tuples within the combined budget:
  //   gamma(w, gamma(w_1,v^1..), .., gamma(w_k,v^k..)) ==
  //   gamma(gamma(w, w_1..w_k), v^1.. .. v^k..)
  for (auto& w : words) {
    if (w.arity == 0 || w.arity > 2) continue;
    std::vector<std::vector<Word>> outer;
    word_tuples(t, w.arity, arity_bound, size_bound - t.size(w), outer);
    for (auto& ws : outer) {
      int budget = size_bound - t.size(w);
      for (auto& wi : ws) budget -= t.size(wi);
      // enumerate one inner tuple per argument, nested by remaining budget
      std::vector<std::vector<std::vector<Word>>> pools(ws.size());
      std::function<void(std::size_t, int, std::vector<std::vector<Word>>&)> rec =
          [&](std::size_t i, int left, std::vector<std::vector<Word>>& acc) {
            if (i == ws.size()) {
              std::vector<Word> lhs_args;
              std::vector<Word> flat;
              for (std::size_t p = 0; p < ws.size(); ++p) {
                lhs_args.push_back(t.gamma(ws[p], acc[p]));
                for (auto& v : acc[p]) flat.push_back(v);
              }
              Word L = t.gamma(w, lhs_args);
              Word R = t.gamma(t.gamma(w, ws), flat);
              if (!t.eq(L, R)) rep.add("theory/gamma-associative", t.show(w));
              return;
            }
            std::vector<std::vector<Word>> tuples;
            word_tuples(t, ws[i].arity, arity_bound, left, tuples);
            for (auto& vs : tuples) {
              int used = 0;
              for (auto& v : vs) used += t.size(v);
              acc.push_back(vs);
              rec(i + 1, left - used, acc);
              acc.pop_back();
            }
          };
      std::vector<std::vector<Word>> acc;
      rec(0, budget, acc);
    }
  }

  // (3) block equivariance via bar_map
  for (int k = 0; k <= arity_bound; ++k)
    for (int l = 0; l <= arity_bound; ++l)
      for (auto& f : all_maps(k, l)) {
        for (auto& w : t.enumerate(k, size_bound)) {
          std::vector<std::vector<Word>> tuples;
          word_tuples(t, l, arity_bound, size_bound - t.size(w), tuples);
          for (auto& ws : tuples) {
            std::vector<int> arities;
            for (auto& v : ws) arities.push_back(v.arity);
            std::vector<Word> pick;
            for (int i = 0; i < k; ++i) pick.push_back(ws[f.map[i]]);
            Word lhs = t.gamma(t.subst(w, f), ws);
            Word rhs = t.subst(t.gamma(w, pick), bar_map(f, arities));
            if (!t.eq(lhs, rhs))
              rep.add("theory/block-equivariance",
                      t.show(w) + " along a map " + std::to_string(k) + "->" + std::to_string(l));
          }
        }
      }

  // (4) pointwise equivariance via block sums
  for (auto& w : words) {
    if (w.arity == 0 || w.arity > 2) continue;
    std::vector<std::vector<Word>> tuples;
    word_tuples(t, w.arity, arity_bound, size_bound - t.size(w), tuples);
    for (auto& ws : tuples) {
      std::vector<std::vector<IndexMap>> gpools;
      bool skip = false;
      for (auto& v : ws) {
        std::vector<IndexMap> gs;
        for (int c = 0; c <= arity_bound; ++c)
          for (auto& g : all_maps(v.arity, c)) gs.push_back(g);
        if (gs.empty()) skip = true;
        gpools.push_back(gs);
      }
      if (skip) continue;
      std::vector<std::size_t> pick(ws.size(), 0);
      for (;;) {
        std::vector<IndexMap> gs;
        for (std::size_t i = 0; i < ws.size(); ++i) gs.push_back(gpools[i][pick[i]]);
        std::vector<Word> substd;
        for (std::size_t i = 0; i < ws.size(); ++i) substd.push_back(t.subst(ws[i], gs[i]));
        Word lhs = t.gamma(w, substd);
        Word rhs = t.subst(t.gamma(w, ws), block_sum(gs));
        if (!t.eq(lhs, rhs)) {
          rep.add("theory/pointwise-equivariance", t.show(w));
          break;
        }
        int i = static_cast<int>(ws.size()) - 1;
        for (; i >= 0; --i) {
          if (++pick[i] < gpools[i].size()) break;
          pick[i] = 0;
        }
        if (i < 0) break;
      }
    }
  }

  // (5) substitution functorial
  for (auto& w : words) {
    if (!t.eq(t.subst(w, IndexMap::id(w.arity)), w))
      rep.add("theory/subst-identity", t.show(w));
    for (int l = 0; l <= arity_bound; ++l)
      for (auto& f : all_maps(w.arity, l))
        for (int m = 0; m <= arity_bound; ++m)
          for (auto& g : all_maps(l, m)) {
            if (!t.eq(t.subst(t.subst(w, f), g), t.subst(w, compose_map(g, f))))
              rep.add("theory/subst-functorial", t.show(w));
          }
  }
  return rep;
}

TheoryMorphism identity_theory_morphism(const TheoryPtr& t) {
  return TheoryMorphism{t, t, [](const Word& w) { return w; }, "identity"};
}

TheoryMorphism trivial_to(const TheoryPtr& t) {
  TheoryPtr s = trivial_theory();
  TheoryPtr tgt = t;
  return TheoryMorphism{s, tgt,
                        [tgt](const Word& w) {
                          return tgt->projection(static_cast<int>(w.data[0]), w.arity);
                        },
                        "from-trivial"};
}

CheckReport check_theory_morphism(const TheoryMorphism& m, int arity_bound, int size_bound) {
  CheckReport rep;
  // unit preservation
  if (!m.tgt->eq(m.map(m.src->unit()), m.tgt->unit()))
    rep.add("theory-morphism/unit", m.label);
  // naturality in substitution and preservation of gamma
  for (int n = 0; n <= arity_bound; ++n)
    for (auto& w : m.src->enumerate(n, size_bound)) {
      for (int l = 0; l <= arity_bound; ++l)
        for (auto& f : all_maps(n, l))
          if (!m.tgt->eq(m.map(m.src->subst(w, f)), m.tgt->subst(m.map(w), f)))
            rep.add("theory-morphism/substitution", m.src->show(w));
      if (n == 0 || n > 2) continue;
      std::vector<std::vector<Word>> tuples;
      word_tuples(*m.src, n, arity_bound, size_bound - m.src->size(w), tuples);
      for (auto& ws : tuples) {
        std::vector<Word> imgs;
        for (auto& v : ws) imgs.push_back(m.map(v));
        if (!m.tgt->eq(m.map(m.src->gamma(w, ws)), m.tgt->gamma(m.map(w), imgs)))
          rep.add("theory-morphism/gamma", m.src->show(w));
      }
    }
  return rep;
}

std::vector<Word> tuple_compose(const Theory& t, const std::vector<Word>& vs,
                                const std::vector<Word>& ws, int k) {
  int l = static_cast<int>(ws.size());
  std::vector<Word> out;
  for (auto& v : vs) {
    if (v.arity != l) throw std::logic_error("tuple_compose: arity mismatch");
    out.push_back(t.subst(t.gamma(v, ws), iota_wrap(l, k)));
  }
  return out;
}

// -- monad C ---------------------------------------------------------------------

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(std::size_t n) : p(n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  }
  int find(int i) {
    while (p[i] != i) i = p[i] = p[p[i]];
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<int>> all_tuples(int n, int base) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n, 0);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (base == 0) return out;
  for (;;) {
    out.push_back(t);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++t[i] < base) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

int MonadC::obj_class(const Word& w, const std::vector<int>& xs) const {
  for (std::size_t c = 0; c < obj_members.size(); ++c)
    for (auto& r : obj_members[c])
      if (theory->eq(r.w, w) && r.xs == xs) return static_cast<int>(c);
  return -1;
}

int MonadC::mor_class(const Word& w, const std::vector<int>& gs) const {
  for (std::size_t c = 0; c < mor_members.size(); ++c)
    for (auto& r : mor_members[c])
      if (theory->eq(r.w, w) && r.gs == gs) return static_cast<int>(c);
  return -1;
}

int MonadC::mu_obj(const Word& w, const std::vector<ObjRep>& inner) const {
  std::vector<Word> vs;
  std::vector<int> xs;
  for (auto& r : inner) {
    vs.push_back(r.w);
    xs.insert(xs.end(), r.xs.begin(), r.xs.end());
  }
  return obj_class(theory->gamma(w, vs), xs);
}

MonadC monad_c(const TheoryPtr& t, const FinCatPtr& x, int arity_bound, int size_bound) {
  MonadC M;
  M.theory = t;
  M.x = x;
  M.arity_bound = arity_bound;
  M.size_bound = size_bound;

  std::vector<MonadC::ObjRep> ouniverse;
  std::vector<MonadC::MorRep> muniverse;
  for (int n = 0; n <= arity_bound; ++n)
    for (auto& w : t->enumerate(n, size_bound)) {
      for (auto& xs : all_tuples(n, x->num_objects())) ouniverse.push_back({w, xs});
      for (auto& gs : all_tuples(n, x->num_mors())) muniverse.push_back({w, gs});
    }
  auto ofind = [&](const Word& w, const std::vector<int>& xs) {
    for (std::size_t i = 0; i < ouniverse.size(); ++i)
      if (t->eq(ouniverse[i].w, w) && ouniverse[i].xs == xs) return static_cast<int>(i);
    return -1;
  };
  auto mfind = [&](const Word& w, const std::vector<int>& gs) {
    for (std::size_t i = 0; i < muniverse.size(); ++i)
      if (t->eq(muniverse[i].w, w) && muniverse[i].gs == gs) return static_cast<int>(i);
    return -1;
  };
  UF ouf(ouniverse.size()), muf(muniverse.size());
  for (int m = 0; m <= arity_bound; ++m)
    for (auto& w : t->enumerate(m, size_bound))
      for (int n = 0; n <= arity_bound; ++n)
        for (auto& f : all_maps(m, n)) {
          Word wf = t->subst(w, f);
          if (wf.arity > arity_bound || t->size(wf) > size_bound) continue;
          for (auto& xs : all_tuples(n, x->num_objects())) {
            std::vector<int> pulled(m);
            for (int i = 0; i < m; ++i) pulled[i] = xs[f.map[i]];
            int a = ofind(wf, xs), b = ofind(w, pulled);
            if (a >= 0 && b >= 0) ouf.unite(a, b);
          }
          for (auto& gs : all_tuples(n, x->num_mors())) {
            std::vector<int> pulled(m);
            for (int i = 0; i < m; ++i) pulled[i] = gs[f.map[i]];
            int a = mfind(wf, gs), b = mfind(w, pulled);
            if (a >= 0 && b >= 0) muf.unite(a, b);
          }
        }

  std::map<int, int> oclass, mclass;
  for (std::size_t i = 0; i < ouniverse.size(); ++i) {
    int r = ouf.find(static_cast<int>(i));
    if (!oclass.count(r)) {
      oclass[r] = static_cast<int>(M.objs.size());
      M.objs.push_back(ouniverse[r]);
      M.obj_members.emplace_back();
    }
    M.obj_members[oclass[r]].push_back(ouniverse[i]);
  }
  for (std::size_t i = 0; i < muniverse.size(); ++i) {
    int r = muf.find(static_cast<int>(i));
    if (!mclass.count(r)) {
      mclass[r] = static_cast<int>(M.mors.size());
      M.mors.push_back(muniverse[r]);
      M.mor_members.emplace_back();
    }
    M.mor_members[mclass[r]].push_back(muniverse[i]);
  }

  // assemble CX
  auto cx = std::make_shared<FinCat>();
  for (std::size_t c = 0; c < M.objs.size(); ++c) {
    std::string nm = "[" + t->show(M.objs[c].w) + ";";
    for (std::size_t i = 0; i < M.objs[c].xs.size(); ++i)
      nm += (i ? "," : "") + x->object_name(M.objs[c].xs[i]);
    cx->add_object(nm + "]");
  }
  auto msrc = [&](const MonadC::MorRep& r) {
    std::vector<int> xs;
    for (int g : r.gs) xs.push_back(x->src(g));
    return M.obj_class(r.w, xs);
  };
  auto mtgt = [&](const MonadC::MorRep& r) {
    std::vector<int> xs;
    for (int g : r.gs) xs.push_back(x->tgt(g));
    return M.obj_class(r.w, xs);
  };
  for (std::size_t c = 0; c < M.mors.size(); ++c) {
    std::string nm = "m[" + t->show(M.mors[c].w) + ";";
    for (std::size_t i = 0; i < M.mors[c].gs.size(); ++i)
      nm += (i ? "," : "") + x->mor_name(M.mors[c].gs[i]);
    cx->add_mor(nm + "]", msrc(M.mors[c]), mtgt(M.mors[c]));
  }
  for (std::size_t c = 0; c < M.objs.size(); ++c) {
    std::vector<int> ids;
    for (int xo : M.objs[c].xs) ids.push_back(x->identity(xo));
    int mc = M.mor_class(M.objs[c].w, ids);
    cx->set_identity(static_cast<int>(c), mc);
  }
  // composition: find representatives over a common word
  for (std::size_t a = 0; a < M.mors.size(); ++a)
    for (std::size_t b = 0; b < M.mors.size(); ++b) {
      if (mtgt(M.mors[b]) != msrc(M.mors[a])) continue;
      int result = -1;
      for (auto& ra : M.mor_members[a]) {
        for (auto& rb : M.mor_members[b]) {
          if (!t->eq(ra.w, rb.w)) continue;
          bool composable = true;
          std::vector<int> comp(ra.gs.size());
          for (std::size_t i = 0; i < ra.gs.size(); ++i) {
            if (x->tgt(rb.gs[i]) != x->src(ra.gs[i])) {
              composable = false;
              break;
            }
            comp[i] = x->compose(ra.gs[i], rb.gs[i]);
          }
          if (!composable) continue;
          result = M.mor_class(ra.w, comp);
          break;
        }
        if (result >= 0) break;
      }
      if (result < 0) throw capacity_error("monad_c: no common-word representative to compose");
      cx->set_compose(static_cast<int>(a), static_cast<int>(b), result);
    }
  cx->finalize();
  M.cx = cx;

  // eta
  Fun eta{x, cx, {}, {}};
  for (int o = 0; o < x->num_objects(); ++o) eta.omap.push_back(M.obj_class(t->unit(), {o}));
  for (int m = 0; m < x->num_mors(); ++m) eta.mmap.push_back(M.mor_class(t->unit(), {m}));
  M.eta = std::move(eta);

  // laws at the bound
  CheckReport laws;
  // unit laws on every class representative
  for (auto& r : M.objs) {
    int left = M.mu_obj(t->unit(), {r});
    if (left != M.obj_class(r.w, r.xs)) laws.add("monad/left-unit", t->show(r.w));
    std::vector<MonadC::ObjRep> inner;
    for (int xo : r.xs) inner.push_back({t->unit(), {xo}});
    if (r.w.arity > 0) {
      int right = M.mu_obj(r.w, inner);
      if (right != M.obj_class(r.w, r.xs)) laws.add("monad/right-unit", t->show(r.w));
    }
  }
  // associativity on bounded nested triples
  for (int k = 0; k <= arity_bound && k <= 2; ++k)
    for (auto& w : t->enumerate(k, size_bound))
      for (auto& vs_sizes : all_tuples(k, arity_bound + 1)) {
        std::vector<std::vector<Word>> vpools;
        bool dead = false;
        for (int i = 0; i < k; ++i) {
          auto pool = t->enumerate(vs_sizes[i], size_bound - t->size(w));
          if (pool.empty()) dead = true;
          vpools.push_back(pool);
        }
        if (dead) continue;
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
          std::vector<Word> vs;
          for (int i = 0; i < k; ++i) vs.push_back(vpools[i][pick[i]]);
          Word gv = k == 0 ? w : t->gamma(w, vs);
          if (gv.arity <= arity_bound && t->size(gv) <= size_bound) {
            // leaves: unit-wrapped objects
            int total = gv.arity;
            for (auto& xs : all_tuples(total, x->num_objects())) {
              // route 1: mu after C(mu): collapse inner first
              std::vector<MonadC::ObjRep> mid;
              int off = 0;
              bool ok = true;
              for (int i = 0; i < k; ++i) {
                std::vector<int> part(xs.begin() + off, xs.begin() + off + vs[i].arity);
                off += vs[i].arity;
                mid.push_back({vs[i], part});
              }
              int r1 = k == 0 ? M.obj_class(w, xs) : M.mu_obj(w, mid);
              // route 2: mu after mu at the outer layer
              int r2 = M.obj_class(gv, xs);
              if (ok && (r1 < 0 || r1 != r2)) laws.add("monad/associativity", t->show(gv));
            }
          }
          int i = k - 1;
          for (; i >= 0; --i) {
            if (++pick[i] < vpools[i].size()) break;
            pick[i] = 0;
          }
          if (i < 0 || k == 0) break;
        }
      }
  M.law_report = std::move(laws);
  return M;
}

}  // namespace pcat
