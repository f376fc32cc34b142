#pragma once

// Brute-force enumerator for pseudo cone points on the terminal category and
// their morphisms, written directly from the tuple description: plain nested
// loops over all object tuples and all iso choices, with no sharing with the
// library's enumeration code. Used as the independent oracle in tests.

#include <set>
#include <string>
#include <vector>

#include "pseudocat/pseudo.hpp"

namespace pcat_oracle {

struct ConePoint {
  std::vector<int> a;    // per index object
  std::vector<int> eps;  // per index morphism
};

inline std::string encode_point(const pcat::PseudoFunctor& F, const ConePoint& p) {
  std::string s = "a:";
  for (std::size_t j = 0; j < p.a.size(); ++j)
    s += F.fiber[j]->object_name(p.a[j]) + ";";
  s += "e:";
  for (std::size_t f = 0; f < p.eps.size(); ++f)
    s += F.fiber[F.index->tgt(static_cast<int>(f))]->mor_name(p.eps[f]) + ";";
  return s;
}

inline std::vector<ConePoint> cone_points(const pcat::PseudoFunctor& F) {
  const pcat::FinCat& J = *F.index;
  std::vector<ConePoint> out;
  std::vector<int> a(J.num_objects(), 0);
  for (;;) {
    // collect iso candidates per index morphism
    std::vector<std::vector<int>> cand(J.num_mors());
    bool feasible = true;
    for (int f = 0; f < J.num_mors() && feasible; ++f) {
      int src = F.arrow[f].omap[a[J.src(f)]];
      cand[f] = F.fiber[J.tgt(f)]->iso_hom(src, a[J.tgt(f)]);
      if (cand[f].empty()) feasible = false;
    }
    if (feasible) {
      std::vector<std::size_t> pick(J.num_mors(), 0);
      for (;;) {
        ConePoint p;
        p.a = a;
        for (int f = 0; f < J.num_mors(); ++f) p.eps.push_back(cand[f][pick[f]]);
        bool ok = true;
        for (int j = 0; j < J.num_objects() && ok; ++j) {
          const pcat::FinCat& A = *F.fiber[j];
          int e1 = p.eps[J.identity(j)];
          if (A.compose(e1, F.delta_comp(j, p.a[j])) != A.identity(p.a[j])) ok = false;
        }
        for (int f = 0; f < J.num_mors() && ok; ++f)
          for (int g = 0; g < J.num_mors() && ok; ++g) {
            if (J.tgt(f) != J.src(g)) continue;
            int gf = J.compose(g, f);
            const pcat::FinCat& A = *F.fiber[J.tgt(g)];
            int lhs = A.compose(p.eps[g], F.arrow[g].mmap[p.eps[f]]);
            int rhs = A.compose(p.eps[gf], F.gamma_comp(f, g, p.a[J.src(f)]));
            if (lhs != rhs) ok = false;
          }
        if (ok) out.push_back(p);
        int f = J.num_mors() - 1;
        for (; f >= 0; --f) {
          if (++pick[f] < cand[f].size()) break;
          pick[f] = 0;
        }
        if (f < 0) break;
      }
    }
    int j = J.num_objects() - 1;
    for (; j >= 0; --j) {
      if (++a[j] < F.fiber[j]->num_objects()) break;
      a[j] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

inline std::vector<std::vector<int>> cone_morphisms(const pcat::PseudoFunctor& F,
                                                    const ConePoint& p, const ConePoint& q) {
  const pcat::FinCat& J = *F.index;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> cand(J.num_objects());
  for (int j = 0; j < J.num_objects(); ++j) {
    cand[j] = F.fiber[j]->hom(p.a[j], q.a[j]);
    if (cand[j].empty()) return out;
  }
  std::vector<std::size_t> pick(J.num_objects(), 0);
  for (;;) {
    std::vector<int> xi(J.num_objects());
    for (int j = 0; j < J.num_objects(); ++j) xi[j] = cand[j][pick[j]];
    bool ok = true;
    for (int f = 0; f < J.num_mors() && ok; ++f) {
      const pcat::FinCat& A = *F.fiber[J.tgt(f)];
      int lhs = A.compose(q.eps[f], F.arrow[f].mmap[xi[J.src(f)]]);
      int rhs = A.compose(xi[J.tgt(f)], p.eps[f]);
      if (lhs != rhs) ok = false;
    }
    if (ok) out.push_back(xi);
    int j = J.num_objects() - 1;
    for (; j >= 0; --j) {
      if (++pick[j] < cand[j].size()) break;
      pick[j] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

inline std::multiset<std::string> point_encodings(const pcat::PseudoFunctor& F) {
  std::multiset<std::string> s;
  for (auto& p : cone_points(F)) s.insert(encode_point(F, p));
  return s;
}

}  // namespace pcat_oracle
