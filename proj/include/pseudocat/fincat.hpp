#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcat {

/// Thrown when an enumeration would exceed its configured cap.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a bounded closure cannot be certified stable.
struct bound_exceeded : std::runtime_error {
  explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input documents.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
  std::string law;     // which invariant failed
  std::string detail;  // witness data, human readable and deterministic
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string detail) {
    violations.push_back({std::move(law), std::move(detail)});
  }
  void merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

class FinCat;
using FinCatPtr = std::shared_ptr<const FinCat>;

/// A finite category: explicit object/morphism lists and a total
/// composition table on composable pairs. Identifiers are opaque strings;
/// equality is identifier equality. Values are immutable after finalize().
class FinCat {
 public:
  struct Mor {
    std::string name;
    int src = -1;
    int tgt = -1;
  };

  // -- construction ---------------------------------------------------------
  int add_object(const std::string& name);
  int add_mor(const std::string& name, int src, int tgt);
  void set_identity(int obj, int mor);
  void set_compose(int g, int f, int result);  // g after f
  // Fills identity compositions, computes iso partners, builds hom sets.
  void finalize();

  // -- access ---------------------------------------------------------------
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_mors() const { return static_cast<int>(mors_.size()); }
  const std::string& object_name(int o) const { return objects_[o]; }
  const Mor& mor(int m) const { return mors_[m]; }
  const std::string& mor_name(int m) const { return mors_[m].name; }
  int src(int m) const { return mors_[m].src; }
  int tgt(int m) const { return mors_[m].tgt; }
  int identity(int obj) const { return identities_[obj]; }
  bool is_identity(int m) const { return identities_[mors_[m].src] == m && mors_[m].src == mors_[m].tgt; }
  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> mor_index(const std::string& name) const;

  /// g after f; throws std::logic_error when the pair is not composable or
  /// the table has no entry.
  int compose(int g, int f) const;
  std::optional<int> try_compose(int g, int f) const;

  const std::vector<int>& hom(int x, int y) const { return homs_[x * num_objects() + y]; }
  /// Inverse of m when m is iso, -1 otherwise.
  int iso_inverse(int m) const { return iso_inv_[m]; }
  bool is_iso(int m) const { return iso_inv_[m] >= 0; }
  std::vector<int> iso_hom(int x, int y) const;

  bool finalized() const { return finalized_; }

  /// Structural well-formedness plus the three law families
  /// (totality/typing of the table, identity laws, associativity).
  CheckReport check() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<int> identities_;
  std::unordered_map<std::uint64_t, int> comp_;
  std::vector<std::vector<int>> homs_;
  std::vector<int> iso_inv_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
  bool finalized_ = false;

  static std::uint64_t key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
  }
};

// -- standard shapes --------------------------------------------------------
FinCatPtr terminal_cat();                 // one object, one morphism
FinCatPtr discrete_cat(int n);            // n objects, identities only
FinCatPtr walking_arrow();                // a -> b
FinCatPtr iso_pair();                     // two isomorphic objects, no other nonidentity morphisms
FinCatPtr chain_cat(int n);               // poset 0 < 1 < ... < n-1
FinCatPtr parallel_pair_cat();            // two objects, two parallel arrows
FinCatPtr cospan_cat();                   // a -> c <- b
FinCatPtr cyclic_group_cat(int n);        // one object, Z/n
FinCatPtr opposite(const FinCatPtr& c);   // same morphism indices, reversed

FinCatPtr product_cat(const std::vector<FinCatPtr>& cs);

/// A functor between finite categories, stored as explicit object and
/// morphism maps.
struct Fun {
  FinCatPtr src;
  FinCatPtr tgt;
  std::vector<int> omap;  // per source object
  std::vector<int> mmap;  // per source morphism

  int on_obj(int x) const { return omap[x]; }
  int on_mor(int m) const { return mmap[m]; }
  bool operator==(const Fun& o) const { return src == o.src && tgt == o.tgt && omap == o.omap && mmap == o.mmap; }

  CheckReport check() const;
};

Fun identity_fun(const FinCatPtr& c);
Fun compose_fun(const Fun& g, const Fun& f);  // g after f
Fun constant_fun(const FinCatPtr& src, const FinCatPtr& tgt, int obj);

/// A natural transformation, stored as a component per source object.
struct Nat {
  Fun src;
  Fun tgt;
  std::vector<int> comp;  // per object of src.src, a morphism of src.tgt

  bool operator==(const Nat& o) const { return src == o.src && tgt == o.tgt && comp == o.comp; }
  CheckReport check() const;
  bool is_iso() const;
};

Nat identity_nat(const Fun& f);
Nat vcomp_nat(const Nat& b, const Nat& a);            // b after a
Nat whisker_left(const Fun& g, const Nat& a);         // g * a : g∘F ⇒ g∘G
Nat whisker_right(const Nat& a, const Fun& f);        // a * f : F∘f ⇒ G∘f
Nat hcomp_nat(const Nat& b, const Nat& a);            // b * a, Godement product
Nat inverse_nat(const Nat& a);

/// All functors j -> f, duplicate free, deterministic order.
/// Throws capacity_error when the candidate count exceeds cap.
std::vector<Fun> enumerate_functors(const FinCatPtr& j, const FinCatPtr& f,
                                    std::size_t cap = 1000000);

/// All natural transformations F => G (iso_only restricts components to isos).
std::vector<Nat> enumerate_nats(const Fun& f, const Fun& g, bool iso_only = false,
                                std::size_t cap = 1000000);

/// The functor category: objects all functors j -> f, morphisms all natural
/// transformations, composition vertical. Keeps the functor/nat values.
struct HomCat {
  FinCatPtr cat;
  std::vector<Fun> funs;
  std::vector<Nat> nats;
  // nat_index[(src_fun, tgt_fun, components)] -> morphism index in cat
  int find_fun(const Fun& f) const;
  int find_nat(const Nat& n) const;
};

HomCat hom_category(const FinCatPtr& j, const FinCatPtr& f, std::size_t cap = 1000000);

struct EquivalenceWitness {
  Fun forward;
  Fun quasi_inverse;
  Nat unit;    // identity ⇒ quasi_inverse∘forward, iso components
  Nat counit;  // forward∘quasi_inverse ⇒ identity, iso components
  CheckReport check() const;
};

/// Exhaustive search for a quasi-inverse with iso unit/counit.
std::optional<EquivalenceWitness> is_equivalence(const Fun& f, std::size_t cap = 1000000);

/// Functor-valued isomorphism-of-categories test: bijective on objects and
/// morphisms and functorial.
bool is_isomorphism_of_cats(const Fun& f);

}  // namespace pcat
