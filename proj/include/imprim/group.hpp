#pragma once

#include <memory>
#include <string>
#include <vector>

#include "imprim/error.hpp"

namespace imprim {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group as a validated Cayley table over dense element ids
// 0..order-1. Multiplication is a table lookup; instances are immutable
// after construction and safe to share across threads.
class FiniteGroup {
public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& name() const { return name_; }

  bool is_abelian() const;

  // Small generating set found greedily; empty for the trivial group.
  std::vector<int> generating_set() const;

  // Validates the full group axioms; throws NoIdentity / NoInverse /
  // NotAssociative (with the offending element or triple) on failure.
  static GroupPtr from_cayley(const std::vector<std::vector<int>>& table,
                              std::string name);

private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string name_;
};

// Catalog families: cyclic n, dihedral n (order 2n), symmetric n <= 5,
// quaternion8, heisenberg over Z_p (order p^3, p in {2,3,5}). Accepted
// spellings: "Z6" / "cyclic:6", "D4" / "dihedral:4", "S3" / "symmetric:3",
// "Q8" / "quaternion8", "Heis3" / "Heis(Z3)" / "heisenberg:3".
GroupPtr catalog(const std::string& name);
std::vector<std::string> catalog_names();

// H as a subset of a parent group together with its own abstract group
// structure: element i of `group` is parent element `elements[i]`.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;      // sorted parent ids; closed, contains e
  GroupPtr group;                 // H with its own dense ids
  std::vector<int> parent_index;  // parent id -> H id, -1 outside H

  int order() const { return static_cast<int>(elements.size()); }
  int to_sub(int parent_id) const { return parent_index[parent_id]; }
  bool contains(int parent_id) const { return parent_index[parent_id] >= 0; }
};

Subgroup subgroup_from_generators(const GroupPtr& g,
                                  const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup center_subgroup(const GroupPtr& g);

// All subgroups generated by at most `max_gens` elements, deduplicated and
// ordered by (order, elements). Every subgroup of every catalog group is
// generated by at most two elements, so the default is exhaustive there.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int max_gens = 2);

// One representative per conjugacy class of subgroups (the lexicographically
// least member of each class).
std::vector<Subgroup> subgroup_class_representatives(const GroupPtr& g,
                                                     int max_gens = 2);

// Left coset space X = G/H. Coset 0 is the base point o = p(e), whose
// representative is the identity; other representatives are the smallest
// element id in their coset.
struct CosetSpace {
  GroupPtr parent;
  Subgroup subgroup;
  std::vector<int> reps;  // one representative per coset, reps[0] = e
  std::vector<int> proj;  // parent id -> coset index

  int size() const { return static_cast<int>(reps.size()); }
  int base_point() const { return 0; }

  // g[x], the left action on cosets.
  int action(int g, int x) const { return proj[parent->mul(g, reps[x])]; }

  // h(g,x) in H defined by g*reps[x] = reps[g[x]]*h(g,x); parent id.
  int cocycle(int g, int x) const {
    const int gx = action(g, x);
    return parent->mul(parent->inv(reps[gx]), parent->mul(g, reps[x]));
  }
};

CosetSpace coset_space(const GroupPtr& g, const Subgroup& h);

// Structural equality: same order, identity and multiplication table.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace imprim
