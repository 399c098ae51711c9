#include "imprim/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace imprim {

namespace {

std::string ids_to_string(const std::vector<int>& ids) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << "}";
  return os.str();
}

// Closure of a generating set under multiplication, as sorted parent ids.
std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::queue<int> todo;
  seen[g.identity()] = 1;
  todo.push(g.identity());
  for (int x : gens) {
    if (x < 0 || x >= g.order()) fail("ValidationError", "generator id out of range");
    if (!seen[x]) {
      seen[x] = 1;
      todo.push(x);
    }
  }
  while (!todo.empty()) {
    const int a = todo.front();
    todo.pop();
    for (int b = 0; b < g.order(); ++b) {
      if (!seen[b]) continue;
      for (int p : {g.mul(a, b), g.mul(b, a)}) {
        if (!seen[p]) {
          seen[p] = 1;
          todo.push(p);
        }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  const int h = static_cast<int>(elements.size());
  std::vector<int> index(parent->order(), -1);
  for (int i = 0; i < h; ++i) index[elements[i]] = i;

  std::vector<std::vector<int>> table(h, std::vector<int>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      const int p = parent->mul(elements[i], elements[j]);
      if (index[p] < 0) fail("ValidationError", "element set is not closed");
      table[i][j] = index[p];
    }
  Subgroup sub;
  sub.parent = parent;
  sub.elements = std::move(elements);
  sub.parent_index = std::move(index);
  sub.group = FiniteGroup::from_cayley(
      table, parent->name() + ":sub" + ids_to_string(sub.elements));
  return sub;
}

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_cayley(t, "Z" + std::to_string(n));
}

// Elements r^i s^j with id = i + n*j; s r^k = r^{-k} s.
GroupPtr dihedral_group(int n) {
  const int order = 2 * n;
  auto id = [n](int i, int j) { return i + n * j; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          const int i = ((j1 ? n - i2 : i2) + i1) % n;
          t[id(i1, j1)][id(i2, j2)] = id(i, j1 ^ j2);
        }
  return FiniteGroup::from_cayley(t, "D" + std::to_string(n));
}

// Permutations of {0..n-1} in lexicographic order; composition
// (p*q)(x) = p(q(x)).
GroupPtr symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> rank;
  for (size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = static_cast<int>(i);

  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = rank[comp];
    }
  return FiniteGroup::from_cayley(t, "S" + std::to_string(n));
}

// Units 1,i,j,k with a sign bit: id = unit + 4*(sign<0).
GroupPtr quaternion_group() {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  auto id = [](int u, int s) { return u + (s < 0 ? 4 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, sa = a < 4 ? 1 : -1;
      const int ub = b % 4, sb = b < 4 ? 1 : -1;
      t[a][b] = id(unit[ua][ub], sa * sb * sign[ua][ub]);
    }
  return FiniteGroup::from_cayley(t, "Q8");
}

// Upper unitriangular 3x3 matrices over Z_p: (a,b,c) with id a + p*b + p^2*c
// and (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
GroupPtr heisenberg_group(int p) {
  const int order = p * p * p;
  auto id = [p](int a, int b, int c) { return a + p * b + p * p * c; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[id(a1, b1, c1)][id(a2, b2, c2)] =
                  id((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
  return FiniteGroup::from_cayley(t, "Heis" + std::to_string(p));
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoi(s);
  return true;
}

}  // namespace

GroupPtr FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                  std::string name) {
  const int n = static_cast<int>(table.size());
  if (n <= 0) fail("ValidationError", "empty Cayley table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail("ValidationError", "Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail("ValidationError", "Cayley entry out of range");
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail("NoIdentity", "no two-sided identity element");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0)
      fail("NoInverse", "element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail("NotAssociative", "(" + std::to_string(a) + "," + std::to_string(b) +
                                     "," + std::to_string(c) + ")");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->identity_ = identity;
  g->table_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[a * n + b] = table[a][b];
  g->inverse_ = std::move(inverse);
  g->name_ = std::move(name);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::generating_set() const {
  std::vector<int> gens;
  std::vector<char> have(order_, 0);
  have[identity_] = 1;
  int covered = 1;
  // Self-reference through from_cayley is unnecessary here: grow a closure
  // incrementally, adding the first element not yet generated.
  std::vector<int> members{identity_};
  while (covered < order_) {
    int next = -1;
    for (int x = 0; x < order_ && next < 0; ++x)
      if (!have[x]) next = x;
    gens.push_back(next);
    // BFS closure of members + next.
    std::queue<int> todo;
    todo.push(next);
    have[next] = 1;
    members.push_back(next);
    ++covered;
    while (!todo.empty()) {
      const int a = todo.front();
      todo.pop();
      const size_t snapshot = members.size();
      for (size_t i = 0; i < snapshot; ++i) {
        const int b = members[i];
        for (int p : {mul(a, b), mul(b, a)}) {
          if (!have[p]) {
            have[p] = 1;
            members.push_back(p);
            todo.push(p);
            ++covered;
          }
        }
      }
    }
  }
  return gens;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order() || a.identity() != b.identity()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

GroupPtr catalog(const std::string& name) {
  int n = 0;
  if (name == "Q8" || name == "quaternion8") return quaternion_group();
  if (name.rfind("cyclic:", 0) == 0 && parse_int(name.substr(7), n)) {
    if (n < 1 || n > 200) fail("UnsupportedParams", "cyclic order out of range: " + name);
    return cyclic_group(n);
  }
  if (name.size() > 1 && name[0] == 'Z' && parse_int(name.substr(1), n)) {
    if (n < 1 || n > 200) fail("UnsupportedParams", "cyclic order out of range: " + name);
    return cyclic_group(n);
  }
  if (name.rfind("dihedral:", 0) == 0 && parse_int(name.substr(9), n)) {
    if (n < 1 || n > 100) fail("UnsupportedParams", "dihedral parameter out of range: " + name);
    return dihedral_group(n);
  }
  if (name.size() > 1 && name[0] == 'D' && parse_int(name.substr(1), n)) {
    if (n < 1 || n > 100) fail("UnsupportedParams", "dihedral parameter out of range: " + name);
    return dihedral_group(n);
  }
  if (name.rfind("symmetric:", 0) == 0 && parse_int(name.substr(10), n)) {
    if (n < 1 || n > 5) fail("UnsupportedParams", "symmetric degree out of range: " + name);
    return symmetric_group(n);
  }
  if (name.size() > 1 && name[0] == 'S' && parse_int(name.substr(1), n)) {
    if (n < 1 || n > 5) fail("UnsupportedParams", "symmetric degree out of range: " + name);
    return symmetric_group(n);
  }
  auto heis = [&](const std::string& digits) -> GroupPtr {
    int p = 0;
    if (!parse_int(digits, p)) fail("UnsupportedParams", "unknown group: " + name);
    if (p != 2 && p != 3 && p != 5)
      fail("UnsupportedParams", "heisenberg prime must be 2, 3 or 5: " + name);
    return heisenberg_group(p);
  };
  if (name.rfind("heisenberg:", 0) == 0) return heis(name.substr(11));
  if (name.rfind("Heis(Z", 0) == 0 && name.back() == ')')
    return heis(name.substr(6, name.size() - 7));
  if (name.rfind("Heis", 0) == 0) return heis(name.substr(4));
  fail("UnsupportedParams", "unknown group: " + name);
}

std::vector<std::string> catalog_names() {
  return {"cyclic:n (Zn), 1 <= n <= 200",
          "dihedral:n (Dn), order 2n, 1 <= n <= 100",
          "symmetric:n (Sn), 1 <= n <= 5",
          "quaternion8 (Q8)",
          "heisenberg:p (Heisp), order p^3, p in {2,3,5}"};
}

Subgroup subgroup_from_generators(const GroupPtr& g, const std::vector<int>& gens) {
  return make_subgroup(g, closure(*g, gens));
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return make_subgroup(g, {g->identity()});
}

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, all);
}

Subgroup center_subgroup(const GroupPtr& g) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order() && central; ++b)
      central = g->mul(a, b) == g->mul(b, a);
    if (central) z.push_back(a);
  }
  return make_subgroup(g, z);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int max_gens) {
  std::set<std::vector<int>> seen;
  seen.insert(closure(*g, {}));
  if (max_gens >= 1)
    for (int a = 0; a < g->order(); ++a) seen.insert(closure(*g, {a}));
  if (max_gens >= 2)
    for (int a = 0; a < g->order(); ++a)
      for (int b = a + 1; b < g->order(); ++b) seen.insert(closure(*g, {a, b}));
  if (max_gens >= 3)
    for (int a = 0; a < g->order(); ++a)
      for (int b = a + 1; b < g->order(); ++b)
        for (int c = b + 1; c < g->order(); ++c)
          seen.insert(closure(*g, {a, b, c}));

  std::vector<std::vector<int>> sets(seen.begin(), seen.end());
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(make_subgroup(g, std::move(s)));
  return out;
}

std::vector<Subgroup> subgroup_class_representatives(const GroupPtr& g, int max_gens) {
  auto subs = all_subgroups(g, max_gens);
  std::set<std::vector<int>> taken;
  std::vector<Subgroup> out;
  for (const auto& sub : subs) {
    if (taken.count(sub.elements)) continue;
    // Mark the whole conjugacy class of this subgroup.
    for (int c = 0; c < g->order(); ++c) {
      std::vector<int> conj;
      conj.reserve(sub.elements.size());
      for (int x : sub.elements) conj.push_back(g->mul(g->mul(c, x), g->inv(c)));
      std::sort(conj.begin(), conj.end());
      taken.insert(std::move(conj));
    }
    out.push_back(sub);
  }
  return out;
}

CosetSpace coset_space(const GroupPtr& g, const Subgroup& h) {
  if (!h.parent || !same_group(*h.parent, *g))
    fail("NotSubgroup", "subgroup does not belong to the given group");

  CosetSpace x;
  x.parent = g;
  x.subgroup = h;
  x.proj.assign(g->order(), -1);

  auto mark_coset = [&](int rep) {
    const int idx = static_cast<int>(x.reps.size());
    x.reps.push_back(rep);
    for (int e : h.elements) x.proj[g->mul(rep, e)] = idx;
  };

  // Base point first: the coset of the identity, represented by the identity.
  mark_coset(g->identity());
  for (int r = 0; r < g->order(); ++r)
    if (x.proj[r] < 0) mark_coset(r);
  return x;
}

}  // namespace imprim
