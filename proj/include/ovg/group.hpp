#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace ovg {

// A finite group. Cyclic groups use modular arithmetic directly; arbitrary
// groups are given by a multiplication table over {0..n-1}, validated on
// construction. Elements are carrier indices; the identity is element 0 for
// cyclic groups and whatever index the table's identity has otherwise.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group: order must be at least 1");
    FiniteGroup g;
    g.n_ = n;
    g.cyclic_ = true;
    g.identity_ = 0;
    return g;
  }

  static FiniteGroup from_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n < 1) throw std::invalid_argument("table group: empty table");
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("table group: table is not square");
      for (int x : row)
        if (x < 0 || x >= n) throw std::invalid_argument("table group: entry out of range");
    }
    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        if (table[static_cast<size_t>(e)][static_cast<size_t>(a)] != a ||
            table[static_cast<size_t>(a)][static_cast<size_t>(e)] != a)
          ok = false;
      if (ok) {
        id = e;
        break;
      }
    }
    if (id == -1) throw std::invalid_argument("table group: no identity element");
    // inverses
    std::vector<int> inv(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == id &&
            table[static_cast<size_t>(b)][static_cast<size_t>(a)] == id) {
          inv[static_cast<size_t>(a)] = b;
          break;
        }
      if (inv[static_cast<size_t>(a)] == -1)
        throw std::invalid_argument("table group: missing inverse");
    }
    // associativity
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int ab_c = table[static_cast<size_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                          [static_cast<size_t>(c)];
          int a_bc = table[static_cast<size_t>(a)]
                          [static_cast<size_t>(table[static_cast<size_t>(b)][static_cast<size_t>(c)])];
          if (ab_c != a_bc) throw std::invalid_argument("table group: not associative");
        }
    FiniteGroup g;
    g.n_ = n;
    g.cyclic_ = false;
    g.identity_ = id;
    g.table_ = table;
    g.inverse_ = std::move(inv);
    return g;
  }

  int order() const { return n_; }
  int identity() const { return identity_; }
  bool is_cyclic_rep() const { return cyclic_; }

  int op(int a, int b) const {
    if (cyclic_) return (a + b) % n_;
    return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }

  int inverse(int a) const {
    if (cyclic_) return (n_ - a) % n_;
    return inverse_[static_cast<size_t>(a)];
  }

  bool valid_element(int a) const { return a >= 0 && a < n_; }

 private:
  int n_ = 1;
  bool cyclic_ = true;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

inline FiniteGroup cyclic_group(int n) { return FiniteGroup::cyclic(n); }

inline FiniteGroup table_group(const std::vector<std::vector<int>>& table) {
  return FiniteGroup::from_table(table);
}

inline int element_order(const FiniteGroup& g, int a) {
  if (!g.valid_element(a)) throw std::invalid_argument("element_order: not a group element");
  int x = a, k = 1;
  while (x != g.identity()) {
    x = g.op(x, a);
    ++k;
  }
  return k;
}

// Closure of a generating set, sorted ascending. The empty set generates the
// trivial subgroup.
inline std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> closure{g.identity()};
  std::vector<int> queue{g.identity()};
  for (int x : gens)
    if (!g.valid_element(x)) throw std::invalid_argument("generated_subgroup: bad element");
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int x : gens) {
      for (int y : {g.op(queue[qi], x), g.op(queue[qi], g.inverse(x))}) {
        if (closure.insert(y).second) queue.push_back(y);
      }
    }
  }
  return std::vector<int>(closure.begin(), closure.end());
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(g.identity())) return false;
  for (int a : elems) {
    if (!g.valid_element(a)) return false;
    if (!s.count(g.inverse(a))) return false;
    for (int b : elems)
      if (!s.count(g.op(a, b))) return false;
  }
  return true;
}

// Left cosets of a subgroup, each sorted; the list is ordered by smallest
// representative.
inline std::vector<std::vector<int>> cosets(const FiniteGroup& g, const std::vector<int>& subgroup) {
  if (!is_subgroup(g, subgroup)) throw std::invalid_argument("cosets: not a subgroup");
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    std::vector<int> coset;
    for (int h : subgroup) {
      int x = g.op(a, h);
      seen[static_cast<size_t>(x)] = 1;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace ovg
