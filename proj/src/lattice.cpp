#include "qlat/lattice.hpp"

#include <set>

namespace qlat {

FiniteOrtholattice FiniteOrtholattice::make(std::vector<std::string> labels,
                                            const std::vector<std::pair<int, int>>& leq_pairs,
                                            const std::vector<std::pair<int, int>>& ortho_pairs,
                                            int bottom, int top, int max_elements) {
  int n = (int)labels.size();
  if (n == 0) throw InputError("lattice must have at least one element");
  if (n > max_elements)
    throw InputError("lattice has " + std::to_string(n) + " elements, cap is " +
                     std::to_string(max_elements));
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError("empty element label");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
  std::vector<Bits> rows(n, Bits(n));
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InputError("order pair (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") out of range for " + std::to_string(n) + " elements");
    rows[a].set(b);
  }
  std::vector<int> omap;
  if (!ortho_pairs.empty()) {
    omap.assign(n, -1);
    auto put = [&](int x, int y) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw InputError("ortho pair (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") out of range");
      if (omap[x] != -1 && omap[x] != y)
        throw InputError("conflicting ortho assignments for '" + labels[x] + "'");
      omap[x] = y;
    };
    for (auto [x, y] : ortho_pairs) {
      put(x, y);
      put(y, x);
    }
    for (int x = 0; x < n; x++)
      if (omap[x] == -1)
        throw InputError("ortho map missing an image for '" + labels[x] + "'");
  }
  return from_rows(std::move(labels), std::move(rows), std::move(omap), bottom, top, max_elements);
}

FiniteOrtholattice FiniteOrtholattice::from_rows(std::vector<std::string> labels,
                                                 std::vector<Bits> up_rows,
                                                 std::vector<int> ortho_map, int bottom, int top,
                                                 int max_elements) {
  int n = (int)labels.size();
  if (n == 0) throw InputError("lattice must have at least one element");
  if (n > max_elements)
    throw InputError("lattice has " + std::to_string(n) + " elements, cap is " +
                     std::to_string(max_elements));
  if ((int)up_rows.size() != n) throw InputError("order relation is not square");
  for (const Bits& r : up_rows)
    if (r.size() != n) throw InputError("order relation is not square");
  if (!ortho_map.empty()) {
    if ((int)ortho_map.size() != n) throw InputError("ortho map has wrong size");
    for (int x : ortho_map)
      if (x < 0 || x >= n) throw InputError("ortho map image out of range");
  }
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    throw InputError("bottom/top index out of range");

  FiniteOrtholattice L;
  L.labels = std::move(labels);
  L.up = std::move(up_rows);
  L.down.assign(n, Bits(n));
  for (int a = 0; a < n; a++)
    for (int b = L.up[a].next_set(0); b >= 0; b = L.up[a].next_set(b + 1)) L.down[b].set(a);
  L.ortho = std::move(ortho_map);
  L.bottom = bottom;
  L.top = top;
  return L;
}

std::optional<int> greatest_of(const FiniteOrtholattice& L, const Bits& subset) {
  for (int x = subset.next_set(0); x >= 0; x = subset.next_set(x + 1))
    if (subset.is_subset_of(L.down[x])) return x;
  return std::nullopt;
}

std::optional<int> least_of(const FiniteOrtholattice& L, const Bits& subset) {
  for (int x = subset.next_set(0); x >= 0; x = subset.next_set(x + 1))
    if (subset.is_subset_of(L.up[x])) return x;
  return std::nullopt;
}

std::optional<int> infimum(const FiniteOrtholattice& L, const Bits& subset) {
  Bits lower = Bits::full(L.size());
  for (int x = subset.next_set(0); x >= 0; x = subset.next_set(x + 1)) lower &= L.down[x];
  return greatest_of(L, lower);
}

std::optional<int> supremum(const FiniteOrtholattice& L, const Bits& subset) {
  Bits upper = Bits::full(L.size());
  for (int x = subset.next_set(0); x >= 0; x = subset.next_set(x + 1)) upper &= L.up[x];
  return least_of(L, upper);
}

std::optional<int> try_meet(const FiniteOrtholattice& L, int a, int b) {
  return greatest_of(L, L.down[a] & L.down[b]);
}

std::optional<int> try_join(const FiniteOrtholattice& L, int a, int b) {
  // Join as the infimum of all upper bounds. The infimum call scans the
  // common-lower-bound set of the upper bounds; when the order is a complete
  // lattice this lands on the least upper bound.
  Bits upper = L.up[a] & L.up[b];
  return infimum(L, upper);
}

int meet(const FiniteOrtholattice& L, int a, int b) {
  auto m = try_meet(L, a, b);
  if (!m)
    throw InputError("no meet for ('" + L.label(a) + "', '" + L.label(b) + "')");
  return *m;
}

int join(const FiniteOrtholattice& L, int a, int b) {
  auto j = try_join(L, a, b);
  if (!j)
    throw InputError("no join for ('" + L.label(a) + "', '" + L.label(b) + "')");
  return *j;
}

bool is_atom(const FiniteOrtholattice& L, int x) {
  if (x == L.bottom) return false;
  for (int y = L.down[x].next_set(0); y >= 0; y = L.down[x].next_set(y + 1))
    if (y != L.bottom && y != x) return false;
  return true;
}

std::vector<int> atoms(const FiniteOrtholattice& L) {
  std::vector<int> out;
  for (int x = 0; x < L.size(); x++)
    if (is_atom(L, x)) out.push_back(x);
  return out;
}

bool covers(const FiniteOrtholattice& L, int a, int b) {
  if (a == b || !L.leq(a, b)) return false;
  Bits between = L.up[a] & L.down[b];
  for (int c = between.next_set(0); c >= 0; c = between.next_set(c + 1))
    if (c != a && c != b) return false;
  return true;
}

}  // namespace qlat
