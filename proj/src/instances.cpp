#include "etale/instances.hpp"

#include <algorithm>
#include <map>

#include "etale/functors.hpp"

namespace etale {

FiniteCategory pair_groupoid(std::size_t n) {
  const std::size_t size = n * n;
  Subset ids(size);
  std::vector<Elem> d(size), r(size);
  Table comp(size, kNone);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem a = x * n + y;
      d[a] = y * n + y;
      r[a] = x * n + x;
      if (x == y) ids.set(a);
      for (Elem z = 0; z < n; ++z) comp(a, y * n + z) = x * n + z;
    }
  return FiniteCategory(ids, d, r, std::move(comp));
}

FiniteCategory discrete_category(std::size_t n) {
  std::vector<Elem> id(n);
  Table comp(n, kNone);
  for (Elem i = 0; i < n; ++i) {
    id[i] = i;
    comp(i, i) = i;
  }
  return FiniteCategory(full_subset(n), id, id, std::move(comp));
}

FiniteCategory empty_category() { return discrete_category(0); }

FiniteCategory monoid_category(const Table& mul, Elem unit) {
  const auto n = mul.size();
  if (unit >= n) throw InvalidInput("monoid unit out of range");
  for (Elem a = 0; a < n; ++a) {
    if (mul(unit, a) != a || mul(a, unit) != a) throw InvalidInput("monoid unit law fails");
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) >= n) throw InvalidInput("monoid product out of range");
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidInput("monoid not associative");
    }
  }
  std::vector<Elem> dr(n, unit);
  return FiniteCategory(make_subset(n, {unit}), dr, dr, mul);
}

FiniteCategory cyclic_group(std::size_t n) {
  Table mul(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul(a, b) = static_cast<Elem>((a + b) % n);
  return monoid_category(mul, 0);
}

FiniteCategory idempotent_monoid() {
  Table mul(2);
  mul(0, 0) = 0;
  mul(0, 1) = 1;
  mul(1, 0) = 1;
  mul(1, 1) = 1;
  return monoid_category(mul, 0);
}

FiniteCategory free_category(std::size_t objects,
                             const std::vector<std::pair<Elem, Elem>>& edges,
                             std::size_t max_arrows) {
  for (const auto& [s, t] : edges)
    if (s >= objects || t >= objects) throw InvalidInput("edge endpoint out of range");

  // A path is its edge sequence in traversal order; identities are empty
  // paths tagged by object.
  struct Path {
    Elem source;
    Elem target;
    std::vector<Elem> edges;
  };
  std::vector<Path> paths;
  for (Elem o = 0; o < objects; ++o) paths.push_back({o, o, {}});
  std::size_t frontier_begin = paths.size();
  for (Elem e = 0; e < edges.size(); ++e) paths.push_back({edges[e].first, edges[e].second, {e}});
  while (frontier_begin < paths.size()) {
    const std::size_t frontier_end = paths.size();
    for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
      if (paths[p].edges.size() > objects) throw InvalidInput("graph has a cycle");
      for (Elem e = 0; e < edges.size(); ++e) {
        if (edges[e].first != paths[p].target) continue;
        Path next = paths[p];
        next.edges.push_back(e);
        next.target = edges[e].second;
        paths.push_back(std::move(next));
        if (paths.size() > max_arrows)
          throw BoundExceeded("free category exceeds " + std::to_string(max_arrows) + " arrows");
      }
    }
    frontier_begin = frontier_end;
  }

  const auto n = paths.size();
  std::map<std::pair<Elem, std::vector<Elem>>, Elem> lookup;
  for (Elem i = 0; i < n; ++i) lookup.emplace(std::make_pair(paths[i].source, paths[i].edges), i);
  Subset ids(n);
  std::vector<Elem> d(n), r(n);
  for (Elem i = 0; i < n; ++i) {
    if (i < objects) ids.set(i);
    d[i] = paths[i].source;
    r[i] = paths[i].target;
  }
  Table comp(n, kNone);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (paths[b].target != paths[a].source) continue;
      std::vector<Elem> seq = paths[b].edges;
      seq.insert(seq.end(), paths[a].edges.begin(), paths[a].edges.end());
      comp(a, b) = lookup.at({paths[b].source, seq});
    }
  return FiniteCategory(ids, d, r, std::move(comp));
}

FiniteTopCategory pair2_coarse() {
  return FiniteTopCategory(pair_groupoid(2),
                           FiniteTopology::from_opens(4, {Subset(4), make_subset(4, {0, 3}),
                                                          make_subset(4, {1, 2}), full_subset(4)}));
}

RestrictionQuantalFrame pair_groupoid_quantale(std::size_t n) {
  return omega_object(FiniteTopCategory::discrete(pair_groupoid(n))).rqf;
}

}  // namespace etale
