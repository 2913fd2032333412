#include "etale/topology.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "etale/order.hpp"

namespace etale {

FiniteTopology FiniteTopology::from_opens(std::size_t points, std::vector<Subset> opens) {
  FiniteTopology t;
  t.points_ = points;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  t.opens_ = std::move(opens);
  t.rebuild();
  return t;
}

FiniteTopology FiniteTopology::from_base(std::size_t points, const std::vector<Subset>& base) {
  std::unordered_set<Subset> seen;
  std::deque<Subset> pending;
  auto push = [&](Subset s) {
    if (!seen.insert(s).second) return;
    if (seen.size() > kMaxOpens)
      throw BoundExceeded("topology has more than " + std::to_string(kMaxOpens) + " open sets");
    pending.push_back(std::move(s));
  };
  const std::unordered_set<Subset> unique(base.begin(), base.end());
  push(Subset(points));
  push(full_subset(points));
  for (const auto& b : unique) push(b);
  while (!pending.empty()) {
    Subset s = std::move(pending.front());
    pending.pop_front();
    for (const auto& b : unique) push(s | b);
  }
  return from_opens(points, {seen.begin(), seen.end()});
}

FiniteTopology FiniteTopology::discrete(std::size_t points) {
  if (points > kMaxDiscretePoints)
    throw BoundExceeded("discrete topology on " + std::to_string(points) + " points exceeds " +
                        std::to_string(kMaxDiscretePoints));
  std::vector<Subset> opens;
  opens.reserve(std::size_t{1} << points);
  for (std::size_t mask = 0; mask < (std::size_t{1} << points); ++mask)
    opens.emplace_back(points, mask);
  return from_opens(points, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t points) {
  return from_opens(points, {Subset(points), full_subset(points)});
}

std::optional<Elem> FiniteTopology::index_of(const Subset& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteTopology FiniteTopology::subspace(const Subset& s) const {
  std::vector<Elem> kept = members(s);
  std::vector<Subset> opens;
  opens.reserve(opens_.size());
  for (const auto& u : opens_) {
    Subset restricted(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (u.test(kept[i])) restricted.set(i);
    opens.push_back(std::move(restricted));
  }
  return from_opens(kept.size(), std::move(opens));
}

bool FiniteTopology::is_discrete() const {
  for (std::size_t x = 0; x < points_; ++x)
    if (neighbourhoods_[x].count() != 1) return false;
  return true;
}

void FiniteTopology::rebuild() {
  index_.clear();
  for (std::size_t i = 0; i < opens_.size(); ++i) index_.emplace(opens_[i], static_cast<Elem>(i));
  neighbourhoods_.assign(points_, full_subset(points_));
  for (const auto& u : opens_)
    for_each_member(u, [&](Elem x) { neighbourhoods_[x] &= u; });
}

Report validate_topology(const FiniteTopology& t) {
  Report report;
  const auto n = t.points();
  if (!t.is_open(Subset(n))) report.fail("empty-open", {n});
  if (!t.is_open(full_subset(n))) report.fail("full-open", {n});
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i].size() != n) {
      report.fail("open-arity", {i});
      continue;
    }
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!t.is_open(opens[i] | opens[j])) report.fail("union-closed", {i, j});
      if (!t.is_open(opens[i] & opens[j])) report.fail("intersection-closed", {i, j});
    }
  }
  return report;
}

Verdict is_continuous(const std::vector<Elem>& map, const FiniteTopology& src,
                      const FiniteTopology& dst) {
  for (std::size_t i = 0; i < dst.open_count(); ++i)
    if (!src.is_open(preimage(map, dst.open(i), src.points())))
      return Verdict::fail({i}, "preimage of open " + format_subset(dst.open(i)) + " is not open");
  return Verdict::pass();
}

Verdict is_open_map(const std::vector<Elem>& map, const FiniteTopology& src,
                    const FiniteTopology& dst) {
  for (std::size_t i = 0; i < src.open_count(); ++i)
    if (!dst.is_open(image(map, src.open(i), dst.points())))
      return Verdict::fail({i}, "image of open " + format_subset(src.open(i)) + " is not open");
  return Verdict::pass();
}

Verdict sober_space_check(const FiniteTopology& t) {
  const FiniteFrame frame = opens_frame(t);
  const auto filters = enumerate_cp_filters(frame);
  std::vector<Subset> reached;
  for (std::size_t x = 0; x < t.points(); ++x) {
    Subset ox(t.open_count());
    for (std::size_t u = 0; u < t.open_count(); ++u)
      if (t.open(u).test(x)) ox.set(u);
    for (std::size_t y = 0; y < reached.size(); ++y)
      if (reached[y] == ox) return Verdict::fail({y, x}, "points share all open neighbourhoods");
    reached.push_back(std::move(ox));
  }
  for (const auto& f : filters) {
    Subset members = f.members(frame);
    if (std::find(reached.begin(), reached.end(), members) == reached.end())
      return Verdict::fail({f.cogenerator()}, "completely prime filter is not a point");
  }
  return Verdict::pass();
}

}  // namespace etale
