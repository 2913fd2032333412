#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "etale/common.hpp"
#include "etale/report.hpp"

namespace etale {

/// Finite topology stored as its full family of open sets. Opens are kept
/// sorted by their bitmask value, so the discrete topology on n points
/// numbers each subset by its mask.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  /// Takes the family as given (sorted, deduplicated); not validated.
  static FiniteTopology from_opens(std::size_t points, std::vector<Subset> opens);
  /// Union closure of `base` together with ∅ and the whole space.
  static FiniteTopology from_base(std::size_t points, const std::vector<Subset>& base);
  static FiniteTopology discrete(std::size_t points);
  static FiniteTopology indiscrete(std::size_t points);

  std::size_t points() const { return points_; }
  const std::vector<Subset>& opens() const { return opens_; }
  std::size_t open_count() const { return opens_.size(); }
  const Subset& open(std::size_t i) const { return opens_[i]; }

  bool is_open(const Subset& s) const { return index_.count(s) != 0; }
  std::optional<Elem> index_of(const Subset& s) const;

  /// Smallest open set containing `x`.
  const Subset& neighbourhood(Elem x) const { return neighbourhoods_[x]; }

  /// Opens of the subspace `s`, with points renumbered in increasing order.
  FiniteTopology subspace(const Subset& s) const;

  bool is_discrete() const;

  bool operator==(const FiniteTopology& other) const {
    return points_ == other.points_ && opens_ == other.opens_;
  }

 private:
  void rebuild();

  std::size_t points_ = 0;
  std::vector<Subset> opens_;
  std::unordered_map<Subset, Elem> index_;
  std::vector<Subset> neighbourhoods_;
};

/// Largest discrete space we are willing to materialize.
inline constexpr std::size_t kMaxDiscretePoints = 16;
inline constexpr std::size_t kMaxOpens = std::size_t{1} << kMaxDiscretePoints;

Report validate_topology(const FiniteTopology& t);

/// Preimage of every open of `dst` is open in `src`.
Verdict is_continuous(const std::vector<Elem>& map, const FiniteTopology& src,
                      const FiniteTopology& dst);

/// Image of every open of `src` is open in `dst`.
Verdict is_open_map(const std::vector<Elem>& map, const FiniteTopology& src,
                    const FiniteTopology& dst);

/// x ↦ O_x is a bijection from the points onto the completely prime
/// filters of the frame of opens. Witness: two points with equal O_x, or
/// the co-generator of an unreached filter.
Verdict sober_space_check(const FiniteTopology& t);

}  // namespace etale
