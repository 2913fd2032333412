#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "etale/common.hpp"
#include "etale/report.hpp"
#include "etale/topology.hpp"

namespace etale {

/// Finite partial order stored as up-set and down-set rows.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// `up[i]` holds every j with i <= j. Not validated.
  explicit FinitePoset(std::vector<Subset> up);

  static FinitePoset from_pairs(std::size_t n, const std::vector<std::pair<Elem, Elem>>& leq);
  /// Reflexive-transitive closure of a covering relation.
  static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<Elem, Elem>>& covers);
  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return up_.size(); }
  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  const Subset& up(Elem a) const { return up_[a]; }
  const Subset& down(Elem a) const { return down_[a]; }

  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;
  /// Elements of `s` with nothing of `s` strictly above them.
  Subset maximal(const Subset& s) const;

  /// Least upper bound of `s` (the least element for empty `s`), if any.
  std::optional<Elem> lub(const Subset& s) const;
  /// Greatest lower bound of `s`, if any.
  std::optional<Elem> glb(const Subset& s) const;

  /// A linear extension: every element appears after everything below it.
  std::vector<Elem> linear_extension() const;

  bool operator==(const FinitePoset& other) const { return up_ == other.up_; }

 private:
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

Report validate_poset(const FinitePoset& p);

class FiniteLattice {
 public:
  FiniteLattice() = default;
  FiniteLattice(FinitePoset order, Table meet, Table join, Elem bottom, Elem top);

  /// Derives meet and join tables from the order; nullopt (with the reason
  /// recorded in `why`) when some pair has no meet or no join.
  static std::optional<FiniteLattice> from_order(FinitePoset order, Report* why = nullptr);

  std::size_t size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_(a, b); }
  Elem join(Elem a, Elem b) const { return join_(a, b); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }

  /// Join of a subset; bottom for the empty subset.
  Elem join_all(const Subset& s) const;
  /// Meet of a subset; top for the empty subset.
  Elem meet_all(const Subset& s) const;

 private:
  FinitePoset order_;
  Table meet_;
  Table join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Checks that the stored tables are the glb/lub of the order and that the
/// bounds are bounds. Assumes the order passed validate_poset.
Report validate_lattice(const FiniteLattice& l);

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples; the failing triple as
/// witness otherwise. In a finite lattice this is the frame law.
Verdict is_frame(const FiniteLattice& l);

/// A finite lattice that is expected to be distributive. The type records
/// intent; run is_frame to check it.
class FiniteFrame : public FiniteLattice {
 public:
  FiniteFrame() = default;
  explicit FiniteFrame(FiniteLattice l) : FiniteLattice(std::move(l)) {}
};

FiniteFrame chain_frame(std::size_t n);
/// Power set of an `atoms`-element set; element index = bitmask.
FiniteFrame boolean_frame(std::size_t atoms);
/// Componentwise order; element (a, b) has index a * |rhs| + b.
FiniteFrame product_frame(const FiniteFrame& lhs, const FiniteFrame& rhs);
/// Frame of open sets, indexed like topology.opens().
FiniteFrame opens_frame(const FiniteTopology& topology);

/// Completely prime filter, stored by its meet-prime co-generator m:
/// the members are {x : x ≰ m}.
class CPFilter {
 public:
  explicit CPFilter(Elem cogenerator) : cogenerator_(cogenerator) {}

  Elem cogenerator() const { return cogenerator_; }
  bool contains(const FiniteLattice& l, Elem x) const { return !l.leq(x, cogenerator_); }
  Subset members(const FiniteLattice& l) const;

  auto operator<=>(const CPFilter&) const = default;

 private:
  Elem cogenerator_;
};

/// All m ≠ top with x ∧ y ≤ m ⇒ x ≤ m or y ≤ m.
std::vector<Elem> meet_prime_elements(const FiniteLattice& f);

/// pt(F): one filter per meet-prime, in increasing co-generator order.
std::vector<CPFilter> enumerate_cp_filters(const FiniteLattice& f);

/// The space of points of a frame with opens X_a = {points containing a}.
struct PointSpace {
  std::vector<CPFilter> points;
  /// x_sets[a] = X_a as a subset of `points`.
  std::vector<Subset> x_sets;
  FiniteTopology topology;
  /// X_0 = ∅, X_1 = all, X_a ∩ X_b = X_{a∧b}, X_a ∪ X_b = X_{a∨b}.
  Report laws;
};

PointSpace pt_topology(const FiniteFrame& f);

/// Whenever a ≰ b some completely prime filter contains a but not b.
Verdict frame_spatial_check(const FiniteFrame& f);

/// The frame e↓ of elements below `e`, with its embedding back into `f`.
struct DownFrame {
  FiniteFrame frame;
  std::vector<Elem> embed;
  /// Index in `frame` of each element of `f`, or kNone outside e↓.
  std::vector<Elem> index;
};

DownFrame down_frame(const FiniteFrame& f, Elem e);

}  // namespace etale
