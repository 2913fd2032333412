#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace etale {

/// Dense index of an element, arrow or point. Every finite structure in
/// this library numbers its carrier 0..n-1.
using Elem = std::uint32_t;

inline constexpr Elem kNone = std::numeric_limits<Elem>::max();

using Subset = boost::dynamic_bitset<std::uint64_t>;

/// Total map between carriers: element i of the source goes to map[i].
using ElementMap = std::vector<Elem>;
using ArrowMap = std::vector<Elem>;

/// Square n x n table of element indices (multiplication, meet, join,
/// composition).
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Elem operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  bool operator==(const Table&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

Subset make_subset(std::size_t n, std::initializer_list<std::size_t> members);
Subset full_subset(std::size_t n);
std::vector<Elem> members(const Subset& s);

template <typename F>
void for_each_member(const Subset& s, F&& f) {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) f(static_cast<Elem>(i));
}

/// Preimage of `target` under a total map whose domain has `domain_size`
/// elements.
Subset preimage(const std::vector<Elem>& map, const Subset& target, std::size_t domain_size);

/// Image of `source` under a total map into a codomain of `codomain_size`.
Subset image(const std::vector<Elem>& map, const Subset& source, std::size_t codomain_size);

std::string format_subset(const Subset& s);

/// Input rejected before any mathematics ran: malformed tables, a
/// structure that fails its layered validation where a valid one is
/// required, or an undefined operation argument.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hard size guard tripped (exhaustive enumeration would blow up).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace etale
