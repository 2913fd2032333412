#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace etale {

/// One violated law together with the element, pair or triple of indices
/// that exhibits it.
struct Violation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// Result of a validator. Keeps the first witness per law.
class Report {
 public:
  bool ok() const { return violations_.empty(); }
  explicit operator bool() const { return ok(); }

  void fail(std::string law, std::vector<std::size_t> witness, std::string detail = {});
  void absorb(const Report& other);

  bool violates(std::string_view law) const;
  const Violation* find(std::string_view law) const;
  const std::vector<Violation>& violations() const { return violations_; }

  std::string summary() const;

 private:
  std::vector<Violation> violations_;
};

/// Boolean answer with an optional witness, for checks that test a single
/// property.
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<std::size_t> witness, std::string detail = {}) {
    return {false, std::move(witness), std::move(detail)};
  }
};

std::string format_witness(const std::vector<std::size_t>& witness);

}  // namespace etale
