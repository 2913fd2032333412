#include "etale/common.hpp"

#include <sstream>

#include "etale/report.hpp"

namespace etale {

Subset make_subset(std::size_t n, std::initializer_list<std::size_t> members) {
  Subset s(n);
  for (auto m : members) s.set(m);
  return s;
}

Subset full_subset(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

std::vector<Elem> members(const Subset& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for_each_member(s, [&](Elem i) { out.push_back(i); });
  return out;
}

Subset preimage(const std::vector<Elem>& map, const Subset& target, std::size_t domain_size) {
  Subset out(domain_size);
  for (std::size_t i = 0; i < domain_size; ++i)
    if (target.test(map[i])) out.set(i);
  return out;
}

Subset image(const std::vector<Elem>& map, const Subset& source, std::size_t codomain_size) {
  Subset out(codomain_size);
  for_each_member(source, [&](Elem i) { out.set(map[i]); });
  return out;
}

std::string format_subset(const Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_member(s, [&](Elem i) {
    if (!first) os << ',';
    os << i;
    first = false;
  });
  os << '}';
  return os.str();
}

void Report::fail(std::string law, std::vector<std::size_t> witness, std::string detail) {
  if (violates(law)) return;
  violations_.push_back({std::move(law), std::move(witness), std::move(detail)});
}

void Report::absorb(const Report& other) {
  for (const auto& v : other.violations_) fail(v.law, v.witness, v.detail);
}

bool Report::violates(std::string_view law) const { return find(law) != nullptr; }

const Violation* Report::find(std::string_view law) const {
  for (const auto& v : violations_)
    if (v.law == law) return &v;
  return nullptr;
}

std::string Report::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations_) {
    if (!first) os << "; ";
    os << v.law << ' ' << format_witness(v.witness);
    if (!v.detail.empty()) os << " (" << v.detail << ')';
    first = false;
  }
  return os.str();
}

std::string format_witness(const std::vector<std::size_t>& witness) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ',';
    os << witness[i];
  }
  os << ']';
  return os.str();
}

}  // namespace etale
