#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "etale/duality.hpp"
#include "etale/report.hpp"
#include "etale/workbench/document.hpp"

namespace etale::workbench {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status status);

/// One line of workbench output. A failing report always carries a
/// witness.
struct CheckReport {
  std::string instance;
  std::string check;
  Status status = Status::pass;
  std::string law;
  std::vector<std::size_t> witness;
  std::string detail;
  double millis = 0;

  bool failed() const { return status == Status::fail; }
  /// Canonical order: instance, check, law, witness.
  bool operator<(const CheckReport& other) const;
};

/// `PASS pair2 omega-rqf: 16 elements`; failures add the law and witness.
std::string format_text(const CheckReport& report);
/// Everything except the timing, so the output is reproducible.
json to_json(const CheckReport& report);

/// Hard limits of the workbench and the user's (possibly lower) choices.
struct Limits {
  static constexpr std::size_t kOmegaArrows = 512;
  static constexpr std::size_t kFilterElements = 1024;
  static constexpr std::size_t kHomArrows = 12;
  static constexpr std::size_t kHomElements = 64;

  std::size_t max_arrows = kOmegaArrows;
  std::size_t max_elements = kFilterElements;
  std::uint64_t seed = 0;

  std::size_t omega_arrows() const;
  std::size_t filter_elements() const;
  HomBounds hom() const;
};

/// The layered axiom check for the document's kind: order, lattice and
/// distributivity for frames; the quantale, Ehresmann and restriction
/// layers for rqf; category, topology, continuity and étaleness for
/// topcategories; the CRM laws; for morphisms and functors, the source
/// and target first and then the map.
Report validate_document(const Document& doc, std::uint64_t seed = 0);

/// One report per violated law, or a single pass.
std::vector<CheckReport> validate_checks(const Document& doc, const Limits& limits);

/// Whether `validate` behaves as the document's expected block says: a
/// negative fixture must be rejected with its law named and a witness.
CheckReport expected_check(const Document& doc, const Limits& limits);

struct Emitted {
  Document document;
  std::vector<CheckReport> checks;
};

/// Ω of a category or topcategory document, as an rqf document.
Emitted omega_command(const Document& doc, const Limits& limits);

/// The filter category of an rqf or frame document, as a topcategory
/// document labelled by the co-generators of the filters.
Emitted cpoints_command(const Document& doc, const Limits& limits);

/// χ and ω checks. Categories: ω is a continuous covering functor, a
/// category isomorphism and a homeomorphism, then χ on Ω(C). Quantal
/// frames and frames: χ is an isomorphism, then ω on C(Q).
std::vector<CheckReport> roundtrip_checks(const Document& doc, const Limits& limits);

/// CRM documents: L^∨(S) is an RQF, PI(L^∨(S)) ≅ S and the S-filter
/// correspondence. Quantal frames, frames and categories (through Ω):
/// PI(Q) is a CRM, L^∨(PI(Q)) ≅ Q, then the CRM checks on PI(Q).
std::vector<CheckReport> crm_checks(const Document& doc, const Limits& limits);

/// Adjunction I for an rqf or frame target, Adjunction II for a crm.
std::vector<CheckReport> adjoint_checks(const Document& category, const Document& target,
                                        const Limits& limits);

/// Throws InvalidInput when `doc` does not validate, naming the kind
/// expected by `command`.
void require_valid(const Document& doc, std::string_view command, std::uint64_t seed);

}  // namespace etale::workbench
