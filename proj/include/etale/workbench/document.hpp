#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "etale/category.hpp"
#include "etale/crm.hpp"
#include "etale/order.hpp"
#include "etale/quantale.hpp"

namespace etale::workbench {

using json = nlohmann::json;

enum class Kind { poset, frame, quantale, rqf, category, topcategory, crm, morphism, functor };

std::string_view kind_name(Kind kind);
std::optional<Kind> kind_from_name(std::string_view name);

/// What a fixture is supposed to do under `validate`.
struct Expected {
  bool valid = true;
  /// A law the validator must report when `valid` is false.
  std::string law;

  bool operator==(const Expected&) const = default;
};

/// A syntax error (with line and column) or a semantic error (with the
/// JSON pointer of the offending field).
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A file that could not be read.
class FileError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// One workbench file. `body` holds every field other than kind, name and
/// expected, already in canonical form.
struct Document {
  Kind kind = Kind::poset;
  std::string name;
  json body = json::object();
  std::optional<Expected> expected;

  bool operator==(const Document&) const = default;

  std::size_t size() const;
};

Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

/// Sorted keys, compact, trailing newline.
std::string serialize(const Document& doc);
void save_document(const Document& doc, const std::filesystem::path& path);

Document poset_document(std::string name, const FinitePoset& p);
/// With `tables`, the meet and join tables are written out too.
Document frame_document(std::string name, const FiniteLattice& l, bool tables = false);
Document quantale_document(std::string name, const FiniteQuantale& q);
Document rqf_document(std::string name, const EhresmannQuantalFrame& q);
Document category_document(std::string name, const FiniteCategory& c,
                           std::vector<std::string> labels = {});
/// Writes "discrete" for a discrete topology.
Document topcategory_document(std::string name, const FiniteTopCategory& tc);
Document crm_document(std::string name, const CompleteRestrictionMonoid& s);
Document morphism_document(std::string name, Document source, Document target,
                           const ElementMap& map);
Document functor_document(std::string name, Document source, Document target,
                          const ArrowMap& map);

/// A typed structure, or the layered report explaining why the tables do
/// not describe one.
template <typename T>
struct Loaded {
  Report report;
  std::optional<T> value;
};

FinitePoset to_poset(const Document& doc);
/// frame, quantale and rqf documents. Layers: poset, then lattice.
Loaded<FiniteFrame> to_frame(const Document& doc);
/// quantale and rqf documents.
Loaded<FiniteQuantale> to_quantale(const Document& doc);
/// rqf documents.
Loaded<EhresmannQuantalFrame> to_rqf(const Document& doc);
/// category and topcategory documents.
FiniteCategory to_category(const Document& doc);
/// A bare category document gets the discrete topology.
FiniteTopCategory to_topcategory(const Document& doc);
/// Derives the meet table from the order when absent; throws InvalidInput
/// when some pair has no meet.
CompleteRestrictionMonoid to_crm(const Document& doc);

/// Source, target and map of a morphism or functor document.
Document morphism_source(const Document& doc);
Document morphism_target(const Document& doc);
std::vector<Elem> morphism_map(const Document& doc);

}  // namespace etale::workbench
