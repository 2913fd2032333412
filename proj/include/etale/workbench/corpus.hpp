#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "etale/workbench/checks.hpp"
#include "etale/workbench/document.hpp"

namespace etale::workbench {

/// Every built-in instance, sorted by name: pair groupoids, discrete and
/// monoid categories, free categories, their Ω-images, frames and
/// frame-quantales, posets, restriction monoids, morphisms and functors,
/// and the negative fixtures (each with the law it must fail).
std::vector<Document> generate_corpus();

/// A (category, rqf-or-crm) pair on which `corpus run` checks an
/// adjunction.
struct CorpusPair {
  std::string category;
  std::string target;
};

std::vector<CorpusPair> corpus_pairs();

/// Positive fixtures have no expected block or expect to validate.
bool is_positive(const Document& doc);

/// `<name>.<ext>`: .poset, .frame, .quantale, .rqf, .cat, .crm,
/// .morphism, .functor.
std::string file_name(const Document& doc);

/// Every file in `dir` with a workbench extension, sorted by name. Throws
/// InvalidInput on duplicate names.
std::vector<Document> load_corpus(const std::filesystem::path& dir);
void write_corpus(const std::vector<Document>& docs, const std::filesystem::path& dir);

/// Completely prime filters by backtracking over subsets with only the
/// defining properties as pruning, as member sets in sorted order.
std::vector<Subset> definitional_cp_filters(const FiniteLattice& f);

/// The checks `corpus run` applies to one document.
std::vector<CheckReport> corpus_checks(const Document& doc, const Limits& limits);

/// Runs corpus_checks on every document and the adjoint checks on every
/// corpus pair, on up to `jobs` threads. `progress` sees each report as
/// it completes; the result is in canonical order whatever `jobs` is.
std::vector<CheckReport> run_corpus(const std::vector<Document>& docs, const Limits& limits,
                                    unsigned jobs,
                                    const std::function<void(const CheckReport&)>& progress = {});

}  // namespace etale::workbench
