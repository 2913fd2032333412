#include "etale/workbench/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "etale/crm.hpp"
#include "etale/instances.hpp"

namespace etale::workbench {

namespace {

Document with_expected(Document doc, std::string law) {
  doc.expected = Expected{false, std::move(law)};
  return doc;
}

FiniteLattice lattice_from_covers(std::size_t n, const std::vector<std::pair<Elem, Elem>>& covers) {
  return *FiniteLattice::from_order(FinitePoset::from_covers(n, covers));
}

// A single-cell mutation site: the value at `ptr` ranges over 0..range-1,
// or, with `toggle`, the index `range` is added to or removed from the
// sorted list at `ptr`.
struct Cell {
  json::json_pointer ptr;
  std::size_t range;
  bool toggle = false;
};

std::vector<Cell> table_cells(const std::string& key, std::size_t n) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.push_back({json::json_pointer("/" + key + "/" + std::to_string(i) + "/" + std::to_string(j)), n});
  return out;
}

std::vector<Cell> map_cells(const std::string& key, std::size_t length, std::size_t range) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < length; ++i)
    out.push_back({json::json_pointer("/" + key + "/" + std::to_string(i)), range});
  return out;
}

std::vector<Cell> order_cells(std::size_t n) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.push_back({json::json_pointer("/leq/" + std::to_string(i)), j, true});
  return out;
}

std::vector<Cell> concat(std::vector<std::vector<Cell>> parts) {
  std::vector<Cell> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// First single-cell mutation of `base` whose validation names `law`.
std::optional<Document> mutation_for(const Document& base, const std::vector<Cell>& cells,
                                     const std::string& law) {
  auto accept = [&](Document doc) -> std::optional<Document> {
    // Re-parse so the fixture is in canonical form and survives a round trip.
    Document canonical;
    try {
      canonical = parse_document(serialize(doc));
    } catch (const ParseError&) {
      return std::nullopt;
    }
    const Report r = validate_document(canonical);
    const Violation* v = r.find(law);
    if (!v || v->witness.empty()) return std::nullopt;
    canonical.name = base.name + "-bad-" + law;
    return with_expected(std::move(canonical), law);
  };
  for (const auto& cell : cells) {
    if (cell.toggle) {
      Document doc = base;
      auto& row = doc.body[cell.ptr];
      std::vector<Elem> values = row.get<std::vector<Elem>>();
      auto it = std::find(values.begin(), values.end(), cell.range);
      if (it != values.end()) values.erase(it);
      else values.insert(std::upper_bound(values.begin(), values.end(), cell.range), static_cast<Elem>(cell.range));
      row = values;
      if (auto found = accept(std::move(doc))) return found;
      continue;
    }
    const auto current = base.body[cell.ptr].get<std::size_t>();
    for (std::size_t v = 0; v < cell.range; ++v) {
      if (v == current) continue;
      Document doc = base;
      doc.body[cell.ptr] = v;
      if (auto found = accept(std::move(doc))) return found;
    }
  }
  return std::nullopt;
}

// Tries each base in turn; at most one fixture per law.
void add_mutations(std::vector<Document>& out, const std::vector<std::pair<Document, std::vector<Cell>>>& bases,
                   const std::vector<std::string>& laws) {
  for (const auto& law : laws)
    for (const auto& [base, cells] : bases)
      if (auto found = mutation_for(base, cells, law)) {
        out.push_back(std::move(*found));
        break;
      }
}

std::vector<Cell> quantale_cells(std::size_t n) {
  return concat({table_cells("mul", n), {{json::json_pointer("/unit"), n}}});
}

std::vector<Cell> rqf_cells(std::size_t n) {
  return concat({map_cells("star", n, n), map_cells("plus", n, n), table_cells("mul", n),
                 {{json::json_pointer("/unit"), n}}});
}

std::vector<Cell> category_cells(const Document& doc) {
  const auto n = doc.size();
  std::vector<Cell> out = concat({map_cells("d", n, n), map_cells("r", n, n)});
  for (std::size_t k = 0; k < doc.body["comp"].size(); ++k)
    out.push_back({json::json_pointer("/comp/" + std::to_string(k) + "/2"), n});
  return out;
}

std::vector<Cell> crm_cells(std::size_t n) {
  return concat({table_cells("mul", n), map_cells("star", n, n), map_cells("plus", n, n),
                 table_cells("meet", n), order_cells(n), {{json::json_pointer("/unit"), n}},
                 {{json::json_pointer("/zero"), n}}});
}

Document topcat_with_opens(std::string name, const FiniteCategory& c,
                           const std::vector<std::vector<std::size_t>>& opens) {
  std::vector<Subset> sets;
  for (const auto& u : opens) {
    Subset s(c.size());
    for (auto x : u) s.set(x);
    sets.push_back(s);
  }
  return topcategory_document(std::move(name),
                              FiniteTopCategory(c, FiniteTopology::from_opens(c.size(), sets)));
}

// PI(pair2) without the swap a01 ∨ a10: still a restriction monoid with
// the natural order, but the compatible pair {a01, a10} has no join.
Document missing_join(const CompleteRestrictionMonoid& s) {
  const auto n = s.size();
  Elem swap = kNone;
  for (Elem x = 0; x < n; ++x)
    if (!s.is_projection(x) && s.star(x) == s.unit()) swap = x;
  std::vector<Elem> keep, index(n, kNone);
  for (Elem x = 0; x < n; ++x)
    if (x != swap) {
      index[x] = static_cast<Elem>(keep.size());
      keep.push_back(x);
    }
  const auto m = keep.size();
  json leq = json::array(), mul = json::array(), star = json::array(), plus = json::array();
  for (Elem x : keep) {
    std::vector<Elem> up, row;
    for (Elem y : keep) {
      if (s.leq(x, y)) up.push_back(index[y]);
      row.push_back(index[s.mul(x, y)]);
    }
    leq.push_back(up);
    mul.push_back(row);
    star.push_back(index[s.star(x)]);
    plus.push_back(index[s.plus(x)]);
  }
  Document doc = crm_document("pi-pair2-missing-join", s);
  doc.body = {{"size", m}, {"leq", leq},           {"mul", mul},   {"unit", index[s.unit()]},
              {"zero", index[s.zero()]}, {"star", star}, {"plus", plus}};
  return parse_document(serialize(doc));
}

bool subset_is_cp_filter(const FiniteLattice& f, const std::vector<signed char>& in) {
  const auto n = f.size();
  if (!in[f.top()] || in[f.bottom()]) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (in[a] && f.leq(a, b) && !in[b]) return false;
      if (in[a] && in[b] && !in[f.meet(a, b)]) return false;
      if (in[f.join(a, b)] && !in[a] && !in[b]) return false;
    }
  return true;
}

}  // namespace

std::vector<Subset> definitional_cp_filters(const FiniteLattice& f) {
  const auto n = f.size();
  std::vector<Elem> order = f.order().linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<signed char> in(n, -1);
  std::vector<Subset> out;
  auto consistent = [&](Elem x) {
    for (Elem y = 0; y < n; ++y) {
      if (in[y] < 0 || y == x) continue;
      if (in[x]) {
        if (f.leq(x, y) && !in[y]) return false;
        if (in[y] && in[f.meet(x, y)] == 0) return false;
      } else {
        if (in[y] && f.leq(y, x)) return false;
        if (!in[y] && in[f.join(x, y)] == 1) return false;
        for (Elem z = 0; z < n; ++z)
          if (in[y] && in[z] == 1 && f.meet(y, z) == x) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (subset_is_cp_filter(f, in)) {
        Subset s(n);
        for (Elem x = 0; x < n; ++x)
          if (in[x]) s.set(x);
        out.push_back(s);
      }
      return;
    }
    const Elem x = order[depth];
    for (signed char v : {1, 0}) {
      in[x] = v;
      if (consistent(x)) self(self, depth + 1);
    }
    in[x] = -1;
  };
  if (n > 0) search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Document> generate_corpus() {
  std::vector<Document> out;

  std::vector<std::pair<std::string, FiniteTopCategory>> categories;
  for (std::size_t n = 1; n <= 3; ++n)
    categories.emplace_back("pair" + std::to_string(n), FiniteTopCategory::discrete(pair_groupoid(n)));
  for (std::size_t n = 1; n <= 3; ++n)
    categories.emplace_back("discrete" + std::to_string(n),
                            FiniteTopCategory::discrete(discrete_category(n)));
  categories.emplace_back("empty", FiniteTopCategory::discrete(empty_category()));
  categories.emplace_back("monoid-ez", FiniteTopCategory::discrete(idempotent_monoid()));
  categories.emplace_back("monoid-z2", FiniteTopCategory::discrete(cyclic_group(2)));
  categories.emplace_back("monoid-z3", FiniteTopCategory::discrete(cyclic_group(3)));
  const std::vector<std::pair<std::string, std::pair<std::size_t, std::vector<std::pair<Elem, Elem>>>>>
      graphs = {
          {"free-arrow", {2, {{0, 1}}}},
          {"free-parallel", {2, {{0, 1}, {0, 1}}}},
          {"free-path", {3, {{0, 1}, {1, 2}}}},
          {"free-span", {3, {{0, 1}, {0, 2}}}},
          {"free-cospan", {3, {{0, 2}, {1, 2}}}},
          {"free-triangle", {3, {{0, 1}, {1, 2}, {0, 2}}}},
      };
  for (const auto& [name, g] : graphs)
    categories.emplace_back(name, FiniteTopCategory::discrete(free_category(g.first, g.second)));
  categories.emplace_back("pair2-coarse", pair2_coarse());

  std::map<std::string, Document> rqfs;
  for (const auto& [name, tc] : categories) {
    out.push_back(topcategory_document(name, tc));
    const auto omega = omega_object(tc);
    rqfs.emplace("omega-" + name, rqf_document("omega-" + name, omega.rqf));
  }
  out.push_back(category_document("pair2-plain", pair_groupoid(2)));

  std::vector<std::pair<std::string, FiniteFrame>> frames;
  for (std::size_t n = 1; n <= 5; ++n) frames.emplace_back("chain" + std::to_string(n), chain_frame(n));
  for (std::size_t n = 1; n <= 6; ++n) frames.emplace_back("bool" + std::to_string(n), boolean_frame(n));
  frames.emplace_back("chain2xchain3", product_frame(chain_frame(2), chain_frame(3)));
  frames.emplace_back("chain3xchain3", product_frame(chain_frame(3), chain_frame(3)));
  frames.emplace_back("bool2xchain3", product_frame(boolean_frame(2), chain_frame(3)));
  frames.emplace_back("bool3xchain4", product_frame(boolean_frame(3), chain_frame(4)));
  frames.emplace_back("bool4xchain4", product_frame(boolean_frame(4), chain_frame(4)));
  for (const auto& [name, f] : frames) out.push_back(frame_document(name, f));
  for (const char* name : {"chain2", "chain3", "chain4", "bool2", "bool3", "chain2xchain3"}) {
    const auto it = std::find_if(frames.begin(), frames.end(), [&](const auto& p) { return p.first == name; });
    rqfs.emplace(std::string("fq-") + name,
                 rqf_document(std::string("fq-") + name, frame_as_quantale(it->second)));
  }
  rqfs.emplace("trivial", rqf_document("trivial", frame_as_quantale(chain_frame(1))));
  for (const auto& [name, doc] : rqfs) out.push_back(doc);

  out.push_back(poset_document("chain4-poset", FinitePoset::chain(4)));
  out.push_back(poset_document("antichain3", FinitePoset::from_covers(3, {})));

  std::map<std::string, Document> crms;
  for (const char* name : {"pair1", "pair2", "pair3", "discrete2", "monoid-ez", "monoid-z2",
                           "free-path", "pair2-coarse"}) {
    const auto tc = std::find_if(categories.begin(), categories.end(),
                                 [&](const auto& p) { return p.first == name; });
    const auto pim = pi_restriction_monoid(omega_object(tc->second).rqf);
    crms.emplace(std::string("pi-") + name, crm_document(std::string("pi-") + name, pim.crm));
  }
  crms.emplace("crm-chain3", crm_document("crm-chain3", frame_as_crm(chain_frame(3))));
  crms.emplace("crm-bool2", crm_document("crm-bool2", frame_as_crm(boolean_frame(2))));
  for (const auto& [name, doc] : crms) out.push_back(doc);

  // Morphisms and functors.
  const FiniteTopCategory pair2 = FiniteTopCategory::discrete(pair_groupoid(2));
  const Document& omega_pair2 = rqfs.at("omega-pair2");
  const ArrowMap swap = {3, 2, 1, 0};
  const ElementMap omega_swap = omega_morphism(swap, pair2, pair2);
  const auto omega_size = omega_pair2.size();
  out.push_back(morphism_document("omega-pair2-id", omega_pair2, omega_pair2, identity_map(omega_size)));
  out.push_back(morphism_document("omega-pair2-swap", omega_pair2, omega_pair2, omega_swap));
  {
    const auto top = *to_rqf(omega_pair2).value;
    out.push_back(with_expected(morphism_document("omega-pair2-constant-top", omega_pair2, omega_pair2,
                                                  ElementMap(omega_size, top.top())),
                                "join-preserving"));
  }
  const Document& pi_pair2 = crms.at("pi-pair2");
  const auto pi_size = pi_pair2.size();
  out.push_back(morphism_document("pi-pair2-id", pi_pair2, pi_pair2, identity_map(pi_size)));
  out.push_back(with_expected(morphism_document("pi-pair2-constant-zero", pi_pair2, pi_pair2,
                                                ElementMap(pi_size, to_crm(pi_pair2).zero())),
                              "unit-preserving"));
  const Document pair2_doc = topcategory_document("pair2", pair2);
  const Document discrete2_doc =
      topcategory_document("discrete2", FiniteTopCategory::discrete(discrete_category(2)));
  out.push_back(functor_document("pair2-swap", pair2_doc, pair2_doc, swap));
  out.push_back(functor_document("pair2-id", pair2_doc, pair2_doc, identity_map(4)));
  out.push_back(with_expected(functor_document("discrete2-into-pair2", discrete2_doc, pair2_doc, {0, 3}),
                              "d-surjective"));

  // Negative fixtures: hand-built ones first.
  out.push_back(with_expected(frame_document("m3-lattice", lattice_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})),
                              "distributivity"));
  out.push_back(with_expected(frame_document("n5-lattice", lattice_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})),
                              "distributivity"));
  {
    Document v = frame_document("v-poset", chain_frame(1));
    v.body["size"] = 3;
    v.body["leq"] = json::array({{0, 1, 2}, {1}, {2}});
    out.push_back(with_expected(v, "join-exists"));
  }
  {
    // 0 < e < 1 with 1·1 = 1 and 1* = 1⁺ = e: Ehresmann, but 1 is not a
    // join of partial isometries.
    Document doc = rqf_document("trivial", frame_as_quantale(chain_frame(1)));
    doc.name = "chain3-not-etale";
    doc.body = {{"size", 3},
                {"leq", {{0, 1, 2}, {1, 2}, {2}}},
                {"mul", {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}},
                {"unit", 1},
                {"star", {0, 1, 1}},
                {"plus", {0, 1, 1}}};
    out.push_back(with_expected(parse_document(serialize(doc)), "etale"));
  }
  out.push_back(with_expected(topcat_with_opens("pair2-indiscrete", pair2.cat(), {{}, {0, 1, 2, 3}}), "etale"));
  out.push_back(with_expected(topcat_with_opens("pair2-d-discontinuous", pair2.cat(), {{}, {0}, {0, 1, 2, 3}}),
                              "d-continuous"));
  out.push_back(with_expected(topcat_with_opens("pair2-missing-union", pair2.cat(), {{}, {0}, {1}, {0, 1, 2, 3}}),
                              "union-closed"));

  // Negative fixtures: single-cell mutations found by search.
  const Document chain3_poset = poset_document("chain3-poset", FinitePoset::chain(3));
  add_mutations(out, {{chain3_poset, order_cells(3)}}, {"reflexivity", "antisymmetry", "transitivity"});
  const Document bool2_tables = frame_document("bool2-tables", boolean_frame(2), true);
  add_mutations(out, {{bool2_tables, concat({table_cells("meet", 4), table_cells("join", 4)})}},
                {"meet-table", "join-table"});

  std::vector<std::pair<Document, std::vector<Cell>>> quantale_bases;
  for (const char* name : {"omega-monoid-z2", "omega-pair2"}) {
    const auto q = *to_quantale(rqfs.at(name)).value;
    Document doc = quantale_document(std::string("quantale-") + (name + 6), q);
    out.push_back(doc);
    quantale_bases.emplace_back(doc, quantale_cells(q.size()));
  }
  add_mutations(out, quantale_bases,
                {"unit-law", "associativity", "zero-law", "left-join-distributivity",
                 "right-join-distributivity"});

  std::vector<std::pair<Document, std::vector<Cell>>> rqf_bases;
  for (const char* name : {"fq-chain3", "omega-monoid-ez", "omega-monoid-z2", "omega-discrete2", "omega-pair2"})
    rqf_bases.emplace_back(rqfs.at(name), rqf_cells(rqfs.at(name).size()));
  add_mutations(out, rqf_bases,
                {"star-identity", "plus-identity", "star-range", "plus-range", "star-congruence",
                 "plus-congruence", "star-join", "plus-join", "pi-closed"});

  const Document pair2_plain = category_document("pair2-plain", pair_groupoid(2));
  const Document free_path = topcategory_document(
      "free-path", FiniteTopCategory::discrete(free_category(3, {{0, 1}, {1, 2}})));
  const Document monoid_z3 = topcategory_document("monoid-z3", FiniteTopCategory::discrete(cyclic_group(3)));
  add_mutations(out,
                {{pair2_plain, category_cells(pair2_plain)},
                 {free_path, category_cells(free_path)},
                 {monoid_z3, category_cells(monoid_z3)}},
                {"identity-fixed", "d-composite", "r-composite", "associativity", "left-identity",
                 "right-identity"});

  std::vector<std::pair<Document, std::vector<Cell>>> crm_bases;
  for (const char* name : {"crm-chain3", "crm-bool2", "pi-pair2"})
    crm_bases.emplace_back(crms.at(name), crm_cells(crms.at(name).size()));
  add_mutations(out, crm_bases,
                {"unit-law", "associativity", "zero-law", "zero-least", "star-identity", "natural-order",
                 "meet-table"});
  out.push_back(with_expected(missing_join(pi_restriction_monoid(*to_rqf(omega_pair2).value).crm),
                              "compatible-join"));

  const Document omega_swap_doc = morphism_document("omega-pair2-swap", omega_pair2, omega_pair2, omega_swap);
  add_mutations(out, {{omega_swap_doc, map_cells("map", omega_size, omega_size)}},
                {"mul-preserving", "star-preserving"});
  const Document pair2_swap = functor_document("pair2-swap", pair2_doc, pair2_doc, swap);
  add_mutations(out, {{pair2_swap, map_cells("map", 4, 4)}}, {"functor-d", "functor-composition"});

  std::sort(out.begin(), out.end(), [](const Document& a, const Document& b) { return a.name < b.name; });
  return out;
}

std::vector<CorpusPair> corpus_pairs() {
  return {
      {"pair2", "omega-pair2"},
      {"pair2", "omega-discrete2"},
      {"discrete2", "omega-discrete2"},
      {"discrete2", "omega-pair2"},
      {"pair2-coarse", "omega-pair2-coarse"},
      {"monoid-ez", "omega-monoid-ez"},
      {"monoid-z2", "omega-monoid-z2"},
      {"free-arrow", "omega-free-arrow"},
      {"empty", "trivial"},
      {"empty", "omega-pair2"},
      {"pair1", "fq-chain3"},
      {"pair2", "pi-pair2"},
      {"discrete2", "pi-discrete2"},
      {"pair1", "pi-pair1"},
  };
}

bool is_positive(const Document& doc) { return !doc.expected || doc.expected->valid; }

std::string file_name(const Document& doc) {
  switch (doc.kind) {
    case Kind::category:
    case Kind::topcategory:
      return doc.name + ".cat";
    default:
      return doc.name + "." + std::string(kind_name(doc.kind));
  }
}

std::vector<Document> load_corpus(const std::filesystem::path& dir) {
  static const std::set<std::string> extensions = {".poset", ".frame", ".quantale", ".rqf", ".cat",
                                                   ".crm", ".morphism", ".functor"};
  if (!std::filesystem::is_directory(dir))
    throw FileError(dir.string() + ": not a directory");
  std::vector<Document> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && extensions.count(entry.path().extension().string()))
      out.push_back(load_document(entry.path()));
  std::sort(out.begin(), out.end(), [](const Document& a, const Document& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].name == out[i - 1].name) throw InvalidInput("duplicate instance name " + out[i].name);
  return out;
}

void write_corpus(const std::vector<Document>& docs, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& doc : docs) save_document(doc, dir / file_name(doc));
}

std::vector<CheckReport> corpus_checks(const Document& doc, const Limits& limits) {
  std::vector<CheckReport> out{expected_check(doc, limits)};
  if (!is_positive(doc) || out.front().failed()) return out;
  auto append = [&](std::vector<CheckReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  switch (doc.kind) {
    case Kind::topcategory: {
      append(omega_command(doc, limits).checks);
      auto roundtrip = roundtrip_checks(doc, limits);
      // Without a sober identity space ω cannot be bijective; the corpus
      // keeps such a category to confirm that it is not.
      const auto both = std::find_if(roundtrip.begin(), roundtrip.end(),
                                     [](const CheckReport& r) { return r.check == "sober-iff"; });
      if (both != roundtrip.end() && !both->failed() && both->detail == "neither sober")
        for (auto& r : roundtrip)
          if (r.check == "omega-iso" && r.law == "omega-bijective") {
            r.status = Status::pass;
            r.detail = "not sober, and ω is not injective: " + r.detail + " at " + format_witness(r.witness);
            r.law.clear();
            r.witness.clear();
          }
      append(std::move(roundtrip));
      break;
    }
    case Kind::rqf: {
      const auto q = *to_rqf(doc).value;
      CheckReport lemma{doc.name, "compatibility-lemma", Status::pass, {}, {}, {}, 0};
      if (auto v = compatibility_lemma_check(q); !v) {
        lemma.status = Status::fail;
        lemma.law = "compatibility-lemma";
        lemma.witness = v.witness;
        lemma.detail = v.detail;
      } else {
        lemma.detail = std::to_string(partial_isometries(q).count()) + " partial isometries";
      }
      out.push_back(lemma);
      append(roundtrip_checks(doc, limits));
      append(crm_checks(doc, limits));
      break;
    }
    case Kind::frame: {
      const auto f = *to_frame(doc).value;
      CheckReport filters{doc.name, "cp-filters", Status::pass, {}, {}, {}, 0};
      if (f.size() > Limits::kHomElements) {
        filters.status = Status::skipped;
        filters.detail = "more than 64 elements";
      } else {
        std::vector<Subset> fast;
        for (const auto& p : enumerate_cp_filters(f)) fast.push_back(p.members(f));
        std::sort(fast.begin(), fast.end());
        const auto slow = definitional_cp_filters(f);
        if (fast != slow) {
          filters.status = Status::fail;
          filters.law = "cp-filters";
          filters.witness = {fast.size(), slow.size()};
          filters.detail = "meet-prime enumeration disagrees with the definitional search";
        } else {
          filters.detail = std::to_string(fast.size()) + " completely prime filters";
        }
      }
      out.push_back(filters);
      break;
    }
    case Kind::crm:
      append(crm_checks(doc, limits));
      break;
    default:
      break;
  }
  return out;
}

std::vector<CheckReport> run_corpus(const std::vector<Document>& docs, const Limits& limits,
                                    unsigned jobs,
                                    const std::function<void(const CheckReport&)>& progress) {
  std::map<std::string, const Document*> by_name;
  for (const auto& d : docs) by_name.emplace(d.name, &d);

  std::vector<std::function<std::vector<CheckReport>()>> tasks;
  std::vector<std::string> names;
  for (const auto& d : docs) {
    names.push_back(d.name);
    tasks.emplace_back([&d, &limits] { return corpus_checks(d, limits); });
  }
  for (const auto& pair : corpus_pairs()) {
    names.push_back(pair.category + "+" + pair.target);
    tasks.emplace_back([pair, &by_name, &limits]() -> std::vector<CheckReport> {
      const std::string instance = pair.category + "+" + pair.target;
      auto c = by_name.find(pair.category);
      auto t = by_name.find(pair.target);
      if (c == by_name.end() || t == by_name.end())
        return {{instance, "adjunction", Status::skipped, {}, {}, "instance missing from the corpus", 0}};
      return adjoint_checks(*c->second, *t->second, limits);
    });
  }

  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {{names[i], "error", Status::fail, "exception", {i}, e.what(), 0}};
      }
      if (progress) {
        std::lock_guard lock(progress_mutex);
        for (const auto& r : results[i]) progress(r);
      }
    }
  };
  const unsigned threads = std::max(1u, jobs);
  std::vector<std::future<void>> pool;
  for (unsigned k = 1; k < threads; ++k) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();

  std::vector<CheckReport> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace etale::workbench
