#include "etale/workbench/document.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace etale::workbench {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 9> kKinds{{
    {Kind::poset, "poset"},
    {Kind::frame, "frame"},
    {Kind::quantale, "quantale"},
    {Kind::rqf, "rqf"},
    {Kind::category, "category"},
    {Kind::topcategory, "topcategory"},
    {Kind::crm, "crm"},
    {Kind::morphism, "morphism"},
    {Kind::functor, "functor"},
}};

// Largest carrier a document may declare.
constexpr std::size_t kMaxCarrier = std::size_t{1} << 16;

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::string at(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& require(const json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail_at(at(path, key), "missing field");
  return *it;
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail_at(path, "expected a non-negative integer");
  const auto n = v.get<std::size_t>();
  if (n > kMaxCarrier) fail_at(path, "carrier larger than " + std::to_string(kMaxCarrier));
  return n;
}

Elem as_index(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_number_integer()) fail_at(path, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    fail_at(path, "index " + std::to_string(i) + " out of range for " + std::to_string(n) + " elements");
  return static_cast<Elem>(i);
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail_at(path, "expected an array");
  return v;
}

const json& as_array(const json& v, std::size_t length, const std::string& path) {
  as_array(v, path);
  if (v.size() != length)
    fail_at(path, "expected " + std::to_string(length) + " entries, found " + std::to_string(v.size()));
  return v;
}

json index_list(const json& v, std::size_t n, const std::string& path) {
  as_array(v, path);
  std::set<Elem> seen;
  for (std::size_t i = 0; i < v.size(); ++i) seen.insert(as_index(v[i], n, at(path, i)));
  return json(std::vector<Elem>(seen.begin(), seen.end()));
}

json index_map(const json& v, std::size_t length, std::size_t range, const std::string& path) {
  as_array(v, length, path);
  std::vector<Elem> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = as_index(v[i], range, at(path, i));
  return json(out);
}

json index_table(const json& v, std::size_t n, const std::string& path) {
  as_array(v, n, path);
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) out.push_back(index_map(v[i], n, n, at(path, i)));
  return out;
}

json order_rows(const json& v, std::size_t n, const std::string& path) {
  as_array(v, n, path);
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) out.push_back(index_list(v[i], n, at(path, i)));
  return out;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      fail_at(at(path, it.key()), "unknown field");
}

Document document_from_json(const json& j, const std::string& path);

json canonical_body(Kind kind, const json& j, const std::string& path) {
  json body = json::object();
  auto copy_order = [&](std::string_view size_key) {
    const auto n = as_count(require(j, size_key, path), at(path, size_key));
    body[std::string(size_key)] = n;
    body["leq"] = order_rows(require(j, "leq", path), n, at(path, "leq"));
    return n;
  };
  switch (kind) {
    case Kind::poset:
      reject_unknown(j, {"kind", "name", "expected", "size", "leq"}, path);
      copy_order("size");
      break;
    case Kind::frame:
    case Kind::quantale:
    case Kind::rqf: {
      if (kind == Kind::frame)
        reject_unknown(j, {"kind", "name", "expected", "size", "leq", "meet", "join"}, path);
      else if (kind == Kind::quantale)
        reject_unknown(j, {"kind", "name", "expected", "size", "leq", "meet", "join", "mul", "unit"},
                       path);
      else
        reject_unknown(j, {"kind", "name", "expected", "size", "leq", "meet", "join", "mul", "unit",
                           "star", "plus"},
                       path);
      const auto n = copy_order("size");
      const bool has_meet = j.contains("meet"), has_join = j.contains("join");
      if (has_meet != has_join) fail_at(at(path, has_meet ? "join" : "meet"), "missing field");
      if (has_meet) {
        body["meet"] = index_table(j["meet"], n, at(path, "meet"));
        body["join"] = index_table(j["join"], n, at(path, "join"));
      }
      if (kind == Kind::frame) break;
      body["mul"] = index_table(require(j, "mul", path), n, at(path, "mul"));
      body["unit"] = as_index(require(j, "unit", path), n, at(path, "unit"));
      if (kind == Kind::quantale) break;
      body["star"] = index_map(require(j, "star", path), n, n, at(path, "star"));
      body["plus"] = index_map(require(j, "plus", path), n, n, at(path, "plus"));
      break;
    }
    case Kind::category:
    case Kind::topcategory: {
      if (kind == Kind::category)
        reject_unknown(j, {"kind", "name", "expected", "arrows", "identities", "d", "r", "comp", "labels"},
                       path);
      else
        reject_unknown(j, {"kind", "name", "expected", "arrows", "identities", "d", "r", "comp", "labels",
                           "topology"},
                       path);
      const auto n = as_count(require(j, "arrows", path), at(path, "arrows"));
      body["arrows"] = n;
      body["identities"] = index_list(require(j, "identities", path), n, at(path, "identities"));
      body["d"] = index_map(require(j, "d", path), n, n, at(path, "d"));
      body["r"] = index_map(require(j, "r", path), n, n, at(path, "r"));
      const std::string comp_path = at(path, "comp");
      const json& comp = as_array(require(j, "comp", path), comp_path);
      std::map<std::pair<Elem, Elem>, Elem> entries;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const std::string entry_path = at(comp_path, i);
        as_array(comp[i], 3, entry_path);
        const Elem a = as_index(comp[i][0], n, at(entry_path, 0));
        const Elem b = as_index(comp[i][1], n, at(entry_path, 1));
        const Elem ab = as_index(comp[i][2], n, at(entry_path, 2));
        auto [it, fresh] = entries.emplace(std::pair{a, b}, ab);
        if (!fresh && it->second != ab) fail_at(entry_path, "conflicting composite for this pair");
      }
      json out = json::array();
      for (const auto& [ab, c] : entries) out.push_back({ab.first, ab.second, c});
      body["comp"] = out;
      if (j.contains("labels")) {
        const json& labels = as_array(j["labels"], n, at(path, "labels"));
        for (std::size_t i = 0; i < n; ++i)
          if (!labels[i].is_string()) fail_at(at(at(path, "labels"), i), "expected a string");
        body["labels"] = labels;
      }
      if (kind == Kind::topcategory) {
        const json& t = require(j, "topology", path);
        const std::string t_path = at(path, "topology");
        if (t.is_string()) {
          if (t.get<std::string>() != "discrete") fail_at(t_path, "expected \"discrete\" or a list of opens");
          body["topology"] = "discrete";
        } else {
          as_array(t, t_path);
          std::set<std::vector<Elem>> opens;
          for (std::size_t i = 0; i < t.size(); ++i)
            opens.insert(index_list(t[i], n, at(t_path, i)).get<std::vector<Elem>>());
          body["topology"] = std::vector<std::vector<Elem>>(opens.begin(), opens.end());
        }
      }
      break;
    }
    case Kind::crm: {
      reject_unknown(j, {"kind", "name", "expected", "size", "leq", "mul", "unit", "zero", "star", "plus",
                         "meet"},
                     path);
      const auto n = copy_order("size");
      body["mul"] = index_table(require(j, "mul", path), n, at(path, "mul"));
      body["unit"] = as_index(require(j, "unit", path), n, at(path, "unit"));
      body["zero"] = as_index(require(j, "zero", path), n, at(path, "zero"));
      body["star"] = index_map(require(j, "star", path), n, n, at(path, "star"));
      body["plus"] = index_map(require(j, "plus", path), n, n, at(path, "plus"));
      if (j.contains("meet")) body["meet"] = index_table(j["meet"], n, at(path, "meet"));
      break;
    }
    case Kind::morphism:
    case Kind::functor: {
      reject_unknown(j, {"kind", "name", "expected", "source", "target", "map"}, path);
      const Document source = document_from_json(require(j, "source", path), at(path, "source"));
      const Document target = document_from_json(require(j, "target", path), at(path, "target"));
      const bool structural = kind == Kind::morphism;
      for (const auto& [doc, key] : {std::pair{&source, "source"}, std::pair{&target, "target"}}) {
        const bool ok = structural ? (doc->kind == Kind::rqf || doc->kind == Kind::crm)
                                   : (doc->kind == Kind::category || doc->kind == Kind::topcategory);
        if (!ok)
          fail_at(at(at(path, key), "kind"),
                  structural ? "a morphism joins rqf or crm documents"
                             : "a functor joins category or topcategory documents");
      }
      if (structural && source.kind != target.kind)
        fail_at(at(at(path, "target"), "kind"), "source and target kinds differ");
      body["source"] = json::parse(serialize(source));
      body["target"] = json::parse(serialize(target));
      body["map"] = index_map(require(j, "map", path), source.size(), target.size(), at(path, "map"));
      break;
    }
  }
  return body;
}

Document document_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail_at(path, "expected an object");
  Document doc;
  const json& kind = require(j, "kind", path);
  if (!kind.is_string()) fail_at(at(path, "kind"), "expected a string");
  auto k = kind_from_name(kind.get<std::string>());
  if (!k) fail_at(at(path, "kind"), "unknown kind \"" + kind.get<std::string>() + "\"");
  doc.kind = *k;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_at(at(path, "name"), "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("expected")) {
    const json& e = j["expected"];
    const std::string e_path = at(path, "expected");
    if (!e.is_object()) fail_at(e_path, "expected an object");
    reject_unknown(e, {"valid", "law"}, e_path);
    const json& valid = require(e, "valid", e_path);
    if (!valid.is_boolean()) fail_at(at(e_path, "valid"), "expected a boolean");
    Expected ex{valid.get<bool>(), {}};
    if (e.contains("law")) {
      if (!e["law"].is_string()) fail_at(at(e_path, "law"), "expected a string");
      ex.law = e["law"].get<std::string>();
    }
    doc.expected = ex;
  }
  doc.body = canonical_body(doc.kind, j, path);
  return doc;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json rows_of(const FinitePoset& p) {
  json rows = json::array();
  for (Elem i = 0; i < p.size(); ++i) rows.push_back(members(p.up(i)));
  return rows;
}

json table_of(const Table& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Elem> row(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) row[j] = t(i, j);
    rows.push_back(row);
  }
  return rows;
}

Table table_from(const json& rows) {
  Table t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) t(i, j) = rows[i][j].get<Elem>();
  return t;
}

Document make(Kind kind, std::string name, json body) {
  Document doc;
  doc.kind = kind;
  doc.name = std::move(name);
  doc.body = std::move(body);
  return doc;
}

}  // namespace

std::string_view kind_name(Kind kind) {
  for (const auto& [k, name] : kKinds)
    if (k == kind) return name;
  return "unknown";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKinds)
    if (n == name) return k;
  return std::nullopt;
}

std::size_t Document::size() const {
  switch (kind) {
    case Kind::category:
    case Kind::topcategory:
      return body["arrows"].get<std::size_t>();
    case Kind::morphism:
    case Kind::functor:
      return body["map"].size();
    default:
      return body["size"].get<std::size_t>();
  }
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
  return document_from_json(j, "");
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize(const Document& doc) {
  json j = doc.body;
  j["kind"] = std::string(kind_name(doc.kind));
  j["name"] = doc.name;
  if (doc.expected) {
    json e = {{"valid", doc.expected->valid}};
    if (!doc.expected->law.empty()) e["law"] = doc.expected->law;
    j["expected"] = e;
  }
  return j.dump() + "\n";
}

void save_document(const Document& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path.string());
  out << serialize(doc);
}

Document poset_document(std::string name, const FinitePoset& p) {
  return make(Kind::poset, std::move(name), {{"size", p.size()}, {"leq", rows_of(p)}});
}

Document frame_document(std::string name, const FiniteLattice& l, bool tables) {
  json body = {{"size", l.size()}, {"leq", rows_of(l.order())}};
  if (tables) {
    body["meet"] = table_of(l.meet_table());
    body["join"] = table_of(l.join_table());
  }
  return make(Kind::frame, std::move(name), std::move(body));
}

Document quantale_document(std::string name, const FiniteQuantale& q) {
  Document doc = frame_document(std::move(name), q.frame());
  doc.kind = Kind::quantale;
  doc.body["mul"] = table_of(q.mul_table());
  doc.body["unit"] = q.unit();
  return doc;
}

Document rqf_document(std::string name, const EhresmannQuantalFrame& q) {
  Document doc = quantale_document(std::move(name), q);
  doc.kind = Kind::rqf;
  doc.body["star"] = q.star_map();
  doc.body["plus"] = q.plus_map();
  return doc;
}

Document category_document(std::string name, const FiniteCategory& c,
                           std::vector<std::string> labels) {
  json comp = json::array();
  for (Elem a = 0; a < c.size(); ++a)
    for (Elem b = 0; b < c.size(); ++b)
      if (c.composable(a, b)) comp.push_back({a, b, c.compose(a, b)});
  json body = {{"arrows", c.size()},
               {"identities", members(c.identities())},
               {"d", c.d_map()},
               {"r", c.r_map()},
               {"comp", comp}};
  if (!labels.empty()) body["labels"] = labels;
  return make(Kind::category, std::move(name), std::move(body));
}

Document topcategory_document(std::string name, const FiniteTopCategory& tc) {
  Document doc = category_document(std::move(name), tc.cat());
  doc.kind = Kind::topcategory;
  if (tc.topology().is_discrete()) {
    doc.body["topology"] = "discrete";
  } else {
    std::vector<std::vector<Elem>> opens;
    for (const auto& u : tc.topology().opens()) opens.push_back(members(u));
    std::sort(opens.begin(), opens.end());
    doc.body["topology"] = opens;
  }
  return doc;
}

Document crm_document(std::string name, const CompleteRestrictionMonoid& s) {
  return make(Kind::crm, std::move(name),
              {{"size", s.size()},
               {"leq", rows_of(s.order())},
               {"mul", table_of(s.mul_table())},
               {"unit", s.unit()},
               {"zero", s.zero()},
               {"star", s.star_map()},
               {"plus", s.plus_map()},
               {"meet", table_of(s.meet_table())}});
}

Document morphism_document(std::string name, Document source, Document target,
                           const ElementMap& map) {
  source.expected.reset();
  target.expected.reset();
  return make(Kind::morphism, std::move(name),
              {{"source", json::parse(serialize(source))},
               {"target", json::parse(serialize(target))},
               {"map", map}});
}

Document functor_document(std::string name, Document source, Document target,
                          const ArrowMap& map) {
  Document doc = morphism_document(std::move(name), std::move(source), std::move(target), map);
  doc.kind = Kind::functor;
  return doc;
}

FinitePoset to_poset(const Document& doc) {
  const json& rows = doc.body["leq"];
  const auto n = rows.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& j : rows[i]) up[i].set(j.get<std::size_t>());
  return FinitePoset(std::move(up));
}

Loaded<FiniteFrame> to_frame(const Document& doc) {
  Loaded<FiniteFrame> out;
  FinitePoset order = to_poset(doc);
  out.report = validate_poset(order);
  if (!out.report.ok()) return out;
  if (doc.body.contains("meet")) {
    auto bottom = order.lub(Subset(order.size()));
    auto top = order.glb(Subset(order.size()));
    if (!bottom || !top) {
      out.report.fail("bounds", {order.size()}, bottom ? "no top element" : "no bottom element");
      return out;
    }
    FiniteLattice l(std::move(order), table_from(doc.body["meet"]), table_from(doc.body["join"]),
                    *bottom, *top);
    out.report = validate_lattice(l);
    if (out.report.ok()) out.value = FiniteFrame(std::move(l));
    return out;
  }
  if (auto l = FiniteLattice::from_order(std::move(order), &out.report)) out.value = FiniteFrame(std::move(*l));
  return out;
}

Loaded<FiniteQuantale> to_quantale(const Document& doc) {
  Loaded<FiniteQuantale> out;
  auto frame = to_frame(doc);
  out.report = frame.report;
  if (frame.value)
    out.value = FiniteQuantale(std::move(*frame.value), table_from(doc.body["mul"]),
                               doc.body["unit"].get<Elem>());
  return out;
}

Loaded<EhresmannQuantalFrame> to_rqf(const Document& doc) {
  Loaded<EhresmannQuantalFrame> out;
  auto q = to_quantale(doc);
  out.report = q.report;
  if (q.value)
    out.value = EhresmannQuantalFrame(std::move(*q.value), doc.body["star"].get<std::vector<Elem>>(),
                                      doc.body["plus"].get<std::vector<Elem>>());
  return out;
}

FiniteCategory to_category(const Document& doc) {
  const auto n = doc.body["arrows"].get<std::size_t>();
  Subset ids(n);
  for (const auto& i : doc.body["identities"]) ids.set(i.get<std::size_t>());
  Table comp(n, kNone);
  for (const auto& e : doc.body["comp"]) comp(e[0].get<Elem>(), e[1].get<Elem>()) = e[2].get<Elem>();
  return FiniteCategory(ids, doc.body["d"].get<std::vector<Elem>>(),
                        doc.body["r"].get<std::vector<Elem>>(), std::move(comp));
}

FiniteTopCategory to_topcategory(const Document& doc) {
  FiniteCategory c = to_category(doc);
  if (doc.kind == Kind::category || doc.body["topology"].is_string())
    return FiniteTopCategory::discrete(std::move(c));
  const auto n = c.size();
  std::vector<Subset> opens;
  for (const auto& u : doc.body["topology"]) {
    Subset s(n);
    for (const auto& x : u) s.set(x.get<std::size_t>());
    opens.push_back(std::move(s));
  }
  return FiniteTopCategory(std::move(c), FiniteTopology::from_opens(n, std::move(opens)));
}

CompleteRestrictionMonoid to_crm(const Document& doc) {
  FinitePoset order = to_poset(doc);
  const auto n = order.size();
  Table meet(n);
  if (doc.body.contains("meet")) {
    meet = table_from(doc.body["meet"]);
  } else {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        auto m = order.glb(make_subset(n, {a, b}));
        if (!m)
          throw InvalidInput("elements " + std::to_string(a) + " and " + std::to_string(b) +
                             " have no meet");
        meet(a, b) = *m;
      }
  }
  return CompleteRestrictionMonoid(std::move(order), table_from(doc.body["mul"]),
                                   doc.body["unit"].get<Elem>(), doc.body["zero"].get<Elem>(),
                                   doc.body["star"].get<std::vector<Elem>>(),
                                   doc.body["plus"].get<std::vector<Elem>>(), std::move(meet));
}

Document morphism_source(const Document& doc) { return document_from_json(doc.body["source"], "/source"); }

Document morphism_target(const Document& doc) { return document_from_json(doc.body["target"], "/target"); }

std::vector<Elem> morphism_map(const Document& doc) { return doc.body["map"].get<std::vector<Elem>>(); }

}  // namespace etale::workbench
