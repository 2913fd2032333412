#include "etale/workbench/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "etale/crm.hpp"
#include "etale/functors.hpp"
#include "etale/quantale.hpp"

namespace etale::workbench {

namespace {

class Timer {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckReport pass_report(const std::string& instance, std::string check, std::string detail,
                        double ms) {
  return {instance, std::move(check), Status::pass, {}, {}, std::move(detail), ms};
}

void add(std::vector<CheckReport>& out, const std::string& instance, const std::string& check,
         const Report& report, std::string pass_detail, double ms) {
  if (report.ok()) {
    out.push_back(pass_report(instance, check, std::move(pass_detail), ms));
    return;
  }
  for (const auto& v : report.violations())
    out.push_back({instance, check, Status::fail, v.law, v.witness, v.detail, ms});
}

Report as_report(const Verdict& v, const std::string& law) {
  Report r;
  if (!v) r.fail(law, v.witness, v.detail);
  return r;
}

Report prefixed(const Report& inner, const std::string& prefix) {
  Report out;
  for (const auto& v : inner.violations()) out.fail(prefix + v.law, v.witness, v.detail);
  return out;
}

bool is_category_kind(const Document& doc) {
  return doc.kind == Kind::category || doc.kind == Kind::topcategory;
}

std::string kinds_message(std::string_view command, std::string_view wanted, const Document& doc) {
  return std::string(command) + " expects " + std::string(wanted) + ", got a " +
         std::string(kind_name(doc.kind)) + " document";
}

FiniteTopCategory category_input(const Document& doc, std::string_view command,
                                 const Limits& limits, std::size_t bound) {
  if (!is_category_kind(doc)) throw InvalidInput(kinds_message(command, "a category", doc));
  if (doc.size() > bound)
    throw BoundExceeded(doc.name + " has " + std::to_string(doc.size()) + " arrows, bound is " +
                        std::to_string(bound));
  require_valid(doc, command, limits.seed);
  return to_topcategory(doc);
}

RestrictionQuantalFrame quantal_input(const Document& doc, std::string_view command,
                                      const Limits& limits, std::size_t bound) {
  if (doc.kind != Kind::rqf && doc.kind != Kind::frame)
    throw InvalidInput(kinds_message(command, "an rqf or frame", doc));
  if (doc.size() > bound)
    throw BoundExceeded(doc.name + " has " + std::to_string(doc.size()) + " elements, bound is " +
                        std::to_string(bound));
  require_valid(doc, command, limits.seed);
  if (doc.kind == Kind::frame) return frame_as_quantale(*to_frame(doc).value);
  return RestrictionQuantalFrame(*to_rqf(doc).value);
}

CompleteRestrictionMonoid crm_input(const Document& doc, std::string_view command,
                                    const Limits& limits, std::size_t bound) {
  if (doc.size() > bound)
    throw BoundExceeded(doc.name + " has " + std::to_string(doc.size()) + " elements, bound is " +
                        std::to_string(bound));
  require_valid(doc, command, limits.seed);
  return to_crm(doc);
}

Report validate_crm_document(const Document& doc, std::uint64_t seed) {
  const FinitePoset order = to_poset(doc);
  Report report = validate_poset(order);
  if (!report.ok()) return report;
  const auto n = order.size();
  if (n == 0) {
    report.fail("arity", {0}, "empty carrier");
    return report;
  }
  if (!doc.body.contains("meet"))
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (!order.glb(make_subset(n, {a, b}))) {
          report.fail("meet-exists", {a, b});
          return report;
        }
  return validate_crm(to_crm(doc), seed);
}

Report validate_map_document(const Document& doc, std::uint64_t seed) {
  const Document source = morphism_source(doc);
  const Document target = morphism_target(doc);
  Report report = prefixed(validate_document(source, seed), "source/");
  report.absorb(prefixed(validate_document(target, seed), "target/"));
  if (!report.ok()) return report;
  const auto map = morphism_map(doc);
  if (doc.kind == Kind::functor) {
    const auto src = to_topcategory(source);
    const auto dst = to_topcategory(target);
    report = validate_covering_functor(map, src.cat(), dst.cat());
    if (report.ok()) report.absorb(as_report(continuity_check(map, src, dst), "continuous"));
    return report;
  }
  if (source.kind == Kind::rqf) return validate_rqf_morphism(map, *to_rqf(source).value, *to_rqf(target).value);
  return validate_crm_morphism(map, to_crm(source), to_crm(target));
}

std::string count_detail(std::size_t n, std::string_view what) {
  return std::to_string(n) + " " + std::string(what);
}

void chi_checks(std::vector<CheckReport>& out, const std::string& name,
                const EhresmannQuantalFrame& q, Timer& timer) {
  const ComparisonChi chi = build_chi(q);
  add(out, name, "chi-morphism", chi.laws,
      count_detail(chi.cq.filters.size(), "completely prime filters"), timer.lap());
  if (chi.laws.ok()) {
    Report iso = as_report(is_spatial(q, chi.cq), "chi-bijective");
    if (iso.ok()) iso.absorb(as_report(is_rqf_isomorphism(chi.map, q, chi.omega.rqf), "chi-inverse"));
    add(out, name, "chi-iso", iso, count_detail(q.size(), "elements matched"), timer.lap());
  }
  const Verdict both = spatial_iff_projections_spatial(q);
  add(out, name, "spatial-iff", as_report(both, "spatial-iff"), both.detail, timer.lap());
}

void omega_checks(std::vector<CheckReport>& out, const std::string& name,
                  const FiniteTopCategory& c, Timer& timer) {
  const ComparisonOmega w = build_omega_map(c);
  add(out, name, "omega-functor", w.laws, count_detail(w.c_omega.filters.size(), "filters"),
      timer.lap());
  if (w.laws.ok()) {
    Report iso = as_report(is_sober(c, w), "omega-bijective");
    if (iso.ok()) {
      iso.absorb(as_report(is_category_isomorphism(w.map, c.cat(), w.c_omega.topcat.cat()),
                           "category-isomorphism"));
      const auto& t = c.topology();
      const auto& t2 = w.c_omega.topcat.topology();
      iso.absorb(as_report(is_continuous(w.map, t, t2), "continuous"));
      iso.absorb(as_report(is_open_map(w.map, t, t2), "open-map"));
    }
    add(out, name, "omega-iso", iso, count_detail(c.size(), "arrows matched"), timer.lap());
  }
  const Verdict both = sober_iff_identity_space_sober(c);
  add(out, name, "sober-iff", as_report(both, "sober-iff"), both.detail, timer.lap());
}

void s_side_checks(std::vector<CheckReport>& out, const std::string& name,
                   const CompleteRestrictionMonoid& s, const Limits& limits, Timer& timer) {
  const LVee l = l_vee(s, limits.filter_elements());
  add(out, name, "lvee-rqf", validate_rqf(l.rqf), count_detail(l.ideals.size(), "ideals"),
      timer.lap());

  const PiMonoid pim = pi_restriction_monoid(l.rqf);
  Report iso;
  ElementMap theta(s.size(), kNone);
  for (Elem a = 0; a < s.size(); ++a) {
    theta[a] = pim.index[l.principal[a]];
    if (theta[a] == kNone) iso.fail("principal-pi", {a}, "↓a is not a partial isometry");
  }
  if (iso.ok() && pim.crm.size() != s.size())
    iso.fail("pi-principal", {pim.crm.size(), s.size()}, "a partial isometry is not principal");
  if (iso.ok()) iso.absorb(as_report(is_crm_isomorphism(theta, s, pim.crm), "crm-isomorphism"));
  add(out, name, "pi-lvee-iso", iso, count_detail(s.size(), "elements matched"), timer.lap());

  const SFilterResult sf = s_filters(s);
  add(out, name, "s-filters", sf.laws, count_detail(sf.filters.size(), "completely prime S-filters"),
      timer.lap());
  const FilterCategoryResult cl = c_object(l.rqf);
  add(out, name, "s-filter-correspondence", s_filter_correspondence(s, sf, l, cl).laws,
      count_detail(cl.filters.size(), "filters of L^∨(S)"), timer.lap());
}

void q_side_checks(std::vector<CheckReport>& out, const std::string& name,
                   const EhresmannQuantalFrame& q, const Limits& limits, Timer& timer) {
  const PiMonoid pim = pi_restriction_monoid(q);
  add(out, name, "pi-crm", validate_crm(pim.crm, limits.seed),
      count_detail(pim.crm.size(), "partial isometries"), timer.lap());
  const LVee l = l_vee(pim.crm, limits.filter_elements());
  Report iso;
  ElementMap map(q.size(), kNone);
  for (Elem a = 0; a < q.size(); ++a) {
    Subset ideal(pim.crm.size());
    for (Elem i = 0; i < pim.crm.size(); ++i)
      if (q.leq(pim.embed[i], a)) ideal.set(i);
    if (auto k = l.find(ideal)) map[a] = *k;
    else iso.fail("pi-ideal", {a}, "partial isometries below a are not a join-closed ideal");
  }
  if (iso.ok()) iso.absorb(as_report(is_rqf_isomorphism(map, q, l.rqf), "rqf-isomorphism"));
  add(out, name, "lvee-pi-iso", iso, count_detail(l.ideals.size(), "ideals"), timer.lap());
  s_side_checks(out, name, pim.crm, limits, timer);
}

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::skipped:
      return "SKIP";
  }
  return "?";
}

bool CheckReport::operator<(const CheckReport& other) const {
  return std::tie(instance, check, law, witness) <
         std::tie(other.instance, other.check, other.law, other.witness);
}

std::string format_text(const CheckReport& r) {
  std::ostringstream os;
  os << status_name(r.status) << ' ' << r.instance << ' ' << r.check;
  if (!r.law.empty()) os << ' ' << r.law;
  if (!r.witness.empty()) os << " witness=" << format_witness(r.witness);
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

json to_json(const CheckReport& r) {
  json j = {{"instance", r.instance}, {"check", r.check}, {"status", status_name(r.status)}};
  if (!r.law.empty()) j["law"] = r.law;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::size_t Limits::omega_arrows() const { return std::min(max_arrows, kOmegaArrows); }
std::size_t Limits::filter_elements() const { return std::min(max_elements, kFilterElements); }
HomBounds Limits::hom() const {
  return {std::min(max_arrows, kHomArrows), std::min(max_elements, kHomElements)};
}

Report validate_document(const Document& doc, std::uint64_t seed) {
  switch (doc.kind) {
    case Kind::poset:
      return validate_poset(to_poset(doc));
    case Kind::frame: {
      auto f = to_frame(doc);
      if (f.value) f.report.absorb(as_report(is_frame(*f.value), "distributivity"));
      return f.report;
    }
    case Kind::quantale: {
      auto q = to_quantale(doc);
      if (!q.value) return q.report;
      if (auto v = is_frame(q.value->frame()); !v) return as_report(v, "distributivity");
      return validate_quantale(*q.value);
    }
    case Kind::rqf: {
      auto q = to_rqf(doc);
      if (!q.value) return q.report;
      return validate_rqf(*q.value);
    }
    case Kind::category:
      return validate_category(to_category(doc));
    case Kind::topcategory: {
      const FiniteTopCategory tc = to_topcategory(doc);
      Report report = validate_topcategory(tc);
      if (report.ok()) report.absorb(as_report(is_etale(tc), "etale"));
      return report;
    }
    case Kind::crm:
      return validate_crm_document(doc, seed);
    case Kind::morphism:
    case Kind::functor:
      return validate_map_document(doc, seed);
  }
  return {};
}

void require_valid(const Document& doc, std::string_view command, std::uint64_t seed) {
  const Report r = validate_document(doc, seed);
  if (!r.ok())
    throw InvalidInput(std::string(command) + ": " + doc.name + " is not a valid " +
                       std::string(kind_name(doc.kind)) + " (" + r.summary() + ")");
}

std::vector<CheckReport> validate_checks(const Document& doc, const Limits& limits) {
  std::vector<CheckReport> out;
  Timer timer;
  const Report r = validate_document(doc, limits.seed);
  add(out, doc.name, "validate", r,
      std::string(kind_name(doc.kind)) + ", " + std::to_string(doc.size()) +
          (is_category_kind(doc) ? " arrows" : doc.kind == Kind::morphism || doc.kind == Kind::functor
                                                   ? " entries"
                                                   : " elements"),
      timer.lap());
  return out;
}

CheckReport expected_check(const Document& doc, const Limits& limits) {
  Timer timer;
  const Expected expected = doc.expected.value_or(Expected{});
  const Report r = validate_document(doc, limits.seed);
  CheckReport out{doc.name, "expected", Status::pass, {}, {}, {}, 0};
  if (expected.valid) {
    if (!r.ok()) {
      const auto& v = r.violations().front();
      out.status = Status::fail;
      out.law = v.law;
      out.witness = v.witness;
      out.detail = "expected to validate: " + r.summary();
    } else {
      out.detail = "valid";
    }
  } else if (r.ok()) {
    out.status = Status::fail;
    out.law = expected.law.empty() ? "expected-rejection" : expected.law;
    out.witness = {doc.size()};
    out.detail = "validated, but was expected to be rejected";
  } else {
    const Violation* v = expected.law.empty() ? &r.violations().front() : r.find(expected.law);
    if (!v) {
      out.status = Status::fail;
      out.law = expected.law;
      out.witness = r.violations().front().witness;
      out.detail = "rejected for other laws: " + r.summary();
    } else if (v->witness.empty()) {
      out.status = Status::fail;
      out.law = v->law;
      out.witness = {doc.size()};
      out.detail = "rejected without a witness";
    } else {
      out.detail = "rejected: " + v->law + " at " + format_witness(v->witness);
    }
  }
  out.millis = timer.lap();
  return out;
}

Emitted omega_command(const Document& doc, const Limits& limits) {
  Timer timer;
  const FiniteTopCategory tc = category_input(doc, "omega", limits, limits.omega_arrows());
  const OmegaResult omega = omega_object(tc);
  Emitted out;
  const std::string out_name = "omega-" + doc.name;
  out.document = rqf_document(out_name, omega.rqf);
  const Subset pi = partial_isometries(omega.rqf);
  add(out.checks, doc.name, "omega-rqf", validate_rqf(omega.rqf),
      count_detail(omega.rqf.size(), "elements"), timer.lap());
  Report bisections;
  for (Elem u = 0; u < omega.opens.size(); ++u)
    if (pi.test(u) != is_local_bisection(tc.cat(), omega.opens[u]))
      bisections.fail("pi-open-bisections", {u},
                      pi.test(u) ? "partial isometry that is not a local bisection"
                                 : "open local bisection that is not a partial isometry");
  add(out.checks, doc.name, "omega-pi", bisections, count_detail(pi.count(), "partial isometries"),
      timer.lap());
  return out;
}

Emitted cpoints_command(const Document& doc, const Limits& limits) {
  Timer timer;
  const RestrictionQuantalFrame q = quantal_input(doc, "cpoints", limits, limits.filter_elements());
  const FilterCategoryResult cq = c_object(q);
  Emitted out;
  std::vector<std::string> labels;
  for (const auto& f : cq.filters) labels.push_back("co" + std::to_string(f.cogenerator()));
  out.document = topcategory_document("c-" + doc.name, cq.topcat);
  out.document.body["labels"] = labels;
  add(out.checks, doc.name, "filters", cq.laws, count_detail(cq.filters.size(), "filters"),
      timer.lap());
  add(out.checks, doc.name, "x-laws", check_x_laws(q, cq), count_detail(cq.base.size(), "basic opens"),
      timer.lap());
  add(out.checks, doc.name, "filter-calculus", check_filter_calculus(q, cq), {}, timer.lap());
  const Verdict pt = identity_space_vs_pt(q, cq);
  add(out.checks, doc.name, "identity-space", as_report(pt, "identity-space"), pt.detail, timer.lap());
  Report etale = validate_topcategory(cq.topcat);
  if (etale.ok()) etale.absorb(as_report(is_etale(cq.topcat), "etale"));
  add(out.checks, doc.name, "c-etale", etale, {}, timer.lap());
  return out;
}

std::vector<CheckReport> roundtrip_checks(const Document& doc, const Limits& limits) {
  std::vector<CheckReport> out;
  Timer timer;
  if (is_category_kind(doc)) {
    const FiniteTopCategory tc = category_input(doc, "roundtrip", limits, limits.omega_arrows());
    omega_checks(out, doc.name, tc, timer);
    const OmegaResult omega = omega_object(tc);
    if (omega.rqf.size() > limits.filter_elements()) {
      out.push_back({doc.name, "chi-morphism", Status::skipped, {}, {},
                     "Ω(C) exceeds the element bound", timer.lap()});
      return out;
    }
    chi_checks(out, doc.name, omega.rqf, timer);
    return out;
  }
  const RestrictionQuantalFrame q = quantal_input(doc, "roundtrip", limits, limits.filter_elements());
  chi_checks(out, doc.name, q, timer);
  const FilterCategoryResult cq = c_object(q);
  if (cq.topcat.size() <= limits.omega_arrows()) omega_checks(out, doc.name, cq.topcat, timer);
  return out;
}

std::vector<CheckReport> crm_checks(const Document& doc, const Limits& limits) {
  std::vector<CheckReport> out;
  Timer timer;
  if (doc.kind == Kind::crm) {
    const CompleteRestrictionMonoid s = crm_input(doc, "crm", limits, limits.filter_elements());
    s_side_checks(out, doc.name, s, limits, timer);
  } else if (is_category_kind(doc)) {
    const FiniteTopCategory tc = category_input(doc, "crm", limits, limits.omega_arrows());
    const OmegaResult omega = omega_object(tc);
    if (omega.rqf.size() > limits.filter_elements())
      throw BoundExceeded("Ω(" + doc.name + ") has " + std::to_string(omega.rqf.size()) +
                          " elements, bound is " + std::to_string(limits.filter_elements()));
    q_side_checks(out, doc.name, omega.rqf, limits, timer);
  } else {
    const RestrictionQuantalFrame q = quantal_input(doc, "crm", limits, limits.filter_elements());
    q_side_checks(out, doc.name, q, limits, timer);
  }
  return out;
}

std::vector<CheckReport> adjoint_checks(const Document& category, const Document& target,
                                        const Limits& limits) {
  std::vector<CheckReport> out;
  Timer timer;
  const HomBounds bounds = limits.hom();
  const FiniteTopCategory tc = category_input(category, "adjoint", limits, bounds.max_arrows);
  const std::string instance = category.name + "+" + target.name;
  if (target.kind == Kind::crm) {
    const CompleteRestrictionMonoid s = crm_input(target, "adjoint", limits, bounds.max_elements);
    const AdjunctionIIReport r = verify_adjunction_II(tc, s, bounds);
    add(out, instance, "adjunction-II", r.laws,
        "functors=" + std::to_string(r.functors) + " morphisms=" + std::to_string(r.morphisms) +
            " translated=" + std::to_string(r.translated_functors) + "/" +
            std::to_string(r.translated_morphisms),
        timer.lap());
    return out;
  }
  const RestrictionQuantalFrame q = quantal_input(target, "adjoint", limits, bounds.max_elements);
  const AdjunctionReport r = verify_adjunction_I(tc, q, bounds);
  add(out, instance, "adjunction-I", r.laws,
      "functors=" + std::to_string(r.functors) + " morphisms=" + std::to_string(r.morphisms) +
          " squares=" + std::to_string(r.naturality_squares),
      timer.lap());
  return out;
}

}  // namespace etale::workbench
