// Runs the acceptance criteria against a corpus directory (or the built-in
// corpus when no directory is given) and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "etale/crm.hpp"
#include "etale/duality.hpp"
#include "etale/workbench/corpus.hpp"
#include "oracles.hpp"

using namespace etale;
using namespace etale::workbench;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Corpus {
  std::vector<Document> docs;
  std::map<std::string, const Document*> by_name;

  const Document& at(const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw std::runtime_error("corpus has no " + name);
    return *it->second;
  }

  std::vector<const Document*> positive(std::initializer_list<Kind> kinds) const {
    std::vector<const Document*> out;
    for (const auto& d : docs)
      if (is_positive(d) && std::find(kinds.begin(), kinds.end(), d.kind) != kinds.end()) out.push_back(&d);
    return out;
  }
};

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Étale categories of the corpus, in name order.
std::vector<std::pair<std::string, FiniteTopCategory>> etale_categories(const Corpus& c) {
  std::vector<std::pair<std::string, FiniteTopCategory>> out;
  for (const auto* d : c.positive({Kind::category, Kind::topcategory})) {
    auto tc = to_topcategory(*d);
    if (validate_topcategory(tc).ok() && is_etale(tc)) out.emplace_back(d->name, std::move(tc));
  }
  return out;
}

std::vector<std::pair<std::string, EhresmannQuantalFrame>> corpus_rqfs(const Corpus& c) {
  std::vector<std::pair<std::string, EhresmannQuantalFrame>> out;
  for (const auto* d : c.positive({Kind::rqf})) {
    auto q = to_rqf(*d);
    if (q.value) out.emplace_back(d->name, *q.value);
  }
  return out;
}

Outcome axiom_suite(const Corpus& c) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for (const auto& [name, tc] : etale_categories(c)) {
    const auto omega = omega_object(tc);
    const auto r = validate_rqf(omega.rqf);
    o.require(r.ok(), name + ": " + r.summary());
    ++n;
  }
  const double s = seconds_since(t0);
  o.require(s <= 60, "took " + std::to_string(s) + " s");
  o.detail = std::to_string(n) + " étale categories";
  return o;
}

Outcome filter_oracle(const Corpus& c) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t n = 0, filters = 0;
  for (const auto* d : c.positive({Kind::frame, Kind::quantale, Kind::rqf})) {
    const auto f = to_frame(*d);
    if (!f.value || f.value->size() > 64) continue;
    std::vector<Subset> lib;
    for (const auto& p : enumerate_cp_filters(*f.value)) lib.push_back(p.members(*f.value));
    const auto expected = oracle::cp_filters(*f.value);
    o.require(sorted(lib) == expected, d->name);
    filters += expected.size();
    ++n;
  }
  const double s = seconds_since(t0);
  o.require(s <= 10, "took " + std::to_string(s) + " s");
  o.detail = std::to_string(n) + " frames, " + std::to_string(filters) + " filters";
  return o;
}

Outcome pi_characterization(const Corpus& c) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [name, tc] : etale_categories(c)) {
    const auto omega = omega_object(tc);
    Subset bisections(omega.rqf.size());
    for (Elem i = 0; i < omega.opens.size(); ++i)
      if (oracle::is_local_bisection(tc.cat(), omega.opens[i])) bisections.set(i);
    o.require(partial_isometries(omega.rqf) == bisections, name + ": library PI");
    o.require(oracle::partial_isometries(omega.rqf) == bisections, name + ": definitional PI");
    ++n;
  }
  for (std::size_t k : {2, 3}) {
    const auto tc = to_topcategory(c.at("pair" + std::to_string(k)));
    const auto count = partial_isometries(omega_object(tc).rqf).count();
    o.require(count == oracle::partial_injections(k), "pair" + std::to_string(k) + " has " +
                                                          std::to_string(count) + " partial isometries");
  }
  o.detail = std::to_string(n) + " categories; pair2 " + std::to_string(oracle::partial_injections(2)) +
             ", pair3 " + std::to_string(oracle::partial_injections(3));
  return o;
}

Outcome compatibility(const Corpus& c) {
  Outcome o;
  std::size_t pairs = 0, n = 0;
  for (const auto& [name, q] : corpus_rqfs(c)) {
    const auto pi = oracle::partial_isometries(q);
    for (Elem a = 0; a < q.size(); ++a)
      for (Elem b = 0; b < q.size(); ++b) {
        if (!pi.test(a) || !pi.test(b)) continue;
        ++pairs;
        const bool join_pi = pi.test(q.join(a, b));
        const bool compat = q.mul(a, q.star(b)) == q.mul(b, q.star(a)) &&
                            q.mul(q.plus(b), a) == q.mul(q.plus(a), b);
        o.require(join_pi == compat, name + ": " + std::to_string(a) + ", " + std::to_string(b));
      }
    o.require(static_cast<bool>(compatibility_lemma_check(q)), name + ": library check");
    ++n;
  }
  o.detail = std::to_string(n) + " RQFs, " + std::to_string(pairs) + " PI pairs";
  return o;
}

Outcome chi_round_trip(const Corpus& c) {
  Outcome o;
  std::size_t n = 0;
  double pair3 = 0;
  for (const auto& [name, q] : corpus_rqfs(c)) {
    if (q.size() > 1024) continue;
    const auto t0 = Clock::now();
    const auto chi = build_chi(q);
    o.require(chi.laws.ok(), name + ": " + chi.laws.summary());
    // Injective: distinct elements have distinct filter sets.
    std::set<Subset> seen;
    for (Elem a = 0; a < q.size(); ++a) seen.insert(chi.cq.x_sets[a]);
    o.require(seen.size() == q.size(), name + ": not injective");
    // Surjective: every open of C(Q) is some X_a.
    for (const auto& u : chi.cq.topcat.topology().opens())
      o.require(seen.count(u) != 0, name + ": open " + format_subset(u) + " missed");
    o.require(static_cast<bool>(is_rqf_isomorphism(chi.map, q, chi.omega.rqf)), name + ": not an isomorphism");
    if (name == "omega-pair3") pair3 = seconds_since(t0);
    ++n;
  }
  o.require(pair3 <= 90, "pair3 took " + std::to_string(pair3) + " s");
  char d[64];
  std::snprintf(d, sizeof d, "%zu RQFs; pair3 in %.2f s", n, pair3);
  o.detail = d;
  return o;
}

Outcome omega_round_trip(const Corpus& c) {
  Outcome o;
  std::size_t n = 0;
  std::vector<std::string> non_sober;
  for (const auto& [name, tc] : etale_categories(c)) {
    const auto w = build_omega_map(tc);
    o.require(w.laws.ok(), name + ": " + w.laws.summary());
    const auto ids = tc.cat().identities();
    const bool sober_ids = static_cast<bool>(sober_space_check(tc.topology().subspace(ids)));
    if (!sober_ids) {
      // ω identifies points that no open separates; it cannot be injective.
      std::set<Elem> image(w.map.begin(), w.map.end());
      o.require(image.size() < tc.size(), name + ": non-sober but ω injective");
      o.require(!is_sober(tc, w), name + ": reported sober");
      non_sober.push_back(name);
      continue;
    }
    const auto& target = w.c_omega.topcat;
    o.require(static_cast<bool>(is_category_isomorphism(w.map, tc.cat(), target.cat())),
              name + ": not a category isomorphism");
    ArrowMap inverse(target.size(), kNone);
    for (Elem x = 0; x < w.map.size(); ++x)
      if (w.map[x] < inverse.size()) inverse[w.map[x]] = x;
    const bool bijective = w.map.size() == target.size() &&
                           std::find(inverse.begin(), inverse.end(), kNone) == inverse.end();
    o.require(bijective, name + ": not bijective");
    if (bijective) {
      o.require(oracle::is_continuous(w.map, tc.topology(), target.topology()), name + ": ω not continuous");
      o.require(oracle::is_continuous(inverse, target.topology(), tc.topology()), name + ": ω⁻¹ not continuous");
    }
    ++n;
  }
  o.detail = std::to_string(n) + " sober categories";
  for (const auto& s : non_sober) o.detail += "; " + s + " not sober, ω not injective";
  return o;
}

Outcome adjunction_one(const Corpus& c) {
  Outcome o;
  std::size_t verified = 0;
  bool pair2 = false;
  std::ostringstream d;
  for (const auto& p : corpus_pairs()) {
    const auto& target = c.at(p.target);
    if (target.kind != Kind::rqf) continue;
    const auto tc = to_topcategory(c.at(p.category));
    const auto q = *to_rqf(target).value;
    const auto t0 = Clock::now();
    const auto r = verify_adjunction_I(tc, q);
    const double s = seconds_since(t0);
    const std::string name = p.category + "+" + p.target;
    o.require(r.ok(), name + ": " + r.laws.summary());
    o.require(r.functors == r.morphisms, name + ": hom-set sizes differ");
    o.require(r.functors == oracle::count_covering_functors(tc, c_object(q).topcat), name + ": functor count");
    o.require(s <= 60, name + " took " + std::to_string(s) + " s");
    if (r.ok()) ++verified;
    if (p.category == "pair2" && p.target == "omega-pair2") pair2 = r.ok() && r.functors > 0;
    d << (d.tellp() > 0 ? ", " : "") << name << " " << r.functors;
  }
  o.require(pair2, "pair2 with its Ω not verified");
  o.require(verified >= 3, "fewer than three pairs");
  o.detail = std::to_string(verified) + " pairs (" + d.str() + ")";
  return o;
}

Outcome crm_translation(const Corpus& c) {
  Outcome o;
  std::size_t q_side = 0, s_side = 0;
  std::vector<std::pair<std::string, CompleteRestrictionMonoid>> monoids;
  for (const auto& [name, q] : corpus_rqfs(c)) {
    const auto pi = pi_restriction_monoid(q);
    const auto l = l_vee(pi.crm);
    // a ↦ the ideal of partial isometries below a.
    ElementMap theta(q.size());
    bool found = true;
    for (Elem a = 0; a < q.size(); ++a) {
      Subset ideal(pi.crm.size());
      for (Elem i = 0; i < pi.crm.size(); ++i)
        if (q.leq(pi.embed[i], a)) ideal.set(i);
      const auto idx = l.find(ideal);
      found = found && idx.has_value();
      theta[a] = idx.value_or(kNone);
    }
    o.require(found && is_rqf_isomorphism(theta, q, l.rqf), name + ": L^∨(PI(Q)) ≇ Q");
    monoids.emplace_back("PI(" + name + ")", pi.crm);
    ++q_side;
  }
  for (const auto* d : c.positive({Kind::crm})) monoids.emplace_back(d->name, to_crm(*d));

  for (const auto& [name, s] : monoids) {
    const auto l = l_vee(s);
    const auto pi = pi_restriction_monoid(l.rqf);
    ElementMap theta(s.size());
    for (Elem a = 0; a < s.size(); ++a) theta[a] = pi.index[l.principal[a]];
    o.require(static_cast<bool>(is_crm_isomorphism(theta, s, pi.crm)), name + ": PI(L^∨(S)) ≇ S");

    const auto sf = s_filters(s);
    const auto cl = c_object(l.rqf);
    const auto corr = s_filter_correspondence(s, sf, l, cl);
    o.require(corr.laws.ok(), name + ": " + corr.laws.summary());
    const auto& src = sf.topcat;
    const auto& dst = cl.topcat;
    o.require(static_cast<bool>(is_category_isomorphism(corr.map, src.cat(), dst.cat())),
              name + ": S-filter category ≇ C(L^∨(S))");
    for (Elem a = 0; a < s.size(); ++a)
      o.require(image(corr.map, sf.x_sets[a], dst.size()) == cl.x_sets[l.principal[a]],
                name + ": X'_" + std::to_string(a) + " not carried to X_a");
    if (corr.map.size() == dst.size()) {
      ArrowMap inverse(dst.size(), 0);
      for (Elem x = 0; x < corr.map.size(); ++x)
        if (corr.map[x] < dst.size()) inverse[corr.map[x]] = x;
      o.require(oracle::is_continuous(corr.map, src.topology(), dst.topology()) &&
                    oracle::is_continuous(inverse, dst.topology(), src.topology()),
                name + ": not a homeomorphism");
    }
    ++s_side;
  }
  o.detail = std::to_string(q_side) + " RQFs, " + std::to_string(s_side) + " monoids";
  return o;
}

Outcome adjunction_two(const Corpus& c) {
  Outcome o;
  const auto tc = to_topcategory(c.at("pair2"));
  const auto s = to_crm(c.at("pi-pair2"));
  const auto r = verify_adjunction_II(tc, s);
  o.require(r.ok(), r.laws.summary());
  const auto one = verify_adjunction_I(tc, l_vee(s).rqf);
  o.require(one.ok(), "translated pair: " + one.laws.summary());
  o.require(r.functors == r.morphisms, "hom-set sizes differ");
  o.require(r.functors == one.functors && r.morphisms == one.morphisms, "counts differ from the translated pair");
  o.require(r.translated_functors == one.functors && r.translated_morphisms == one.morphisms,
            "reported translation differs");
  o.require(r.functors > 0, "empty hom-sets");
  o.detail = "functors " + std::to_string(r.functors) + ", morphisms " + std::to_string(r.morphisms) +
             ", translated " + std::to_string(one.functors) + "/" + std::to_string(one.morphisms);
  return o;
}

Outcome negative_fixtures(const Corpus& c) {
  Outcome o;
  std::size_t n = 0;
  std::set<std::string> laws;
  for (const auto& d : c.docs) {
    if (is_positive(d)) continue;
    const auto& law = d.expected->law;
    const auto r = validate_document(d);
    const auto* v = r.find(law);
    o.require(v != nullptr, d.name + ": " + law + " not reported");
    if (v) o.require(!v->witness.empty(), d.name + ": no witness");
    laws.insert(law);
    ++n;
  }
  o.require(n > 0, "no negative fixtures");
  o.detail = std::to_string(n) + " fixtures, " + std::to_string(laws.size()) + " laws";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  Corpus corpus;
  corpus.docs = argc > 1 ? load_corpus(argv[1]) : generate_corpus();
  for (const auto& d : corpus.docs) corpus.by_name[d.name] = &d;

  const std::vector<std::pair<std::string, std::function<Outcome(const Corpus&)>>> criteria = {
      {"axiom suite: Ω(C) is a restriction quantal frame", axiom_suite},
      {"filter oracle equivalence", filter_oracle},
      {"partial isometries are the open local bisections", pi_characterization},
      {"compatibility lemma", compatibility},
      {"round trip χ", chi_round_trip},
      {"round trip ω", omega_round_trip},
      {"adjunction I", adjunction_one},
      {"CRM translation", crm_translation},
      {"adjunction II", adjunction_two},
      {"negative fixtures", negative_fixtures},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second(corpus);
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail << "; " << timing << ")\n";
    for (std::size_t k = 0; k < o.problems.size() && k < 10; ++k) std::cout << "    " << o.problems[k] << '\n';
    if (!o.pass) ++failures;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
