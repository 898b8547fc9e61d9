#include "json_io.hpp"

#include <algorithm>

#include "polyspace/errors.hpp"

namespace polyspace::json {

Json mask(SubsetMask m) {
  Json out = Json::array();
  for (int i : m.indices()) out.push_back(i);
  return out;
}

Json masks(const std::vector<SubsetMask>& ms) {
  Json out = Json::array();
  for (SubsetMask m : ms) out.push_back(mask(m));
  return out;
}

Json lengths(const LengthVector& ell) {
  Json out = Json::array();
  for (const Rational& q : ell.entries()) out.push_back(to_string(q));
  return out;
}

Json catalog_entry(const CatalogEntry& e) {
  std::vector<SubsetMask> shorts = e.signature.shorts;
  std::sort(shorts.begin(), shorts.end(), canonical_less);
  return Json{{"n", e.signature.n},
              {"genetic_code", masks(e.code.antichain)},
              {"signature", masks(shorts)},
              {"representative", lengths(e.representative)},
              {"betti", e.betti},
              {"class", e.cls.to_string()}};
}

CatalogEntry catalog_entry_from(const Json& j) {
  try {
    std::vector<Rational> entries;
    for (const auto& s : j.at("representative")) entries.push_back(parse_rational(s.get<std::string>()));
    const LengthVector ell(entries);
    CatalogEntry e = make_catalog_entry(chamber_signature(ell));
    // The stored representative may be any vector of the chamber.
    Json stored = j;
    Json ours = catalog_entry(e);
    stored.erase("representative");
    ours.erase("representative");
    if (stored != ours) throw ParseError("catalog line does not match the chamber of its representative");
    return e;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed catalog line: ") + ex.what());
  }
}

Json element(const RingElement& x) {
  Json terms = Json::array();
  for (const Term& t : x.terms) {
    Json mono = Json::array();
    for (int g : monomial_indices(t.monomial)) mono.push_back(g);
    terms.push_back(Json{{"coeff", t.coeff.get_str()}, {"monomial", mono}});
  }
  return terms;
}

Json presentation(const RingPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(element(r));
  return Json{{"generators", p.generators}, {"relations", rels}};
}

Json presented_cohomology(const PresentedCohomology& ph) {
  Json out = presentation(ph.presentation);
  Json roles = Json::array();
  for (const auto& r : ph.roles) roles.push_back(r.name());
  out["generator_roles"] = roles;
  Json images = Json::object();
  for (std::size_t j = 0; j < ph.torus_images.size(); ++j) {
    const std::string key = "X_" + std::to_string(j + 1);
    images[key] = ph.torus_images[j] ? element(*ph.torus_images[j]) : Json(nullptr);
  }
  out["torus_images"] = images;
  out["deficit_degree"] = ph.deficit_degree;
  out["class"] = ph.cls.to_string();
  return out;
}

Json fingerprint(const Fingerprint& f) {
  Json ann = Json::array();
  for (const auto& [key, rank] : f.ann_table) ann.push_back(Json{{"k", key.first}, {"i", key.second}, {"rank", rank}});
  return Json{{"n", f.n}, {"betti", f.betti}, {"h1_ranks", f.h1_ranks}, {"ann_table", ann}, {"class", f.class_tag.to_string()}};
}

Json critical_point(const CriticalPoint& q) {
  return Json{{"J", mask(q.j)}, {"index", q.index}, {"t", to_string(q.t)}, {"u", q.u}};
}

Json morse_report(const LengthVector& ell) {
  Json points = Json::array();
  for (const auto& q : critical_points(ell)) points.push_back(critical_point(q));
  const ReductionStep step = reduction(ell);
  const SubsetBijectionReport b = check_subset_bijection(ell);
  const IndexCensus census = index_census(ell);
  const EulerCheck euler = euler_check(ell);
  return Json{{"lengths", lengths(ell)},
              {"critical_points", points},
              {"reduction", Json{{"target", lengths(step.target)}, {"perturbed", lengths(step.perturbed)}, {"epsilon", to_string(step.epsilon)}}},
              {"subset_bijection",
               Json{{"pass", b.pass()}, {"source", masks(b.source)}, {"perturbed", masks(b.perturbed)}, {"removed", masks(b.removed)}, {"expected", masks(b.expected)}}},
              {"index_census", Json{{"pass", census.pass()}, {"critical", census.critical_indices}, {"removed", census.removed_indices}}},
              {"euler", Json{{"pass", euler.pass()}, {"chi", euler.chi}, {"predicted", euler.predicted}}}};
}

Json walker_report(const WalkerReport& r, const ChamberCatalog& catalog) {
  Json pairs = Json::array();
  for (const auto& v : r.pairs) {
    pairs.push_back(Json{{"chambers", {lengths(catalog.entries[v.first].representative), lengths(catalog.entries[v.second].representative)}},
                         {"tier", v.tier},
                         {"witness", v.witness}});
  }
  Json tiers = Json::object();
  for (const auto& [tier, count] : r.tier_counts) tiers[std::to_string(tier)] = count;
  return Json{{"n", r.n},
              {"chambers", r.chambers},
              {"tier_counts", tiers},
              {"unexplained", r.unexplained()},
              {"face_counts_consistent", r.face_counts_consistent},
              {"pass", r.pass()},
              {"pairs", pairs}};
}

}  // namespace polyspace::json
