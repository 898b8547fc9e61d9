#pragma once

#include <json.hpp>

#include "polyspace/chambers.hpp"
#include "polyspace/morse.hpp"
#include "polyspace/presentations.hpp"
#include "polyspace/walker.hpp"

namespace polyspace::json {

using Json = nlohmann::ordered_json;

Json mask(SubsetMask m);
Json masks(const std::vector<SubsetMask>& ms);
Json lengths(const LengthVector& ell);  // rationals as "p/q" strings

/// One line of the chamber database.
Json catalog_entry(const CatalogEntry& e);
/// Rebuilds an entry from its representative and checks the stored fields.
/// Throws ParseError when they disagree.
CatalogEntry catalog_entry_from(const Json& j);

Json element(const RingElement& x);
Json presentation(const RingPresentation& p);
Json presented_cohomology(const PresentedCohomology& ph);
Json fingerprint(const Fingerprint& f);
Json critical_point(const CriticalPoint& q);
Json morse_report(const LengthVector& ell);
Json walker_report(const WalkerReport& r, const ChamberCatalog& catalog);

}  // namespace polyspace::json
