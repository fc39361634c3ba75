#pragma once

#include <string>

#include <json.hpp>

#include "dopkit/algdop.hpp"
#include "dopkit/catalog.hpp"
#include "dopkit/density.hpp"
#include "dopkit/series.hpp"

namespace dopkit {

using Json = nlohmann::ordered_json;

// Polynomials serialize as sorted [i, j, "num/den"] triples and parse from
// either that form or the text format.
Json poly_to_json(const RatPoly2& p);
RatPoly2 poly_from_json(const Json& j);

Json cometric_to_json(const Cometric& g);
Cometric cometric_from_json(const Json& j);

Json boundary_to_json(const BoundarySpec& b);
BoundarySpec boundary_from_json(const Json& j);

Json weights_to_json(const Weights& w);
Weights weights_from_json(const Json& j);

Json density_to_json(const DensitySpec& d);
DensitySpec density_from_json(const Json& j);

Json domain_to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);

Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

Json germ_to_json(const BranchGerm& g);
BranchGerm germ_from_json(const Json& j);

Json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const Json& j);

// file helpers; path "-" reads stdin / writes stdout
Json load_json(const std::string& path);
void store_json(const Json& j, const std::string& path);

} // namespace dopkit
