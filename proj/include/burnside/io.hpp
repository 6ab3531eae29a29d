#pragma once

#include <json.hpp>

#include "burnside/biset.hpp"
#include "burnside/spectrum.hpp"
#include "burnside/units.hpp"

namespace burnside {

using Json = nlohmann::json;

// Subgroups appear in files as sorted element lists.
Json subgroup_to_json(const RingContext& ctx, int id);

// {group, ring, coeffs: [{t, s, c}]}, subgroups as sorted element lists;
// Burnside elements use {s, c} entries.
Json element_to_json(const RingContext& ctx, const RingElement& x);
Json element_to_json(const RingContext& ctx, const QRingElement& x);
RingElement element_from_json(const RingContext& ctx, const Json& j);

// CSV table of marks with the "T:S" header naming convention.
std::string marks_csv(const RingContext& ctx, RingTag tag);

// G-set morphism fixtures: {dom: {points, action}, cod: {...}, map}.
Json morphism_to_json(const GMorphism& f);
GMorphism morphism_from_json(const Group& g, const Json& j);

// Biset fixtures carry the two action tables.
Json biset_to_json(const Biset& u);
Biset biset_from_json(const Group& h, const Group& g, const Json& j);

Json unit_basis_to_json(const RingContext& ctx, const UnitGroupBasis& ub);
Json components_to_json(const RingContext& ctx, RingTag tag, int p,
                        const std::vector<SpectrumComponent>& comps);

}  // namespace burnside
