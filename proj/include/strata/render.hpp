#pragma once

#include <string>

#include <json.hpp>

#include "strata/enumerate.hpp"
#include "strata/nerve.hpp"
#include "strata/poset.hpp"

namespace strata {

// Text, JSON, and DOT renderings of the CLI outputs.  Every function is
// deterministic and lists strata in (codim, canonical key) order; DOT output
// is a plain digraph whose nodes carry rank and codim attributes equal to
// the stratum codimension.

std::string graph_oneline(const StableGraph& g);

std::string enumerate_table(const StrataEnumeration& en);
nlohmann::ordered_json enumerate_json(const StrataEnumeration& en);
std::string enumerate_dot(const StrataEnumeration& en);

std::string poset_table(const StrataPoset& p);
nlohmann::ordered_json poset_json(const StrataPoset& p);
std::string poset_dot(const StrataPoset& p);

std::string dims_table(const StrataEnumeration& en);
nlohmann::ordered_json dims_json(const StrataEnumeration& en);

std::string homology_table(const OrderComplex& x, const std::vector<HomologyGroup>& h, int g,
                           int n, bool boundary_only);
nlohmann::ordered_json homology_json(const OrderComplex& x, const std::vector<HomologyGroup>& h,
                                     int g, int n, bool boundary_only);

}  // namespace strata
