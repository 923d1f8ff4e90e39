#pragma once

#include <json.hpp>

#include "eil/betti.hpp"
#include "eil/bounds.hpp"
#include "eil/chordal.hpp"
#include "eil/matching.hpp"
#include "eil/monomial.hpp"
#include "eil/scan.hpp"
#include "eil/structure.hpp"

namespace eil {

using Json = nlohmann::ordered_json;

Json to_json(const Matching& m);
/// {"k2": [[u,v],...], "c5": [[...5 ids...],...], "match_number": int}
Json to_json(const HSubgraph& h);
/// {"parts": [[[u,v],...],...]}
Json to_json(const CochordalCover& c);
/// {"pendant_pairs": [[support,leaf],...], "basic_cycles": [[...],...]}
Json to_json(const PCDecomposition& d);
/// {"field": "gf2"|"rational", "entries": [[i,j,value],...], "reg_quotient", "reg_ideal"}
Json to_json(const BettiTable& t);
/// {"variables": [...], "generators": [{"x0": 1, ...}, ...]}
Json to_json(const MonomialIdeal& ideal);
Json to_json(const Girth& g);
Json to_json(const Invariants& inv);
Json to_json(const Check& c);
Json to_json(const BoundsReport& r);
Json to_json(const WitnessRecord& w);
Json to_json(const UnionCheck& u);
Json to_json(const ScanSummary& s);

BettiTable betti_from_json(const Json& j);
HSubgraph hsubgraph_from_json(const Json& j);
CochordalCover cover_from_json(const Json& j);

}  // namespace eil
