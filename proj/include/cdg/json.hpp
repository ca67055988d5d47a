#ifndef CDG_JSON_HPP
#define CDG_JSON_HPP

#include <json.hpp>

#include "cdg/algos.hpp"
#include "cdg/conditions.hpp"
#include "cdg/construct.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/eulerian.hpp"
#include "cdg/graph.hpp"

namespace cdg {

/// All machine output goes through ordered_json so key order is insertion
/// order and repeated runs are byte-identical.
using ojson = nlohmann::ordered_json;

ojson json_of(const GraphDocument& doc);
ojson json_of(const LabeledGraph& g);
ojson json_of(const BlockDecomposition& b);
ojson json_of(const EulerianCheck& c);
ojson json_of(const ConditionResult& c);
ojson json_of(const CdgReport& r);
ojson json_of(const LewisPartition& p);
ojson json_of(const VerdictReason& r);
ojson json_of(const EulerianVerdict& v);
ojson json_of(const CrosscheckRecord& r);
ojson json_of(const ConstructionRecipe& r);
ojson json_of(const CatalogMember& m);
ojson json_of(const EnumFlags& f);
ojson json_of(const CatalogEntry& e);
ojson json_of(const EnumSummary& s);
ojson json_of(const SweepReport& r);

}  // namespace cdg

#endif  // CDG_JSON_HPP
