#pragma once

#include <json.hpp>

#include "pseudocat/fincat.hpp"
#include "pseudocat/pseudo.hpp"

namespace pcat {

using json = nlohmann::ordered_json;

/// FinCat document: {"objects": [...], "morphisms": [{"id","src","tgt"}],
/// "identities": {obj: mor}, "compose": [{"g","f","result"}]}.
/// Identity compositions may be omitted and are inferred.
FinCatPtr fincat_from_json(const json& doc);
json fincat_to_json(const FinCat& c);

/// Shape registry used by documents: {"shape": "terminal"|"discrete:2"|...}.
FinCatPtr fincat_from_doc(const json& doc);

/// Pseudo functor document: {"index": <FinCat|shape>, "fibers": {j: <FinCat>},
/// "arrows": {f: {"objects": {...}, "morphisms": {...}}},
/// "gamma": [{"f","g","components":{obj: mor}}], "delta": {j: {obj: mor}}.
/// Omitted gamma/delta entries default to identities when the assignment is
/// strict on that pair/object.
PseudoFunctor pseudofunctor_from_json(const json& doc);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace pcat
