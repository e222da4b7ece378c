#ifndef SBFLAG_IO_HPP
#define SBFLAG_IO_HPP

#include <json.hpp>

#include "sbflag/chain.hpp"
#include "sbflag/oracle.hpp"
#include "sbflag/sb_variety.hpp"

namespace sbflag::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json int_to_json(const Int& n);
Int int_from_json(const json& j, const char* what);

json descriptor_to_json(const LocalFieldDescriptor& d);
LocalFieldDescriptor descriptor_from_json(const json& j);

json place_to_json(const Place& p);
Place place_from_json(const json& j);

json model_to_json(const FieldModel& m);
FieldModel model_from_json(const json& j);

json class_to_json(const GlobalBrauerClass& c);
GlobalBrauerClass class_from_json(const json& j);

json extension_to_json(const FormalExtension& e);
FormalExtension extension_from_json(const json& j);

json algebra_to_json(const AlgebraDescriptor& a);
AlgebraDescriptor algebra_from_json(const json& j);

json lemma_certificate_to_json(const LemmaCertificate& c);

json node_to_json(const FieldNode& n);
FieldNode node_from_json(const json& j);

json chain_to_json(const ChainProblem& problem,
                   const std::vector<FieldNode>& registry,
                   const EquivChain& chain);
struct ChainRecord {
  ChainProblem problem;
  std::vector<FieldNode> registry;
  EquivChain chain;
};
ChainRecord chain_from_json(const json& j);

oracle::EnumerationBudget budget_from_json(const json& j);
json budget_to_json(const oracle::EnumerationBudget& b);

}  // namespace sbflag::io

#endif
