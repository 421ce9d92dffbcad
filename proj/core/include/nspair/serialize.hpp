#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "nspair/germ_degree.hpp"
#include "nspair/invariants.hpp"
#include "nspair/linking.hpp"

namespace nspair {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit losslessly in a
// double-backed consumer (|v| < 2^53) and as decimal strings beyond that.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const LinkingMatrix& m);
LinkingMatrix linking_matrix_from_json(const Json& j);

Json to_json(const FiberDescriptor& f);
FiberDescriptor fiber_from_json(const Json& j);

Json to_json(const NSInvariantRecord& r);
NSInvariantRecord record_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const Json& j);

Json to_json(const DegreeResult& r);
DegreeResult degree_result_from_json(const Json& j);

// File helpers. Readers attach the byte position of malformed JSON to the
// ParseError; writers emit two-space-indented UTF-8 with a trailing newline.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);

LinkingMatrix load_linking_matrix(const std::string& path);
NSInvariantRecord load_record(const std::string& path);
void save_record(const std::string& path, const NSInvariantRecord& r);

}  // namespace nspair
