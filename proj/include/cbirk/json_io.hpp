// JSON views of the library's results. Key order is fixed so output is
// byte-stable.
#pragma once

#include <json.hpp>

#include "cbirk/polytope.hpp"
#include "cbirk/sweep.hpp"

namespace cbirk {

using Json = nlohmann::ordered_json;

/// {n, length, labels, covers, coords | null}
Json to_json(const Heap& h);
Json to_json(const IntMatrix& m);
Json to_json(const LinearRelation& rel);
/// {c, N, singletons, volume, ok}
Json certificate_json(const TransferCertificate& cert);
Json to_json(const RelationReport& rep);
Json to_json(const Q81Report& rep);
Json to_json(const IdentityCheck& chk);

}  // namespace cbirk
