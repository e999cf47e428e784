#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "smt/fermat3.hpp"
#include "smt/identities.hpp"
#include "smt/loci.hpp"
#include "smt/oracle.hpp"
#include "smt/steiner4.hpp"

namespace smt::cli {

using Json = nlohmann::ordered_json;

// Report fragments. Field order is fixed by construction; doubles are
// written in shortest round-trip form, so serialization is lossless.

Json to_json(const Point& p);
Json to_json(const Tolerance& tol);
Json to_json(const Circle& c);
Json to_json(const Scratch4& s);
Json to_json(const Existence& e);
Json to_json(const FullTree& t, const std::vector<std::string>& labels);
Json to_json(const Smt4Result& r, const std::vector<std::string>& labels);
Json to_json(const Solution3& s, const std::vector<std::string>& labels);
Json to_json(const LocusReport& r);
Json to_json(const SweepRow& row);
Json to_json(const OracleResult& r);
Json to_json(const Oracle3Result& r);
Json to_json(const IdentityCheck& c);

Json instance_json(const std::vector<Point>& terminals, const std::vector<std::string>& labels);

/// Two-space indented, trailing newline.
std::string serialize(const Json& report);

}  // namespace smt::cli
