#pragma once

#include "symdeg/bounds.hpp"
#include "symdeg/dual_variety.hpp"
#include "symdeg/hessian.hpp"
#include "symdeg/quadric_homology.hpp"
#include "symdeg/smith.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symdeg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits become JSON numbers; everything else is a
/// "num/den" (or big integer) string.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const PolyMatrix& m, const std::vector<std::string>& vars);
Json to_json(const PointQ& p);
RatMatrix rat_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const Json& j);

Json to_json(const RankStratification& s);
Json to_json(const RankRelationReport& r);
Json to_json(const BoundReport& r);
Json to_json(const NonsurjectivityCertificate& c);
Json to_json(const TorsionCertificate& c);
Json to_json(const FiberGysin& g);
Json to_json(const GenericRankCertificate& c, const std::vector<std::string>& vars);
Json to_json(const PhiTorsionReplay& r);

/// {"schema": 1, "command": command} followed by the fields of body.
Json envelope(const std::string& command, const Json& body);

/// Recomputes every derived flag of a report (step ok flags and verdicts,
/// holds, surjection_impossible, SNF diagonals, group invariants) from the
/// raw values it carries. Returns the rebuilt report; a faithful report is
/// reproduced exactly. Throws PreconditionError on malformed input.
Json revalidate(const Json& report);

} // namespace symdeg
