#pragma once

#include "conckit/laurent.hpp"
#include "conckit/lattice.hpp"
#include "conckit/matrix.hpp"
#include "conckit/obstruction.hpp"
#include "conckit/pattern.hpp"
#include "conckit/surgery.hpp"

#include <json.hpp>

namespace conckit {

using Json = nlohmann::json;

// Integers become JSON numbers when they fit in 64 bits, strings otherwise.
// Rationals are always strings "p/q" (or "p").
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

/// {"exp": coeff} with decimal string keys.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// Row arrays.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"kind": "gen"|"sum"|"twist"|"bar"|"dual"|"compose", ...}
Json to_json(const PatternExpr& e);
PatternExpr pattern_from_json(const Json& j);

/// {"components": [{"name", "coeff": "p/q"|"inf", "writhe", "links": {..}}]}
Json to_json(const SurgeryDiagram& d);
SurgeryDiagram diagram_from_json(const Json& j);

Json to_json(const BlackboardFraming& f);

/// {"kind", "dY0", "rank", "charSquare", "bound", "witness", "relation",
///  "form", "method"}
Json to_json(const BoundCertificate& c);
BoundCertificate certificate_from_json(const Json& j);

Json to_json(const MonotonicityStep& s);
Json to_json(const AlternatingSurgeryCertificate& c);
Json to_json(const HomologyBallCertificate& c);
Json to_json(const SharedInvariantReport& r);

/// {"k", "pair", "dChain": [{"from", "to", "relation", "certificate"}],
///  "verdict", "assumptions", ...}
Json to_json(const ObstructionReport& r);

}  // namespace conckit
