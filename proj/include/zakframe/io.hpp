#pragma once

// JSON encodings of groups, functions and reports. Complex numbers are
// [re, im] pairs; doubles are written in shortest round-trip form.
//
// Group documents:
//   {"kind": "semidirect", "H": {"factors": [d, ..., d]},
//    "K": {"order": n} | {"table": [[...]]}, "action": [matrix per K element]}
//   {"kind": "cayley", "table": [[...]],
//    "H": {"factors": [...], "elements": [G index of each H element]},
//    "reps": [...]}                      (reps optional, identity first)
//   {"kind": "heisenberg", "d": d}
//   {"kind": "affine", "q": q, "modulus": [...]}   (modulus optional)

#include <string>
#include <vector>

#include "json.hpp"
#include "zakframe/constructions.hpp"
#include "zakframe/frames.hpp"
#include "zakframe/groups.hpp"
#include "zakframe/repn.hpp"
#include "zakframe/sispace.hpp"
#include "zakframe/zak.hpp"

namespace zakframe::io {

using nlohmann::json;

/// Malformed document. `field` is a JSON-pointer-like path to the culprit.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::string field, const std::string& what)
      : InvalidArgument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

json read_file(const std::string& path);
void write_file(const std::string& path, const json& doc);

InductionSetting parse_group(const json& doc);

json to_json(cplx z);
cplx parse_complex(const json& j, const std::string& field);
json to_json(std::span<const cplx> v);
/// Accepts [[re, im], ...] or plain real numbers.
CVector parse_vector(const json& j, const std::string& field);
std::vector<CVector> parse_vectors(const json& j, const std::string& field);

json to_json(const ZakArray& z);
ZakArray parse_zak(const json& j, const std::string& field = "");

json to_json(const MonomialMatrix& m);
json to_json(const FrameReport& r);
json to_json(const EtfCriterion& c);
json to_json(const ProjectiveOrbit& o);
json to_json(const RangeFunction& r);
json to_json(const FiberBounds& b);
json to_json(const PaleyReport& r);
json to_json(const SicCandidate& c);

}  // namespace zakframe::io
