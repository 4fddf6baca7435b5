#pragma once

#include "bicol/loops.hpp"
#include "bicol/reps.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace bicol {

using Json = nlohmann::ordered_json;

Json toJson(const Rat& r);
Json toJson(const RatVec& v);
Json toJson(const IntVec& v);
Json toJson(const IntMatrix& m);
Json toJson(const RatMatrix& m);
Json toJson(const PLPath& p);
Json toJson(const BicolouredLoop& g);
Json toJson(const PLReparam& phi);
// {"denom", "startExp", "coeffs"}
Json toJson(const FracSeries& s);

// Field accessors raise ParseError naming the offending field.
Rat ratFromJson(const Json& j, const std::string& field);
RatVec ratVecFromJson(const Json& j, const std::string& field);
IntMatrix intMatrixFromJson(const Json& j, const std::string& field);

// Errors: ParseError (with line and column for syntax errors), plus the
// validation errors of makeLattice / makeSpan.
Json parseJsonText(const std::string& text);
Lattice parseLatticeFile(const std::string& text);
LatticeSpan parseSpanFile(const std::string& text);

struct LoopFile {
  PLPath lift;
  std::optional<RatVec> mq;
};
LoopFile parseLoopFile(const std::string& text);

// Error: ParseError when the file cannot be read.
std::string readFile(const std::string& path);

} // namespace bicol
