#include "bicol/io.hpp"

#include <fstream>
#include <sstream>

namespace bicol {

Json toJson(const Rat& r) { return ratToString(r); }

Json toJson(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(toJson(x));
  return a;
}

Json toJson(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

Json toJson(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(toJson(m.row(i)));
  return a;
}

Json toJson(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(toJson(m.row(i)));
  return a;
}

Json toJson(const PLPath& p) {
  Json vals = Json::array();
  for (const RatVec& v : p.values()) vals.push_back(toJson(v));
  return {{"breakpoints", toJson(p.breakpoints())}, {"values", vals}};
}

Json toJson(const BicolouredLoop& g) {
  Json j = toJson(g.lift);
  j["mq"] = toJson(g.mq);
  return j;
}

Json toJson(const PLReparam& phi) {
  return {{"period", phi.period()}, {"breakpoints", toJson(phi.breakpoints())}, {"values", toJson(phi.values())}};
}

Json toJson(const FracSeries& s) {
  Json c = Json::array();
  for (const Int& x : s.coeffs()) c.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
  return {{"denom", s.denom()}, {"startExp", ratToString(s.exponent(0))}, {"coeffs", c}};
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  fail(Errc::ParseError, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) bad(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(context.empty() ? key : context + "." + key, "missing");
  return *it;
}

Int intFromJson(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad(field, "not an integer");
    return x;
  }
  bad(field, "expected an integer");
}

void allowedKeysCheck(const Json& j, std::initializer_list<const char*> keys, const std::string& ctx) {
  std::vector<std::string> unknown;
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok |= it.key() == k;
    if (!ok) unknown.push_back(it.key());
  }
  if (!unknown.empty()) bad(ctx.empty() ? unknown.front() : ctx + "." + unknown.front(), "unknown field");
}

} // namespace

Rat ratFromJson(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) bad(field, "expected a rational string \"p/q\"");
  try {
    return parseRat(j.get<std::string>());
  } catch (const Error&) {
    bad(field, "malformed rational '" + j.get<std::string>() + "'");
  }
}

RatVec ratVecFromJson(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(ratFromJson(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

IntMatrix intMatrixFromJson(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad(field, "expected a nonempty array of rows");
  std::size_t rows = j.size();
  if (!j[0].is_array()) bad(field + "[0]", "expected an array");
  std::size_t cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string rf = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) bad(rf, "rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = intFromJson(j[i][k], rf + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The library message carries "line L, column C".
    fail(Errc::ParseError, e.what());
  }
}

Lattice parseLatticeFile(const std::string& text) {
  Json j = parseJsonText(text);
  if (!j.is_object()) bad("", "expected an object");
  allowedKeysCheck(j, {"name", "gram"}, "");
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  IntMatrix g = intMatrixFromJson(member(j, "gram", ""), "gram");
  if (g.rows() != g.cols()) fail(Errc::NotSymmetric, "Gram matrix is not square");
  return makeLattice(g, name);
}

LatticeSpan parseSpanFile(const std::string& text) {
  Json j = parseJsonText(text);
  if (!j.is_object()) bad("", "expected an object");
  allowedKeysCheck(j, {"name", "gamma", "white", "black", "embedW", "embedB"}, "");
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  auto lat = [&](const char* key) {
    IntMatrix g = intMatrixFromJson(member(j, key, ""), key);
    if (g.rows() != g.cols()) fail(Errc::NotSymmetric, std::string(key) + " Gram matrix is not square");
    return makeLattice(g, std::string(key));
  };
  Lattice gamma = lat("gamma"), white = lat("white"), black = lat("black");
  IntMatrix ew = intMatrixFromJson(member(j, "embedW", ""), "embedW");
  IntMatrix eb = intMatrixFromJson(member(j, "embedB", ""), "embedB");
  return makeSpan(gamma, white, black, ew, eb, name);
}

LoopFile parseLoopFile(const std::string& text) {
  Json j = parseJsonText(text);
  if (!j.is_object()) bad("", "expected an object");
  allowedKeysCheck(j, {"breakpoints", "values", "mq"}, "");
  RatVec t = ratVecFromJson(member(j, "breakpoints", ""), "breakpoints");
  const Json& vals = member(j, "values", "");
  if (!vals.is_array()) bad("values", "expected an array");
  std::vector<RatVec> v;
  for (std::size_t i = 0; i < vals.size(); ++i) v.push_back(ratVecFromJson(vals[i], "values[" + std::to_string(i) + "]"));
  if (v.size() != t.size()) bad("values", "need one value per breakpoint");
  for (const RatVec& x : v)
    if (x.size() != v.front().size()) bad("values", "all values must have the same dimension");
  LoopFile out{PLPath(t, v), std::nullopt};
  if (j.contains("mq")) out.mq = ratVecFromJson(j["mq"], "mq");
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace bicol
