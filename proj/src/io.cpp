#include "mgn/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mgn::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

bool bool_of(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

MarkSet marks_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("marks must be an array of integers");
  std::vector<int> ks;
  for (const auto& k : j) ks.push_back(int_of(k, "mark"));
  return mark_set(ks);
}

Json marks_to_json(MarkSet s) {
  Json out = Json::array();
  for (int k : marks_of(s)) out.push_back(k);
  return out;
}

MarkedGenus ambient_from_json(const Json& j) {
  return MarkedGenus(int_of(field(j, "g"), "g"), int_of(field(j, "n"), "n"));
}

Json coefficient_list(const std::map<BoundaryIndex, Rational>& m) {
  Json out = Json::array();
  for (const auto& [idx, c] : m) {
    if (idx.is_irr()) continue;
    out.push_back(Json{{"i", idx.genus()}, {"I", marks_to_json(idx.marks())}, {"c", rational_to_json(c)}});
  }
  return out;
}

std::vector<std::pair<BoundaryIndex, Rational>> coefficient_list_from(const Json& j, const MarkedGenus& amb) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<std::pair<BoundaryIndex, Rational>> out;
  for (const auto& e : j)
    out.emplace_back(BoundaryIndex::pair(int_of(field(e, "i"), "i"), marks_from_json(field(e, "I")), amb),
                     rational_from_json(field(e, "c")));
  return out;
}

RationalRange range_from_json(const Json& j) {
  if (j.is_object())
    return RationalRange{rational_from_json(field(j, "from")), rational_from_json(field(j, "to")),
                         rational_from_json(field(j, "step"))};
  Rational v = rational_from_json(j);
  return RationalRange{v, v, 1};
}

Json range_to_json(const RationalRange& r) {
  return Json{{"from", rational_to_json(r.from)}, {"to", rational_to_json(r.to)}, {"step", rational_to_json(r.step)}};
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals are written as \"p/q\" strings or integers");
}

Json index_to_json(const BoundaryIndex& idx) {
  if (idx.is_irr()) return "irr";
  return Json::array({idx.genus(), marks_to_json(idx.marks())});
}

BoundaryIndex index_from_json(const Json& j, const MarkedGenus& amb) {
  if (j.is_string() && j.get<std::string>() == "irr") return BoundaryIndex::irr();
  if (!j.is_array() || j.size() != 2) throw ParseError("index must be \"irr\" or [i, [marks]]");
  return BoundaryIndex::pair(int_of(j[0], "index genus"), marks_from_json(j[1]), amb);
}

Json tsubset_to_json(const TSubset& T) {
  Json pairs = Json::array();
  for (const auto& m : T)
    if (!m.is_irr()) pairs.push_back(index_to_json(m));
  return Json{{"irr", T.has_irr()}, {"pairs", pairs}};
}

TSubset tsubset_from_json(const Json& j, const MarkedGenus& amb) {
  TSubset T;
  if (bool_of(field(j, "irr"), "'irr'")) T.insert(BoundaryIndex::irr());
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw ParseError("'pairs' must be an array");
  for (const auto& p : pairs) T.insert(index_from_json(p, amb));
  return T;
}

std::string tsubset_token(const TSubset& T) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : T) {
    if (!first) out += ";";
    first = false;
    if (m.is_irr()) {
      out += "irr";
      continue;
    }
    out += std::to_string(m.genus()) + ":";
    auto ks = marks_of(m.marks());
    for (std::size_t k = 0; k < ks.size(); ++k) out += (k ? "." : "") + std::to_string(ks[k]);
  }
  return out + "}";
}

Json divisor_to_json(const DivisorClass& L) {
  return Json{{"space", to_string(L.space())},       {"g", L.ambient().g},
              {"n", L.ambient().n},                  {"lambda", rational_to_json(L.lambda())},
              {"irr", rational_to_json(L.irr())},    {"boundary", coefficient_list(L.terms())}};
}

DivisorClass divisor_from_json(const Json& j) {
  const Json& sp = field(j, "space");
  if (!sp.is_string()) throw ParseError("'space' must be a string");
  DivisorClass L(parse_space(sp.get<std::string>()), ambient_from_json(j));
  if (j.contains("lambda")) L.set_lambda(rational_from_json(j["lambda"]));
  if (j.contains("irr")) L.set(BoundaryIndex::irr(), rational_from_json(j["irr"]));
  if (j.contains("boundary"))
    for (const auto& [idx, c] : coefficient_list_from(j["boundary"], L.ambient())) L.add(idx, c);
  return L;
}

Json fcurve_to_json(const FCurve& C) {
  Json parts = Json::array();
  for (const auto& p : C.parts()) parts.push_back(Json::array({p.genus, marks_to_json(p.marks)}));
  return Json{{"family", to_string(C.family())}, {"parts", parts}};
}

FCurve fcurve_from_json(const Json& j, const MarkedGenus& amb) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw ParseError("'family' must be a string");
  std::vector<Part> parts;
  if (j.contains("parts")) {
    if (!j["parts"].is_array()) throw ParseError("'parts' must be an array");
    for (const auto& p : j["parts"]) {
      if (!p.is_array() || p.size() != 2) throw ParseError("each part is [i, [marks]]");
      parts.push_back(Part{int_of(p[0], "part genus"), marks_from_json(p[1])});
    }
  }
  return FCurve::make(amb, parse_family(fam.get<std::string>()), parts);
}

Json params_to_json(const AdjointParams& p) {
  return Json{{"space", to_string(p.space)},
              {"g", p.ambient.g},
              {"n", p.ambient.n},
              {"a", rational_to_json(p.a)},
              {"alpha_irr", rational_to_json(p.alpha_irr)},
              {"alphas", coefficient_list(p.alphas)}};
}

AdjointParams params_from_json(const Json& j) {
  Space sp = Space::Mgn;
  if (j.contains("space")) {
    if (!j["space"].is_string()) throw ParseError("'space' must be a string");
    sp = parse_space(j["space"].get<std::string>());
  }
  AdjointParams p(sp, ambient_from_json(j));
  p.a = j.contains("a") ? rational_from_json(j["a"]) : Rational(0);
  p.alpha_irr = rational_from_json(field(j, "alpha_irr"));
  if (j.contains("alpha_default")) {
    Rational d = rational_from_json(j["alpha_default"]);
    for (const auto& idx : pair_indices(sp, p.ambient)) p.alphas[idx] = d;
  }
  if (j.contains("alphas"))
    for (const auto& [idx, c] : coefficient_list_from(j["alphas"], p.ambient)) p.alphas[idx] = c;
  p.validate();
  return p;
}

Json verdict_to_json(const PositivityVerdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back(Json{{"curve", fcurve_to_json(x.curve)}, {"value", rational_to_json(x.value)}});
  return Json{{"status", to_string(v.status)}, {"witnesses", w}};
}

Json inequality_to_json(const Inequality& q) {
  return Json{{"name", q.name},
              {"lhs", rational_to_json(q.lhs)},
              {"relation", q.relation},
              {"rhs", rational_to_json(q.rhs)},
              {"holds", q.holds}};
}

Json result_to_json(const AmpleModelResult& r) {
  Json cert{{"clause", r.certificate.clause}};
  Json checks = Json::array();
  for (const auto& q : r.certificate.checks) checks.push_back(inequality_to_json(q));
  cert["checks"] = checks;
  cert["notes"] = r.certificate.notes;
  if (r.certificate.pushforward_T) cert["pushforward_T"] = tsubset_to_json(*r.certificate.pushforward_T);
  Json out{{"model", to_string(r.model)}};
  if (r.model == ModelKind::UpsilonT) out["T"] = tsubset_to_json(r.T);
  if (r.model == ModelKind::Unclassified) out["reason"] = to_string(r.reason);
  out["label"] = r.label();
  out["certificate"] = cert;
  return out;
}

AmpleModelResult result_from_json(const Json& j, const MarkedGenus& amb) {
  AmpleModelResult r;
  const std::string model = string_of(field(j, "model"), "model");
  bool found = false;
  for (auto k : {ModelKind::Identity, ModelKind::UpsilonPs, ModelKind::UpsilonT, ModelKind::Unclassified})
    if (to_string(k) == model) {
      r.model = k;
      found = true;
    }
  if (!found) throw ParseError("unknown model '" + model + "'");
  if (r.model == ModelKind::UpsilonT) r.T = tsubset_from_json(field(j, "T"), amb);
  if (r.model == ModelKind::Unclassified) {
    const std::string reason = string_of(field(j, "reason"), "reason");
    found = false;
    for (auto x : {UnclassifiedReason::OutsideRegion, UnclassifiedReason::SearchCapped, UnclassifiedReason::ExcludedCase,
                   UnclassifiedReason::PushforwardOnly, UnclassifiedReason::Ambiguous})
      if (to_string(x) == reason) {
        r.reason = x;
        found = true;
      }
    if (!found) throw ParseError("unknown reason '" + reason + "'");
  }
  const Json& cert = field(j, "certificate");
  r.certificate.clause = string_of(field(cert, "clause"), "clause");
  for (const auto& q : array_of(field(cert, "checks"), "checks"))
    r.certificate.checks.push_back(Inequality{string_of(field(q, "name"), "name"), rational_from_json(field(q, "lhs")),
                                              string_of(field(q, "relation"), "relation"),
                                              rational_from_json(field(q, "rhs")), bool_of(field(q, "holds"), "holds")});
  for (const auto& n : array_of(field(cert, "notes"), "notes")) r.certificate.notes.push_back(string_of(n, "note"));
  if (cert.contains("pushforward_T")) r.certificate.pushforward_T = tsubset_from_json(cert["pushforward_T"], amb);
  return r;
}

Json bridge_to_json(const BridgeType& B) {
  if (B.irr) return Json{{"type", "Irr"}};
  return Json{{"type", "Pair"}, {"i", B.pair.genus}, {"I", marks_to_json(B.pair.marks)}};
}

Json factorization_to_json(const FactorizationDescriptor& f) {
  Json gens = Json::array();
  for (const auto& b : f.small_contraction_generators) gens.push_back(bridge_to_json(b));
  return Json{{"divisorial_steps", f.divisorial_steps},
              {"small_contraction_generators", gens},
              {"small_contraction", f.small_is_identity() ? "Identity" : "Small"},
              {"k_negative_small", f.k_negative_small}};
}

GridSpec grid_from_json(const Json& j) {
  GridSpec grid(ambient_from_json(j));
  grid.a = j.contains("a") ? range_from_json(j["a"]) : RationalRange{0, 0, 1};
  grid.alpha_irr = range_from_json(field(j, "alpha_irr"));
  const Json& prof = field(j, "alpha_profile");
  if (prof.contains("uniform")) {
    grid.uniform_alpha = range_from_json(prof["uniform"]);
  } else if (prof.contains("per_index")) {
    if (!prof["per_index"].is_array()) throw ParseError("'per_index' must be an array of profiles");
    for (const auto& entry : prof["per_index"]) {
      std::map<BoundaryIndex, Rational> m;
      if (entry.contains("default")) {
        Rational d = rational_from_json(entry["default"]);
        for (const auto& idx : pair_indices(Space::Mgn, grid.ambient)) m[idx] = d;
      }
      if (entry.contains("alphas"))
        for (const auto& [idx, c] : coefficient_list_from(entry["alphas"], grid.ambient)) m[idx] = c;
      grid.profiles.push_back(std::move(m));
    }
  } else {
    throw ParseError("alpha_profile needs 'uniform' or 'per_index'");
  }
  // Surface empty ranges and bad steps as domain errors up front.
  (void)grid.a.values();
  (void)grid.alpha_irr.values();
  if (grid.uniform_alpha) (void)grid.uniform_alpha->values();
  return grid;
}

Json grid_to_json(const GridSpec& grid) {
  Json out{{"g", grid.ambient.g}, {"n", grid.ambient.n}, {"a", range_to_json(grid.a)},
           {"alpha_irr", range_to_json(grid.alpha_irr)}};
  if (grid.uniform_alpha) {
    out["alpha_profile"] = Json{{"uniform", range_to_json(*grid.uniform_alpha)}};
  } else {
    Json list = Json::array();
    for (const auto& m : grid.profiles) list.push_back(Json{{"alphas", coefficient_list(m)}});
    out["alpha_profile"] = Json{{"per_index", list}};
  }
  return out;
}

void write_sweep_csv(std::ostream& os, const GridSpec& grid, const std::vector<ChamberRecord>& records) {
  os << "index,a,alpha,alpha_irr,model,T,clause\n";
  for (const auto& r : records) {
    std::string alpha = grid.uniform_alpha ? to_string(r.point.alphas.begin()->second)
                                           : "profile" + std::to_string(r.profile);
    std::string model = r.result.model == ModelKind::Unclassified ? r.result.label() : to_string(r.result.model);
    std::string T = r.result.model == ModelKind::UpsilonT ? tsubset_token(r.result.T) : "";
    os << r.index << ',' << to_string(r.point.a) << ',' << alpha << ',' << to_string(r.point.alpha_irr) << ','
       << model << ',' << T << ',' << r.result.certificate.clause << '\n';
  }
}

void write_sweep_svg(std::ostream& os, const GridSpec& grid, const std::vector<ChamberRecord>& records) {
  if (!grid.uniform_alpha || grid.a.values().size() != 1)
    throw DomainError("an SVG slice needs a uniform α range and a single value of a");
  const auto xs = grid.uniform_alpha->values();
  const auto ys = grid.alpha_irr.values();
  const int cell = std::max(2, 600 / static_cast<int>(std::max(xs.size(), ys.size())));
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  std::map<std::string, std::string> colour;
  for (const auto& [label, count] : summarize(records)) {
    std::size_t k = colour.size();
    colour[label] = k < std::size(palette) ? palette[k] : "#333333";
  }
  const int w = cell * static_cast<int>(xs.size()), h = cell * static_cast<int>(ys.size());
  const int legend = 20 * static_cast<int>(colour.size()) + 10;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 40 << "\" height=\"" << h + legend + 40
     << "\">\n";
  os << "<text x=\"20\" y=\"14\" font-size=\"12\">x: alpha, y: alpha_irr, a = " << to_string(grid.a.from) << "</text>\n";
  for (const auto& r : records) {
    std::size_t xi = r.profile, yi = r.index % ys.size();
    os << "<rect x=\"" << 20 + cell * static_cast<int>(xi) << "\" y=\"" << 20 + h - cell * static_cast<int>(yi + 1)
       << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << colour[r.result.label()] << "\"/>\n";
  }
  int y = h + 40;
  for (const auto& [label, c] : colour) {
    os << "<rect x=\"20\" y=\"" << y - 10 << "\" width=\"10\" height=\"10\" fill=\"" << c << "\"/>";
    os << "<text x=\"36\" y=\"" << y << "\" font-size=\"12\">" << label << "</text>\n";
    y += 20;
  }
  os << "</svg>\n";
}

}  // namespace mgn::io
