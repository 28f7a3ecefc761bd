// Copyright 2026 The Tessella Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tessella/io/serialize.hpp"

#include "tessella/error.hpp"
#include "tessella/finite/domains.hpp"

namespace tessella::io {

namespace {

void require(bool cond, const std::string& msg) {
  TESSELLA_REQUIRE(cond, ErrorCode::InvalidInput, msg);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object(), std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  require(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
  require(j.is_number_integer() && j.get<std::int64_t>() >= 0, std::string(what) +
                                                                   " must be a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  require(v < bound, std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Finite:
      return "finite";
    case Kind::Euclidean:
      return "euclidean";
    case Kind::TranslationSystem:
      return "translation-system";
    case Kind::Heisenberg:
      return "heisenberg";
  }
  return "";
}

std::string_view kind_schema(Kind kind) {
  switch (kind) {
    case Kind::Finite:
      return kFiniteSchema;
    case Kind::Euclidean:
      return kEuclidSchema;
    case Kind::TranslationSystem:
      return kTranslationSchema;
    case Kind::Heisenberg:
      return kHeisSchema;
  }
  return "";
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  const Json& kind = field(doc, "kind");
  const Json& schema = field(doc, "schema");
  require(kind.is_string() && schema.is_string(), "'kind' and 'schema' must be strings");
  for (Kind k : {Kind::Finite, Kind::Euclidean, Kind::TranslationSystem, Kind::Heisenberg}) {
    if (kind.get<std::string>() != kind_name(k)) continue;
    require(schema.get<std::string>() == kind_schema(k),
            "schema '" + schema.get<std::string>() + "' does not match kind '" +
                std::string(kind_name(k)) + "'");
    const Json& payload = field(doc, "payload");
    require(payload.is_object(), "'payload' must be an object");
    return {k, payload};
  }
  throw Error(ErrorCode::InvalidInput, "unknown kind '" + kind.get<std::string>() + "'");
}

Json instance_to_json(Kind kind, Json payload) {
  Json doc;
  doc["schema"] = kind_schema(kind);
  doc["kind"] = kind_name(kind);
  doc["payload"] = std::move(payload);
  return doc;
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  require(j.is_string(), "exact numbers must be \"p/q\" strings or integers, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

std::int64_t integer_from_json(const Json& j) {
  require(j.is_number_integer(), "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  require(j.is_array(), "expected an array of numbers");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

RVector vector_from_json(const Json& j) {
  const auto v = rationals_from_json(j);
  RVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

Json matrix_to_json(const RMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(RVector(m.row(r).transpose())));
  return out;
}

RMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "expected a nonempty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  RMatrix out;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const RVector row = vector_from_json(j[static_cast<std::size_t>(r)]);
    if (r == 0) out.resize(rows, row.size());
    require(row.size() == out.cols() && row.size() > 0, "ragged matrix");
    out.row(r) = row.transpose();
  }
  return out;
}

Json columns_to_json(const RMatrix& m) { return matrix_to_json(m.transpose()); }

RMatrix columns_from_json(const Json& j) { return matrix_from_json(j).transpose(); }

namespace euclid_json {

Json to_json(const euclid::EucLattice& l) {
  Json out;
  out["dim"] = l.dim();
  out["basis"] = columns_to_json(l.basis());
  return out;
}

euclid::EucLattice lattice_from_json(const Json& j) {
  const RMatrix basis = columns_from_json(field(j, "basis"));
  if (j.contains("dim"))
    require(integer_from_json(j["dim"]) == basis.rows(), "'dim' disagrees with the basis");
  return euclid::EucLattice(basis);
}

Json to_json(const euclid::FrameRegion& r) {
  Json out;
  out["frame"] = columns_to_json(r.frame());
  Json boxes = Json::array();
  for (const auto& b : r.boxes()) {
    Json box;
    box["lo"] = io::to_json(b.lo);
    box["hi"] = io::to_json(b.hi);
    boxes.push_back(std::move(box));
  }
  out["boxes"] = std::move(boxes);
  return out;
}

euclid::FrameRegion region_from_json(const Json& j) {
  const RMatrix frame = columns_from_json(field(j, "frame"));
  const Json& boxes = field(j, "boxes");
  require(boxes.is_array(), "'boxes' must be an array");
  std::vector<euclid::Box> out;
  for (const auto& b : boxes)
    out.push_back({rationals_from_json(field(b, "lo")), rationals_from_json(field(b, "hi"))});
  return euclid::FrameRegion(frame, std::move(out));
}

Json to_json(const euclid::TranslationSystem& ts) {
  Json comps = Json::array();
  for (std::size_t c = 0; c < ts.size(); ++c) {
    Json comp;
    comp["gamma"] = columns_to_json(ts.component(c).gamma);
    comp["lambda"] = columns_to_json(ts.component(c).lambda);
    comps.push_back(std::move(comp));
  }
  Json out;
  out["components"] = std::move(comps);
  return out;
}

euclid::TranslationSystem translation_from_json(const Json& j) {
  const Json& comps = field(j, "components");
  require(comps.is_array(), "'components' must be an array");
  std::vector<euclid::TranslationComponent> out;
  for (const auto& c : comps)
    out.push_back({columns_from_json(field(c, "gamma")), columns_from_json(field(c, "lambda"))});
  return euclid::TranslationSystem(std::move(out));
}

}  // namespace euclid_json

namespace heis_json {

Json to_json(const heisenberg::Point& g) {
  Json out;
  out["x1"] = io::to_json(g.x1);
  out["x2"] = io::to_json(g.x2);
  out["c"] = io::to_json(g.c);
  return out;
}

heisenberg::Point point_from_json(const Json& j) {
  return {rational_from_json(field(j, "x1")), rational_from_json(field(j, "x2")),
          rational_from_json(field(j, "c"))};
}

Json to_json(const heisenberg::Vec& v) {
  Json out;
  out["u1"] = io::to_json(v.u1);
  out["u2"] = io::to_json(v.u2);
  out["u3"] = io::to_json(v.u3);
  return out;
}

heisenberg::Vec vec_from_json(const Json& j) {
  return {rational_from_json(field(j, "u1")), rational_from_json(field(j, "u2")),
          rational_from_json(field(j, "u3"))};
}

Json to_json(const heisenberg::HeisLattice& l) {
  Json out;
  out["A"] = matrix_to_json(l.matrix());
  return out;
}

heisenberg::HeisLattice lattice_from_json(const Json& j) {
  const RMatrix a = matrix_from_json(field(j, "A"));
  require(a.rows() == 2 && a.cols() == 2, "'A' must be 2x2");
  return heisenberg::HeisLattice(a);
}

Json to_json(const heisenberg::Histogram& h) {
  Json counts = Json::object();
  for (const auto& [m, n] : h.counts) counts[std::to_string(m)] = n;
  Json out;
  out["multiplicity"] = std::move(counts);
  out["samples"] = h.samples;
  out["seed"] = h.seed;
  out["resampled"] = h.resampled;
  return out;
}

}  // namespace heis_json

namespace finite_json {

namespace {

Json action_to_json(const finite::FiniteAction& a) {
  Json out;
  out["side"] = a.side() == finite::Side::Left ? "left" : "right";
  out["group"] = to_json(a.group());
  out["perm"] = a.permutations();
  return out;
}

finite::FiniteAction action_from_json(const Json& j, const finite::FiniteMeasureSpace& space,
                                      finite::Side expected) {
  const Json& side = field(j, "side");
  require(side == "left" || side == "right", "'side' must be \"left\" or \"right\"");
  const auto s = side == "left" ? finite::Side::Left : finite::Side::Right;
  require(s == expected, "action side does not match its slot");
  finite::FiniteGroup group = group_from_json(field(j, "group"));
  const Json& perm = field(j, "perm");
  require(perm.is_array(), "'perm' must be an array");
  std::vector<finite::Permutation> perms;
  for (const auto& p : perm) {
    require(p.is_array(), "each permutation must be an array");
    finite::Permutation row;
    for (const auto& x : p) row.push_back(index_from_json(x, space.size(), "permutation entry"));
    perms.push_back(std::move(row));
  }
  return finite::FiniteAction(std::move(group), space, std::move(perms), s);
}

}  // namespace

Json to_json(const finite::FiniteGroup& g) {
  Json elements = Json::array();
  for (finite::Element e = 0; e < g.order(); ++e)
    elements.push_back(g.labels().size() == g.order() ? g.labels()[e] : std::to_string(e));
  Json out;
  out["elements"] = std::move(elements);
  out["table"] = g.table();
  out["identity"] = g.identity();
  return out;
}

finite::FiniteGroup group_from_json(const Json& j) {
  const Json& elements = field(j, "elements");
  require(elements.is_array() && !elements.empty(), "'elements' must be a nonempty array");
  const std::size_t n = elements.size();
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    require(e.is_string() || e.is_number_integer(), "element labels must be strings or integers");
    labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  }
  const Json& table = field(j, "table");
  require(table.is_array() && table.size() == n, "'table' must be |G| x |G|");
  finite::CayleyTable t;
  for (const auto& row : table) {
    require(row.is_array() && row.size() == n, "'table' must be |G| x |G|");
    std::vector<finite::Element> r;
    for (const auto& e : row) r.push_back(index_from_json(e, n, "table entry"));
    t.push_back(std::move(r));
  }
  return finite::FiniteGroup(std::move(t), index_from_json(field(j, "identity"), n, "identity"),
                             std::move(labels));
}

Json to_json(const finite::AtomSet& set) { return Json(set); }

finite::AtomSet atoms_from_json(const Json& j, std::size_t atom_count) {
  require(j.is_array(), "atom sets must be arrays of indices");
  std::vector<finite::Atom> atoms;
  for (const auto& a : j) atoms.push_back(index_from_json(a, atom_count, "atom index"));
  const auto set = finite::make_atom_set(atoms);
  require(set.size() == atoms.size(), "atom set lists an atom twice");
  return set;
}

Json to_json(const FiniteInstance& instance) {
  Json atoms = Json::array();
  for (const auto& w : instance.pair.space().weights()) {
    Json atom;
    atom["weight"] = io::to_json(w);
    atoms.push_back(std::move(atom));
  }
  Json out;
  out["atoms"] = std::move(atoms);
  out["left"] = action_to_json(instance.pair.left());
  out["right"] = action_to_json(instance.pair.right());
  out["X"] = to_json(instance.x);
  out["Y"] = to_json(instance.y);
  out["k"] = instance.k;
  out["eps"] = io::to_json(instance.eps);
  return out;
}

FiniteInstance instance_from_json(const Json& j) {
  const Json& atoms = field(j, "atoms");
  require(atoms.is_array() && !atoms.empty(), "'atoms' must be a nonempty array");
  std::vector<Rational> weights;
  for (const auto& a : atoms) weights.push_back(rational_from_json(field(a, "weight")));
  const finite::FiniteMeasureSpace space(std::move(weights));
  finite::ActionPair pair(action_from_json(field(j, "left"), space, finite::Side::Left),
                          action_from_json(field(j, "right"), space, finite::Side::Right));
  finite::AtomSet x = j.contains("X") ? atoms_from_json(j["X"], space.size())
                                      : finite::find_fundamental_domain(pair.left());
  finite::AtomSet y = j.contains("Y") ? atoms_from_json(j["Y"], space.size())
                                      : finite::find_fundamental_domain(pair.right());
  const std::int64_t k = j.contains("k") ? integer_from_json(j["k"]) : 1;
  require(k >= 1, "'k' must be a positive integer");
  const Rational eps = j.contains("eps") ? rational_from_json(j["eps"]) : Rational(0);
  require(eps >= 0 && eps < 1, "'eps' must lie in [0, 1)");
  return {std::move(pair), std::move(x), std::move(y), k, eps};
}

}  // namespace finite_json

}  // namespace tessella::io
