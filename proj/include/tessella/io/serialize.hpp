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

// JSON forms of the exact objects. Exact numbers are "p/q" strings; plain
// JSON integers are accepted on input, floats never are.
#pragma once

#include "tessella/euclid/lattice.hpp"
#include "tessella/euclid/region.hpp"
#include "tessella/euclid/translation.hpp"
#include "tessella/finite/action.hpp"
#include "tessella/heisenberg/group.hpp"
#include "tessella/heisenberg/lattice.hpp"
#include "tessella/heisenberg/montecarlo.hpp"
#include "tessella/rational.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tessella::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFiniteSchema = "tessella-finite/1";
inline constexpr std::string_view kEuclidSchema = "tessella-euclid/1";
inline constexpr std::string_view kTranslationSchema = "tessella-translation/1";
inline constexpr std::string_view kHeisSchema = "tessella-heis/1";
inline constexpr std::string_view kReportSchema = "tessella-report/1";

enum class Kind { Finite, Euclidean, TranslationSystem, Heisenberg };

std::string_view kind_name(Kind kind);
std::string_view kind_schema(Kind kind);

/// Parsed envelope {"schema", "kind", "payload"}; the schema must match the kind.
struct Instance {
  Kind kind;
  Json payload;
};

Instance parse_instance(std::string_view text);
Json instance_to_json(Kind kind, Json payload);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
std::int64_t integer_from_json(const Json& j);

Json to_json(const std::vector<Rational>& v);
Json to_json(const RVector& v);
std::vector<Rational> rationals_from_json(const Json& j);
RVector vector_from_json(const Json& j);

/// Row-major.
Json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const Json& j);

/// Matrices as lists of column vectors, the Euclidean convention.
Json columns_to_json(const RMatrix& m);
RMatrix columns_from_json(const Json& j);

namespace euclid_json {

Json to_json(const euclid::EucLattice& l);
euclid::EucLattice lattice_from_json(const Json& j);

Json to_json(const euclid::FrameRegion& r);
euclid::FrameRegion region_from_json(const Json& j);

Json to_json(const euclid::TranslationSystem& ts);
euclid::TranslationSystem translation_from_json(const Json& j);

}  // namespace euclid_json

namespace heis_json {

Json to_json(const heisenberg::Point& g);
heisenberg::Point point_from_json(const Json& j);

Json to_json(const heisenberg::Vec& v);
heisenberg::Vec vec_from_json(const Json& j);

Json to_json(const heisenberg::HeisLattice& l);
heisenberg::HeisLattice lattice_from_json(const Json& j);

Json to_json(const heisenberg::Histogram& h);

}  // namespace heis_json

namespace finite_json {

/// A pair of actions on one weighted atom space plus the data of the
/// transport condition. X and Y default to the first fundamental domains
/// found for the left and right actions.
struct FiniteInstance {
  finite::ActionPair pair;
  finite::AtomSet x;
  finite::AtomSet y;
  std::int64_t k = 1;
  Rational eps;
};

Json to_json(const finite::FiniteGroup& g);
finite::FiniteGroup group_from_json(const Json& j);

Json to_json(const FiniteInstance& instance);
FiniteInstance instance_from_json(const Json& j);

Json to_json(const finite::AtomSet& set);
finite::AtomSet atoms_from_json(const Json& j, std::size_t atom_count);

}  // namespace finite_json

}  // namespace tessella::io
