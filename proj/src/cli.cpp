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
#include "tessella/cli/cli.hpp"

#include "tessella/error.hpp"
#include "tessella/euclid/boundary.hpp"
#include "tessella/euclid/construct.hpp"
#include "tessella/finite/domains.hpp"
#include "tessella/finite/oracle.hpp"
#include "tessella/finite/transport.hpp"
#include "tessella/heisenberg/growth.hpp"
#include "tessella/io/plot.hpp"
#include "tessella/io/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace tessella::cli {

namespace {

using io::Json;
using io::Kind;

struct Options {
  std::string file;
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  std::string out;
  bool svg = false;
  bool csv = false;
  int n_max = 0;
};

struct Outcome {
  Exit exit = Exit::Ok;
  Json report;
  std::optional<std::string> svg;
  std::optional<std::string> csv;
};

Json report_header(const std::string& command, std::optional<Kind> kind) {
  Json r;
  r["schema"] = io::kReportSchema;
  r["command"] = command;
  if (kind) r["kind"] = io::kind_name(*kind);
  return r;
}

void set_verdict(Outcome& o, bool pass, Exit on_fail) {
  o.report["verdict"] = pass ? "PASS" : "FAIL";
  o.exit = pass ? Exit::Ok : on_fail;
}

void require_input(bool cond, const std::string& msg) {
  TESSELLA_REQUIRE(cond, ErrorCode::InvalidInput, msg);
}

// A constructed object failed its own verifier.
void guard(bool cond, const std::string& msg) {
  TESSELLA_REQUIRE(cond, ErrorCode::VerificationFailed, msg);
}

io::Instance load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require_input(in.good(), "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return io::parse_instance(buf.str());
}

std::vector<euclid::EucLattice> lattices_of(const Json& payload) {
  std::vector<euclid::EucLattice> out;
  if (payload.contains("lattice")) out.push_back(io::euclid_json::lattice_from_json(payload["lattice"]));
  if (payload.contains("lattices")) {
    require_input(payload["lattices"].is_array(), "'lattices' must be an array");
    for (const auto& l : payload["lattices"]) out.push_back(io::euclid_json::lattice_from_json(l));
  }
  require_input(!out.empty(), "payload needs 'lattice' or 'lattices'");
  return out;
}

heisenberg::HeisLattice heis_lattice_of(const Json& payload) {
  return payload.contains("A") ? io::heis_json::lattice_from_json(payload)
                               : heisenberg::HeisLattice::standard();
}

std::vector<std::string> region_list_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json ratios_report(const euclid::TranslationReport& tr) {
  Json r = Json::object();
  r["ratios"] = io::to_json(tr.ratios);
  if (tr.offending) r["offending"] = Json::array({tr.offending->first, tr.offending->second});
  return r;
}

Json block_report(const finite::ConditionReport& cr) {
  Json blocks = Json::array();
  for (const auto& b : cr.blocks) {
    Json e;
    e["block"] = io::finite_json::to_json(b.block);
    e["in_x"] = io::to_json(b.in_x);
    e["in_y"] = io::to_json(b.in_y);
    e["holds"] = b.holds;
    blocks.push_back(std::move(e));
  }
  return blocks;
}

Json witness_json(const finite::Verdict& v) {
  Json w;
  w["atom"] = v.witness->atom;
  w["count"] = v.witness->count;
  return w;
}

// covol ---------------------------------------------------------------------

Outcome cmd_covol(const Options& opt) {
  const auto inst = load(opt.file);
  Outcome o{Exit::Ok, report_header("covol", inst.kind), {}, {}};
  if (inst.kind == Kind::Euclidean) {
    const auto ls = lattices_of(inst.payload);
    if (ls.size() == 1) {
      o.report["covolume"] = io::to_json(euclid::covolume(ls[0]));
    } else {
      Json all = Json::array();
      for (const auto& l : ls) all.push_back(io::to_json(euclid::covolume(l)));
      o.report["covolumes"] = std::move(all);
    }
  } else if (inst.kind == Kind::Heisenberg) {
    o.report["covolume"] = io::to_json(heisenberg::lattice_covolume(heis_lattice_of(inst.payload)));
  } else {
    throw Error(ErrorCode::InvalidInput, "covol needs a euclidean or heisenberg instance");
  }
  o.report["verdict"] = "PASS";
  return o;
}

// common-fd -----------------------------------------------------------------

Outcome finite_common_fd(const std::string& command, const io::Instance& inst) {
  const auto fi = io::finite_json::instance_from_json(inst.payload);
  Outcome o{Exit::Ok, report_header(command, inst.kind), {}, {}};
  const auto cond = finite::check_condition(fi.pair, fi.x, fi.y, 1, Rational(0),
                                            finite::ConditionMode::Equality);
  if (!cond.holds) {
    set_verdict(o, false, Exit::Obstruction);
    o.report["blocks"] = block_report(cond);
    return o;
  }
  const auto z = finite::construct_common_fd(fi.pair, fi.x, fi.y);
  guard(finite::verify_fundamental_domain(fi.pair.left(), z).ok &&
            finite::verify_fundamental_domain(fi.pair.right(), z).ok,
        "constructed set is not a common fundamental domain");
  set_verdict(o, true, Exit::Obstruction);
  o.report["domain"] = io::finite_json::to_json(z);
  o.report["measure"] = io::to_json(fi.pair.space().measure(z));
  return o;
}

Outcome cmd_common_fd(const Options& opt) {
  const auto inst = load(opt.file);
  Outcome o{Exit::Ok, report_header("common-fd", inst.kind), {}, {}};
  switch (inst.kind) {
    case Kind::Euclidean: {
      const auto ls = lattices_of(inst.payload);
      require_input(ls.size() == 2, "common-fd needs exactly two lattices");
      const Rational c1 = euclid::covolume(ls[0]), c2 = euclid::covolume(ls[1]);
      o.report["covolumes"] = Json::array({io::to_json(c1), io::to_json(c2)});
      if (c1 != c2) {
        set_verdict(o, false, Exit::Obstruction);
        return o;
      }
      const auto r = euclid::common_fd_commensurable(ls[0], ls[1]);
      guard(euclid::verify_tiling_exact(r, ls[0]).ok && euclid::verify_tiling_exact(r, ls[1]).ok &&
                r.measure() == c1,
            "constructed region is not a common fundamental domain");
      set_verdict(o, true, Exit::Obstruction);
      o.report["measure"] = io::to_json(r.measure());
      o.report["region"] = io::euclid_json::to_json(r);
      if (r.dim() == 2) o.svg = io::region_svg({r});
      return o;
    }
    case Kind::TranslationSystem: {
      const auto ts = io::euclid_json::translation_from_json(inst.payload);
      const auto tr = euclid::translation_ratios(ts);
      o.report.update(ratios_report(tr));
      if (!tr.pass) {
        set_verdict(o, false, Exit::Obstruction);
        return o;
      }
      const auto domains = euclid::translation_system_common_fd(ts);
      Json regions = Json::array();
      for (std::size_t c = 0; c < domains.size(); ++c) {
        guard(euclid::verify_tiling_exact(domains[c], ts.gamma_lattice(c)).ok &&
                  euclid::verify_tiling_exact(domains[c], ts.lambda_lattice(c)).ok,
              "component " + std::to_string(c) + " is not a common fundamental domain");
        regions.push_back(io::euclid_json::to_json(domains[c]));
      }
      set_verdict(o, true, Exit::Obstruction);
      o.report["domains"] = std::move(regions);
      if (ts.rank() == 2) o.svg = io::region_svg(domains);
      return o;
    }
    case Kind::Finite:
      return finite_common_fd("common-fd", inst);
    case Kind::Heisenberg:
      break;
  }
  throw Error(ErrorCode::InvalidInput, "common-fd does not take heisenberg instances");
}

// verify --------------------------------------------------------------------

Outcome cmd_verify(const Options& opt) {
  const auto inst = load(opt.file);
  Outcome o{Exit::Ok, report_header("verify", inst.kind), {}, {}};
  if (inst.kind == Kind::Euclidean) {
    require_input(inst.payload.contains("region"), "verify needs a 'region'");
    const auto r = io::euclid_json::region_from_json(inst.payload["region"]);
    bool all = true;
    Json results = Json::array();
    for (const auto& l : lattices_of(inst.payload)) {
      const auto v = euclid::verify_tiling_exact(r, l);
      Json e;
      e["tiles"] = v.ok;
      if (!v.ok) {
        e["witness"] = io::to_json(*v.witness);
        e["multiplicity"] = v.multiplicity;
      }
      all = all && v.ok;
      results.push_back(std::move(e));
    }
    set_verdict(o, all, Exit::VerificationFailed);
    o.report["measure"] = io::to_json(r.measure());
    o.report["results"] = std::move(results);
    if (r.dim() == 2) o.svg = io::region_svg({r});
    return o;
  }
  if (inst.kind == Kind::Finite) {
    const auto fi = io::finite_json::instance_from_json(inst.payload);
    require_input(inst.payload.contains("domain"), "verify needs a 'domain'");
    const auto z = io::finite_json::atoms_from_json(inst.payload["domain"], fi.pair.space().size());
    Json results = Json::object();
    bool all = true;
    for (const auto* a : {&fi.pair.left(), &fi.pair.right()}) {
      const auto v = finite::verify_fundamental_domain(*a, z);
      Json e;
      e["tiles"] = v.ok;
      if (!v.ok) e["witness"] = witness_json(v);
      results[a == &fi.pair.left() ? "left" : "right"] = std::move(e);
      all = all && v.ok;
    }
    set_verdict(o, all, Exit::VerificationFailed);
    o.report["results"] = std::move(results);
    return o;
  }
  throw Error(ErrorCode::InvalidInput, "verify needs a euclidean or finite instance");
}

// check ---------------------------------------------------------------------

Outcome finite_check(const std::string& command, const io::Instance& inst) {
  const auto fi = io::finite_json::instance_from_json(inst.payload);
  Outcome o{Exit::Ok, report_header(command, inst.kind), {}, {}};
  const auto cr = finite::check_condition(fi.pair, fi.x, fi.y, fi.k, fi.eps,
                                          finite::ConditionMode::Equality);
  set_verdict(o, cr.holds, Exit::Obstruction);
  o.report["factor"] = io::to_json(cr.factor);
  o.report["blocks"] = block_report(cr);
  return o;
}

Outcome cmd_check(const Options& opt) {
  const auto inst = load(opt.file);
  Outcome o{Exit::Ok, report_header("check", inst.kind), {}, {}};
  switch (inst.kind) {
    case Kind::Finite:
      return finite_check("check", inst);
    case Kind::TranslationSystem: {
      const auto ts = io::euclid_json::translation_from_json(inst.payload);
      euclid::TranslationReport tr;
      if (inst.payload.contains("x") || inst.payload.contains("y")) {
        std::vector<euclid::FrameRegion> x, y;
        require_input(inst.payload.contains("x") && inst.payload.contains("y") &&
                          inst.payload["x"].is_array() && inst.payload["y"].is_array(),
                      "'x' and 'y' must both be region arrays");
        for (const auto& r : inst.payload["x"]) x.push_back(io::euclid_json::region_from_json(r));
        for (const auto& r : inst.payload["y"]) y.push_back(io::euclid_json::region_from_json(r));
        tr = euclid::translation_system_check(ts, x, y);
      } else {
        tr = euclid::translation_ratios(ts);
      }
      o.report.update(ratios_report(tr));
      set_verdict(o, tr.pass, Exit::Obstruction);
      return o;
    }
    case Kind::Euclidean: {
      const auto ls = lattices_of(inst.payload);
      require_input(ls.size() == 2, "check needs exactly two lattices");
      const Rational c1 = euclid::covolume(ls[0]), c2 = euclid::covolume(ls[1]);
      o.report["covolumes"] = Json::array({io::to_json(c1), io::to_json(c2)});
      o.report["ratio"] = io::to_json(c1 / c2);
      set_verdict(o, c1 == c2, Exit::Obstruction);
      return o;
    }
    case Kind::Heisenberg:
      break;
  }
  throw Error(ErrorCode::InvalidInput, "check does not take heisenberg instances");
}

// growth --------------------------------------------------------------------

Outcome cmd_growth(const Options& opt) {
  Outcome o{Exit::Ok, report_header("growth", std::nullopt), {}, {}};
  const auto sizes = heisenberg::discrete_ball_growth(opt.n_max);
  bool increasing = true;
  for (std::size_t n = 1; n < sizes.size(); ++n) increasing = increasing && sizes[n] > sizes[n - 1];
  o.report["n_max"] = opt.n_max;
  o.report["sizes"] = sizes;
  if (sizes.size() >= 2) o.report["exponent"] = heisenberg::growth_exponent(sizes);
  set_verdict(o, increasing, Exit::VerificationFailed);
  std::vector<std::vector<std::string>> rows;
  io::Series s{"n", {}, {}};
  for (std::size_t n = 0; n < sizes.size(); ++n) {
    rows.push_back({std::to_string(n), std::to_string(sizes[n])});
    s.x.push_back(static_cast<double>(n));
    s.y.push_back(static_cast<double>(sizes[n]));
  }
  o.csv = io::csv({"n", "ball_size"}, rows);
  o.svg = io::line_plot_svg("|B_n| in the word metric on H(Z)", s);
  return o;
}

// boundary ------------------------------------------------------------------

Outcome cmd_boundary(const Options& opt) {
  const auto inst = load(opt.file);
  require_input(inst.kind == Kind::Euclidean, "boundary needs a euclidean instance");
  Outcome o{Exit::Ok, report_header("boundary", inst.kind), {}, {}};
  const Json& p = inst.payload;
  const auto ls = lattices_of(p);
  require_input(ls.size() == 1, "boundary needs exactly one lattice");
  const auto& l = ls[0];
  const auto x = p.contains("x") ? io::euclid_json::region_from_json(p["x"])
                                 : euclid::fundamental_parallelepiped(l);

  std::vector<std::string> labels;
  std::vector<euclid::FrameRegion> regions;
  if (p.contains("regions")) {
    require_input(p["regions"].is_array() && !p["regions"].empty(),
                  "'regions' must be a nonempty array");
    for (const auto& r : p["regions"]) {
      regions.push_back(io::euclid_json::region_from_json(r));
      labels.push_back(std::to_string(regions.size()));
    }
  } else {
    require_input(p.contains("region") && p.contains("scales"),
                  "boundary needs 'regions', or 'region' with 'scales'");
    const auto a = io::euclid_json::region_from_json(p["region"]);
    const auto scales = io::rationals_from_json(p["scales"]);
    for (const auto& t : scales) regions.push_back(euclid::dilate(a, t));
    labels = region_list_strings(scales);
  }

  Json rows = Json::array();
  std::vector<std::vector<std::string>> csv_rows;
  io::Series s{"n", {}, {}};
  std::optional<Rational> last;
  bool decreasing = true;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto count = p.contains("x") ? euclid::boundary_count(l, x, regions[i])
                                       : euclid::boundary_count(l, regions[i]);
    const Rational m = regions[i].measure();
    require_input(m > 0, "regions must have positive measure");
    const Rational ratio = Rational(count.boundary) / m;
    if (last && !(ratio < *last)) decreasing = false;
    last = ratio;
    Json row;
    row["n"] = labels[i];
    row["boundary"] = count.boundary;
    row["interior"] = count.interior;
    row["measure"] = io::to_json(m);
    row["ratio"] = io::to_json(ratio);
    rows.push_back(std::move(row));
    csv_rows.push_back({labels[i], std::to_string(count.boundary), std::to_string(count.interior),
                        to_string(m), to_string(ratio)});
    s.x.push_back(static_cast<double>(i + 1));
    s.y.push_back(to_double(ratio));
  }
  o.report["rows"] = std::move(rows);
  o.report["decreasing"] = decreasing;
  o.report["verdict"] = "PASS";
  o.csv = io::csv({"n", "boundary", "interior", "measure", "ratio"}, csv_rows);
  o.svg = io::line_plot_svg("N_b / m(A)", s);
  return o;
}

// finite --------------------------------------------------------------------

io::Instance load_finite(const Options& opt) {
  auto inst = load(opt.file);
  require_input(inst.kind == Kind::Finite, "finite subcommands need a finite instance");
  return inst;
}

Outcome cmd_finite_check(const Options& opt) { return finite_check("finite check", load_finite(opt)); }

Outcome cmd_finite_construct(const Options& opt) {
  const auto inst = load_finite(opt);
  const auto fi = io::finite_json::instance_from_json(inst.payload);
  if (fi.k == 1 && fi.eps == 0) return finite_common_fd("finite construct", inst);
  Outcome o{Exit::Ok, report_header("finite construct", inst.kind), {}, {}};
  const auto cr = finite::check_condition(fi.pair, fi.x, fi.y, fi.k, fi.eps,
                                          finite::ConditionMode::Equality);
  if (!cr.holds) {
    set_verdict(o, false, Exit::Obstruction);
    o.report["factor"] = io::to_json(cr.factor);
    o.report["blocks"] = block_report(cr);
    return o;
  }
  const auto fam = finite::construct_k_epsilon(fi.pair, fi.x, fi.y, fi.k, fi.eps);
  const auto& space = fi.pair.space();
  for (const auto& d : fam.domains)
    guard(finite::verify_fundamental_domain(fi.pair.right(), d).ok,
          "a constructed F_i is not a right fundamental domain");
  guard(finite::verify_packing(fi.pair.right(), {fam.remainder}).ok,
        "F_eps does not pack under the right action");
  guard(finite::verify_fundamental_domain(fi.pair.left(), fam.union_set()).ok,
        "the union is not a left fundamental domain");
  guard(space.measure(fam.remainder) == fi.eps * space.measure(fi.y), "m(F_eps) != eps m(Y)");
  set_verdict(o, true, Exit::Obstruction);
  Json domains = Json::array();
  for (const auto& d : fam.domains) domains.push_back(io::finite_json::to_json(d));
  o.report["k"] = fi.k;
  o.report["eps"] = io::to_json(fi.eps);
  o.report["domains"] = std::move(domains);
  o.report["remainder"] = io::finite_json::to_json(fam.remainder);
  o.report["remainder_measure"] = io::to_json(space.measure(fam.remainder));
  o.report["union"] = io::finite_json::to_json(fam.union_set());
  return o;
}

Outcome cmd_finite_oracle(const Options& opt) {
  const auto inst = load_finite(opt);
  const auto fi = io::finite_json::instance_from_json(inst.payload);
  Outcome o{Exit::Ok, report_header("finite oracle", inst.kind), {}, {}};
  const bool exists = fi.k == 1 && fi.eps == 0
                          ? finite::brute_force_common_fd_exists(fi.pair)
                          : finite::brute_force_k_epsilon_exists(fi.pair, fi.k, fi.eps);
  o.report["k"] = fi.k;
  o.report["eps"] = io::to_json(fi.eps);
  o.report["exists"] = exists;
  set_verdict(o, exists, Exit::Obstruction);
  return o;
}

// heis ----------------------------------------------------------------------

io::Instance load_heis(const Options& opt) {
  auto inst = load(opt.file);
  require_input(inst.kind == Kind::Heisenberg, "heis subcommands need a heisenberg instance");
  return inst;
}

Outcome cmd_heis_mul(const Options& opt) {
  const auto inst = load_heis(opt);
  Outcome o{Exit::Ok, report_header("heis mul", inst.kind), {}, {}};
  require_input(inst.payload.contains("points") && inst.payload["points"].is_array() &&
                    !inst.payload["points"].empty(),
                "heis mul needs a nonempty 'points' array");
  heisenberg::Point g;
  for (const auto& p : inst.payload["points"]) g = g * io::heis_json::point_from_json(p);
  o.report["product"] = io::heis_json::to_json(g);
  o.report["verdict"] = "PASS";
  return o;
}

Outcome cmd_heis_exp(const Options& opt) {
  const auto inst = load_heis(opt);
  Outcome o{Exit::Ok, report_header("heis exp", inst.kind), {}, {}};
  require_input(inst.payload.contains("vector"), "heis exp needs a 'vector'");
  const auto v = io::heis_json::vec_from_json(inst.payload["vector"]);
  const auto g = heisenberg::heis_exp(v);
  guard(heisenberg::heis_log(g) == v, "log does not invert exp");
  o.report["point"] = io::heis_json::to_json(g);
  o.report["verdict"] = "PASS";
  return o;
}

heisenberg::ActionSide side_of(const Json& payload, heisenberg::ActionSide fallback) {
  if (!payload.contains("side")) return fallback;
  const Json& s = payload["side"];
  require_input(s == "left" || s == "right", "'side' must be \"left\" or \"right\"");
  return s == "left" ? heisenberg::ActionSide::Left : heisenberg::ActionSide::Right;
}

Outcome cmd_heis_reduce(const Options& opt) {
  const auto inst = load_heis(opt);
  Outcome o{Exit::Ok, report_header("heis reduce", inst.kind), {}, {}};
  require_input(inst.payload.contains("point"), "heis reduce needs a 'point'");
  const auto l = heis_lattice_of(inst.payload);
  const auto g = io::heis_json::point_from_json(inst.payload["point"]);
  const auto side = side_of(inst.payload, heisenberg::ActionSide::Left);
  const auto red = side == heisenberg::ActionSide::Left ? heisenberg::reduce_left(g, l)
                                                        : heisenberg::reduce_right(g, l);
  o.report["side"] = side == heisenberg::ActionSide::Left ? "left" : "right";
  o.report["gamma"] = io::heis_json::to_json(red.gamma);
  o.report["coords"] = Json::array(
      {to_string(red.coords[0]), to_string(red.coords[1]), to_string(red.coords[2])});
  o.report["omega"] = io::heis_json::to_json(red.omega);
  o.report["verdict"] = "PASS";
  return o;
}

Outcome cmd_heis_covol(const Options& opt) {
  const auto inst = load_heis(opt);
  Outcome o{Exit::Ok, report_header("heis covol", inst.kind), {}, {}};
  o.report["covolume"] = io::to_json(heisenberg::lattice_covolume(heis_lattice_of(inst.payload)));
  o.report["verdict"] = "PASS";
  return o;
}

Outcome cmd_heis_mc_verify(const Options& opt) {
  const auto inst = load_heis(opt);
  const Json& p = inst.payload;
  Outcome o{Exit::Ok, report_header("heis mc-verify", inst.kind), {}, {}};
  const auto l = heis_lattice_of(p);
  std::string type = "malcev";
  std::optional<heisenberg::Candidate> cand;
  if (p.contains("candidate")) {
    const Json& c = p["candidate"];
    require_input(c.contains("type") && c["type"].is_string(), "candidate needs a 'type'");
    type = c["type"].get<std::string>();
    if (type == "box") {
      require_input(c.contains("lo") && c.contains("hi"), "box candidate needs 'lo' and 'hi'");
      const auto lo = io::rationals_from_json(c["lo"]), hi = io::rationals_from_json(c["hi"]);
      require_input(lo.size() == 3 && hi.size() == 3, "box corners need three coordinates");
      cand = heisenberg::box_candidate({lo[0], lo[1], lo[2]}, {hi[0], hi[1], hi[2]});
    } else if (type == "psi") {
      cand = heisenberg::psi_image_of_cube();
    } else {
      require_input(type == "malcev", "candidate type must be malcev, box or psi");
    }
  }
  if (!cand) cand = heisenberg::malcev_cell(l);
  heisenberg::Window w{{Rational(-2), Rational(-2), Rational(-4)},
                       {Rational(2), Rational(2), Rational(4)}};
  if (p.contains("window")) {
    const Json& win = p["window"];
    require_input(win.contains("lo") && win.contains("hi"), "window needs 'lo' and 'hi'");
    const auto lo = io::rationals_from_json(win["lo"]), hi = io::rationals_from_json(win["hi"]);
    require_input(lo.size() == 3 && hi.size() == 3, "window corners need three coordinates");
    w = {{lo[0], lo[1], lo[2]}, {hi[0], hi[1], hi[2]}};
  }
  const auto side = side_of(p, heisenberg::ActionSide::Left);
  heisenberg::SamplingOptions so;
  so.samples = opt.samples;
  so.seed = opt.seed;
  so.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto h = heisenberg::mc_verify_tiling(*cand, side, l, w, so);
  o.report["candidate"] = type;
  o.report["side"] = side == heisenberg::ActionSide::Left ? "left" : "right";
  o.report["histogram"] = io::heis_json::to_json(h);
  set_verdict(o, h.all_one(), Exit::VerificationFailed);
  return o;
}

// ---------------------------------------------------------------------------

Exit exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConditionFails:
    case ErrorCode::CovolumeMismatch:
    case ErrorCode::NonRationalRatio:
    case ErrorCode::Incommensurable:
      return Exit::Obstruction;
    case ErrorCode::VerificationFailed:
      return Exit::VerificationFailed;
    default:
      return Exit::InvalidInput;
  }
}

bool write_file(const std::filesystem::path& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::function<Outcome(const Options&)> action;
  std::string command;

  CLI::App app{"Exact fundamental domains and tilings",
               "tessella"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opt.seed, "Monte Carlo seed");
  app.add_option("--samples", opt.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out, "Write the report here; plots go next to it");
  app.add_flag("--svg", opt.svg, "Also write an SVG plot (needs --out)");
  app.add_flag("--csv", opt.csv, "Also write a CSV series (needs --out)");

  auto bind = [&](CLI::App* sub, std::string name, Outcome (*fn)(const Options&), bool file) {
    if (file) sub->add_option("file", opt.file, "Instance JSON")->required();
    sub->fallthrough();
    sub->callback([&, name = std::move(name), fn] {
      command = name;
      action = fn;
    });
  };
  bind(app.add_subcommand("covol", "Exact covolume of a lattice"), "covol", cmd_covol, true);
  bind(app.add_subcommand("common-fd", "Construct a common fundamental domain"), "common-fd",
       cmd_common_fd, true);
  bind(app.add_subcommand("verify", "Verify that a region tiles"), "verify", cmd_verify, true);
  bind(app.add_subcommand("check", "Evaluate the transport condition"), "check", cmd_check, true);
  auto* growth = app.add_subcommand("growth", "Ball sizes in H(Z)");
  growth->add_option("n_max", opt.n_max, "Largest radius")->required();
  bind(growth, "growth", cmd_growth, false);
  bind(app.add_subcommand("boundary", "Boundary counts of a region family"), "boundary",
       cmd_boundary, true);

  auto* fin = app.add_subcommand("finite", "Finite measure-preserving actions");
  fin->require_subcommand(1);
  fin->fallthrough();
  bind(fin->add_subcommand("check", "Transport condition"), "finite check", cmd_finite_check,
       true);
  bind(fin->add_subcommand("construct", "Common or (k, eps) domains"), "finite construct",
       cmd_finite_construct, true);
  bind(fin->add_subcommand("oracle", "Exhaustive existence search"), "finite oracle",
       cmd_finite_oracle, true);

  auto* heis = app.add_subcommand("heis", "Heisenberg group");
  heis->require_subcommand(1);
  heis->fallthrough();
  bind(heis->add_subcommand("mul", "Product of points"), "heis mul", cmd_heis_mul, true);
  bind(heis->add_subcommand("exp", "Exponential of a Lie algebra vector"), "heis exp",
       cmd_heis_exp, true);
  bind(heis->add_subcommand("reduce", "Reduce a point into the lattice cell"), "heis reduce",
       cmd_heis_reduce, true);
  bind(heis->add_subcommand("covol", "Covolume of a lattice"), "heis covol", cmd_heis_covol,
       true);
  bind(heis->add_subcommand("mc-verify", "Monte Carlo tiling check"), "heis mc-verify",
       cmd_heis_mc_verify, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(Exit::Ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(Exit::Ok);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(Exit::InvalidInput);
  }
  if ((opt.svg || opt.csv) && opt.out.empty()) {
    err << "error: --svg and --csv need --out\n";
    return static_cast<int>(Exit::InvalidInput);
  }

  Outcome o;
  try {
    o = action(opt);
  } catch (const Error& e) {
    const Exit code = exit_for(e.code());
    err << "error: " << e.what() << '\n';
    if (code == Exit::InvalidInput) return static_cast<int>(code);
    o.exit = code;
    o.report = report_header(command, std::nullopt);
    o.report["verdict"] = "FAIL";
    o.report["error"] = std::string(to_string(e.code()));
  } catch (const Json::exception& e) {
    err << "error: malformed instance: " << e.what() << '\n';
    return static_cast<int>(Exit::InvalidInput);
  }

  if (opt.svg && !o.svg) {
    err << "error: " << command << " has no SVG output\n";
    return static_cast<int>(Exit::InvalidInput);
  }
  if (opt.csv && !o.csv) {
    err << "error: " << command << " has no CSV output\n";
    return static_cast<int>(Exit::InvalidInput);
  }
  const std::string text = o.report.dump(2) + "\n";
  if (opt.out.empty()) {
    out << text;
  } else {
    const std::filesystem::path path(opt.out);
    if (!write_file(path, text, err)) return static_cast<int>(Exit::InvalidInput);
    if (opt.svg && !write_file(std::filesystem::path(path).replace_extension(".svg"), *o.svg, err))
      return static_cast<int>(Exit::InvalidInput);
    if (opt.csv && !write_file(std::filesystem::path(path).replace_extension(".csv"), *o.csv, err))
      return static_cast<int>(Exit::InvalidInput);
  }
  return static_cast<int>(o.exit);
}

}  // namespace tessella::cli
