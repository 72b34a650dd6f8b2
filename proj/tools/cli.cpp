// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencirc/circuits.hpp"
#include "gencirc/errors.hpp"
#include "gencirc/fan.hpp"
#include "gencirc/generic.hpp"
#include "gencirc/groebner.hpp"
#include "gencirc/io.hpp"

namespace gencirc::cli {

using nlohmann::ordered_json;

namespace {

ordered_json strings(const std::vector<Polynomial>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

ordered_json basis_json(const GroebnerBasis& g) {
  return {{"order", g.order.to_string()}, {"elements", strings(g.elements)}, {"reduced", g.reduced}};
}

ordered_json circuits_json(const CircuitsSet& cs, const PolyRing& ring) {
  ordered_json degrees = ordered_json::array();
  for (const auto& [d, list] : cs.by_degree()) {
    ordered_json cj = ordered_json::array();
    for (const auto& c : list) {
      ordered_json mons = ordered_json::array();
      for (const auto& m : c.monomials) mons.push_back(ring.monomial_to_string(m));
      cj.push_back(mons);
    }
    degrees.push_back({{"degree", d}, {"circuits", cj}});
  }
  ordered_json j;
  if (cs.truncation()) j["truncation"] = *cs.truncation();
  j["complete"] = cs.complete();
  j["count"] = cs.size();
  j["degrees"] = degrees;
  return j;
}

ordered_json cone_json(const Cone& c) {
  return {{"equalities", c.equalities()}, {"inequalities", c.inequalities()}, {"full_dimensional", c.full_dimensional()}};
}

ordered_json sketch_json(const FanSketch& s) {
  ordered_json cells = ordered_json::array();
  for (const auto& c : s.cells) {
    cells.push_back({{"initial_ideal", c.initial_ideal},
                     {"rep_weight", c.representative.entries()},
                     {"equalities", c.cone.equalities()},
                     {"inequalities", c.cone.inequalities()}});
  }
  ordered_json j{{"cells", cells}, {"box", s.box}, {"step", s.step}};
  j["seed"] = s.seed ? ordered_json(*s.seed) : ordered_json(nullptr);
  j["samples"] = s.samples;
  j["scope"] = "cells found within box";
  return j;
}

ordered_json hilbert_json(const HilbertData& h) {
  std::vector<std::size_t> quotient;
  for (std::size_t d = 0; d <= h.max_degree(); ++d) quotient.push_back(h.quotient_dim(d));
  return {{"ideal_dims", h.ideal_dims}, {"quotient_dims", quotient}, {"generator_degree", h.generator_degree}};
}

ordered_json config_json(const CommandConfig& c) {
  ordered_json j{{"command", c.command}, {"input", c.input}};
  if (c.other) j["other"] = *c.other;
  j["field"] = c.field ? ordered_json(*c.field) : ordered_json(nullptr);
  const auto& cmd = c.command;
  if (cmd == "gb") j["order"] = c.order;
  if (c.weight) j["weight"] = *c.weight;
  if (cmd == "inw" || cmd == "fan-cell" || cmd == "fan-enum" || cmd == "stab" || cmd == "ugb" || cmd == "flatfam")
    j["tie"] = c.tie;
  if (c.trunc) j["trunc"] = *c.trunc;
  if (c.degree) j["degree"] = *c.degree;
  if (c.cap) j["cap"] = *c.cap;
  if (c.lexcap) j["lexcap"] = *c.lexcap;
  if (cmd == "gcs" || cmd == "stab" || cmd == "fan-compare") {
    j["seed"] = c.seed;
    j["seed_source"] = c.seed_source;
    j["entry_bound"] = c.entry_bound;
  }
  if (cmd == "gcs") j["retries"] = c.retries;
  if (cmd == "stab") {
    j["gtrials"] = c.gtrials;
    j["btrials"] = c.btrials;
    j["identity_g"] = c.identity_g;
    j["convention"] = c.convention;
  }
  if (cmd == "fan-compare") j["mode"] = c.mode;
  if (cmd == "fan-enum" || cmd == "ugb") {
    j["box"] = c.box;
    j["step"] = c.step;
  }
  if (cmd == "flatfam") j["at"] = c.at;
  return j;
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Weight require_weight(const CommandConfig& c) {
  if (!c.weight) throw ParseError("--weight is required for " + c.command);
  return Weight::parse(*c.weight);
}

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad scalar '" + text + "'");
  q.canonicalize();
  return Scalar(q, field);
}

struct Outcome {
  ordered_json result;
  int code = 0;
  std::optional<ordered_json> error;
};

Outcome execute(const CommandConfig& c) {
  std::optional<FieldSpec> field;
  if (c.field) field = FieldSpec::parse(*c.field);
  const Ideal ideal = read_ideal_file(c.input, field);
  const auto& ring = ideal.ring();
  const RandomSpec spec{c.seed, c.entry_bound};
  const auto tie = MonomialOrder::parse(c.tie);
  Outcome out;
  auto& r = out.result;
  r["ring"] = {{"field", ring->field().to_string()}, {"vars", ring->names()}};
  r["generators"] = strings(ideal.generators());

  if (c.command == "gb") {
    auto order = c.weight ? MonomialOrder::weighted(Weight::parse(*c.weight), tie) : MonomialOrder::parse(c.order);
    r["basis"] = basis_json(ideal.groebner_basis(order));
  } else if (c.command == "inw") {
    auto w = require_weight(c);
    r["initial_ideal"] = strings(initial_ideal_w(ideal, w, tie).groebner_basis(canonical_order()).elements);
  } else if (c.command == "circuits") {
    if (!c.trunc) throw ParseError("--trunc is required for circuits");
    auto cs = circuits_truncated(ideal, *c.trunc, c.cap);
    r["circuits"] = circuits_json(cs, *ring);
    if (!cs.complete()) {
      out.code = 2;
      out.error = ordered_json{{"reason", "enumeration-truncated"},
                               {"message", "circuit enumeration truncated at size_cap"}};
    }
  } else if (c.command == "gcs") {
    if (!c.trunc) throw ParseError("--trunc is required for gcs");
    auto g = gcs_truncated(ideal, *c.trunc, spec, c.retries, c.cap);
    r["circuits"] = circuits_json(g.circuits, *ring);
    r["rounds"] = g.rounds;
    r["certifying_entry_bound"] = g.entry_bound;
    r["heuristic"] = g.heuristic;
    if (!g.circuits.complete()) {
      out.code = 2;
      out.error = ordered_json{{"reason", "enumeration-truncated"},
                               {"message", "circuit enumeration truncated at size_cap"}};
    }
  } else if (c.command == "alpha") {
    if (!c.degree) throw ParseError("--degree is required for alpha");
    auto a = alpha_vector(graded_basis(ideal, *c.degree), require_weight(c));
    r["alpha"] = {{"degree", a.degree}, {"weight", a.weight}, {"values", a.values}};
  } else if (c.command == "fan-cell") {
    auto w = require_weight(c);
    r["initial_ideal"] = strings(initial_ideal_w(ideal, w, tie).groebner_basis(canonical_order()).elements);
    r["cone"] = cone_json(cone_of(ideal, w, tie));
  } else if (c.command == "fan-enum") {
    r["fan"] = sketch_json(enumerate_fan(ideal, c.box, c.step, tie));
  } else if (c.command == "ugb") {
    auto sketch = enumerate_fan(ideal, c.box, c.step, tie);
    r["universal_basis"] = strings(universal_basis(ideal, sketch, tie));
    r["cells"] = sketch.cells.size();
    r["scope"] = "cells found within box";
  } else if (c.command == "fan-compare") {
    if (!c.other) throw ParseError("--other is required for fan-compare");
    const Ideal other = read_ideal_file(*c.other, field);
    FanCompareMode mode;
    if (c.mode == "generic") {
      mode = FanCompareMode::generic;
    } else if (c.mode == "deterministic") {
      mode = FanCompareMode::deterministic;
    } else {
      throw ParseError("--mode must be generic or deterministic");
    }
    auto cmp = generic_fan_compare(ideal, other, spec, mode, c.lexcap);
    r["other_generators"] = strings(other.generators());
    r["verdict"] = to_string(cmp.verdict);
    r["hilbert_left"] = hilbert_json(cmp.hilbert_left);
    r["hilbert_right"] = hilbert_json(cmp.hilbert_right);
    if (cmp.verdict != FanVerdict::incomparable) {
      r["lex_bound"] = cmp.bound;
      r["circuits_left"] = circuits_json(*cmp.left, *ring);
      r["circuits_right"] = circuits_json(*cmp.right, *ring);
    }
    r["heuristic"] = cmp.heuristic;
  } else if (c.command == "stab") {
    StabOptions opt;
    opt.g_trials = c.gtrials;
    opt.b_trials = c.btrials;
    opt.tie = tie;
    opt.identity_g = c.identity_g;
    if (c.convention == "column") {
      opt.b_action = Substitution::Action::column;
    } else if (c.convention == "row") {
      opt.b_action = Substitution::Action::row;
    } else {
      throw ParseError("--convention must be column or row");
    }
    auto rep = stab_check(ideal, require_weight(c), spec, opt);
    ordered_json trials = ordered_json::array();
    for (const auto& g : rep.g_trials) {
      ordered_json bs = ordered_json::array();
      for (const auto& b : g.b_trials) {
        ordered_json bj{{"b", b.b_matrix}, {"pass", b.pass}};
        if (b.witness) bj["witness"] = *b.witness;
        bs.push_back(bj);
      }
      trials.push_back({{"g", g.g_matrix}, {"initial_ideal", g.initial_ideal}, {"pass", g.pass()}, {"b_trials", bs}});
    }
    r["normalized_weight"] = rep.weight.sorted.entries();
    r["permutation"] = rep.weight.perm;
    r["shift"] = rep.weight.shift;
    r["pass"] = rep.pass();
    if (rep.trivial) r["note"] = "B_ω trivial";
    r["heuristic"] = rep.heuristic;
    r["g_trials"] = trials;
  } else if (c.command == "hf") {
    r["hilbert"] = hilbert_json(hilbert_function(ideal, c.degree.value_or(6)));
  } else if (c.command == "lexseg") {
    const auto cap = c.lexcap.value_or(default_lex_cap(ideal));
    auto lex = lex_segment(hilbert_function(ideal, cap), ring, cap);
    r["lex_segment"] = strings(lex.ideal.generators());
    r["bound"] = lex.bound;
    r["certified_at"] = lex.certified_at;
  } else if (c.command == "flatfam") {
    auto w = require_weight(c);
    auto h = homogenize_ideal_w(ideal, w, tie);
    r["family"] = {{"vars", h.ring->names()}, {"generators", strings(h.generators)}};
    ordered_json checks = ordered_json::array();
    checks.push_back({{"t", "1"}, {"equals_input", ideal_equal(specialize_t(h, Scalar::one(ring->field())), ideal)}});
    checks.push_back({{"t", "0"},
                      {"equals_initial_ideal",
                       ideal_equal(specialize_t(h, Scalar::zero(ring->field())), initial_ideal_w(ideal, w, tie))}});
    for (const auto& a_text : c.at) {
      auto a = parse_scalar(a_text, ring->field());
      auto scaled = transform(Substitution::diagonal_scaling(ring, w, a), ideal);
      checks.push_back({{"t", a.to_string()}, {"equals_scaled_input", ideal_equal(specialize_t(h, a), scaled)}});
    }
    r["specializations"] = checks;
  } else {
    throw ParseError("unknown command " + c.command);
  }
  return out;
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  ordered_json doc;
  doc["config"] = config_json(cfg);
  int code = 0;
  try {
    auto outcome = execute(cfg);
    doc["result"] = std::move(outcome.result);
    if (outcome.error) doc["error"] = *outcome.error;
    code = outcome.code;
  } catch (const CertificationFailure& e) {
    doc["error"] = {{"reason", e.reason()}, {"message", e.what()}};
    code = 2;
  } catch (const ParseError& e) {
    doc["error"] = {{"reason", "malformed-input"}, {"message", e.what()}};
    code = 1;
  } catch (const std::invalid_argument& e) {
    doc["error"] = {{"reason", "malformed-input"}, {"message", e.what()}};
    code = 1;
  } catch (const std::domain_error& e) {
    doc["error"] = {{"reason", "malformed-input"}, {"message", e.what()}};
    code = 1;
  }
  if (cfg.timestamp) doc["timestamp"] = utc_now();
  if (code == 1) err << "error: " << doc["error"]["message"].get<std::string>() << "\n";
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output) {
    std::ofstream file(*cfg.output);
    if (!file) {
      err << "error: cannot write " << *cfg.output << "\n";
      return 1;
    }
    file << text;
  } else {
    out << text;
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuits sets, weight initial ideals and Groebner fan cells of homogeneous ideals"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::optional<std::uint64_t> seed;
  bool no_timestamp = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "ideal file")->required();
    sub->add_option("--field", cfg.field, "override the field: Q or gf:p");
    sub->add_option("-o,--output", cfg.output, "write JSON here instead of stdout");
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");
  };
  auto tie = [&](CLI::App* sub) { sub->add_option("--tie", cfg.tie, "tie-break order (lex, drl)"); };
  auto randomized = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, std::string("random seed (default: $") + kSeedEnv + " or built-in)");
    sub->add_option("--bound", cfg.entry_bound, "entry bound of random matrices over Q")->check(CLI::PositiveNumber);
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  common(gb);
  tie(gb);
  auto* order_opt = gb->add_option("--order", cfg.order, "lex, drl or w:2,1,0;tie=drl");
  gb->add_option("--weight", cfg.weight, "shorthand for w:<weight> with --tie")->excludes(order_opt);

  auto* inw = app.add_subcommand("inw", "weight initial ideal");
  common(inw);
  tie(inw);
  inw->add_option("--weight", cfg.weight)->required();

  auto* circuits = app.add_subcommand("circuits", "circuits set of I truncated at a degree");
  common(circuits);
  circuits->add_option("--trunc", cfg.trunc)->required();
  circuits->add_option("--cap", cfg.cap, "largest support size enumerated")->check(CLI::PositiveNumber);

  auto* gcs = app.add_subcommand("gcs", "certified truncated generic circuits set");
  common(gcs);
  randomized(gcs);
  gcs->add_option("--trunc", cfg.trunc)->required();
  gcs->add_option("--retries", cfg.retries)->check(CLI::PositiveNumber);
  gcs->add_option("--cap", cfg.cap, "largest support size enumerated")->check(CLI::PositiveNumber);

  auto* alpha = app.add_subcommand("alpha", "alpha vector of I_d");
  common(alpha);
  alpha->add_option("--weight", cfg.weight, "non-increasing, non-negative")->required();
  alpha->add_option("--degree", cfg.degree)->required();

  auto* cell = app.add_subcommand("fan-cell", "Groebner fan cell of a weight");
  common(cell);
  tie(cell);
  cell->add_option("--weight", cfg.weight)->required();

  auto* fan_enum = app.add_subcommand("fan-enum", "Groebner fan cells met by a box of weights");
  common(fan_enum);
  tie(fan_enum);
  fan_enum->add_option("--box", cfg.box)->check(CLI::PositiveNumber);
  fan_enum->add_option("--step", cfg.step)->check(CLI::PositiveNumber);

  auto* ugb = app.add_subcommand("ugb", "union of reduced bases over the cells found in a box");
  common(ugb);
  tie(ugb);
  ugb->add_option("--box", cfg.box)->check(CLI::PositiveNumber);
  ugb->add_option("--step", cfg.step)->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("fan-compare", "compare Groebner fans through truncated circuits sets");
  common(compare);
  randomized(compare);
  compare->add_option("--other", cfg.other, "second ideal file")->required();
  compare->add_option("--mode", cfg.mode, "generic or deterministic");
  compare->add_option("--lexcap", cfg.lexcap);

  auto* stab = app.add_subcommand("stab", "check B_w-invariance of in_w(gI)");
  common(stab);
  tie(stab);
  randomized(stab);
  stab->add_option("--weight", cfg.weight)->required();
  stab->add_option("--gtrials", cfg.gtrials);
  stab->add_option("--btrials", cfg.btrials);
  stab->add_flag("--identity-g", cfg.identity_g, "use g = identity (negative control)");
  stab->add_option("--convention", cfg.convention, "action of b: column or row");

  auto* hf = app.add_subcommand("hf", "Hilbert function");
  common(hf);
  hf->add_option("--degree", cfg.degree, "largest degree (default 6)");

  auto* lexseg = app.add_subcommand("lexseg", "lex-segment ideal with the same Hilbert function");
  common(lexseg);
  lexseg->add_option("--lexcap", cfg.lexcap);

  auto* flatfam = app.add_subcommand("flatfam", "homogenized family and its specializations");
  common(flatfam);
  tie(flatfam);
  flatfam->add_option("--weight", cfg.weight)->required();
  flatfam->add_option("--at", cfg.at, "nonzero parameters a compared with D_a(I)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, err);
    out << msg.str();
    return 1;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.timestamp = !no_timestamp;
  if (seed) {
    cfg.seed = *seed;
    cfg.seed_source = "flag";
  } else if (const char* env = std::getenv(kSeedEnv)) {
    try {
      cfg.seed = std::stoull(env);
      cfg.seed_source = "env";
    } catch (const std::exception&) {
      err << "error: " << kSeedEnv << " is not an unsigned integer\n";
      return 1;
    }
  }
  return run(cfg, out, err);
}

}  // namespace gencirc::cli
