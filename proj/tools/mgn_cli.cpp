// Command-line front end. Machine-readable output goes to stdout,
// diagnostics to stderr. Exit codes: 0 ok, 1 domain error, 2 usage/parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mgn/ample_model.hpp"
#include "mgn/geometry_props.hpp"
#include "mgn/io.hpp"
#include "mgn/positivity.hpp"
#include "mgn/sampling.hpp"

using namespace mgn;
using io::Json;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

MarkedGenus ambient_from(int g, int n, const Json& doc) {
  if (g >= 0 && n >= 0) return MarkedGenus(g, n);
  if (doc.is_object() && doc.contains("g") && doc.contains("n") && doc["g"].is_number_integer() &&
      doc["n"].is_number_integer())
    return MarkedGenus(doc["g"].get<int>(), doc["n"].get<int>());
  throw ParseError("pass --g and --n or put \"g\" and \"n\" in the file");
}

struct Options {
  int g = -1, n = -1;
  std::size_t cap = kDefaultEnumerationCap;
  bool without_irr = false, raw = false;
  std::string divisor, curve, t_file, space, mode, params, spec, out, svg;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  int samples = 100;
};

void add_ambient(CLI::App* cmd, Options& o, bool required) {
  auto* g = cmd->add_option("--g", o.g, "genus");
  auto* n = cmd->add_option("--n", o.n, "number of marked points");
  if (required) {
    g->required();
    n->required();
  }
}

Json selftest(const MarkedGenus& amb, int samples, std::uint64_t seed) {
  Sampler rng(seed);
  std::size_t mgn_checks = 0, mgn_bad = 0, ps_checks = 0, ps_bad = 0, ample_hits = 0, nef_hits = 0, ps_hits = 0;
  Json bad = Json::array();
  for (int k = 0; k < samples; ++k) {
    AdjointParams p = k % 4 == 3 ? rng.on_elliptic_wall(amb) : rng.adjoint(Space::Mgn, amb);
    auto verdict = brute_force_verdict(from_adjoint(p)).status;
    bool ample = adjoint_fnef_closed_form(p, NefMode::Ample);
    bool nef = adjoint_fnef_closed_form(p, NefMode::NefEllOnly);
    mgn_checks += 2;
    ample_hits += ample;
    nef_hits += nef;
    if (ample != (verdict == PositivityStatus::FAmple) || nef != (verdict == PositivityStatus::FNefStrictExceptEll)) {
      ++mgn_bad;
      bad.push_back(io::params_to_json(p));
    }
  }
  if (!(amb.is(1, 1) || amb.is(2, 0) || amb.is(1, 2))) {
    auto Ts = enumerate_admissible(amb);
    if (Ts.size() > 64) Ts.resize(64);
    for (const auto& T : Ts)
      for (int k = 0; k < samples; ++k) {
        std::optional<AdjointParams> p;
        if (k % 2 == 1) p = rng.on_T_walls(amb, T);
        if (!p) p = rng.adjoint(Space::MgnPs, amb);
        bool closed = ps_adjoint_fnef_for_T(*p, T);
        bool brute = verdict_matches_T(from_adjoint(*p), T);
        ++ps_checks;
        ps_hits += brute;
        if (closed != brute) {
          ++ps_bad;
          bad.push_back(Json{{"params", io::params_to_json(*p)}, {"T", io::tsubset_to_json(T)}});
        }
      }
  }
  return Json{{"g", amb.g},          {"n", amb.n},         {"seed", seed},
              {"samples", samples},  {"mgn_checks", mgn_checks}, {"mgn_discrepancies", mgn_bad},
              {"ps_checks", ps_checks}, {"ps_discrepancies", ps_bad},
              {"ample_true", ample_hits}, {"nef_ell_only_true", nef_hits}, {"ps_true", ps_hits},
              {"discrepant_points", bad}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor calculus on moduli spaces of pointed curves"};
  app.require_subcommand(1);
  Options o;

  auto* indices = app.add_subcommand("indices", "boundary index sets");
  indices->require_subcommand(1);
  auto* indices_list = indices->add_subcommand("list", "list the classes of the index set");
  add_ambient(indices_list, o, true);
  indices_list->add_flag("--without-irr", o.without_irr, "omit irr");

  auto* adm = app.add_subcommand("admissible", "admissible subsets");
  adm->require_subcommand(1);
  auto* adm_count = adm->add_subcommand("count", "closed-form count");
  add_ambient(adm_count, o, true);
  auto* adm_list = adm->add_subcommand("list", "enumerate all admissible subsets");
  add_ambient(adm_list, o, true);
  adm_list->add_option("--cap", o.cap, "maximum number of unions to form");

  auto* fc = app.add_subcommand("fcurves", "F-curves");
  fc->require_subcommand(1);
  auto* fc_list = fc->add_subcommand("list", "one F-curve per intersection vector");
  add_ambient(fc_list, o, true);
  fc_list->add_flag("--raw", o.raw, "list every parameter tuple");

  auto* inter = app.add_subcommand("intersect", "intersect a divisor class with an F-curve");
  inter->add_option("--divisor", o.divisor, "DivisorClass JSON file")->required();
  inter->add_option("--curve", o.curve, "FCurve JSON file")->required();

  auto* nef = app.add_subcommand("nef", "F-nefness");
  nef->require_subcommand(1);
  auto* nef_check = nef->add_subcommand("check", "brute-force verdict, plus the closed form for adjoint classes");
  nef_check->add_option("--divisor", o.divisor, "DivisorClass JSON file")->required();
  nef_check->add_option("--space", o.space, "mgn or ps")->check(CLI::IsMember({"mgn", "ps"}));
  nef_check->add_option("--t", o.t_file, "TSubset JSON file (with --space ps)");
  nef_check->add_option("--mode", o.mode, "closed-form mode")->check(CLI::IsMember({"ample", "nef"}));

  auto* am = app.add_subcommand("ample-model", "ample models of adjoint classes");
  am->require_subcommand(1);
  auto* am_classify = am->add_subcommand("classify", "run the decision ladder");
  am_classify->add_option("--params", o.params, "AdjointParams JSON file")->required();

  auto* sw = app.add_subcommand("sweep", "classify every point of a grid");
  sw->add_option("--spec", o.spec, "GridSpec JSON file")->required();
  sw->add_option("--out", o.out, "CSV output file")->required();
  sw->add_option("--svg", o.svg, "optional SVG slice");
  sw->add_option("--threads", o.threads, "worker threads (0 = hardware)");

  auto* space = app.add_subcommand("space", "properties of the contracted spaces");
  space->require_subcommand(1);
  auto* props = space->add_subcommand("props", "Q-factoriality and the factorization");
  props->add_option("--t", o.t_file, "TSubset JSON file")->required();
  add_ambient(props, o, false);

  auto* desc = app.add_subcommand("descend", "does a class on MgnPs descend");
  desc->add_option("--divisor", o.divisor, "DivisorClass JSON file on MgnPs")->required();
  desc->add_option("--t", o.t_file, "TSubset JSON file")->required();

  auto* st = app.add_subcommand("selftest", "cross-check closed forms against brute force on random points");
  add_ambient(st, o, true);
  st->add_option("--samples", o.samples, "points per check");
  st->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*indices_list) {
      Json out = Json::array();
      for (const auto& idx : enumerate_indices(MarkedGenus(o.g, o.n), o.without_irr ? IndexScope::WithoutIrr : IndexScope::All))
        out.push_back(io::index_to_json(idx));
      emit(out);
    } else if (*adm_count) {
      std::cout << count_admissible(MarkedGenus(o.g, o.n)).get_str() << '\n';
    } else if (*adm_list) {
      Json out = Json::array();
      for (const auto& T : enumerate_admissible(MarkedGenus(o.g, o.n), o.cap)) out.push_back(io::tsubset_to_json(T));
      emit(out);
    } else if (*fc_list) {
      MarkedGenus amb(o.g, o.n);
      Json out = Json::array();
      for (const auto& C : o.raw ? enumerate_fcurves_raw(amb) : enumerate_fcurves(amb)) out.push_back(io::fcurve_to_json(C));
      emit(out);
    } else if (*inter) {
      DivisorClass L = io::divisor_from_json(io::read_file(o.divisor));
      FCurve C = io::fcurve_from_json(io::read_file(o.curve), L.ambient());
      std::cout << to_string(intersect(L, C)) << '\n';
    } else if (*nef_check) {
      DivisorClass L = io::divisor_from_json(io::read_file(o.divisor));
      bool ps = o.space == "ps" || (o.space.empty() && L.space() == Space::MgnPs);
      Json out;
      if (ps) {
        if (L.space() == Space::Mgn) L = pushforward_upsilon(L);
        TSubset T = o.t_file.empty() ? TSubset{} : io::tsubset_from_json(io::read_file(o.t_file), L.ambient());
        out = io::verdict_to_json(ps_verdict(L, T));
        if (auto p = to_adjoint(L)) out["closed_form"] = ps_adjoint_fnef_for_T(*p, T);
      } else {
        out = io::verdict_to_json(brute_force_verdict(L));
        if (!o.mode.empty()) {
          auto p = to_adjoint(L);
          if (p)
            out["closed_form"] = adjoint_fnef_closed_form(*p, o.mode == "ample" ? NefMode::Ample : NefMode::NefEllOnly);
          else
            out["closed_form"] = nullptr;
        }
      }
      emit(out);
    } else if (*am_classify) {
      emit(io::result_to_json(classify(io::params_from_json(io::read_file(o.params)))));
    } else if (*sw) {
      GridSpec grid = io::grid_from_json(io::read_file(o.spec));
      auto records = sweep(grid, o.threads);
      std::ofstream csv(o.out, std::ios::binary);
      if (!csv) throw DomainError("cannot write " + o.out);
      io::write_sweep_csv(csv, grid, records);
      if (!o.svg.empty()) {
        std::ofstream svg(o.svg, std::ios::binary);
        if (!svg) throw DomainError("cannot write " + o.svg);
        io::write_sweep_svg(svg, grid, records);
      }
      Json summary = Json::object();
      for (const auto& [label, count] : summarize(records)) summary[label] = count;
      emit(Json{{"points", records.size()}, {"labels", summary}});
    } else if (*props) {
      Json doc = io::read_file(o.t_file);
      MarkedGenus amb = ambient_from(o.g, o.n, doc);
      TSubset T = io::tsubset_from_json(doc, amb);
      emit(Json{{"q_factorial", is_q_factorial(T, amb)},
                {"q_gorenstein", is_q_gorenstein(T, amb)},
                {"factorization", io::factorization_to_json(factorize(T, amb))}});
    } else if (*desc) {
      DivisorClass L = io::divisor_from_json(io::read_file(o.divisor));
      TSubset T = io::tsubset_from_json(io::read_file(o.t_file), L.ambient());
      emit(Json{{"descends", descends(L, T)}, {"T_adm", io::tsubset_to_json(admissible_reduction(T, L.ambient()))}});
    } else if (*st) {
      emit(selftest(MarkedGenus(o.g, o.n), o.samples, o.seed));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
