#include "cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "acceptance/criteria.hpp"
#include "zakframe/constructions.hpp"
#include "zakframe/io.hpp"
#include "zakframe/repn.hpp"
#include "zakframe/sispace.hpp"
#include "zakframe/zak.hpp"

namespace zakframe::cli {

namespace {

using io::json;

struct Config {
  std::string group_path;
  std::string f_path;
  std::string z_path;
  std::string generators_path;
  std::string out_path;
  std::string alpha;
  int x = 0;
  int q = 7;
  int d = 2;
  std::uint64_t seed = 0;
  int restarts = 200;
  int max_iters = 5000;
  int threads = 0;
  double tol = 0.0;
  int only = 0;
};

void emit(const json& doc, const Config& cfg, std::ostream& out) {
  if (cfg.out_path.empty())
    out << doc.dump(2) << '\n';
  else
    io::write_file(cfg.out_path, doc);
}

GroupFunction load_function(const InductionSetting& s, const std::string& path) {
  CVector v = io::parse_vector(io::read_file(path), path);
  if (static_cast<int>(v.size()) != s.group_order())
    throw io::ParseError(path, "function has " + std::to_string(v.size()) + " values, group has " +
                                   std::to_string(s.group_order()) + " elements");
  return GroupFunction(std::move(v));
}

int parse_alpha(const InductionSetting& s, const std::string& text) {
  std::vector<int> e;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      e.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw io::ParseError("--alpha", "expected comma-separated integers");
    }
  }
  const auto& factors = s.subgroup.subgroup().factors();
  if (e.size() != factors.size()) throw io::ParseError("--alpha", "needs one exponent per factor of H");
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = ((e[i] % factors[i]) + factors[i]) % factors[i];
  return s.character_index(Character{e});
}

int cmd_zak(const Config& cfg, std::ostream& out) {
  const InductionSetting s = io::parse_group(io::read_file(cfg.group_path));
  emit(io::to_json(zak_right(s, load_function(s, cfg.f_path))), cfg, out);
  return kOk;
}

int cmd_inv_zak(const Config& cfg, std::ostream& out) {
  const InductionSetting s = io::parse_group(io::read_file(cfg.group_path));
  const ZakArray z = io::parse_zak(io::read_file(cfg.z_path), cfg.z_path);
  if (z.num_characters() != s.num_characters() || z.fiber_size() != s.transversal_size())
    throw io::ParseError(cfg.z_path + "/data", "shape does not match the group");
  if (z.reps != s.transversal.reps()) throw io::ParseError(cfg.z_path + "/reps", "transversal differs from the group's");
  emit(io::to_json(zak_inverse(s, z).span()), cfg, out);
  return kOk;
}

int cmd_induced(const Config& cfg, std::ostream& out) {
  const InductionSetting s = io::parse_group(io::read_file(cfg.group_path));
  if (cfg.x < 0 || cfg.x >= s.group_order()) throw io::ParseError("--x", "element index out of range");
  const int alpha = parse_alpha(s, cfg.alpha);
  emit(io::to_json(induced_rep_matrix(s, alpha, cfg.x)), cfg, out);
  return kOk;
}

int cmd_si_bounds(const Config& cfg, std::ostream& out) {
  const InductionSetting s = io::parse_group(io::read_file(cfg.group_path));
  const std::vector<CVector> raw = io::parse_vectors(io::read_file(cfg.generators_path), cfg.generators_path);
  std::vector<GroupFunction> gens;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (static_cast<int>(raw[i].size()) != s.group_order())
      throw io::ParseError(cfg.generators_path + "/" + std::to_string(i), "wrong number of values");
    gens.emplace_back(raw[i]);
  }
  const FiberBounds fb = fiber_frame_bounds(s, gens);
  const RangeFunction range = range_of_generators(s, gens);
  json doc = io::to_json(fb);
  doc["characters"] = zak_right(s, gens.front()).characters;
  doc["range"] = io::to_json(range);
  emit(doc, cfg, out);
  return kOk;
}

int cmd_paley(const Config& cfg, std::ostream& out) {
  const PaleyReport r = paley_etf(build_affine(cfg.q), cfg.tol > 0 ? cfg.tol : 1e-10);
  emit(io::to_json(r), cfg, out);
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_heisenberg_verify(const Config& cfg, std::ostream& out) {
  const CVector f = io::parse_vector(io::read_file(cfg.f_path), cfg.f_path);
  if (static_cast<int>(f.size()) != cfg.d) throw io::ParseError(cfg.f_path, "fiducial must have d entries");
  const SicCandidate c = verify_sic(build_heisenberg(cfg.d), f, cfg.tol > 0 ? cfg.tol : 1e-10);
  emit(io::to_json(c), cfg, out);
  return c.certified ? kOk : kVerificationFailed;
}

int cmd_sic_search(const Config& cfg, std::ostream& out) {
  SearchOptions opt;
  opt.d = cfg.d;
  opt.seed = cfg.seed;
  opt.restarts = cfg.restarts;
  opt.max_iters = cfg.max_iters;
  opt.threads = cfg.threads;
  if (cfg.tol > 0) opt.tol = cfg.tol;
  if (!cfg.f_path.empty()) opt.warm_start = io::parse_vector(io::read_file(cfg.f_path), cfg.f_path);
  const SicCandidate c = search_sic_fiducial(opt);
  emit(io::to_json(c), cfg, out);
  return c.certified ? kOk : kVerificationFailed;
}

int cmd_selftest(const Config& cfg, std::ostream& out) {
  bool ok = true;
  acceptance::run_all(
      [&](const acceptance::CriterionResult& r) {
        out << acceptance::format(r) << std::endl;
        ok = ok && r.passed;
      },
      cfg.only);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Zak transforms, induced representations and group frames on finite groups", "zakframe"};
  app.require_subcommand(1);

  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group_path, "group JSON")->required()->check(CLI::ExistingFile);
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout"); };
  auto tol_opt = [&](CLI::App* sub) { sub->add_option("--tol", cfg.tol, "tolerance")->check(CLI::PositiveNumber); };

  CLI::App* zak = app.add_subcommand("zak", "restricted Zak transform of a function on G");
  group_opt(zak);
  zak->add_option("--f", cfg.f_path, "function JSON [[re,im],...]")->required()->check(CLI::ExistingFile);
  out_opt(zak);

  CLI::App* inv = app.add_subcommand("inv-zak", "function on G from a Zak array");
  group_opt(inv);
  inv->add_option("--z", cfg.z_path, "Zak array JSON")->required()->check(CLI::ExistingFile);
  out_opt(inv);

  CLI::App* ind = app.add_subcommand("induced-matrix", "monomial matrix of (ind alpha)(x)");
  group_opt(ind);
  ind->add_option("--alpha", cfg.alpha, "character exponents, e.g. 0,1")->required();
  ind->add_option("--x", cfg.x, "element index in G")->required();
  out_opt(ind);

  CLI::App* si = app.add_subcommand("si-bounds", "fiberwise frame bounds of a shift system");
  group_opt(si);
  si->add_option("--generators", cfg.generators_path, "JSON array of functions")->required()->check(CLI::ExistingFile);
  out_opt(si);

  CLI::App* paley = app.add_subcommand("paley", "Paley harmonic ETF from the affine group of F_q");
  paley->add_option("--q", cfg.q, "field order, q = 3 mod 4")->required();
  tol_opt(paley);
  out_opt(paley);

  CLI::App* hv = app.add_subcommand("heisenberg-verify", "check a SIC fiducial for the Heisenberg group mod d");
  hv->add_option("--d", cfg.d, "dimension")->required();
  hv->add_option("--f", cfg.f_path, "fiducial JSON [[re,im],...]")->required()->check(CLI::ExistingFile);
  tol_opt(hv);
  out_opt(hv);

  CLI::App* ss = app.add_subcommand("sic-search", "numerical search for a SIC fiducial");
  ss->add_option("--d", cfg.d, "dimension")->required();
  ss->add_option("--seed", cfg.seed, "RNG seed");
  ss->add_option("--restarts", cfg.restarts, "random restarts")->check(CLI::PositiveNumber);
  ss->add_option("--max-iters", cfg.max_iters, "iterations per restart")->check(CLI::PositiveNumber);
  ss->add_option("--threads", cfg.threads, "worker threads (0: automatic)")->check(CLI::NonNegativeNumber);
  ss->add_option("--f", cfg.f_path, "warm start fiducial JSON")->check(CLI::ExistingFile);
  tol_opt(ss);
  out_opt(ss);

  CLI::App* st = app.add_subcommand("selftest", "run the acceptance checks");
  st->add_option("--only", cfg.only, "run a single criterion by number");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zakframe: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (zak->parsed()) return cmd_zak(cfg, out);
    if (inv->parsed()) return cmd_inv_zak(cfg, out);
    if (ind->parsed()) return cmd_induced(cfg, out);
    if (si->parsed()) return cmd_si_bounds(cfg, out);
    if (paley->parsed()) return cmd_paley(cfg, out);
    if (hv->parsed()) return cmd_heisenberg_verify(cfg, out);
    if (ss->parsed()) return cmd_sic_search(cfg, out);
    if (st->parsed()) return cmd_selftest(cfg, out);
  } catch (const ConsistencyError& e) {
    err << "zakframe: verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "zakframe: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace zakframe::cli
