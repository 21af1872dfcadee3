// Command-line front end: per-point queries on the K(l,m,n,p) family and
// parameter-box verification sweeps. Exit codes: 0 = pass, 1 = verification
// failure, 2 = usage or constraint error.

#include "seifnet/family.hpp"
#include "seifnet/network.hpp"
#include "seifnet/seifert.hpp"
#include "seifnet/tangle.hpp"
#include "seifnet/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace seifnet;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct PointArgs {
  long long l = 0, m = 0, n = 0, p = 0;
};

std::string classification_str(const LensClassification& c) {
  switch (c.kind) {
    case LensKind::S3: return "S3";
    case LensKind::Neither: return "NEITHER";
    case LensKind::Lens: return "LENS(" + c.order.str() + ")";
  }
  return "?";
}

std::string census_str(const SeifertSpace& piece) {
  try {
    return fibration_census(piece) == FibrationCensus::DiskAndMoebius
               ? "DISK_AND_MOEBIUS"
               : "UNIQUE";
  } catch (const domain_error&) {
    return "n/a";  // an integer slot: the census hypothesis fails
  }
}

json params_json(const PointArgs& a) {
  return {{"l", a.l}, {"m", a.m}, {"n", a.n}, {"p", a.p}};
}

json seq_json(const std::vector<Int>& seq) {
  json arr = json::array();
  for (const Int& a : seq) arr.push_back(a.str());
  return arr;
}

void emit(const json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int degenerate_point(const PointArgs& a, const char* what, bool as_json) {
  json doc;
  doc["params"] = params_json(a);
  doc["degenerate"] = true;
  doc["reason"] = what;
  emit(doc, as_json, std::string("degenerate parameter point: ") + what + "\n");
  return kExitPass;
}

std::string k_str(const PointArgs& a) {
  return "K(" + std::to_string(a.l) + "," + std::to_string(a.m) + "," +
         std::to_string(a.n) + "," + std::to_string(a.p) + ")";
}

int cmd_slope(const PointArgs& a, bool as_json) {
  FamilyParams params(a.l, a.m, a.n, a.p);
  Int gamma = surgery_slope(params);
  Int toroidal = gamma + 1;
  json doc;
  doc["params"] = params_json(a);
  doc["gamma"] = gamma.str();
  doc["gamma_plus_1"] = toroidal.str();
  emit(doc, as_json,
       k_str(a) + ": gamma = " + gamma.str() + ", gamma+1 = " + toroidal.str() + "\n");
  return kExitPass;
}

int cmd_montesinos(const PointArgs& a, bool as_json) {
  FamilyParams params(a.l, a.m, a.n, a.p);
  std::array<ExtFrac, 3> fr;
  try {
    fr = montesinos_fractions(params);
  } catch (const vanishing_denominator& e) {
    return degenerate_point(a, e.what(), as_json);
  }
  auto seqs = tangle_sequences(params);
  SeifertSpace space(BaseSurface::Sphere, {fr[0], fr[1], fr[2]});
  H1Order h1 = h1_order(space);
  LensClassification cls = is_lens_or_s3(space);

  json doc;
  doc["params"] = params_json(a);
  doc["slots"] = {fr[0].str(), fr[1].str(), fr[2].str()};
  doc["sequences"] = {seq_json(seqs[0]), seq_json(seqs[1]), seq_json(seqs[2])};
  doc["h1"] = h1.str();
  doc["classification"] = classification_str(cls);

  std::string text = k_str(a) + " branched double cover: " + space.str() + "\n";
  text += "tangle sequences: ";
  for (int i = 0; i < 3; ++i) {
    if (i) text += ", ";
    text += RationalTangle(seqs[i]).fraction().str() + " = cf[";
    for (std::size_t j = 0; j < seqs[i].size(); ++j)
      text += (j ? "," : "") + seqs[i][j].str();
    text += "]";
  }
  text += "\nh1 order: " + h1.str() + "\n";
  text += "classification: " + classification_str(cls) + "\n";
  emit(doc, as_json, text);
  return kExitPass;
}

int cmd_pieces(const PointArgs& a, bool as_json) {
  FamilyParams params(a.l, a.m, a.n, a.p);
  std::pair<SeifertSpace, SeifertSpace> pieces(
      SeifertSpace(BaseSurface::Disk, {}), SeifertSpace(BaseSurface::Disk, {}));
  try {
    pieces = decomposition_pieces(params);
  } catch (const vanishing_denominator& e) {
    return degenerate_point(a, e.what(), as_json);
  }
  json doc;
  doc["params"] = params_json(a);
  std::string text = k_str(a) + " torus decomposition at gamma+1:\n";
  const char* tag[2] = {"M1", "M2"};
  const SeifertSpace* ps[2] = {&pieces.first, &pieces.second};
  for (int i = 0; i < 2; ++i) {
    bool bi = boundary_irreducible(*ps[i]);
    std::string census = census_str(*ps[i]);
    doc[tag[i]] = {{"slots", {ps[i]->slots()[0].str(), ps[i]->slots()[1].str()}},
                   {"boundary_irreducible", bi},
                   {"fibration_census", census}};
    text += std::string(tag[i]) + " = " + ps[i]->str() +
            ": boundary-irreducible=" + (bi ? "true" : "false") +
            " census=" + census + "\n";
  }
  emit(doc, as_json, text);
  return kExitPass;
}

int cmd_path(const PointArgs& a, bool as_json) {
  FamilyParams params(a.l, a.m, a.n, a.p);
  auto steps = path_from_trefoil(params);
  SurgeryVertex v = SurgeryVertex::start(a.l);
  Int gamma = surgery_slope(params);

  auto vertex_json = [](const SurgeryVertex& x) {
    return json{{"slope", x.slope.str()},
                {"lk_a", x.lk_a.str()},
                {"lk_b", x.lk_b.str()},
                {"lk_ab", x.lk_ab.str()}};
  };
  auto vertex_text = [](const SurgeryVertex& x) {
    return "slope=" + x.slope.str() + " lk_a=" + x.lk_a.str() +
           " lk_b=" + x.lk_b.str() + " lk_ab=" + x.lk_ab.str();
  };

  json doc;
  doc["params"] = params_json(a);
  doc["start"] = vertex_json(v);
  json jsteps = json::array();
  std::string text = "start (T_{3,2}, l+5): " + vertex_text(v) + "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TwistStep& s = steps[i];
    const char* target = s.target == TwistTarget::SeiferterA   ? "c_a"
                         : s.target == TwistTarget::SeiferterB ? "c_b"
                                                               : "annular pair";
    v = realize_path(v, {s});
    jsteps.push_back({{"target", target}, {"count", s.count}, {"vertex", vertex_json(v)}});
    text += "step " + std::to_string(i + 1) + ": " + std::to_string(s.count) +
            "-twist along " + target + " -> " + vertex_text(v) + "\n";
  }
  doc["steps"] = std::move(jsteps);
  doc["final_slope"] = v.slope.str();
  doc["formula_slope"] = gamma.str();
  bool pass = v.slope == gamma;
  doc["result"] = pass ? "PASS" : "FAIL";
  text += "final slope: " + v.slope.str() + "\n";
  text += "formula slope: " + gamma.str() + "\n";
  text += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
  emit(doc, as_json, text);
  return pass ? kExitPass : kExitFailure;
}

int cmd_check(const PointArgs& a, bool as_json) {
  FamilyParams params(a.l, a.m, a.n, a.p);
  bool toroidal = toroidal_hypotheses(params);
  bool nonps = nonps_hypotheses(params);
  bool claim = claim_seifert_invariant1(a.l, a.m, a.n);

  json doc;
  doc["params"] = params_json(a);
  doc["toroidal"] = toroidal;
  doc["nonps"] = nonps;
  doc["seifert_invariant_bounds"] = claim;
  std::string text = k_str(a) + "\n";
  text += std::string("toroidal hypotheses: ") + (toroidal ? "true" : "false") + "\n";
  text += std::string("non-primitive/Seifert hypotheses: ") + (nonps ? "true" : "false") + "\n";
  text += std::string("Seifert invariant bounds: ") + (claim ? "true" : "false") + "\n";

  try {
    auto [m1, m2] = decomposition_pieces(params);
    const char* tag[2] = {"M1", "M2"};
    const SeifertSpace* ps[2] = {&m1, &m2};
    for (int i = 0; i < 2; ++i) {
      bool bi = boundary_irreducible(*ps[i]);
      std::string census = census_str(*ps[i]);
      doc[tag[i]] = {{"slots", {ps[i]->slots()[0].str(), ps[i]->slots()[1].str()}},
                     {"boundary_irreducible", bi},
                     {"fibration_census", census}};
      text += std::string(tag[i]) + " = " + ps[i]->str() +
              ": boundary-irreducible=" + (bi ? "true" : "false") +
              " census=" + census + "\n";
    }
  } catch (const vanishing_denominator& e) {
    doc["pieces_degenerate"] = e.what();
    text += std::string("pieces: degenerate parameter point: ") + e.what() + "\n";
  }

  if (a.l == 2 || a.l == -2) {
    Int order = case4_h1_orders(params);
    doc["case4_h1_order"] = order.str();
    text += "case-4 H1 order: " + order.str() +
            (order == 0 ? " (infinite H1)" : "") + "\n";
  }
  emit(doc, as_json, text);
  return kExitPass;
}

std::optional<verify::Range> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    long long lo = std::stoll(s.substr(0, dots), &used);
    if (used != dots) return std::nullopt;
    std::string rest = s.substr(dots + 2);
    long long hi = std::stoll(rest, &used);
    if (used != rest.size()) return std::nullopt;
    return verify::Range{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_verify(const std::string& suite_name, const verify::SweepBox& box,
               unsigned jobs, bool as_json, const std::string& out_file) {
  auto suite = verify::suite_from_name(suite_name);
  if (!suite) {
    std::cerr << "error: unknown suite '" << suite_name << "'\n";
    return kExitUsage;
  }
  verify::VerificationReport report = verify::run_suite(*suite, box, jobs);
  std::string rendered = as_json ? verify::to_json(report) : verify::to_text(report);
  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << out_file << "'\n";
      return kExitUsage;
    }
    out << rendered;
    std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL")
              << " (checked " << report.checked << ", skipped "
              << report.skipped.size() << ", failures " << report.failures.size()
              << ") -> " << out_file << "\n";
  } else {
    std::cout << rendered;
  }
  return report.passed() ? kExitPass : kExitFailure;
}

void add_point_args(CLI::App* cmd, PointArgs& args) {
  cmd->add_option("l", args.l, "twist parameter l")->required();
  cmd->add_option("m", args.m, "twist parameter m")->required();
  cmd->add_option("n", args.n, "twist parameter n")->required();
  cmd->add_option("p", args.p, "twist parameter p")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seifnet: exact invariants of the Seifert fibered surgeries "
      "(K(l,m,n,p), gamma) and their twist paths from the trefoil"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  PointArgs pargs;
  CLI::App* slope = app.add_subcommand("slope", "surgery slope gamma and gamma+1");
  add_point_args(slope, pargs);
  CLI::App* montesinos =
      app.add_subcommand("montesinos", "Montesinos slots, sequences, H1, lens check");
  add_point_args(montesinos, pargs);
  CLI::App* pieces =
      app.add_subcommand("pieces", "torus-decomposition pieces at gamma+1");
  add_point_args(pieces, pargs);
  CLI::App* path =
      app.add_subcommand("path", "twist path from (T_{3,2}, l+5), checked against the formula");
  add_point_args(path, pargs);
  CLI::App* check = app.add_subcommand("check", "hypothesis predicates and pieces");
  add_point_args(check, pargs);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a property sweep suite");
  std::string suite_name;
  verify_cmd->add_option("suite", suite_name, "suite name (try: all)")->required();
  std::string lr = "-8..8", mr = "-8..8", nr = "-8..8", pr = "-8..8";
  verify_cmd->add_option("--l", lr, "l range A..B")->capture_default_str();
  verify_cmd->add_option("--m", mr, "m range A..B")->capture_default_str();
  verify_cmd->add_option("--n", nr, "n range A..B")->capture_default_str();
  verify_cmd->add_option("--p", pr, "p range A..B")->capture_default_str();
  std::uint64_t cap = 10'000'000;
  unsigned jobs = 1;
  bool mp_free = false;
  std::string out_file;
  verify_cmd->add_option("--cap", cap, "point-count cap")->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify_cmd->add_flag("--mp-free", mp_free, "lift the m*p = 0 constraint");
  verify_cmd->add_option("--out", out_file, "write the report to FILE");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  bool as_json = format == "json";
  try {
    if (slope->parsed()) return cmd_slope(pargs, as_json);
    if (montesinos->parsed()) return cmd_montesinos(pargs, as_json);
    if (pieces->parsed()) return cmd_pieces(pargs, as_json);
    if (path->parsed()) return cmd_path(pargs, as_json);
    if (check->parsed()) return cmd_check(pargs, as_json);
    if (verify_cmd->parsed()) {
      verify::SweepBox box;
      auto l = parse_range(lr), m = parse_range(mr), n = parse_range(nr),
           p = parse_range(pr);
      if (!l || !m || !n || !p) {
        std::cerr << "error: ranges must be written A..B\n";
        return kExitUsage;
      }
      box.l = *l;
      box.m = *m;
      box.n = *n;
      box.p = *p;
      box.cap = cap;
      box.enforce_mp_zero = !mp_free;
      return cmd_verify(suite_name, box, jobs, as_json, out_file);
    }
  } catch (const constraint_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
