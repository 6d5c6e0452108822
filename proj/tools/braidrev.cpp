// braidrev: B3 representations from quiver data, the transpose involution and
// braid-reversion detection. All arithmetic is exact over Q(w), w^2 + w + 1 = 0,
// with the central scalar pinned to lambda = 1.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "braidrev/braidrev.hpp"
#include "braidrev/io.hpp"

using namespace braidrev;
using io::Json;

namespace {

enum Exit { kOk = 0, kMathFailure = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  std::string output = "text";
  bool json() const { return output == "json"; }
};

std::uint64_t default_seed() {
  const char* env = std::getenv("BRAIDREV_SEED");
  if (!env || !*env) return 0;
  std::uint64_t v = 0;
  std::istringstream in(env);
  if (!(in >> v) || !in.eof()) throw UsageError(std::string("BRAIDREV_SEED is not an unsigned integer: ") + env);
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

B3Rep load_rep(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("X1")) return io::b3rep_from_json(j);
  return build_rep(io::quiver_from_json(j));
}

DimVector parse_alpha(const std::string& s) {
  std::vector<std::size_t> v;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--alpha expects five nonnegative integers a,b,x,y,z");
    v.push_back(std::stoul(part));
  }
  if (v.size() != 5) throw UsageError("--alpha expects five nonnegative integers a,b,x,y,z");
  return {v[0], v[1], v[2], v[3], v[4]};
}

void print_matrix(std::ostream& os, const CycMatrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << '\n';
  }
}

void print_report(std::ostream& os, const WitnessReport& r, std::size_t trial) {
  os << "trial " << trial << ": " << to_string(r.family.kind);
  if (r.family.kind == FamilyKind::even_k || r.family.kind == FamilyKind::odd_k) os << " k=" << r.family.k;
  if (!r.family.parameters.empty()) {
    os << " params=";
    for (std::size_t i = 0; i < r.family.parameters.size(); ++i) os << (i ? "," : "") << to_string(r.family.parameters[i]);
  }
  os << " -> " << (r.isomorphic ? "isomorphic" : "NOT verified") << '\n';
  for (const auto& c : r.identities) os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << '\n';
  if (!r.notes.empty()) os << "  note: " << r.notes << '\n';
}

// ---------------------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, long n) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto list = enumerate_components(static_cast<std::size_t>(n));
  if (cfg.json()) {
    std::cout << io::to_json(list).dump(2) << '\n';
    return kOk;
  }
  std::cout << "n = " << n << ", " << list.size() << " simple components (a >= b, x maximal)\n";
  for (const auto& c : list)
    std::cout << "  " << to_string(c.dims) << "  dim " << (c.component_dim ? std::to_string(*c.component_dim) : "-") << "  "
              << to_string(c.verdict) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& family, std::size_t k, const std::string& a_text) {
  std::vector<WitnessReport> reports;
  if (family == "twodim") {
    if (!a_text.empty()) {
      reports.push_back(verify_two_dim_example(parse_cyc(a_text)));
    } else {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg.seed, t);
        CycRat a = random_zrho(rng);
        while (a.is_zero() || a == CycRat(1)) a = random_zrho(rng);
        reports.push_back(verify_two_dim_example(a));
      }
    }
  } else {
    if ((family == "even" || family == "odd") && k < 1) throw UsageError("--k must be >= 1");
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = trial_rng(cfg.seed, t);
      if (family == "even") {
        reports.push_back(verify_even_witness(k, sample_even_family_matrix(k, rng), cfg.seed + t));
      } else if (family == "odd") {
        reports.push_back(verify_odd_family(k, cfg.seed + t));
      } else if (family == "dim42") {
        auto [V, params] = sample_family_point(make_dim42_exceptional,
                                               [](Rng& r) { return random_integer_parameters(r, 5); }, rng);
        reports.push_back(verify_dim42(params, cfg.seed + t));
      } else {
        throw UsageError("--family must be one of even, odd, dim42, twodim");
      }
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.isomorphic && r.all_identities_hold();
  if (cfg.json()) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(io::to_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t t = 0; t < reports.size(); ++t) print_report(std::cout, reports[t], t);
    std::cout << (ok ? "all trials verified" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kMathFailure;
}

int cmd_reversion(const RunConfig& cfg, const std::string& alpha_text, const std::string& braid_text) {
  const DimVector alpha = parse_alpha(alpha_text);
  if (!is_simple_dimvector(alpha)) throw UsageError("dimension vector " + to_string(alpha) + " is not a simple component");
  const BraidWord w = parse_braid(braid_text);
  const BraidWord wr = reverse_braid(w);
  const ComponentReport comp = classify_component(alpha);
  const bool use_family = alpha == DimVector{3, 3, 2, 2, 2};

  Json trials = Json::array();
  std::ostringstream text;
  bool separates = false;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg.seed, t);
    std::optional<QuiverRep> V;
    std::vector<CycRat> params;
    if (use_family) {
      auto point = sample_family_point(make_dim6_detecting, [](Rng& r) { return random_integer_parameters(r, 7); }, rng);
      V = std::move(point.first);
      params = std::move(point.second);
    } else {
      V = sample_stable_rep(alpha, rng);
    }
    const B3Rep phi = build_rep(*V);
    const CycRat tw = trace_of(phi, w);
    const CycRat tr = trace_of(phi, wr);
    const bool differ = tw != tr;
    separates = separates || differ;
    Json jt{{"trial", t}, {"tr_b", to_string(tw)}, {"tr_b_rev", to_string(tr)}, {"separates", differ}};
    if (use_family) {
      Json jp = Json::array();
      for (const auto& p : params) jp.push_back(to_string(p));
      jt["parameters"] = std::move(jp);
    } else {
      jt["B"] = io::to_json(V->B());
    }
    trials.push_back(std::move(jt));
    text << "trial " << t;
    if (use_family) {
      text << " params=";
      for (std::size_t i = 0; i < params.size(); ++i) text << (i ? "," : "") << to_string(params[i]);
    }
    text << "\n  Tr(b)  = " << to_string(tw) << "\n  Tr(b') = " << to_string(tr) << '\n';
  }

  std::string prediction = "none";
  bool consistent = true;
  if (comp.verdict == Verdict::fixed) {
    prediction = "never separates";
    consistent = !separates;
  } else if (comp.verdict == Verdict::detecting && w == knot_8_17_braid()) {
    prediction = "separates";
    consistent = separates;
  }
  const std::string verdict = separates ? "separates" : "does not separate";

  if (cfg.json()) {
    Json out{{"alpha", io::to_json(alpha)},
             {"component", to_string(comp.verdict)},
             {"braid", to_string(w)},
             {"reversed", to_string(wr)},
             {"seed", cfg.seed},
             {"trials", std::move(trials)},
             {"verdict", verdict},
             {"prediction", prediction},
             {"consistent", consistent}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "component " << to_string(alpha) << " (" << to_string(comp.verdict) << "), lambda = 1\n"
              << "b  = " << to_string(w) << "\nb' = " << to_string(wr) << '\n'
              << text.str() << "verdict: " << verdict << " (prediction: " << prediction << ")\n";
  }
  return consistent ? kOk : kMathFailure;
}

int cmd_trace(const RunConfig& cfg, const std::string& path, const std::string& braid_text) {
  const BraidWord w = parse_braid(braid_text);
  const B3Rep phi = load_rep(path);
  const CycRat t = trace_of(phi, w);
  if (cfg.json())
    std::cout << Json{{"braid", to_string(w)}, {"trace", to_string(t)}}.dump(2) << '\n';
  else
    std::cout << to_string(t) << '\n';
  return kOk;
}

int cmd_isom(const RunConfig& cfg, const std::string& p1, const std::string& p2) {
  const QuiverRep V = io::quiver_from_json(read_json_file(p1));
  const QuiverRep W = io::quiver_from_json(read_json_file(p2));
  if (V.dims() != W.dims()) throw UsageError("dimension vectors differ: " + to_string(V.dims()) + " vs " + to_string(W.dims()));
  Rng rng(cfg.seed);
  const IsoResult r = are_isomorphic(V, W, rng);
  if (cfg.json()) {
    std::cout << Json{{"status", to_string(r.status)},
                      {"hom_dimension", r.hom_dimension},
                      {"witness", r.witness ? io::to_json(*r.witness) : Json(nullptr)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << to_string(r.status) << " (hom dimension " << r.hom_dimension << ")\n";
    if (r.witness) {
      const std::pair<const char*, const CycMatrix*> parts[] = {{"M1", &r.witness->M1}, {"M2", &r.witness->M2},
                                                                {"N1", &r.witness->N1}, {"N2", &r.witness->N2},
                                                                {"N3", &r.witness->N3}};
      for (const auto& [name, m] : parts) {
        std::cout << name << ":\n";
        print_matrix(std::cout, *m, "  ");
      }
    }
  }
  return r.status == IsoStatus::inconclusive_nonstable ? kMathFailure : kOk;
}

int cmd_build(const std::string& path, const std::string& out_path) {
  const B3Rep phi = build_rep(io::quiver_from_json(read_json_file(path)));
  const std::string text = io::to_json(phi).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  return kOk;
}

int cmd_jumping(const RunConfig& cfg, std::size_t m) {
  if (m < 1) throw UsageError("--m must be >= 1");
  Rng rng(cfg.seed);
  const QuiverRep V = sample_stable_rep({2 * m, m, m, m, m}, rng);
  const JumpingPencils p = jumping_pencils(V);
  const bool agree = proportional(p.from_B, p.from_tau);
  if (cfg.json()) {
    std::cout << Json{{"dims", io::to_json(V.dims())},
                      {"B", io::to_json(V.B())},
                      {"curve", to_string(p.from_B)},
                      {"curve_tau", to_string(p.from_tau)},
                      {"block_identity", p.block_identity},
                      {"proportional", agree}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "component " << to_string(V.dims()) << "\n  curve(B)    = " << to_string(p.from_B)
              << "\n  curve(tauB) = " << to_string(p.from_tau) << "\n  sum C_i2 B_i2 = I: " << (p.block_identity ? "yes" : "no")
              << "\n  proportional: " << (agree ? "yes" : "no") << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact B3 representations from quiver data (lambda = 1)", "braidrev"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  try {
    cfg.seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  app.add_option("--seed", cfg.seed, "base seed; trial t uses seed + t (default $BRAIDREV_SEED or 0)");
  app.add_option("--trials", cfg.trials, "number of trials")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  long n = 0;
  auto* classify = app.add_subcommand("classify", "list simple components of dimension n with verdicts");
  classify->add_option("--n", n, "total dimension")->required();

  std::string family, a_text;
  std::size_t k = 1;
  auto* verify = app.add_subcommand("verify", "verify tau-fixedness on a family");
  verify->add_option("--family", family, "even | odd | dim42 | twodim")->required();
  verify->add_option("--k", k, "family index");
  verify->add_option("--a", a_text, "parameter of the two-dimensional example");

  std::string alpha_text, braid_text;
  auto* reversion = app.add_subcommand("reversion", "compare Tr(b) and Tr(reverse b) on a component");
  reversion->add_option("--alpha", alpha_text, "a,b,x,y,z")->required();
  reversion->add_option("--braid", braid_text, "braid word, e.g. \"s1^-2 s2 s1\"")->required();

  std::string rep_path;
  auto* trace = app.add_subcommand("trace", "trace of a braid word on a representation file");
  trace->add_option("--rep", rep_path, "b3rep or quiver JSON")->required()->check(CLI::ExistingFile);
  trace->add_option("--braid", braid_text, "braid word")->required();

  std::string iso1, iso2;
  auto* isom = app.add_subcommand("isom", "decide isomorphism of two quiver representations");
  isom->add_option("first", iso1)->required()->check(CLI::ExistingFile);
  isom->add_option("second", iso2)->required()->check(CLI::ExistingFile);

  std::string build_in, build_out;
  auto* build = app.add_subcommand("build", "build the B3 representation of a quiver file");
  build->add_option("quiver", build_in)->required()->check(CLI::ExistingFile);
  build->add_option("--out", build_out, "write to this file instead of stdout");

  std::size_t m = 2;
  auto* experimental = app.add_subcommand("experimental", "unsupported diagnostics");
  auto* jumping = experimental->add_subcommand("jumping", "jumping-line curves on (2m,m;m,m,m)");
  jumping->add_option("--m", m, "block size");
  experimental->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(cfg, n);
    if (*verify) return cmd_verify(cfg, family, k, a_text);
    if (*reversion) return cmd_reversion(cfg, alpha_text, braid_text);
    if (*trace) return cmd_trace(cfg, rep_path, braid_text);
    if (*isom) return cmd_isom(cfg, iso1, iso2);
    if (*build) return cmd_build(build_in, build_out);
    if (*jumping) return cmd_jumping(cfg, m);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kMathFailure;
  }
  return kUsage;
}
