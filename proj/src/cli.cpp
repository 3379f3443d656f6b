#include "braidforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <regex>

#include "braidforge/braid.hpp"
#include "braidforge/decomp.hpp"
#include "braidforge/ghz.hpp"
#include "braidforge/group.hpp"
#include "braidforge/json_io.hpp"
#include "braidforge/reps.hpp"
#include "braidforge/ybx.hpp"

namespace braidforge::cli {

double parse_angle(std::string_view text)
{
  static const std::regex pi_form(R"(^\s*([+-]?(?:\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+)?)\s*\*?\s*pi(?:\s*/\s*(\d+\.?\d*))?\s*$)");
  const std::string s(text);
  std::smatch m;
  try {
    if (std::regex_match(s, m, pi_form)) {
      double coeff = 1.0;
      const std::string c = m[1].str();
      if (c == "-")
        coeff = -1.0;
      else if (!c.empty() && c != "+")
        coeff = std::stod(c);
      double value = coeff * kPi;
      if (m[2].matched) {
        const double d = std::stod(m[2].str());
        if (d == 0.0)
          throw ParseError("angle '" + s + "': division by zero");
        value /= d;
      }
      return value;
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw ParseError("angle '" + s + "': trailing characters");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("angle '" + s + "' is neither a decimal nor a multiple of pi");
  }
}

namespace {

struct RepArgs {
  int cls = 2;
  int N = 3;
  int k = 2;
  int m = 0;
  int strands = 3;
  std::vector<std::string> phi;
};

void add_rep_options(CLI::App* app, RepArgs& r, bool strands)
{
  app->add_option("--class", r.cls, "Representation class (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  app->add_option("--N", r.N, "Class-2 block exponent")->capture_default_str();
  app->add_option("--k", r.k, "Class-1 half dimension / class-2 stride")->capture_default_str();
  app->add_option("--phi", r.phi, "Class-1 deformation angles phi_J,...,phi_1/2")->delimiter(',');
  if (strands)
    app->add_option("--strands", r.strands, "Number of braid strands n")->capture_default_str();
  else
    app->add_option("--m", r.m, "Number of group generators")->required();
}

RepSpec make_spec(const RepArgs& r, int m)
{
  if (r.cls == 2) {
    if (!r.phi.empty())
      throw DomainError("--phi applies to class 1 only");
    return RepSpec::class2(m, r.N, r.k);
  }
  if (r.phi.empty())
    return RepSpec::class1(m, r.k);
  if (static_cast<int>(r.phi.size()) != r.k)
    throw DomainError("--phi needs exactly k=" + std::to_string(r.k) + " angles");
  std::vector<double> angles;
  for (const auto& a : r.phi)
    angles.push_back(parse_angle(a));
  return RepSpec::class1(m, r.k, PhaseParams::from_angles(angles));
}

RepSpec braid_spec(const RepArgs& r)
{
  if (r.strands < 2)
    throw DomainError("--strands must be at least 2");
  return make_spec(r, r.strands - 1);
}

std::string format_double(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string format_complex(Complex z)
{
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

class Output {
 public:
  Output(std::ostream& out, const RunConfig& cfg, std::string command)
      : out_(out), cfg_(cfg), command_(std::move(command))
  {
    doc_["command"] = command_;
  }

  void report(const VerificationReport& r)
  {
    passed_ = passed_ && r.passed();
    reports_.push_back(report_to_json(r, cfg_.timing));
    if (cfg_.json)
      return;
    out_ << (r.passed() ? "PASS " : "FAIL ") << r.name;
    if (cfg_.timing)
      out_ << "  (" << format_double(r.elapsed_ms) << " ms)";
    out_ << '\n';
    for (const auto& c : r.checks) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-28s %-4s max_error %s", c.name.c_str(),
                    c.passed ? "ok" : "FAIL", format_double(c.max_error).c_str());
      out_ << line;
      if (c.witness && !c.passed) {
        const Witness& w = *c.witness;
        if (w.row || w.col)
          out_ << "  at (" << w.row << ", " << w.col << ") " << format_complex(w.lhs) << " vs "
               << format_complex(w.rhs);
        if (!w.detail.empty())
          out_ << "  [" << w.detail << "]";
      }
      out_ << '\n';
    }
  }

  void text(const std::string& line)
  {
    if (!cfg_.json)
      out_ << line << '\n';
  }

  Json& doc() { return doc_; }
  bool passed() const { return passed_; }

  int finish()
  {
    if (cfg_.json) {
      Json d = doc_;
      if (!reports_.empty()) {
        d["passed"] = passed_;
        d["reports"] = reports_;
      }
      out_ << d.dump(2) << '\n';
    }
    return passed_ ? kPass : kCheckFailed;
  }

 private:
  std::ostream& out_;
  const RunConfig& cfg_;
  std::string command_;
  Json doc_;
  Json reports_ = Json::array();
  bool passed_ = true;
};

class DenseCapScope {
 public:
  explicit DenseCapScope(std::size_t cap) : saved_(dense_cap()) { set_dense_cap(cap); }
  ~DenseCapScope() { set_dense_cap(saved_); }
  DenseCapScope(const DenseCapScope&) = delete;
  DenseCapScope& operator=(const DenseCapScope&) = delete;

 private:
  std::size_t saved_;
};

std::string ket(int qubits, std::size_t k)
{
  std::string s = "|";
  const SpinWord w = spin_word(qubits, k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ',';
    s += w[i] == Spin::up ? "1/2" : "-1/2";
  }
  return s + ">";
}

void print_state(Output& o, int qubits, const StateVector& v)
{
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) == 0.0)
      continue;
    o.text("  " + std::to_string(i + 1) + "  " + ket(qubits, static_cast<std::size_t>(i) + 1) +
           "  " + format_complex(v(i)));
  }
}

void write_json(const Json& j, const std::string& path, Output& o, std::ostream& out, bool json)
{
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw Error("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
  if (!f)
    throw Error("failed writing '" + path + "'");
  if (json)
    o.doc()["written"] = path;
  else
    o.text("wrote " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Extraspecial 2-group, braid and GHZ toolkit", "braidforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  RunConfig cfg;
  std::string engine = "structured";
  app.add_option("--tolerance", cfg.tolerance, "Max entrywise error for a pass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_option("--dense-cap", cfg.dense_cap, "Largest dimension materialized densely")
      ->check(CLI::PositiveNumber);
  app.add_option("--engine", engine, "Verification engine")
      ->check(CLI::IsMember({"structured", "dense"}))
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--timing", cfg.timing, "Include elapsed times");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verifier");
  verify->require_subcommand(1);

  int group_m = 3;
  auto* v_group = verify->add_subcommand("group", "Order, center, commutators, homomorphism");
  v_group->add_option("--m", group_m, "Number of generators")->capture_default_str();

  RepArgs rep_args;
  auto* v_rep = verify->add_subcommand("rep", "Relations of phi(e_i)");
  add_rep_options(v_rep, rep_args, false);

  RepArgs braid_args;
  auto* v_braid = verify->add_subcommand("braid", "Braid relations and conjugation");
  add_rep_options(v_braid, braid_args, true);

  int gybe_N = 3, gybe_k = 2;
  auto* v_gybe = verify->add_subcommand("gybe", "Generalized Yang-Baxter equation");
  v_gybe->add_option("--N", gybe_N, "Block exponent")->capture_default_str();
  v_gybe->add_option("--k", gybe_k, "Overlap exponent")->capture_default_str();

  RepArgs qybe_args;
  std::string qx = "0.3", qy = "1.7";
  int samples = 0;
  auto* v_qybe = verify->add_subcommand("qybe", "Spectral-parameter Yang-Baxter equation");
  add_rep_options(v_qybe, qybe_args, true);
  v_qybe->add_option("--x", qx, "Spectral parameter x")->capture_default_str();
  v_qybe->add_option("--y", qy, "Spectral parameter y")->capture_default_str();
  v_qybe->add_option("--samples", samples, "Additional seeded random (x, y) in [-5, 5]^2");

  RepArgs add_args;
  std::string t1 = "0.4", t2 = "-1.1";
  int add_samples = 0;
  auto* v_add = verify->add_subcommand("qybe-additive", "Additive-parameter form");
  add_rep_options(v_add, add_args, true);
  v_add->add_option("--theta1", t1, "First parameter")->capture_default_str();
  v_add->add_option("--theta2", t2, "Second parameter")->capture_default_str();
  v_add->add_option("--samples", add_samples, "Additional seeded random pairs in [-3, 3]^2");

  RepArgs char_args;
  int char_index = 1;
  auto* v_char = verify->add_subcommand("characteristic", "(B - zeta)(B - zeta*) = 0");
  add_rep_options(v_char, char_args, true);
  v_char->add_option("--index", char_index, "Generator index i")->capture_default_str();

  // ghz
  auto* ghz = app.add_subcommand("ghz", "GHZ states and Bell matrices");
  ghz->require_subcommand(1);
  int ghz_qubits = 3;
  std::size_t ghz_index = 1;
  auto* g_gen = ghz->add_subcommand("generate", "Print one GHZ state");
  g_gen->add_option("--qubits", ghz_qubits, "Number of qubits")->required();
  g_gen->add_option("--index", ghz_index, "GHZ index j in 1..2^N")->required();
  bool ghz_class1 = false;
  auto* g_ver = ghz->add_subcommand("verify", "Bell-matrix column law");
  g_ver->add_option("--qubits", ghz_qubits, "Number of qubits")->required();
  g_ver->add_flag("--class1", ghz_class1, "Use the class-1 M^JJ path (even qubit counts)");

  // evolve
  int ev_qubits = 3;
  std::string ev_theta = "0";
  std::size_t ev_index = 1;
  auto* evolve_cmd = app.add_subcommand("evolve", "Apply B(theta') to a basis state");
  evolve_cmd->add_option("--qubits", ev_qubits, "Number of qubits")->required();
  evolve_cmd->add_option("--theta-prime", ev_theta, "theta' (decimal or e.g. 0.25pi)")->required();
  evolve_cmd->add_option("--basis-index", ev_index, "Basis label l")->required();

  // decompose
  RepArgs dec_args;
  std::size_t dec_cap = kDefaultCommutantCap;
  auto* decompose = app.add_subcommand("decompose", "Irreducible multiplicities");
  add_rep_options(decompose, dec_args, true);
  decompose->add_option("--commutant-cap", dec_cap, "Largest dimension for the commutant")
      ->capture_default_str();

  // export
  auto* exp = app.add_subcommand("export", "Write operators and states as JSON");
  exp->require_subcommand(1);
  std::string out_path;
  int ex_qubits = 3;
  auto* e_bell = exp->add_subcommand("bell-matrix", "Dense Bell matrix");
  e_bell->add_option("--qubits", ex_qubits, "Number of qubits")->required();
  auto* e_ham = exp->add_subcommand("hamiltonian", "Dense H = -sqrt(-1) M");
  e_ham->add_option("--qubits", ex_qubits, "Number of qubits")->required();
  auto* e_ghz = exp->add_subcommand("ghz-basis", "All GHZ states");
  e_ghz->add_option("--qubits", ex_qubits, "Number of qubits")->required();
  RepArgs gen_args;
  int gen_index = 1;
  auto* e_gen = exp->add_subcommand("generator", "phi(e_i) as a monomial");
  add_rep_options(e_gen, gen_args, false);
  e_gen->add_option("--index", gen_index, "Generator index i")->capture_default_str();
  for (auto* s : {e_bell, e_ham, e_ghz, e_gen})
    s->add_option("--out", out_path, "Output path ('-' for stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  cfg.engine = engine == "dense" ? Engine::dense : Engine::structured;
  const DenseCapScope cap_scope(cfg.dense_cap);
  const VerifyOptions opts{cfg.tolerance, cfg.engine, cfg.dense_cap};

  std::string command;
  for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
    a = a->get_subcommands().front();
    command += (command.empty() ? "" : " ") + a->get_name();
  }
  Output o(out, cfg, command);

  try {
    if (v_group->parsed()) {
      o.report(verify_group_structure(group_m));
      if (group_m <= 6)
        o.report(verify_homomorphism(RepSpec::class2(group_m, 2, 1), cfg.tolerance));
      const CenterDescription c = center(group_m);
      std::string line = "center:";
      for (const auto& g : c.elements)
        line += " " + g.str();
      o.text(line + "  (" + to_string(c.iso_class) + ")");
      Json elems = Json::array();
      for (const auto& g : c.elements)
        elems.push_back(g.str());
      o.doc()["order"] = order(group_m);
      o.doc()["center"] = {{"elements", elems}, {"iso_class", to_string(c.iso_class)}};
    } else if (v_rep->parsed()) {
      const RepSpec spec = make_spec(rep_args, rep_args.m);
      o.doc()["spec"] = spec_to_json(spec);
      o.report(verify_esp_relations(spec, opts));
    } else if (v_braid->parsed()) {
      const BraidRep rep(braid_spec(braid_args));
      o.doc()["spec"] = spec_to_json(rep.spec());
      o.report(verify_braid_relations(rep, opts));
      o.report(conjugation_check(rep, opts));
    } else if (v_gybe->parsed()) {
      o.report(verify_gybe(gybe_N, gybe_k, opts));
    } else if (v_qybe->parsed()) {
      const BraidRep rep(braid_spec(qybe_args));
      o.doc()["spec"] = spec_to_json(rep.spec());
      o.report(verify_qybe(rep, parse_angle(qx), parse_angle(qy), opts));
      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> d(-5.0, 5.0);
      for (int s = 0; s < samples; ++s) {
        const double x = d(rng), y = d(rng);
        VerificationReport r = verify_qybe(rep, x, y, opts);
        r.name += " sample " + std::to_string(s + 1);
        o.report(r);
      }
    } else if (v_add->parsed()) {
      const BraidRep rep(braid_spec(add_args));
      o.doc()["spec"] = spec_to_json(rep.spec());
      o.report(verify_qybe_additive(rep, parse_angle(t1), parse_angle(t2), opts));
      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> d(-3.0, 3.0);
      for (int s = 0; s < add_samples; ++s) {
        const double a = d(rng), b = d(rng);
        VerificationReport r = verify_qybe_additive(rep, a, b, opts);
        r.name += " sample " + std::to_string(s + 1);
        o.report(r);
      }
    } else if (v_char->parsed()) {
      const BraidRep rep(braid_spec(char_args));
      o.doc()["spec"] = spec_to_json(rep.spec());
      const auto& t = rep.phi(char_index);
      o.report(characteristic_check(t, opts));
      const auto [up, down] = eigen_multiplicities(t);
      o.text("multiplicities: exp(i pi/4) x " + std::to_string(up) + ", exp(-i pi/4) x " +
             std::to_string(down));
      o.doc()["multiplicities"] = {up, down};
    } else if (g_gen->parsed()) {
      const StateVector v = ghz_state(ghz_qubits, ghz_index);
      o.text("GHZ state " + std::to_string(ghz_index) + " of " + std::to_string(ghz_qubits) +
             " qubits:");
      print_state(o, ghz_qubits, v);
      o.doc()["qubits"] = ghz_qubits;
      o.doc()["index"] = ghz_index;
      o.doc()["state"] = state_to_json(v);
    } else if (g_ver->parsed()) {
      o.report(verify_ghz_columns(ghz_qubits, opts,
                                  ghz_class1 ? BellPath::class1 : BellPath::class2));
    } else if (evolve_cmd->parsed()) {
      const double tp = parse_angle(ev_theta);
      const StateVector v = evolve(ev_qubits, tp, ev_index);
      o.report(verify_evolution(ev_qubits, tp, ev_index, cfg.tolerance));
      o.text("B(theta') " + ket(ev_qubits, ev_index) + " =");
      print_state(o, ev_qubits, v);
      o.doc()["qubits"] = ev_qubits;
      o.doc()["theta_prime"] = tp;
      o.doc()["basis_index"] = ev_index;
      o.doc()["state"] = state_to_json(v);
    } else if (decompose->parsed()) {
      const RepSpec spec = braid_spec(dec_args);
      const DecompositionPrediction p = predict(spec);
      o.doc()["spec"] = spec_to_json(spec);
      o.doc()["strands"] = p.strands;
      o.doc()["dim"] = p.dim;
      o.doc()["predicted"] = {{"constituent", p.odd ? "rho1" : "lambda1+lambda2"},
                              {"multiplicity", p.multiplicity},
                              {"closed_form", p.closed_form},
                              {"commutant", p.commutant}};
      o.text("n=" + std::to_string(p.strands) + " dim=" + std::to_string(p.dim) + ": predicted " +
             std::to_string(p.multiplicity) +
             (p.odd ? " copies of rho1" : " copies of lambda1+lambda2 (unordered pair)") +
             ", commutant " + std::to_string(p.commutant));
      if (p.odd) {
        const std::size_t mult = multiplicity_rho1(spec);
        o.doc()["computed_multiplicity"] = mult;
        o.text("character inner product: " + std::to_string(mult));
      }
      if (p.dim <= dec_cap) {
        const std::size_t comm = commutant_dimension(spec, dec_cap);
        o.doc()["computed_commutant"] = comm;
        o.text("commutant dimension: " + std::to_string(comm));
      } else {
        o.text("commutant dimension: skipped (dim above --commutant-cap)");
      }
      o.report(verify_decomposition(spec, dec_cap));
    } else if (e_bell->parsed()) {
      write_json(matrix_to_json(bell_matrix(ex_qubits).to_dense(cfg.dense_cap)), out_path, o, out,
                 cfg.json);
    } else if (e_ham->parsed()) {
      write_json(matrix_to_json(hamiltonian(almost_complex_2n(ex_qubits), cfg.dense_cap)), out_path,
                 o, out, cfg.json);
    } else if (e_ghz->parsed()) {
      Json states = Json::array();
      const std::size_t dim = std::size_t{1} << ex_qubits;
      require_dense(dim, cfg.dense_cap, "ghz-basis export");
      for (std::size_t j = 1; j <= dim; ++j)
        states.push_back(state_to_json(ghz_state(ex_qubits, j)));
      write_json(Json{{"qubits", ex_qubits}, {"states", states}}, out_path, o, out, cfg.json);
    } else if (e_gen->parsed()) {
      const RepSpec spec = make_spec(gen_args, gen_args.m);
      write_json(monomial_to_json(generator(spec, gen_index)), out_path, o, out, cfg.json);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool exported = exp->parsed();
  if (exported && (out_path.empty() || out_path == "-"))
    return kPass;
  return o.finish();
}

}  // namespace braidforge::cli
