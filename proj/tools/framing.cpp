// framing: command-line front end for the anomaly, cohomology, E3 and
// oracle computations.

#include "framing/anomaly.hpp"
#include "framing/catalog.hpp"
#include "framing/ce.hpp"
#include "framing/koszul.hpp"
#include "framing/lie.hpp"
#include "framing/weil.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

using namespace framing;
using nlohmann::json;

namespace {

constexpr int kUsage = 1;
constexpr int kInconsistent = 2;

struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::pair<int, int>> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("window must be written lo,hi");
  try {
    int lo = std::stoi(text.substr(0, comma)), hi = std::stoi(text.substr(comma + 1));
    if (hi < lo) throw std::invalid_argument("empty window");
    return std::make_pair(lo, hi);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("window must be written lo,hi");
  }
}

std::optional<int> parse_cap(int cap) { return cap > 0 ? std::optional<int>(cap) : std::nullopt; }

int numeric_suffix(const std::string& s, std::size_t from) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s.substr(from), &used);
    if (used + from != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed Lie algebra name '" + s + "'");
  }
}

lie::GradedLieAlgebra parse_lie(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return lie::load_lie_file(spec.substr(5));
  if (spec.rfind("dR:", 0) == 0) return lie::build_dR(parse_lie(spec.substr(3)));
  if (spec.rfind("simple:", 0) == 0) return lie::build_simple(lie::SimpleType::parse(spec.substr(7)));
  if (spec.rfind("so", 0) == 0) return lie::build_so(numeric_suffix(spec, 2));
  if (spec.rfind("sl", 0) == 0) return lie::build_simple({'A', numeric_suffix(spec, 2) - 1});
  if (spec.rfind("sp", 0) == 0) {
    const int m = numeric_suffix(spec, 2);
    if (m % 2 != 0) throw std::invalid_argument("sp(m) needs even m");
    return lie::build_simple({'C', m / 2});
  }
  throw std::invalid_argument("unknown Lie algebra '" + spec + "' (so<n>, sl<n>, sp<2r>, simple:<type>, dR:<spec>, file:<path>)");
}

lie::Module parse_module(const std::string& name, const lie::GradedLieAlgebra& g, const std::string& lie_spec) {
  if (name == "trivial") return lie::trivial_module(g);
  if (name == "adjoint") return lie::adjoint_module(g);
  if (name == "coadjoint") return lie::coadjoint_module(g);
  if (name == "vector") {
    if (lie_spec.rfind("so", 0) != 0) throw std::invalid_argument("the vector module is available for so<n>");
    return lie::vector_module_so(numeric_suffix(lie_spec, 2));
  }
  throw std::invalid_argument("unknown module '" + name + "'");
}

LabeledSpace parse_coeffs(const std::string& spec) {
  if (spec == "trivial") return LabeledSpace::from_dims({{0, 1}});
  if (spec.rfind("betti:", 0) == 0) return LabeledSpace::from_dims(parse_betti(spec.substr(6)));
  throw std::invalid_argument("coefficients must be 'trivial' or 'betti:<deg>=<dim>,...'");
}

json dims_json(const GradedDims& d) {
  json out = json::object();
  for (const auto& [k, v] : d) out[std::to_string(k)] = v;
  return out;
}

void print_dims(const GradedDims& d, int lo, int hi) {
  std::cout << std::setw(7) << "degree" << std::setw(8) << "dim" << "\n";
  for (int k = lo; k <= hi; ++k)
    if (d.count(k)) std::cout << std::setw(7) << k << std::setw(8) << d.at(k) << "\n";
}

// ----------------------------------------------------------- subcommands

struct AnomalyArgs {
  int dim = 0;
  std::string target, format = "table", window;
  bool inner = false;
  int word_cap = 0;
};

int run_anomaly(const AnomalyArgs& a) {
  anomaly::PresetOptions opts;
  opts.window = parse_window(a.window);
  opts.word_cap = parse_cap(a.word_cap);
  const anomaly::Report r = anomaly::compute(a.target, a.dim, a.inner, opts);
  std::cout << (a.format == "json" ? anomaly::render_json(r) + "\n" : anomaly::render_table(r));
  return 0;
}

struct CohomologyArgs {
  std::string lie, module = "trivial", window, format = "table";
  bool reduced = false, allow_large = false, representatives = false;
  int word_cap = 0;
};

int run_cohomology(const CohomologyArgs& a) {
  const lie::GradedLieAlgebra g = parse_lie(a.lie);
  if (g.dim() > lie::kDeskScaleDim && !a.allow_large)
    throw std::invalid_argument(g.name() + " has dimension " + std::to_string(g.dim()) + " > " +
                                std::to_string(lie::kDeskScaleDim) + "; pass --allow-large");
  const lie::Module v = parse_module(a.module, g, a.lie);
  ce::Options opts;
  opts.reduced = a.reduced;
  opts.word_cap = parse_cap(a.word_cap);
  if (auto w = parse_window(a.window)) opts.window = std::make_pair(w->first - 1, w->second + 1);
  const ce::CEComplex c = ce::ce_complex(g, v, opts);
  if (!linalg::verify_complex(c.complex)) throw ConsistencyFailure("CE differential does not square to zero");
  const linalg::CohomologyDims h = linalg::cohomology(c.complex, a.representatives);
  const int lo = c.complex.lo + 1, hi = c.complex.hi - 1;
  if (a.format == "json") {
    json doc{{"lie", g.name()}, {"dim", g.dim()}, {"module", v.name}, {"reduced", a.reduced},
             {"trusted", {lo, hi}}, {"betti", dims_json(h.dims)}};
    if (opts.word_cap) doc["word_cap"] = *opts.word_cap;
    if (a.representatives) {
      json reps = json::object();
      for (const auto& [k, vs] : h.representatives)
        for (const auto& r : vs) reps[std::to_string(k)].push_back(ce::format_cochain(c, k, r));
      doc["representatives"] = reps;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "H(" << g.name() << ", " << v.name << ")" << (a.reduced ? " reduced" : "") << ", dim " << g.dim()
            << ", trusted degrees [" << lo << ", " << hi << "]\n";
  if (opts.word_cap) std::cout << "trusted up to word length cap " << *opts.word_cap << "\n";
  print_dims(h.dims, lo, hi);
  if (h.dims.empty()) std::cout << "(zero in every trusted degree)\n";
  for (const auto& [k, vs] : h.representatives)
    for (const auto& r : vs) std::cout << "  " << k << ": " << ce::format_cochain(c, k, r) << "\n";
  return 0;
}

struct E3Args {
  int dim = 0;
  std::string coeffs = "trivial", window, format = "table";
  bool representatives = false;
};

int run_e3(const E3Args& a) {
  const LabeledSpace coeffs = parse_coeffs(a.coeffs);
  const auto window = parse_window(a.window);
  const auto internal = window ? std::make_pair(window->first - 1, window->second + 1) : koszul::default_window(a.dim);
  const koszul::E3Result direct = koszul::e3_direct(a.dim, coeffs, internal);
  const koszul::E2Page page = koszul::build_e2(a.dim, coeffs, internal);
  const int lo = internal.first + 1, hi = internal.second - 1;
  const GradedDims closed = restricted(koszul::e3_closed_form(a.dim, coeffs.dims()).dims, lo, hi);
  if (closed != direct.dims) throw ConsistencyFailure("E3 direct computation disagrees with the closed form");

  std::map<int, std::vector<std::string>> classes;
  for (const auto& [k, d] : direct.dims) {
    const auto reps = koszul::representatives_linear_in_p(a.dim, coeffs, k);
    if (reps.size() != d) throw ConsistencyFailure("representative count disagrees in degree " + std::to_string(k));
    for (const auto& r : reps) classes[k].push_back(koszul::format(page, r));
  }
  std::size_t total = 0;
  for (const auto& [k, d] : direct.dims) total += d;
  if (a.format == "json") {
    json doc{{"n", a.dim}, {"coeffs", format_betti(coeffs.dims())}, {"trusted", {lo, hi}},
             {"dims", dims_json(direct.dims)}, {"total", total}, {"closed_form_agrees", true}};
    json cl = json::object();
    for (const auto& [k, v] : classes) cl[std::to_string(k)] = v;
    doc[a.representatives ? "representatives" : "classes"] = cl;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "E3 page, n = " << a.dim << ", coefficients " << format_betti(coeffs.dims())
            << ", internal degrees [" << lo << ", " << hi << "]\n";
  std::cout << std::setw(7) << "degree" << std::setw(6) << "dim" << "  " << (a.representatives ? "representatives" : "classes") << "\n";
  for (const auto& [k, v] : classes) {
    std::cout << std::setw(7) << k << std::setw(6) << v.size() << "  ";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
    std::cout << "\n";
  }
  std::cout << "total: " << total << "\n";
  std::cout << "closed form agrees: yes\n";
  if (a.representatives) std::cout << "representatives are d3-closed and independent modulo the image\n";
  return 0;
}

struct OracleArgs {
  int dim = 0;
  std::string coeffs = "trivial", window, format = "table";
  bool allow_large = false;
  int word_cap = 0;
};

int run_oracle(const OracleArgs& a) {
  weil::Options opts;
  opts.allow_large = a.allow_large;
  opts.word_cap = parse_cap(a.word_cap);
  if (auto w = parse_window(a.window)) opts.window = std::make_pair(w->first - 1, w->second + 1);
  const LabeledSpace coeffs = parse_coeffs(a.coeffs);
  const weil::CrossCheck cc = weil::cross_check(a.dim, coeffs, opts);
  if (a.format == "json") {
    json doc{{"n", a.dim}, {"coeffs", format_betti(coeffs.dims())}, {"oracle", dims_json(cc.oracle)},
             {"e3_shifted", dims_json(cc.e3)}, {"match", cc.match}, {"diffs", cc.diffs}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "fiber complex, n = " << a.dim << ", coefficients " << format_betti(coeffs.dims())
              << " (cohomological degrees)\n";
    std::cout << "oracle:          " << format_betti(cc.oracle) << "\n";
    std::cout << "E3 shifted by n: " << format_betti(cc.e3) << "\n";
    std::cout << "match: " << (cc.match ? "yes" : "no") << "\n";
    for (const auto& d : cc.diffs) std::cout << "  " << d << "\n";
  }
  return cc.match ? 0 : kInconsistent;
}

int run_selftest() {
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
    ok = ok && pass;
  };
  for (int n = 2; n <= 5; ++n)
    report("so(" + std::to_string(n) + ") CE cohomology equals the closed form",
           ce::ce_cohomology(lie::build_so(n)).dims == catalog::betti(catalog::h_so(n)));
  for (const char* t : {"A1", "A2", "C2", "G2"}) {
    const auto type = lie::SimpleType::parse(t);
    report(std::string(t) + " CE cohomology equals the exponent table",
           ce::ce_cohomology(lie::build_simple(type)).dims == catalog::betti(catalog::h_simple(type)));
  }
  for (int n = 3; n <= 4; ++n)
    for (const auto& c : {GradedDims{{0, 1}}, GradedDims{{3, 1}}, GradedDims{{3, 1}, {7, 1}}}) {
      const auto cc = weil::cross_check(n, LabeledSpace::from_dims(c));
      report("oracle equals E3 for n = " + std::to_string(n) + ", C = " + format_betti(c), cc.match);
    }
  for (int n = 2; n <= 6; ++n) {
    const auto page = koszul::build_e2(n, LabeledSpace::from_dims({{0, 1}, {3, 1}}));
    report("H(Rbar, d3) = 0 for n = " + std::to_string(n),
           linalg::cohomology(koszul::apply_d3(page, koszul::Sector::Reduced)).dims.empty());
  }
  return ok ? 0 : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framing: framing-anomaly groups of topological AKSZ theories on R^n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", anomaly::kToolVersion);

  AnomalyArgs an;
  auto* sa = app.add_subcommand("anomaly", "obstruction group for a target");
  sa->add_option("--dim", an.dim, "spacetime dimension n")->required()->check(CLI::Range(2, 64));
  sa->add_option("--target", an.target, "cs:<type>, bf:<type>, abelian_cs, trivial, file:<path>, betti:<dims>")
      ->required();
  sa->add_flag("--inner", an.inner, "inner group (unreduced H(L))");
  sa->add_option("--format", an.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  sa->add_option("--window", an.window, "degree window lo,hi for infinite or file targets");
  sa->add_option("--word-cap", an.word_cap, "word-length cap for file targets")->check(CLI::PositiveNumber);

  CohomologyArgs co;
  auto* sc = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
  sc->add_option("--lie", co.lie, "so<n>, sl<n>, sp<2r>, simple:<type>, dR:<spec>, file:<path>")->required();
  sc->add_flag("--reduced", co.reduced, "drop the unit");
  sc->add_option("--module", co.module, "trivial, adjoint, coadjoint or vector")
      ->check(CLI::IsMember({"trivial", "adjoint", "coadjoint", "vector"}));
  sc->add_option("--window", co.window, "trusted degrees lo,hi");
  sc->add_option("--word-cap", co.word_cap, "word-length cap")->check(CLI::PositiveNumber);
  sc->add_option("--format", co.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  sc->add_flag("--allow-large", co.allow_large, "allow dimension above the desk-scale cap");
  sc->add_flag("--representatives", co.representatives, "print cocycle representatives");

  E3Args e3;
  auto* se = app.add_subcommand("e3", "E3 page of the Pontryagin ideal");
  se->add_option("--dim", e3.dim, "spacetime dimension n")->required()->check(CLI::Range(2, 64));
  se->add_option("--coeffs", e3.coeffs, "trivial or betti:<dims>");
  se->add_flag("--representatives", e3.representatives, "verify and print representatives linear in p");
  se->add_option("--window", e3.window, "trusted internal degrees lo,hi");
  se->add_option("--format", e3.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  OracleArgs orc;
  auto* so = app.add_subcommand("oracle", "brute-force fiber complex cross-check");
  so->add_option("--dim", orc.dim, "spacetime dimension n")->required()->check(CLI::Range(2, 64));
  so->add_option("--coeffs", orc.coeffs, "trivial or betti:<dims>");
  so->add_option("--window", orc.window, "trusted cohomological degrees lo,hi");
  so->add_option("--word-cap", orc.word_cap, "cap on the number of curvature factors")->check(CLI::PositiveNumber);
  so->add_flag("--allow-large", orc.allow_large, "allow n above 5");
  so->add_option("--format", orc.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* st = app.add_subcommand("selftest", "run the cross-check suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    if (*sa) return run_anomaly(an);
    if (*sc) return run_cohomology(co);
    if (*se) return run_e3(e3);
    if (*so) return run_oracle(orc);
    if (*st) return run_selftest();
  } catch (const ConsistencyFailure& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::logic_error& e) {
    const bool usage = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e);
    std::cerr << (usage ? "error: " : "consistency failure: ") << e.what() << "\n";
    return usage ? kUsage : kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
