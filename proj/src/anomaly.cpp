#include "framing/anomaly.hpp"

#include "framing/catalog.hpp"
#include "framing/ce.hpp"
#include "framing/gca.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace framing::anomaly {

namespace {

using nlohmann::json;

// Labelled basis of a free ring in degrees [lo, hi].
LabeledSpace ring_basis(const catalog::RingPresentation& ring, int lo, int hi, bool reduced) {
  LabeledSpace out;
  auto alg = ring.algebra();
  for (int k = std::max(lo, 0); k <= hi; ++k)
    for (const auto& m : gca::basis_in_degree(*alg, k)) {
      if (reduced && m.is_unit()) continue;
      out.basis.push_back({gca::format(*alg, m), k});
    }
  return out;
}

int so_top(int n) {
  int top = 0;
  for (const auto& g : catalog::h_so(n).generators) top += g.degree;
  return top;
}

Report assemble(int n, const LabeledSpace& coeffs, std::string mode) {
  Report r;
  r.n = n;
  r.mode = std::move(mode);
  const LabeledSpace so = ring_basis(catalog::h_so(n), 1, so_top(n), true);
  std::map<int, std::vector<std::string>> so_by_degree, l_by_degree;
  for (const auto& v : so.basis) so_by_degree[v.degree].push_back(v.label);
  for (const auto& v : coeffs.basis) l_by_degree[v.degree].push_back(v.label);
  for (const auto& [i, left] : so_by_degree) {
    auto it = l_by_degree.find(n - i);
    if (it == l_by_degree.end()) continue;
    Cell c{i, n - i, left.size() * it->second.size(), {}};
    for (const auto& a : left)
      for (const auto& b : it->second) c.labels.push_back(a + " ⊗ " + b);
    r.total += c.dim;
    r.cells.push_back(std::move(c));
  }
  r.verdict = r.total == 0 ? "vanishes" : "potential anomaly";
  return r;
}

LabeledSpace with_unit(LabeledSpace hred) {
  LabeledSpace h;
  h.basis.push_back({"1", 0});
  for (auto& v : hred.basis) h.basis.push_back(std::move(v));
  return h;
}

Target simple_target(const std::string& spec, lie::SimpleType type) {
  const auto ring = catalog::h_simple(type);
  int top = 0;
  for (const auto& g : ring.generators) top += g.degree;
  Target t;
  t.spec = spec;
  t.hred = ring_basis(ring, 0, top, true);
  t.h = ring_basis(ring, 0, top, false);
  t.notes.push_back("H(" + type.to_string() + ") from its exponents");
  return t;
}

Target file_target(const std::string& spec, const std::string& path, int n, const PresetOptions& opts) {
  const lie::GradedLieAlgebra l = lie::load_lie_file(path);
  ce::Options o;
  o.reduced = true;
  o.word_cap = opts.word_cap;
  bool finite = !opts.word_cap;
  for (const auto& b : l.basis()) finite = finite && (1 - b.degree) > 0 && (1 - b.degree) % 2 != 0;
  if (opts.window)
    o.window = std::make_pair(opts.window->first - 1, opts.window->second + 1);
  else if (!finite)
    o.window = std::make_pair(n - so_top(n) - 1, n + 1);
  const ce::CEComplex c = ce::ce_complex(l, o);
  const linalg::CohomologyDims hred = linalg::cohomology(c.complex);
  Target t;
  t.spec = spec;
  t.hred = LabeledSpace::from_dims(hred.dims);
  for (auto& v : t.hred.basis)
    if (v.label == "1") v.label = "x0";
  t.h = with_unit(t.hred);
  t.notes.push_back("H_red(L) computed from the reduced CE complex of " + l.name() + " in degrees [" +
                    std::to_string(c.complex.lo + 1) + ", " + std::to_string(c.complex.hi - 1) + "]");
  if (opts.word_cap) t.notes.push_back("trusted up to word length cap " + std::to_string(*opts.word_cap));
  return t;
}

}  // namespace

Report outer_group(int n, const LabeledSpace& hred_l) {
  for (const auto& v : hred_l.basis)
    if (v.degree == 0)
      throw std::invalid_argument("outer group needs reduced coefficients (degree-0 slot present); use the inner group");
  return assemble(n, hred_l, "outer");
}

Report inner_group(int n, const LabeledSpace& h_l) { return assemble(n, h_l, "inner"); }

Report bf_group(int n, lie::SimpleType type) {
  Report r = outer_group(n, simple_target("bf:" + type.to_string(), type).hred);
  r.notes.push_back("BF target: H_red(g (+) g*[n-3]) replaced by H_red(" + type.to_string() + ")");
  return r;
}

Target expand_preset(const std::string& spec, int n, const PresetOptions& opts) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cs" || kind == "bf") {
    Target t = simple_target(spec, lie::SimpleType::parse(arg));
    if (kind == "bf") t.notes.push_back("BF target: H(g (+) g*[n-3]) replaced by H(g)");
    return t;
  }
  if (kind == "trivial") {
    Target t;
    t.spec = spec;
    t.h.basis.push_back({"1", 0});
    t.notes.push_back("trivial target: H(L) = Q in degree 0");
    return t;
  }
  if (kind == "abelian_cs") {
    if (n % 2 == 0) throw std::invalid_argument("abelian_cs needs odd n");
    const int g = (n - 1) / 2;
    Target t;
    t.spec = spec;
    catalog::RingPresentation ring{"H(u(1)[" + std::to_string(-(n - 3) / 2) + "])", {{"a", g}}, {"generator"}};
    const int hi = opts.window ? opts.window->second : n;
    if (g % 2 == 1) {
      t.hred = ring_basis(ring, 0, std::max(hi, g), true);
    } else {
      t.hred = ring_basis(ring, 0, hi, true);
      t.notes.push_back("warning: n = " + std::to_string(n) + " is 1 mod 4, so the CE generator of L has even degree " +
                        std::to_string(g) + " and H(L) is polynomial (truncated to degrees <= " + std::to_string(hi) +
                        "); the resulting group need not vanish although the abelian Chern-Simons proposition "
                        "asserts no obstruction for every odd n");
    }
    t.h = with_unit(t.hred);
    t.notes.push_back("abelian_cs: L = u(1) in degree " + std::to_string(-(n - 3) / 2) +
                      " (pairing degree n-3), CE generator a of degree " + std::to_string(g));
    return t;
  }
  if (kind == "betti") {
    Target t;
    t.spec = spec;
    t.hred = LabeledSpace::from_dims(parse_betti(arg));
    for (auto& v : t.hred.basis)
      if (v.label == "1") v.label = "x0";
    t.h = with_unit(t.hred);
    t.notes.push_back("H_red(L) supplied directly; H(L) adds the unit");
    return t;
  }
  if (kind == "file") return file_target(spec, arg, n, opts);
  throw std::invalid_argument("unknown target '" + spec + "' (cs:<type>, bf:<type>, abelian_cs, trivial, file:<path>, betti:<dims>)");
}

Report compute(const std::string& spec, int n, bool inner, const PresetOptions& opts) {
  const Target t = expand_preset(spec, n, opts);
  Report r = inner ? inner_group(n, t.h) : outer_group(n, t.hred);
  r.notes.insert(r.notes.begin(), "target " + spec);
  for (const auto& note : t.notes) r.notes.push_back(note);
  return r;
}

std::string render_json(const Report& r) {
  json doc;
  doc["n"] = r.n;
  doc["mode"] = r.mode;
  doc["cells"] = json::array();
  for (const auto& c : r.cells) doc["cells"].push_back({{"i", c.i}, {"j", c.j}, {"dim", c.dim}, {"labels", c.labels}});
  doc["total"] = r.total;
  doc["verdict"] = r.verdict;
  doc["notes"] = r.notes;
  doc["tool_version"] = r.tool_version;
  return doc.dump(2);
}

Report parse_report(const std::string& json_text) {
  const json doc = json::parse(json_text);
  Report r;
  r.n = doc.at("n").get<int>();
  r.mode = doc.at("mode").get<std::string>();
  for (const auto& c : doc.at("cells"))
    r.cells.push_back(Cell{c.at("i").get<int>(), c.at("j").get<int>(), c.at("dim").get<std::size_t>(),
                           c.at("labels").get<std::vector<std::string>>()});
  r.total = doc.at("total").get<std::size_t>();
  r.verdict = doc.at("verdict").get<std::string>();
  r.notes = doc.at("notes").get<std::vector<std::string>>();
  r.tool_version = doc.at("tool_version").get<std::string>();
  return r;
}

std::string render_table(const Report& r) {
  std::ostringstream out;
  out << "obstruction group, n = " << r.n << ", " << r.mode << "\n";
  out << std::setw(4) << "i" << std::setw(4) << "j" << std::setw(6) << "dim" << "  basis\n";
  for (const auto& c : r.cells) {
    out << std::setw(4) << c.i << std::setw(4) << c.j << std::setw(6) << c.dim << "  ";
    for (std::size_t k = 0; k < c.labels.size(); ++k) out << (k ? ", " : "") << c.labels[k];
    out << "\n";
  }
  out << "total: " << r.total << "\n";
  out << "verdict: " << r.verdict << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace framing::anomaly
