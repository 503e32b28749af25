#include "framing/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace framing::catalog {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("so(n) requires n >= 2");
}

}  // namespace

RingPresentation h_so(int n) {
  require_n(n);
  RingPresentation r;
  r.name = "H(so(" + std::to_string(n) + "))";
  const int k = n / 2;
  if (n % 2 == 1) {
    for (int j = 1; j <= k; ++j) {
      r.generators.push_back({"eta_" + std::to_string(j), 4 * j - 1});
      r.provenance.push_back("eta_j");
    }
  } else {
    for (int j = 1; j < k; ++j) {
      r.generators.push_back({"eta_" + std::to_string(j), 4 * j - 1});
      r.provenance.push_back("eta_j");
    }
    r.generators.push_back({"eta'_" + std::to_string(k), n - 1});
    r.provenance.push_back("pfaffian_partner");
  }
  return r;
}

RingPresentation h_bso(int n) {
  require_n(n);
  RingPresentation r;
  r.name = "H(BSO(" + std::to_string(n) + "))";
  const int k = n / 2;
  if (n % 2 == 1) {
    for (int j = 1; j <= k; ++j) {
      r.generators.push_back({"p_" + std::to_string(j), 4 * j});
      r.provenance.push_back("p_j");
    }
  } else {
    for (int j = 1; j < k; ++j) {
      r.generators.push_back({"p_" + std::to_string(j), 4 * j});
      r.provenance.push_back("p_j");
    }
    r.generators.push_back({"p'_" + std::to_string(k), n});
    r.provenance.push_back("pfaffian");
  }
  return r;
}

// Exponents (Bourbaki, Planches I-IX).
std::vector<int> exponents(lie::SimpleType type) {
  if (!type.valid()) throw std::invalid_argument("invalid simple type " + type.to_string());
  const int r = type.rank;
  std::vector<int> m;
  switch (type.series) {
    case 'A':
      for (int i = 1; i <= r; ++i) m.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= r; ++i) m.push_back(2 * i - 1);
      break;
    case 'D':
      for (int i = 1; i < r; ++i) m.push_back(2 * i - 1);
      m.push_back(r - 1);
      break;
    case 'E':
      if (r == 6) m = {1, 4, 5, 7, 8, 11};
      if (r == 7) m = {1, 5, 7, 9, 11, 13, 17};
      if (r == 8) m = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F': m = {1, 5, 7, 11}; break;
    case 'G': m = {1, 5}; break;
  }
  std::sort(m.begin(), m.end());
  return m;
}

RingPresentation h_simple(lie::SimpleType type) {
  RingPresentation r;
  r.name = "H(" + type.to_string() + ")";
  std::map<int, int> seen;
  for (int e : exponents(type)) {
    const int d = 2 * e + 1;
    std::string name = "y" + std::to_string(d) + std::string(static_cast<std::size_t>(seen[d]++), '\'');
    r.generators.push_back({name, d});
    r.provenance.push_back("exponent");
  }
  return r;
}

GradedDims betti(const RingPresentation& pres, int lo, int hi, bool reduced) {
  if (hi < 0) return {};
  const auto top = static_cast<std::size_t>(hi);
  std::vector<std::size_t> series(top + 1, 0);
  series[0] = 1;
  for (const auto& g : pres.generators) {
    if (g.degree <= 0) throw std::invalid_argument("Poincare series needs positive generator degrees");
    const auto d = static_cast<std::size_t>(g.degree);
    if (gca::is_odd_degree(g.degree)) {
      for (std::size_t k = top + 1; k-- > d;) series[k] += series[k - d];
    } else {
      for (std::size_t k = d; k <= top; ++k) series[k] += series[k - d];
    }
  }
  if (reduced) series[0] = 0;
  GradedDims out;
  for (int k = std::max(lo, 0); k <= hi; ++k)
    if (series[static_cast<std::size_t>(k)] != 0) out[k] = series[static_cast<std::size_t>(k)];
  return out;
}

GradedDims betti(const RingPresentation& pres, bool reduced) {
  int top = 0;
  for (const auto& g : pres.generators) {
    if (!gca::is_odd_degree(g.degree)) throw std::invalid_argument("ring is infinite: give a degree window");
    top += g.degree;
  }
  return betti(pres, 0, top, reduced);
}

}  // namespace framing::catalog
