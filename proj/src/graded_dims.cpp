#include "framing/graded_dims.hpp"
#include "framing/rational.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace framing {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

GradedDims normalized(const GradedDims& dims) {
  GradedDims out;
  for (auto [d, n] : dims)
    if (n != 0) out[d] = n;
  return out;
}

GradedDims shifted(const GradedDims& dims, int offset) {
  GradedDims out;
  for (auto [d, n] : dims)
    if (n != 0) out[d + offset] = n;
  return out;
}

GradedDims convolve(const GradedDims& a, const GradedDims& b) {
  GradedDims out;
  for (auto [da, na] : a)
    for (auto [db, nb] : b)
      if (na * nb != 0) out[da + db] += na * nb;
  return out;
}

GradedDims restricted(const GradedDims& dims, int lo, int hi) {
  GradedDims out;
  for (auto [d, n] : dims)
    if (d >= lo && d <= hi && n != 0) out[d] = n;
  return out;
}

std::size_t total_dim(const GradedDims& dims) {
  std::size_t t = 0;
  for (auto [d, n] : dims) t += n;
  return t;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto first = s.data();
  auto last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

GradedDims parse_betti(std::string_view text) {
  GradedDims out;
  text = trim(text);
  if (text.empty()) return out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("expected <degree>=<dim> in '" + std::string(item) + "'");
    int deg = parse_int(trim(item.substr(0, eq)), "degree");
    int dim = parse_int(trim(item.substr(eq + 1)), "dimension");
    if (dim < 0) throw std::invalid_argument("negative dimension in '" + std::string(item) + "'");
    if (out.count(deg)) throw std::invalid_argument("degree listed twice: " + std::to_string(deg));
    if (dim > 0) out[deg] = static_cast<std::size_t>(dim);
  }
  return out;
}

std::string format_betti(const GradedDims& dims) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [d, n] : dims) {
    if (n == 0) continue;
    if (!first) os << ", ";
    os << d << ": " << n;
    first = false;
  }
  os << '}';
  return os.str();
}

LabeledSpace LabeledSpace::from_dims(const GradedDims& dims) {
  LabeledSpace space;
  for (auto [d, n] : dims) {
    for (std::size_t k = 0; k < n; ++k) {
      std::string label;
      if (d == 0 && n == 1)
        label = "1";
      else
        label = "x" + std::to_string(d) + (n > 1 ? "_" + std::to_string(k + 1) : "");
      space.basis.push_back({label, d});
    }
  }
  return space;
}

GradedDims LabeledSpace::dims() const {
  GradedDims out;
  for (const auto& v : basis) ++out[v.degree];
  return out;
}

}  // namespace framing
