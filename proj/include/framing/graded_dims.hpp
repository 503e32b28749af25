#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace framing {

/// Degree -> dimension. Zero entries are never stored.
using GradedDims = std::map<int, std::size_t>;

GradedDims normalized(const GradedDims& dims);

/// dims shifted so that degree d moves to d + offset.
GradedDims shifted(const GradedDims& dims, int offset);

/// Dimensions of the tensor product of two graded vector spaces.
GradedDims convolve(const GradedDims& a, const GradedDims& b);

/// Keeps only degrees in [lo, hi].
GradedDims restricted(const GradedDims& dims, int lo, int hi);

std::size_t total_dim(const GradedDims& dims);

/// Parses the inline syntax "3=1,7=1". An empty string is the zero space.
GradedDims parse_betti(std::string_view text);

std::string format_betti(const GradedDims& dims);

/// A graded vector space with a labelled basis, used as the coefficient
/// slot of E2 pages and fiber complexes.
struct LabeledSpace {
  struct Vector {
    std::string label;
    int degree = 0;
  };
  std::vector<Vector> basis;

  /// Labels "1" for a single degree-0 vector, otherwise "x<deg>" and
  /// "x<deg>_<k>" when a degree carries more than one vector.
  static LabeledSpace from_dims(const GradedDims& dims);

  GradedDims dims() const;
  std::size_t size() const { return basis.size(); }
  bool empty() const { return basis.empty(); }
};

}  // namespace framing
