#include "framing/linalg.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <thread>

namespace framing::linalg {

SparseVector make_sparse(const std::map<std::size_t, Rational>& entries) {
  SparseVector v;
  for (const auto& [i, x] : entries)
    if (x != 0) v.emplace_back(i, x);
  return v;
}

SparseVector scaled_to_primitive(const SparseVector& v) {
  if (v.empty()) return v;
  Integer den = 1;
  for (const auto& [i, x] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> nums;
  nums.reserve(v.size());
  for (const auto& [i, x] : v) {
    Integer n = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    nums.push_back(std::move(n));
  }
  if (v.front().second < 0) g = -g;
  SparseVector out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.emplace_back(v[k].first, Rational(nums[k] / g));
  return out;
}

// ------------------------------------------------------------ SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.columns_[j].emplace_back(i, rows[i][j]);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (v == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.emplace(it, r, v);
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t key) { return e.first < key; });
  return (it != col.end() && it->first == r) ? it->second : Rational(0);
}

void SparseMatrix::set_column(std::size_t c, SparseVector v) {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector clean;
  clean.reserve(v.size());
  for (auto& [i, x] : v) {
    if (i >= rows_) throw std::out_of_range("row index out of range");
    if (!clean.empty() && clean.back().first == i) {
      clean.back().second += x;
      if (clean.back().second == 0) clean.pop_back();
    } else if (x != 0) {
      clean.emplace_back(i, std::move(x));
    }
  }
  columns_[c] = std::move(clean);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [j, xj] : x) {
    if (j >= cols_) throw std::out_of_range("vector longer than matrix");
    for (const auto& [i, v] : columns_[j]) acc[i] += v * xj;
  }
  return make_sparse(acc);
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix p(a.rows_, b.cols_);
  for (std::size_t c = 0; c < b.cols_; ++c) p.columns_[c] = a.apply(b.columns_[c]);
  return p;
}

namespace {
SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  SparseMatrix s(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, v] : a.column(c)) acc[i] += v;
    for (const auto& [i, v] : b.column(c)) acc[i] += sign * v;
    s.set_column(c, make_sparse(acc));
  }
  return s;
}
}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, 1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, -1); }

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
  SparseMatrix out(a.rows_, a.cols_);
  if (s == 0) return out;
  for (std::size_t c = 0; c < a.cols_; ++c) {
    out.columns_[c] = a.columns_[c];
    for (auto& [i, v] : out.columns_[c]) v *= s;
  }
  return out;
}

// -------------------------------------------------------------------- rank

namespace {

template <typename Index>
struct BasicIntRow {
  std::vector<Index> cols;
  std::vector<Integer> vals;
};
using IntRow = BasicIntRow<std::uint32_t>;

template <typename Row>
void make_primitive(Row& r) {
  if (r.vals.empty()) return;
  Integer g = 0;
  for (const auto& v : r.vals) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : r.vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// out = p * r - a * q
template <typename Row>
void combine_rows(const Row& r, const Integer& p, const Row& q, const Integer& a, Row& out) {
  out.cols.clear();
  out.vals.clear();
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < r.cols.size() || j < q.cols.size()) {
    if (j == q.cols.size() || (i < r.cols.size() && r.cols[i] < q.cols[j])) {
      out.cols.push_back(r.cols[i]);
      out.vals.push_back(p * r.vals[i]);
      ++i;
    } else if (i == r.cols.size() || q.cols[j] < r.cols[i]) {
      out.cols.push_back(q.cols[j]);
      out.vals.push_back(-a * q.vals[j]);
      ++j;
    } else {
      tmp = p * r.vals[i] - a * q.vals[j];
      if (tmp != 0) {
        out.cols.push_back(r.cols[i]);
        out.vals.push_back(tmp);
      }
      ++i;
      ++j;
    }
  }
}

const Integer* entry(const IntRow& r, std::uint32_t c) {
  auto it = std::lower_bound(r.cols.begin(), r.cols.end(), c);
  if (it == r.cols.end() || *it != c) return nullptr;
  return &r.vals[static_cast<std::size_t>(it - r.cols.begin())];
}

std::size_t eliminate(std::vector<IntRow> rows, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::uint32_t> count(ncols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::uint32_t r = 0; r < nrows; ++r)
    for (auto c : rows[r].cols) {
      ++count[c];
      col_rows[c].push_back(r);
    }
  std::set<std::pair<std::uint32_t, std::uint32_t>> queue;
  std::vector<bool> queued(ncols, false);
  for (std::uint32_t c = 0; c < ncols; ++c)
    if (count[c]) {
      queue.emplace(count[c], c);
      queued[c] = true;
    }
  std::vector<bool> active(nrows, true);

  auto bump = [&](std::uint32_t c, int delta) {
    if (!queued[c]) return;
    queue.erase({count[c], c});
    count[c] = static_cast<std::uint32_t>(static_cast<int>(count[c]) + delta);
    if (count[c])
      queue.emplace(count[c], c);
    else
      queued[c] = false;
  };

  std::size_t rk = 0;
  IntRow scratch;
  std::vector<std::uint32_t> holders;
  while (!queue.empty()) {
    auto [cnt, c] = *queue.begin();
    queue.erase(queue.begin());
    queued[c] = false;

    holders.clear();
    auto& lst = col_rows[c];
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    for (auto r : lst)
      if (active[r] && entry(rows[r], c)) holders.push_back(r);
    lst.clear();
    lst.shrink_to_fit();
    if (holders.empty()) continue;

    // Smallest pivot magnitude first (unit pivots avoid coefficient growth),
    // then the sparsest row.
    std::uint32_t piv = holders[0];
    auto better = [&](std::uint32_t x, std::uint32_t y) {
      int cx = mpz_cmpabs(entry(rows[x], c)->get_mpz_t(), entry(rows[y], c)->get_mpz_t());
      if (cx != 0) return cx < 0;
      return rows[x].cols.size() < rows[y].cols.size();
    };
    for (auto r : holders)
      if (better(r, piv)) piv = r;

    ++rk;
    active[piv] = false;
    const IntRow& prow = rows[piv];
    for (auto pc : prow.cols)
      if (pc != c) bump(pc, -1);
    const Integer pval = *entry(prow, c);

    Integer g, p, a;
    for (auto r : holders) {
      if (r == piv) continue;
      IntRow& row = rows[r];
      const Integer& aval = *entry(row, c);
      mpz_gcd(g.get_mpz_t(), pval.get_mpz_t(), aval.get_mpz_t());
      p = pval / g;
      a = aval / g;
      combine_rows(row, p, prow, a, scratch);
      if (mpz_cmpabs_ui(p.get_mpz_t(), 1) != 0) make_primitive(scratch);
      // Update column counts for the symmetric difference of supports.
      std::size_t i = 0, j = 0;
      while (i < row.cols.size() || j < scratch.cols.size()) {
        if (j == scratch.cols.size() || (i < row.cols.size() && row.cols[i] < scratch.cols[j])) {
          if (row.cols[i] != c) bump(row.cols[i], -1);
          ++i;
        } else if (i == row.cols.size() || scratch.cols[j] < row.cols[i]) {
          bump(scratch.cols[j], +1);
          col_rows[scratch.cols[j]].push_back(r);
          ++j;
        } else {
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
      if (row.cols.empty()) active[r] = false;
    }
    rows[piv] = IntRow{};
  }
  return rk;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  DisjointSets sets(R + C);
  for (std::size_t c = 0; c < C; ++c)
    for (const auto& [r, v] : m.column(c)) sets.unite(r, R + c);

  // Scale each column to a primitive integer vector; column scaling does not
  // change the rank.
  std::vector<SparseVector> cols(C);
  for (std::size_t c = 0; c < C; ++c) cols[c] = scaled_to_primitive(m.column(c));

  // Eliminate per block, with the columns of the block as rows (rank is
  // transpose-invariant and this avoids materialising row lists).
  std::map<std::size_t, std::vector<std::size_t>> block_cols;
  for (std::size_t c = 0; c < C; ++c)
    if (!cols[c].empty()) block_cols[sets.find(R + c)].push_back(c);

  std::size_t total = 0;
  for (auto& [root, members] : block_cols) {
    std::map<std::size_t, std::uint32_t> local;
    for (auto c : members)
      for (const auto& [r, v] : cols[c]) local.emplace(r, 0);
    std::uint32_t next = 0;
    for (auto& [r, id] : local) id = next++;
    std::vector<IntRow> rows;
    rows.reserve(members.size());
    for (auto c : members) {
      IntRow row;
      for (const auto& [r, v] : cols[c]) {
        row.cols.push_back(local[r]);
        row.vals.push_back(v.get_num());
      }
      rows.push_back(std::move(row));
    }
    total += eliminate(std::move(rows), local.size());
  }
  return total;
}

// ------------------------------------------------------------ kernel basis

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  // Gauss-Jordan on the rows of m, rows held as ordered maps.
  using Row = std::map<std::size_t, Rational>;
  SparseMatrix t = m.transpose();
  std::map<std::size_t, Row> pivots;  // pivot column -> row with 1 at pivot
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Row row;
    for (const auto& [c, v] : t.column(r)) row[c] = v;
    // Eliminate existing pivot columns from the new row.
    for (auto& [pc, prow] : pivots) {
      auto it = row.find(pc);
      if (it == row.end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : prow) {
        Rational& x = row[c];
        x -= f * v;
        if (x == 0) row.erase(c);
      }
    }
    if (row.empty()) continue;
    std::size_t pc = row.begin()->first;
    Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    // Keep the basis reduced: clear pc from older pivot rows.
    for (auto& [oc, orow] : pivots) {
      auto it = orow.find(pc);
      if (it == orow.end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : row) {
        Rational& x = orow[c];
        x -= f * v;
        if (x == 0) orow.erase(c);
      }
    }
    pivots.emplace(pc, std::move(row));
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivots.count(f)) continue;
    std::map<std::size_t, Rational> x;
    x[f] = 1;
    for (const auto& [pc, prow] : pivots) {
      auto it = prow.find(f);
      if (it != prow.end()) x[pc] = -it->second;
    }
    basis.push_back(make_sparse(x));
  }
  return basis;
}

// ------------------------------------------------------------ EchelonBasis

EchelonBasis::Row EchelonBasis::reduce(Row r) const {
  BasicIntRow<std::size_t> cur{std::move(r.idx), std::move(r.val)}, out;
  Integer g, p, a;
  while (!cur.cols.empty()) {
    auto it = pivots_.find(cur.cols.front());
    if (it == pivots_.end()) break;
    const BasicIntRow<std::size_t> q{it->second.idx, it->second.val};
    mpz_gcd(g.get_mpz_t(), q.vals.front().get_mpz_t(), cur.vals.front().get_mpz_t());
    p = q.vals.front() / g;
    a = cur.vals.front() / g;
    combine_rows(cur, p, q, a, out);
    make_primitive(out);
    std::swap(cur, out);
  }
  return Row{std::move(cur.cols), std::move(cur.vals)};
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector prim = scaled_to_primitive(v);
  Row r;
  for (const auto& [i, x] : prim) {
    if (i >= dim_) throw std::out_of_range("vector longer than ambient space");
    r.idx.push_back(i);
    r.val.push_back(x.get_num());
  }
  r = reduce(std::move(r));
  if (r.idx.empty()) return false;
  pivots_.emplace(r.idx.front(), std::move(r));
  return true;
}

bool EchelonBasis::contains(const SparseVector& v) const {
  SparseVector prim = scaled_to_primitive(v);
  Row r;
  for (const auto& [i, x] : prim) {
    r.idx.push_back(i);
    r.val.push_back(x.get_num());
  }
  return reduce(std::move(r)).idx.empty();
}

// -------------------------------------------------------- CochainComplex

CochainComplex::CochainComplex(int lo_, int hi_) : lo(lo_), hi(hi_) {
  if (hi < lo) throw std::invalid_argument("empty cochain window");
  basis.resize(static_cast<std::size_t>(hi - lo + 1));
  diff.resize(static_cast<std::size_t>(hi - lo));
}

std::size_t CochainComplex::dim(int k) const {
  if (k < lo || k > hi) return 0;
  return basis[static_cast<std::size_t>(k - lo)].size();
}

const SparseMatrix& CochainComplex::d(int k) const {
  if (k < lo || k >= hi) throw std::out_of_range("differential outside window: d_" + std::to_string(k));
  return diff[static_cast<std::size_t>(k - lo)];
}

SparseMatrix& CochainComplex::d(int k) {
  if (k < lo || k >= hi) throw std::out_of_range("differential outside window: d_" + std::to_string(k));
  return diff[static_cast<std::size_t>(k - lo)];
}

GradedDims CochainComplex::dims() const {
  GradedDims out;
  for (int k = lo; k <= hi; ++k)
    if (dim(k)) out[k] = dim(k);
  return out;
}

std::size_t CochainComplex::total_size() const {
  std::size_t t = 0;
  for (const auto& b : basis) t += b.size();
  return t;
}

bool verify_complex(const CochainComplex& c) {
  if (c.basis.size() != static_cast<std::size_t>(c.hi - c.lo + 1) ||
      c.diff.size() != static_cast<std::size_t>(c.hi - c.lo))
    throw ShapeError(c.lo, "window bookkeeping does not match the stored degrees");
  for (int k = c.lo; k < c.hi; ++k) {
    const auto& m = c.d(k);
    if (m.cols() != c.dim(k) || m.rows() != c.dim(k + 1))
      throw ShapeError(k, "d_" + std::to_string(k) + " is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(c.dim(k + 1)) + "x" +
                              std::to_string(c.dim(k)));
  }
  for (int k = c.lo; k + 1 < c.hi; ++k)
    if (!(c.d(k + 1) * c.d(k)).is_zero()) return false;
  return true;
}

CohomologyDims cohomology(const CochainComplex& c, int from, int to, bool with_representatives) {
  if (from > to) return {};
  if (from < c.lo + 1 || to > c.hi - 1)
    throw UntrustedDegreeError("untrusted boundary degree: requested [" + std::to_string(from) + ", " +
                               std::to_string(to) + "] but the window [" + std::to_string(c.lo) + ", " +
                               std::to_string(c.hi) + "] only determines [" + std::to_string(c.lo + 1) + ", " +
                               std::to_string(c.hi - 1) + "]");
  verify_complex(c);  // shape check; d^2 is the builder's responsibility

  // Ranks of distinct differentials are independent.
  const auto policy = std::thread::hardware_concurrency() > 1 ? std::launch::async : std::launch::deferred;
  std::map<int, std::future<std::size_t>> jobs;
  for (int k = from - 1; k <= to; ++k) jobs.emplace(k, std::async(policy, [&c, k] { return rank(c.d(k)); }));
  std::map<int, std::size_t> ranks;
  for (auto& [k, f] : jobs) ranks[k] = f.get();

  CohomologyDims out;
  for (int k = from; k <= to; ++k) {
    std::size_t h = c.dim(k) - ranks[k] - ranks[k - 1];
    if (h) out.dims[k] = h;
    if (!with_representatives || h == 0) continue;
    EchelonBasis span(c.dim(k));
    const auto& in = c.d(k - 1);
    for (std::size_t j = 0; j < in.cols(); ++j) span.insert(in.column(j));
    auto& reps = out.representatives[k];
    for (auto& z : kernel_basis(c.d(k))) {
      if (span.insert(z)) reps.push_back(scaled_to_primitive(z));
      if (reps.size() == h) break;
    }
    if (reps.size() != h) throw std::logic_error("representative count disagrees with Betti number");
  }
  return out;
}

CohomologyDims cohomology(const CochainComplex& c, bool with_representatives) {
  return cohomology(c, c.lo + 1, c.hi - 1, with_representatives);
}

}  // namespace framing::linalg
