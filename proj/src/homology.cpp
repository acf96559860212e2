#include "edgeideals/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace edgeideals {

using BigInt = boost::multiprecision::cpp_int;

FieldSpec FieldSpec::mod(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("field: prime must be >= 2");
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
  }
  if (p >= (1u << 31)) throw std::invalid_argument("field: prime too large");
  return FieldSpec{false, p};
}

SimplicialComplex::SimplicialComplex(int n, const std::vector<VertexSet>& faces) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("complex: vertex count out of range");
  const std::uint32_t subsets = 1u << n;
  bits_.assign((subsets + 63u) / 64u, 0);
  const auto set = [&](std::uint32_t m) { bits_[m >> 6] |= (std::uint64_t{1} << (m & 63u)); };
  set(0);
  for (VertexSet f : faces) {
    if (!f.subset_of(VertexSet::full(n))) throw std::invalid_argument("complex: face out of range");
    std::uint32_t sub = f.bits();
    while (true) {
      set(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f.bits();
    }
  }
  // facets = maximal faces
  for (std::uint32_t m = 0; m < subsets; ++m) {
    if (!face(m)) continue;
    bool maximal = true;
    for (int v = 0; v < n_ && maximal; ++v) {
      if (!(m >> v & 1u) && face(m | (1u << v))) maximal = false;
    }
    if (maximal) facets_.push_back(VertexSet(m));
  }
  std::sort(facets_.begin(), facets_.end(), canonical_less);
}

bool SimplicialComplex::downward_closed() const {
  const std::uint32_t subsets = 1u << n_;
  for (std::uint32_t m = 0; m < subsets; ++m) {
    if (!face(m)) continue;
    for (int v = 0; v < n_; ++v) {
      if ((m >> v & 1u) && !face(m & ~(1u << v))) return false;
    }
  }
  return true;
}

SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal) {
  std::vector<VertexSet> faces;
  const std::uint32_t subsets = 1u << ideal.n();
  for (std::uint32_t m = 0; m < subsets; ++m) {
    if (!ideal.contains(VertexSet(m))) faces.push_back(VertexSet(m));
  }
  return SimplicialComplex(ideal.n(), faces);
}

namespace {

// Rank by fraction-free (Bareiss) elimination; exact over the rationals.
int rank_rational(std::vector<std::vector<int>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_mod_p(std::vector<std::vector<int>> m, std::uint32_t p) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const long long v = m[i][j] % static_cast<long long>(p);
      a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
  }
  const auto inv = [&](std::uint64_t x) {
    // Fermat: p prime
    std::uint64_t e = p - 2, r = 1, b = x;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t scale = inv(a[rank][col]);
    for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * scale % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const std::uint64_t factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = (a[i][j] + (p - factor) * a[rank][j]) % p;
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int matrix_rank(const std::vector<std::vector<int>>& m, const FieldSpec& field) {
  return field.rationals ? rank_rational(m) : rank_mod_p(m, field.prime);
}

}  // namespace

std::vector<int> reduced_homology_ranks(const SimplicialComplex& complex, VertexSet sigma,
                                        FieldSpec field) {
  // Faces of the induced subcomplex, grouped by cardinality (k vertices =
  // dimension k-1); the empty face sits at index 0.
  const int top = sigma.size();
  std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(top) + 1);
  std::uint32_t sub = sigma.bits();
  while (true) {
    if (complex.face(sub)) faces[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & sigma.bits();
  }
  for (auto& level : faces) std::sort(level.begin(), level.end());

  // boundary[k]: faces with k+1 vertices -> faces with k vertices
  std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& upper = faces[static_cast<std::size_t>(k)];
    const auto& lower = faces[static_cast<std::size_t>(k - 1)];
    if (upper.empty() || lower.empty()) continue;
    std::vector<std::vector<int>> m(lower.size(), std::vector<int>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const std::uint32_t f = upper[j];
      int position = 0;
      for (std::uint32_t rest = f; rest != 0; rest &= rest - 1, ++position) {
        const std::uint32_t without = f & ~(rest & (0u - rest));
        const auto it = std::lower_bound(lower.begin(), lower.end(), without);
        m[static_cast<std::size_t>(it - lower.begin())][j] = (position % 2 == 0) ? 1 : -1;
      }
    }
    ranks[static_cast<std::size_t>(k)] = matrix_rank(m, field);
  }

  // H~_{j} for j = -1..top-1 stored at index j+1.
  std::vector<int> h(static_cast<std::size_t>(top) + 1, 0);
  for (int j = -1; j < top; ++j) {
    const std::size_t faces_here = faces[static_cast<std::size_t>(j + 1)].size();
    h[static_cast<std::size_t>(j + 1)] = static_cast<int>(faces_here) -
                                         ranks[static_cast<std::size_t>(j + 1)] -
                                         ranks[static_cast<std::size_t>(j + 2)];
  }
  return h;
}

int BettiTable::entry(int i, VertexSet sigma) const {
  const auto it = entries_.find({i, sigma.bits()});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, std::uint32_t sigma, int value) {
  if (value != 0) entries_[{i, sigma}] = value;
}

int BettiTable::projdim() const {
  int out = 0;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first);
  return out;
}

int BettiTable::regularity() const {
  int out = 0;
  for (const auto& [key, value] : entries_) {
    out = std::max(out, std::popcount(key.second) - key.first);
  }
  return out;
}

BettiTable betti_table(const SquarefreeIdeal& ideal, FieldSpec field) {
  if (ideal.is_zero()) throw std::invalid_argument("betti_table: zero ideal");
  const SimplicialComplex complex = stanley_reisner(ideal);
  BettiTable table(ideal.n(), field);
  const std::uint32_t subsets = 1u << ideal.n();
  for (std::uint32_t sigma = 0; sigma < subsets; ++sigma) {
    const VertexSet s(sigma);
    const std::vector<int> h = reduced_homology_ranks(complex, s, field);
    for (int j = -1; j < s.size(); ++j) {
      const int value = h[static_cast<std::size_t>(j + 1)];
      if (value != 0) table.add(s.size() - j - 1, sigma, value);
    }
  }
  return table;
}

HomologicalInvariants homological_invariants(const SquarefreeIdeal& ideal, FieldSpec field) {
  if (ideal.is_zero()) return HomologicalInvariants{0, ideal.n(), 0};
  const BettiTable table = betti_table(ideal, field);
  const int projdim = table.projdim();
  return HomologicalInvariants{projdim, ideal.n() - projdim, table.regularity()};
}

}  // namespace edgeideals
