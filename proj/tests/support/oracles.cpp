#include "support/oracles.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <set>
#include <stdexcept>

namespace topomani::testing {

namespace {

using VertexSet = std::vector<Vertex>;

std::size_t dense_rank(std::vector<std::vector<unsigned char>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && !m[pivot][col]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m[r][col]) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] ^= m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

bool is_subset(const Simplex& small, const Simplex& big) {
  for (Vertex v : small) {
    if (std::find(big.begin(), big.end(), v) == big.end()) return false;
  }
  return true;
}

}  // namespace

bool brute_force_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension()) return false;
  if (a.vertex_count() > 8) throw std::invalid_argument("brute force limited to 8 vertices");
  if (a.facets().size() != b.facets().size()) return false;
  // Facets as vertex bitmasks; b's facet set as a 256-entry membership table.
  std::bitset<256> target;
  for (const auto& f : b.facets()) {
    unsigned mask = 0;
    for (Vertex v : f) mask |= 1u << v;
    target.set(mask);
  }
  std::vector<std::vector<Vertex>> source;
  for (const auto& f : a.facets()) source.emplace_back(f.begin(), f.end());
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    const bool all = std::all_of(source.begin(), source.end(), [&](const std::vector<Vertex>& f) {
      unsigned mask = 0;
      for (Vertex v : f) mask |= 1u << perm[v];
      return target.test(mask);
    });
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::size_t> dense_betti_gf2(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(d) + 2, 0);
  for (int k = 1; k <= d; ++k) {
    const auto lower = complex.faces(k - 1);
    const auto upper = complex.faces(k);
    std::vector<std::vector<unsigned char>> m(lower.size(), std::vector<unsigned char>(upper.size(), 0));
    for (std::size_t r = 0; r < lower.size(); ++r) {
      for (std::size_t c = 0; c < upper.size(); ++c) {
        m[r][c] = is_subset(lower[r], upper[c]) ? 1 : 0;
      }
    }
    rank[k] = dense_rank(std::move(m));
  }
  std::vector<std::size_t> betti;
  for (int k = 0; k <= d; ++k) betti.push_back(complex.face_count(k) - rank[k] - rank[k + 1]);
  return betti;
}

bool brute_force_orientable(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  if (facets.size() > 22) throw std::invalid_argument("brute force limited to 22 facets");
  // Oriented ridge = sorted ridge plus sign; a consistent assignment uses
  // every oriented ridge at most once.
  for (unsigned long mask = 0; mask < (1ul << facets.size()); ++mask) {
    std::set<std::pair<VertexSet, int>> used;
    bool ok = true;
    for (std::size_t f = 0; f < facets.size() && ok; ++f) {
      const int sign = (mask >> f) & 1 ? -1 : 1;
      for (std::size_t i = 0; i < facets[f].size() && ok; ++i) {
        VertexSet ridge;
        for (std::size_t j = 0; j < facets[f].size(); ++j) {
          if (j != i) ridge.push_back(facets[f][j]);
        }
        const int induced = sign * (i % 2 ? -1 : 1);
        ok = used.insert({ridge, induced}).second;
      }
    }
    if (ok) return true;
  }
  return false;
}

FVector flag_count_fvector(const SimplicialComplex& complex) {
  // chains[k][s] = number of strict chains of k+1 faces ending at face s.
  std::vector<Simplex> all;
  for (int k = 0; k <= complex.dimension(); ++k) {
    all.insert(all.end(), complex.faces(k).begin(), complex.faces(k).end());
  }
  const std::size_t n = all.size();
  const int d = complex.dimension();
  std::vector<std::vector<std::size_t>> chains(static_cast<std::size_t>(d) + 1, std::vector<std::size_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s) chains[0][s] = 1;
  for (int k = 1; k <= d; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (all[t].size() < all[s].size() && is_subset(all[t], all[s])) chains[k][s] += chains[k - 1][t];
      }
    }
  }
  FVector f;
  for (int k = 0; k <= d; ++k) f.counts.push_back(std::accumulate(chains[k].begin(), chains[k].end(), std::size_t{0}));
  return f;
}

std::vector<std::vector<double>> dense_rwpe(const RepresentationGraph& graph, std::size_t steps) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
  for (const auto& [a, b] : graph.edges) {
    p[a][b] = 1.0;
    p[b][a] = 1.0;
  }
  for (auto& row : p) {
    const double deg = std::accumulate(row.begin(), row.end(), 0.0);
    for (auto& x : row) x /= deg;
  }
  auto power = p;
  std::vector<std::vector<double>> out(n, std::vector<double>(steps, 0.0));
  for (std::size_t s = 0; s < steps; ++s) {
    for (std::size_t i = 0; i < n; ++i) out[i][s] = power[i][i];
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (power[i][k] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * p[k][j];
      }
    }
    power = std::move(next);
  }
  return out;
}

}  // namespace topomani::testing
