#include "topomani/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

#include "topomani/error.hpp"
#include "topomani/parallel.hpp"

namespace topomani {

namespace {

std::size_t distinct_count(const std::vector<Digest128>& colors) {
  std::unordered_set<Digest128, Digest128Hash> seen(colors.begin(), colors.end());
  return seen.size();
}

constexpr std::uint64_t kInMarker = 0xfeedfacecafebeefULL;

}  // namespace

WLColoring wl_refine(const RepresentationGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<NodeIndex>> out_nbrs(n), in_nbrs(n);
  for (const auto& [a, b] : graph.edges) {
    out_nbrs[a].push_back(b);
    if (graph.directed) {
      in_nbrs[b].push_back(a);
    } else {
      out_nbrs[b].push_back(a);
    }
  }

  WLColoring result;
  result.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = graph.nodes[i];
    result.colors[i] = HashBuilder()
                           .add(static_cast<std::uint64_t>(node.role))
                           .add(static_cast<std::uint64_t>(node.dimension() + 1))
                           .finish();
  }
  std::size_t classes = distinct_count(result.colors);
  std::vector<Digest128> next(n), scratch;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      HashBuilder h;
      h.add(result.colors[i]).add(out_nbrs[i].size());
      scratch.clear();
      for (auto j : out_nbrs[i]) scratch.push_back(result.colors[j]);
      std::sort(scratch.begin(), scratch.end());
      for (const auto& c : scratch) h.add(c);
      if (graph.directed) {
        h.add(kInMarker).add(in_nbrs[i].size());
        scratch.clear();
        for (auto j : in_nbrs[i]) scratch.push_back(result.colors[j]);
        std::sort(scratch.begin(), scratch.end());
        for (const auto& c : scratch) h.add(c);
      }
      next[i] = h.finish();
    }
    result.colors.swap(next);
    ++result.rounds;
    const std::size_t refined = distinct_count(result.colors);
    // Refinement only splits classes, so an unchanged count means a stable partition.
    if (refined == classes) break;
    classes = refined;
  }
  return result;
}

WLDigest wl_hash(const RepresentationGraph& graph) {
  auto coloring = wl_refine(graph);
  std::sort(coloring.colors.begin(), coloring.colors.end());
  HashBuilder h;
  h.add(coloring.rounds).add(coloring.colors.size());
  for (const auto& c : coloring.colors) h.add(c);
  return h.finish();
}

namespace {

class VertexMatcher {
 public:
  VertexMatcher(const SimplicialComplex& a, const SimplicialComplex& b,
                const std::vector<Digest128>& colors_a, const std::vector<Digest128>& colors_b)
      : a_(a), b_(b), n_(a.vertex_count()) {
    faces_a_ = faces_by_vertex(a);
    faces_b_ = faces_by_vertex(b);
    for (Vertex w = 0; w < n_; ++w) {
      std::vector<Vertex> cands;
      for (Vertex x = 0; x < n_; ++x) {
        if (colors_b[x] == colors_a[w]) cands.push_back(x);
      }
      candidates_.push_back(std::move(cands));
    }
    build_order();
    map_.assign(n_, kUnset);
    inverse_.assign(n_, kUnset);
  }

  bool run() { return n_ == 0 || extend(0); }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  static std::vector<std::vector<Simplex>> faces_by_vertex(const SimplicialComplex& c) {
    std::vector<std::vector<Simplex>> out(c.vertex_count());
    for (int k = 1; k <= c.dimension(); ++k) {
      for (const auto& s : c.faces(k)) {
        for (Vertex v : s) out[v].push_back(s);
      }
    }
    return out;
  }

  // Greedy order: start in the smallest candidate class, then always take
  // the vertex with the most already-ordered neighbours.
  void build_order() {
    std::vector<std::vector<Vertex>> nbrs(n_);
    for (const auto& e : a_.faces(1)) {
      nbrs[e[0]].push_back(e[1]);
      nbrs[e[1]].push_back(e[0]);
    }
    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> links(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex best = kUnset;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best == kUnset || links[v] > links[best] ||
            (links[v] == links[best] && candidates_[v].size() < candidates_[best].size())) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex u : nbrs[best]) ++links[u];
    }
  }

  bool fully_mapped(const Simplex& s, const std::vector<Vertex>& m) const {
    return std::all_of(s.begin(), s.end(), [&](Vertex u) { return m[u] != kUnset; });
  }

  static Simplex image(const Simplex& s, const std::vector<Vertex>& m) {
    std::array<Vertex, kMaxSimplexSize> buf{};
    for (std::size_t i = 0; i < s.size(); ++i) buf[i] = m[s[i]];
    return Simplex::from_unsorted(std::span<const Vertex>(buf.data(), s.size()));
  }

  bool consistent(Vertex v) const {
    for (const auto& s : faces_a_[v]) {
      if (fully_mapped(s, map_) && !b_.contains(image(s, map_))) return false;
    }
    for (const auto& s : faces_b_[map_[v]]) {
      if (fully_mapped(s, inverse_) && !a_.contains(image(s, inverse_))) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    for (Vertex w : candidates_[v]) {
      if (inverse_[w] != kUnset) continue;
      map_[v] = w;
      inverse_[w] = v;
      if (consistent(v) && extend(depth + 1)) return true;
      map_[v] = kUnset;
      inverse_[w] = kUnset;
    }
    return false;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  std::size_t n_;
  std::vector<std::vector<Simplex>> faces_a_, faces_b_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_, inverse_;
};

}  // namespace

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dimension() != b.dimension() || a.f_vector() != b.f_vector()) return false;
  const auto wa = wl_refine(incidence_graph(a));
  const auto wb = wl_refine(incidence_graph(b));
  if (wa.rounds != wb.rounds) return false;
  auto sa = wa.colors;
  auto sb = wb.colors;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  // Incidence-graph nodes 0..n-1 are the vertices.
  const std::size_t n = a.vertex_count();
  const std::vector<Digest128> va(wa.colors.begin(), wa.colors.begin() + static_cast<std::ptrdiff_t>(n));
  const std::vector<Digest128> vb(wb.colors.begin(), wb.colors.begin() + static_cast<std::ptrdiff_t>(n));
  return VertexMatcher(a, b, va, vb).run();
}

std::string DedupReport::to_json() const {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["kept"] = kept;
  j["fvector_groups"] = fvector_groups;
  j["wl_subsets"] = wl_subsets;
  j["unique_by_fvector"] = unique_by_fvector;
  j["unique_by_wl"] = unique_by_wl;
  j["exact_checks"] = exact_checks;
  j["removed_isomorphic"] = removed_isomorphic;
  j["capped_subsets"] = capped_subsets;
  j["removed_group_cap"] = removed_group_cap;
  return j.dump();
}

DedupResult deduplicate(std::span<const DatasetRecord> batch, std::size_t max_group, std::size_t jobs) {
  if (max_group == 0) fail(ErrorCode::kInvalidParameter, "max_group must be >= 1");
  const std::size_t n = batch.size();
  DedupResult result;
  result.report.input = n;

  std::vector<SimplicialComplex> complexes(n);
  std::vector<std::string> lines(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    complexes[i] = batch[i].complex();
    lines[i] = serialize_record(batch[i]);
  });

  std::map<std::pair<int, FVector>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    groups[{complexes[i].dimension(), complexes[i].f_vector()}].push_back(i);
  }
  result.report.fvector_groups = groups.size();

  std::vector<std::size_t> needs_digest;
  for (const auto& [key, members] : groups) {
    if (members.size() == 1) {
      ++result.report.unique_by_fvector;
    } else {
      needs_digest.insert(needs_digest.end(), members.begin(), members.end());
    }
  }
  std::vector<WLDigest> digests(n);
  parallel_for(needs_digest.size(), jobs, [&](std::size_t k) {
    const auto i = needs_digest[k];
    digests[i] = wl_hash(incidence_graph(complexes[i]));
  });

  std::vector<std::vector<std::size_t>> subsets;
  for (const auto& [key, members] : groups) {
    if (members.size() == 1) continue;
    std::map<WLDigest, std::vector<std::size_t>> by_digest;
    for (auto i : members) by_digest[digests[i]].push_back(i);
    result.report.wl_subsets += by_digest.size();
    for (auto& [digest, subset] : by_digest) {
      if (subset.size() == 1) {
        ++result.report.unique_by_wl;
      } else {
        subsets.push_back(std::move(subset));
      }
    }
  }

  std::vector<char> removed(n, 0);  // not vector<bool>: written from several threads
  struct SubsetOutcome {
    std::size_t checks = 0;
    std::size_t isomorphic = 0;
    bool capped = false;
  };
  std::vector<SubsetOutcome> outcomes(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t s) {
    auto& subset = subsets[s];
    std::sort(subset.begin(), subset.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(lines[x], x) < std::tie(lines[y], y);
    });
    auto& outcome = outcomes[s];
    if (subset.size() > max_group) {
      outcome.capped = true;
      for (std::size_t k = 1; k < subset.size(); ++k) removed[subset[k]] = 1;
      return;
    }
    std::vector<std::size_t> representatives;
    for (auto i : subset) {
      bool duplicate = false;
      for (auto r : representatives) {
        ++outcome.checks;
        if (are_isomorphic(complexes[i], complexes[r])) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        removed[i] = 1;
        ++outcome.isomorphic;
      } else {
        representatives.push_back(i);
      }
    }
  });
  for (const auto& o : outcomes) {
    result.report.exact_checks += o.checks;
    result.report.removed_isomorphic += o.isomorphic;
  }
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    if (outcomes[s].capped) {
      ++result.report.capped_subsets;
      result.report.removed_group_cap += subsets[s].size() - 1;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) result.kept.push_back(batch[i]);
  }
  result.report.kept = result.kept.size();
  return result;
}

}  // namespace topomani
