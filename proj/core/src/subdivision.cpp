#include "topomani/subdivision.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "topomani/error.hpp"
#include "topomani/random.hpp"

namespace topomani {

std::string SubdivisionScheme::name() const {
  switch (kind) {
    case SubdivisionKind::kStellarOne: return "stellar";
    case SubdivisionKind::kGradedStellar:
      return "graded-" + std::to_string(target_vertices.value_or(0));
    case SubdivisionKind::kTopStellar: {
      std::ostringstream out;
      out << "top-" << proportion.value_or(0.0);
      return out.str();
    }
    case SubdivisionKind::kBarycentric: return "barycentric";
  }
  return "unknown";
}

std::optional<SubdivisionScheme> SubdivisionScheme::parse(std::string_view name) {
  if (name == "stellar") return stellar_one();
  if (name == "barycentric") return barycentric();
  const auto number = [&](std::string_view prefix) -> std::optional<std::string> {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    return std::string(name.substr(prefix.size()));
  };
  if (auto n = number("graded-")) {
    std::size_t value = 0;
    const auto* end = n->data() + n->size();
    if (std::from_chars(n->data(), end, value).ptr != end) return std::nullopt;
    return graded(value);
  }
  if (auto p = number("top-")) {
    std::size_t used = 0;
    try {
      const double value = std::stod(*p, &used);
      if (used != p->size()) return std::nullopt;
      return top(value);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void SubdivisionScheme::validate() const {
  if (kind == SubdivisionKind::kGradedStellar && !target_vertices) {
    fail(ErrorCode::kInvalidParameter, "graded stellar subdivision needs a vertex target");
  }
  if (kind == SubdivisionKind::kTopStellar &&
      (!proportion || !(*proportion > 0.0) || *proportion > 1.0)) {
    fail(ErrorCode::kInvalidParameter, "top stellar subdivision needs 0 < p <= 1");
  }
  if (target_vertices.has_value() != (kind == SubdivisionKind::kGradedStellar) ||
      proportion.has_value() != (kind == SubdivisionKind::kTopStellar)) {
    fail(ErrorCode::kInvalidParameter, "parameters do not match subdivision kind " + name());
  }
}

namespace {

// Replaces each facet in `chosen` by the cone of a new vertex over its
// boundary. New vertices are numbered after the existing ones in order.
SimplicialComplex cone_facets(const SimplicialComplex& complex, const std::vector<bool>& chosen) {
  const auto facets = complex.facets();
  std::vector<Simplex> out;
  Vertex fresh = static_cast<Vertex>(complex.vertex_count());
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (!chosen[f]) {
      out.push_back(facets[f]);
      continue;
    }
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      out.push_back(facets[f].without_index(i).with(fresh));
    }
    ++fresh;
  }
  return SimplicialComplex::from_top_faces(out, complex.dimension());
}

void require_nonempty(const SimplicialComplex& complex) {
  if (complex.empty()) fail(ErrorCode::kEmptyInput, "cannot subdivide the empty complex");
}

}  // namespace

SimplicialComplex stellar_subdivide(const SimplicialComplex& complex, const Simplex& s) {
  if (!complex.contains(s)) fail(ErrorCode::kFaceNotPresent, "face " + s.to_string());
  if (s.dimension() != complex.dimension()) {
    fail(ErrorCode::kNotMaximal, "face " + s.to_string() + " is not a maximal face");
  }
  std::vector<bool> chosen(complex.facets().size(), false);
  chosen[static_cast<std::size_t>(complex.index_of(s))] = true;
  return cone_facets(complex, chosen);
}

SimplicialComplex graded_stellar(const SimplicialComplex& complex, std::size_t n,
                                 std::uint64_t seed) {
  require_nonempty(complex);
  if (n < complex.vertex_count()) {
    fail(ErrorCode::kInvalidParameter, "target " + std::to_string(n) + " below current " +
                                           std::to_string(complex.vertex_count()) + " vertices");
  }
  Rng rng(seed);
  SimplicialComplex current = complex;
  while (current.vertex_count() < n) {
    std::vector<bool> chosen(current.facets().size(), false);
    chosen[uniform_index(rng, chosen.size())] = true;
    current = cone_facets(current, chosen);
  }
  return current;
}

SimplicialComplex top_stellar(const SimplicialComplex& complex, double p, std::uint64_t seed) {
  require_nonempty(complex);
  if (!(p > 0.0) || p > 1.0) fail(ErrorCode::kInvalidParameter, "proportion must be in (0, 1]");
  const std::size_t total = complex.facets().size();
  // The epsilon keeps exact products such as 0.7 * 10 from rounding up.
  auto count = static_cast<std::size_t>(std::ceil(p * static_cast<double>(total) - 1e-9));
  count = std::clamp<std::size_t>(count, 1, total);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> chosen(total, false);
  for (std::size_t i = 0; i < count; ++i) chosen[order[i]] = true;
  return cone_facets(complex, chosen);
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& complex) {
  require_nonempty(complex);
  if (!complex.is_pure()) fail(ErrorCode::kInvalidParameter, "barycentric subdivision needs a pure complex");
  const int d = complex.dimension();
  std::vector<std::size_t> offset(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 1; k <= d; ++k) offset[k] = offset[k - 1] + complex.face_count(k - 1);
  auto barycentre = [&](const Simplex& s) {
    return static_cast<Vertex>(offset[s.dimension()] + complex.index_of(s));
  };

  // A full flag of a facet is a vertex ordering; its prefixes form the chain.
  std::vector<Simplex> flags;
  for (const auto& facet : complex.facets()) {
    std::vector<Vertex> order(facet.begin(), facet.end());
    do {
      std::array<Vertex, kMaxSimplexSize> chain{};
      std::vector<Vertex> prefix;
      for (std::size_t k = 0; k < order.size(); ++k) {
        prefix.push_back(order[k]);
        chain[k] = barycentre(Simplex::from_unsorted(prefix));
      }
      flags.push_back(Simplex::from_unsorted(std::span<const Vertex>(chain.data(), order.size())));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_top_faces(flags, d);
}

SimplicialComplex subdivide(const SimplicialComplex& complex, const SubdivisionScheme& scheme,
                            std::uint64_t seed) {
  scheme.validate();
  switch (scheme.kind) {
    case SubdivisionKind::kStellarOne: {
      require_nonempty(complex);
      Rng rng(seed);
      const Simplex facet = complex.facets()[uniform_index(rng, complex.facets().size())];
      return stellar_subdivide(complex, facet);
    }
    case SubdivisionKind::kGradedStellar:
      return graded_stellar(complex, *scheme.target_vertices, seed);
    case SubdivisionKind::kTopStellar:
      return top_stellar(complex, *scheme.proportion, seed);
    case SubdivisionKind::kBarycentric:
      return barycentric_subdivide(complex);
  }
  fail(ErrorCode::kInvalidParameter, "unknown subdivision scheme");
}

}  // namespace topomani
