#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "regtrace/error.hpp"
#include "regtrace/graph.hpp"

namespace regtrace {

namespace {

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorKind::InfeasibleParameters, what);
}

// Deterministic generators must always produce valid graphs; any build
// failure means the parameters were bad.
Graph build_or_infeasible(GraphDocument doc) {
  try {
    return build_graph(doc);
  } catch (const Error& e) {
    infeasible(doc.name + ": " + e.what());
  }
}

Graph make(const CycleSpec& s) {
  if (s.length < 3) infeasible("cycle length must be at least 3");
  GraphDocument doc{"cycle-" + std::to_string(s.length), s.length, {}};
  for (int i = 0; i < s.length; ++i) doc.edges.push_back({i, (i + 1) % s.length});
  return build_or_infeasible(std::move(doc));
}

Graph make(const CompleteSpec& s) {
  if (s.n < 3) infeasible("complete graph needs at least 3 vertices");
  GraphDocument doc{"complete-" + std::to_string(s.n), s.n, {}};
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v) doc.edges.push_back({u, v});
  return build_or_infeasible(std::move(doc));
}

Graph make(const PetersenSpec&) {
  GraphDocument doc{"petersen", 10, {}};
  for (int i = 0; i < 5; ++i) doc.edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) doc.edges.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) doc.edges.push_back({5 + i, 5 + (i + 2) % 5});
  return build_or_infeasible(std::move(doc));
}

Graph make(const HypercubeSpec& s) {
  if (s.dimension < 2 || s.dimension > 20) infeasible("hypercube dimension must be in [2, 20]");
  const int n = 1 << s.dimension;
  GraphDocument doc{"hypercube-" + std::to_string(s.dimension), n, {}};
  for (int u = 0; u < n; ++u)
    for (int k = 0; k < s.dimension; ++k)
      if (const int v = u ^ (1 << k); u < v) doc.edges.push_back({u, v});
  return build_or_infeasible(std::move(doc));
}

Graph make(const CirculantSpec& s) {
  if (s.n < 3) infeasible("circulant graph needs at least 3 vertices");
  std::set<int> offsets;
  std::string name = "circulant-" + std::to_string(s.n);
  for (int k : s.offsets) {
    if (k < 1 || 2 * k > s.n) infeasible("circulant offset " + std::to_string(k) + " outside [1, n/2]");
    if (!offsets.insert(k).second) infeasible("duplicate circulant offset " + std::to_string(k));
    name += "-" + std::to_string(k);
  }
  if (offsets.empty()) infeasible("circulant graph needs at least one offset");
  GraphDocument doc{name, s.n, {}};
  for (int k : offsets) {
    // The antipodal offset pairs each vertex with exactly one partner.
    const int count = (2 * k == s.n) ? s.n / 2 : s.n;
    for (int i = 0; i < count; ++i) doc.edges.push_back({i, (i + k) % s.n});
  }
  return build_or_infeasible(std::move(doc));
}

// Unbiased draw from [0, bound) that does not depend on the standard
// library's distribution implementation, so seeds reproduce across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph make(const RandomRegularSpec& s) {
  if (s.degree < 2) infeasible("degree must be at least 2");
  if (s.n <= s.degree) infeasible("need n > degree for a simple regular graph");
  if ((static_cast<long long>(s.n) * s.degree) % 2 != 0) infeasible("n * degree must be even");
  if (s.max_attempts <= 0) infeasible("rejection budget must be positive");

  const std::string name = "random-regular-" + std::to_string(s.n) + "-" + std::to_string(s.degree) +
                           "-seed" + std::to_string(s.seed);
  std::mt19937_64 rng(s.seed);
  std::vector<int> points(static_cast<std::size_t>(s.n) * static_cast<std::size_t>(s.degree));

  for (int attempt = 0; attempt < s.max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / s.degree;
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[draw_below(rng, i + 1)]);
    }

    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const int u = std::min(points[i], points[i + 1]);
      const int v = std::max(points[i], points[i + 1]);
      simple = u != v && edges.insert({u, v}).second;
    }
    if (!simple) continue;

    GraphDocument doc{name, s.n, {edges.begin(), edges.end()}};
    try {
      return build_graph(doc);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConnected) throw;
    }
  }
  throw Error(ErrorKind::GenerationFailed,
              name + ": no simple connected pairing after " + std::to_string(s.max_attempts) + " attempts");
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  return std::visit([](const auto& s) { return make(s); }, spec);
}

}  // namespace regtrace
