#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>

#include "regtrace/census.hpp"
#include "regtrace/error.hpp"
#include "regtrace/series.hpp"

namespace regtrace {

namespace {

void check_budget(const Graph& g, int l, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(g.vertex_count()) + " vertices exceeds the oracle cap of " +
                                               std::to_string(budget.max_vertices));
  }
  if (l > budget.max_length) {
    throw Error(ErrorKind::BudgetExceeded,
                "length " + std::to_string(l) + " exceeds the oracle cap of " + std::to_string(budget.max_length));
  }
}

std::size_t index(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<BigInt> count_closed_paths(const Graph& g, int l_max) {
  const int n = g.vertex_count();
  std::vector<BigInt> p(index(std::max(l_max, 0)) + 1, BigInt(0));
  p[0] = n;
  std::vector<BigInt> x(index(n)), y(index(n));
  for (Vertex start = 0; start < n; ++start) {
    std::fill(x.begin(), x.end(), BigInt(0));
    x[index(start)] = 1;
    for (int l = 1; l <= l_max; ++l) {
      for (Vertex u = 0; u < n; ++u) {
        BigInt acc = 0;
        for (Vertex w : g.neighbors(u)) acc += x[index(w)];
        y[index(u)] = std::move(acc);
      }
      std::swap(x, y);
      p[index(l)] += x[index(start)];
    }
  }
  return p;
}

std::vector<BigInt> count_geodesic_paths(const Graph& g, int l_max) {
  const auto arcs = directed_edges(g);
  const std::size_t m = arcs.size();

  std::vector<std::vector<std::size_t>> leaving(index(g.vertex_count()));
  for (std::size_t e = 0; e < m; ++e) leaving[index(arcs[e].tail)].push_back(e);

  std::vector<BigInt> gp(index(std::max(l_max, 0)) + 1, BigInt(0));
  std::vector<BigInt> x(m), y(m);
  for (std::size_t start = 0; start < m; ++start) {
    std::fill(x.begin(), x.end(), BigInt(0));
    x[start] = 1;
    for (int l = 1; l <= l_max; ++l) {
      std::fill(y.begin(), y.end(), BigInt(0));
      for (std::size_t e = 0; e < m; ++e) {
        if (x[e] == 0) continue;
        for (std::size_t f : leaving[index(arcs[e].head)]) {
          if (f != arcs[e].reverse_id) y[f] += x[e];
        }
      }
      std::swap(x, y);
      gp[index(l)] += x[start];
    }
  }
  return gp;
}

CensusTable census_table(const Graph& g, int l_max) {
  return CensusTable{count_closed_paths(g, l_max), count_geodesic_paths(g, l_max)};
}

void write_census_csv(std::ostream& out, const CensusTable& table) {
  out << "l,p_l,gp_l\n";
  for (std::size_t l = 0; l < table.p.size(); ++l) {
    out << l << ',' << table.p[l] << ',' << (l < table.gp.size() ? table.gp[l] : BigInt(0)) << '\n';
  }
}

void for_each_closed_path(const Graph& g, int l, const std::function<void(std::span<const Vertex>)>& visit,
                          const OracleBudget& budget) {
  check_budget(g, l, budget);
  if (l < 0) return;
  const int n = g.vertex_count();
  if (l == 0) {
    for (Vertex v = 0; v < n; ++v) visit(std::span<const Vertex>(&v, 1));
    return;
  }

  std::vector<Vertex> path(index(l));
  // Depth-first over positions 1..l-1; the closing edge is checked at the leaf.
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == l) {
      if (g.adjacent(path.back(), path.front())) visit(path);
      return;
    }
    for (Vertex w : g.neighbors(path[index(depth - 1)])) {
      path[index(depth)] = w;
      self(self, depth + 1);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    path[0] = v;
    extend(extend, 1);
  }
}

std::vector<ClosedPath> enumerate_closed_paths(const Graph& g, int l, const OracleBudget& budget) {
  std::vector<ClosedPath> out;
  for_each_closed_path(
      g, l, [&out](std::span<const Vertex> w) { out.push_back(ClosedPath{{w.begin(), w.end()}}); }, budget);
  return out;
}

std::vector<GeodesicClass> enumerate_geodesics(const Graph& g, int l_max, const OracleBudget& budget) {
  std::vector<GeodesicClass> out;
  std::vector<Vertex> path;

  for (int l = 3; l <= l_max; ++l) {
    path.assign(index(l), 0);
    // Only words starting at their least vertex can be canonical, so every
    // later vertex must be >= path[0].
    auto extend = [&](auto&& self, int depth) -> void {
      if (depth == l) {
        if (!g.adjacent(path.back(), path.front())) return;
        if (path[index(l - 2)] == path[0] || path[index(l - 1)] == path[1]) return;
        if (canonical_rotation(path) != path) return;
        if (out.size() >= budget.max_geodesic_classes) {
          throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget.max_geodesic_classes) +
                                                     " geodesic classes up to length " + std::to_string(l_max));
        }
        out.push_back(make_geodesic_class(path));
        return;
      }
      const Vertex prev = path[index(depth - 1)];
      const Vertex before = depth >= 2 ? path[index(depth - 2)] : -1;
      for (Vertex w : g.neighbors(prev)) {
        if (w == before || w < path[0]) continue;
        path[index(depth)] = w;
        self(self, depth + 1);
      }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      path[0] = v;
      extend(extend, 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
    return std::tie(a.length, a.canonical_word) < std::tie(b.length, b.canonical_word);
  });
  return out;
}

std::map<HomotopyClass, BigInt> homotopy_census(const Graph& g, int l, const OracleBudget& budget) {
  std::uint64_t contractible = 0;
  std::map<std::vector<Vertex>, std::pair<GeodesicClass, std::uint64_t>> classes;
  for_each_closed_path(
      g, l,
      [&](std::span<const Vertex> w) {
        auto reduced = cyclic_reduce(w);
        if (std::holds_alternative<Contractible>(reduced)) {
          ++contractible;
          return;
        }
        auto& gc = std::get<GeodesicClass>(reduced);
        auto [it, inserted] = classes.try_emplace(gc.canonical_word, gc, 0);
        ++it->second.second;
      },
      budget);

  std::map<HomotopyClass, BigInt> out;
  if (contractible > 0) out.emplace(Contractible{}, BigInt(contractible));
  for (auto& [word, entry] : classes) out.emplace(std::move(entry.first), BigInt(entry.second));
  return out;
}

std::vector<MasterIdentityRow> master_identity(const Graph& g, int l_max) {
  const auto p = count_closed_paths(g, l_max);
  const auto gp = count_geodesic_paths(g, l_max);
  const auto tree = tree_walk_counts(g.q(), l_max);

  std::vector<std::vector<BigInt>> h(index(l_max) + 1);
  for (int m = 3; m <= l_max; ++m) h[index(m)] = homotopy_class_coefficients(g.q(), m, l_max);

  std::vector<MasterIdentityRow> rows;
  rows.reserve(index(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) {
    MasterIdentityRow row;
    row.l = l;
    row.closed_paths = p[index(l)];
    row.contractible = g.vertex_count() * tree.p_tree[index(l)];
    for (int m = 3; m <= l; ++m) row.geodesic += gp[index(m)] * h[index(m)][index(l)];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace regtrace
