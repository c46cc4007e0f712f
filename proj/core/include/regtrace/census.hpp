#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "regtrace/bigint.hpp"
#include "regtrace/graph.hpp"

namespace regtrace {

/// Cyclic vertex sequence (v_1, ..., v_l) with v_i ~ v_(i+1) and v_l ~ v_1.
/// The start point is significant. Length 0 is a single vertex.
struct ClosedPath {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size() <= 1 ? 0 : vertices.size(); }
  bool operator==(const ClosedPath&) const = default;
};

/// A closed geodesic trajectory (no cyclic backtrack), stored as the
/// lexicographically least rotation of its vertex word. Orientation is kept:
/// a geodesic and its reverse are different classes.
struct GeodesicClass {
  std::vector<Vertex> canonical_word;
  int length = 0;
  /// Length of the primitive root; divides `length`.
  int lambda = 0;
  bool is_primitive = false;

  auto operator<=>(const GeodesicClass&) const = default;
};

struct Contractible {
  auto operator<=>(const Contractible&) const = default;
};

using HomotopyClass = std::variant<Contractible, GeodesicClass>;

struct CensusTable {
  /// p[l]: closed paths of length l, i.e. tr T^l.
  std::vector<BigInt> p;
  /// gp[l]: geodesic paths of length l.
  std::vector<BigInt> gp;
};

/// Caps for the exhaustive oracles.
struct OracleBudget {
  int max_vertices = 16;
  int max_length = 12;
  std::size_t max_geodesic_classes = 2'000'000;
};

// ---------------------------------------------------------------------------
// Exact counts

/// tr T^l for l = 0..l_max, by propagating each basis vector through T.
std::vector<BigInt> count_closed_paths(const Graph& g, int l_max);
/// tr B^l for the non-backtracking operator B on directed edges, l = 0..l_max.
/// Entry 0 is defined as 0 (there are no geodesics of length 0 among the long ones).
std::vector<BigInt> count_geodesic_paths(const Graph& g, int l_max);
CensusTable census_table(const Graph& g, int l_max);
/// "l,p_l,gp_l" rows with a header line.
void write_census_csv(std::ostream& out, const CensusTable& table);

// ---------------------------------------------------------------------------
// Exhaustive enumeration (oracles)

/// Calls `visit` once per closed path of length l (start point significant).
/// Throws BudgetExceeded if the graph or length exceeds the budget.
void for_each_closed_path(const Graph& g, int l, const std::function<void(std::span<const Vertex>)>& visit,
                          const OracleBudget& budget = {});
std::vector<ClosedPath> enumerate_closed_paths(const Graph& g, int l, const OracleBudget& budget = {});

/// All geodesic classes of length 3..l_max, each once, ordered by (length, word).
std::vector<GeodesicClass> enumerate_geodesics(const Graph& g, int l_max, const OracleBudget& budget = {});

/// Tallies closed paths of length l by homotopy class.
std::map<HomotopyClass, BigInt> homotopy_census(const Graph& g, int l, const OracleBudget& budget = {});

// ---------------------------------------------------------------------------
// Words and reduction

/// Smallest d dividing the length such that the word is a power of its
/// length-d prefix.
int primitive_root_length(std::span<const Vertex> word);
/// Lexicographically least rotation.
std::vector<Vertex> canonical_rotation(std::span<const Vertex> word);
/// True if w_i != w_(i+2) for every i, cyclically (and the length is >= 3).
bool is_cyclically_reduced(std::span<const Vertex> word);
/// Builds the class record for an already reduced word.
GeodesicClass make_geodesic_class(std::span<const Vertex> word);

enum class ReductionOrder {
  /// Single left-to-right pass with a stack, then trimming of the ends.
  Stack,
  /// Repeatedly cancel the backtrack with the smallest starting index.
  LeftmostFirst,
  /// Repeatedly cancel the backtrack with the largest starting index.
  RightmostFirst,
};

/// Cancels backtracks v, x, v -> v until none remain (cyclically).
HomotopyClass cyclic_reduce(std::span<const Vertex> word, ReductionOrder order = ReductionOrder::Stack);

// ---------------------------------------------------------------------------
// The exact identity p_l = |V| p_tree[l] + sum_m gp_m h(m, l)

struct MasterIdentityRow {
  int l = 0;
  BigInt closed_paths;
  BigInt contractible;
  BigInt geodesic;
  bool holds() const { return closed_paths == contractible + geodesic; }
};

std::vector<MasterIdentityRow> master_identity(const Graph& g, int l_max);

}  // namespace regtrace
