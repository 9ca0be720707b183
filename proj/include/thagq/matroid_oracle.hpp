#pragma once

#include "thagq/logconcave.hpp"
#include "thagq/unipoly.hpp"

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <utility>
#include <vector>

namespace thagq {

/// Bitmask over edge indices.
using EdgeSet = std::uint64_t;

/// Loopless multigraph; edge i is ground-set element i of its cycle matroid.
struct MultiGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws DomainError on out-of-range endpoints or self-loops.
  void validate() const;
  EdgeSet all_edges() const;
};

/// thagomizer: vertices A=0, B=1, spoke j = j+1; edges AB, then (A j, B j)
/// per spoke. k2n: the same without AB. n >= 1.
MultiGraph build_family(Family family, int n);
/// K_{1,1,n} for n >= 0 (n = 0 is the single edge AB).
MultiGraph thagomizer_graph(int n);
/// Star with m edges; its cycle matroid is Boolean of rank m.
MultiGraph boolean_graph(int m);

/// Reads "v <count>" followed by "e <a> <b>" lines (0-based vertices);
/// blank lines and '#' comments are ignored.
MultiGraph parse_graph(std::istream& in);

/// |V| minus the number of components of (V, edges in `set`).
int graphic_rank(const MultiGraph& g, EdgeSet set);
/// All edges whose endpoints are already connected by `set`.
EdgeSet graphic_closure(const MultiGraph& g, EdgeSet set);

/// Flats ordered by (rank, mask) with the full Moebius matrix.
struct FlatLattice {
  int edge_count = 0;
  std::vector<EdgeSet> flats;
  std::vector<int> rank_of;
  /// mobius[x][y] = mu(flat x, flat y); zero unless x <= y.
  std::vector<std::vector<long long>> mobius;
  std::map<EdgeSet, int> index;

  int size() const { return static_cast<int>(flats.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int rank() const { return rank_of.back(); }
  bool leq(int x, int y) const { return (flats[static_cast<std::size_t>(x)] & ~flats[static_cast<std::size_t>(y)]) == 0; }
  /// Index of a flat; DomainError when the set is not a flat.
  int find(EdgeSet flat) const;
  /// Number of flats of each rank 0..rank().
  std::vector<int> rank_counts() const;
};

inline constexpr int kDefaultMaxEdges = 13;

/// ResourceError when the graph has more than max_edges edges.
FlatLattice lattice_of_flats(const MultiGraph& g, int max_edges = kDefaultMaxEdges);

/// Characteristic polynomial of the contraction at `bottom_flat`.
UniPoly char_poly_interval(const FlatLattice& L, EdgeSet bottom_flat);

/// Inverse KL polynomial of every restriction M|F, indexed like L.flats.
std::vector<UniPoly> q_kls_all(const FlatLattice& L);
/// Inverse KL polynomial of the whole matroid.
UniPoly q_kls(const FlatLattice& L);

/// Problems found in L against g: graphic ranks, closedness, Moebius sums.
std::vector<std::string> lattice_problems(const MultiGraph& g, const FlatLattice& L);

/// True iff `map` is a rank-shifting order isomorphism from the upper
/// interval [bottom_flat, top] of L onto all of `target`.
bool is_upper_interval_isomorphism(const FlatLattice& L, EdgeSet bottom_flat, const FlatLattice& target,
                                   const std::function<EdgeSet(EdgeSet)>& map);

/// The model of an upper interval of T_n: either T_m or Boolean of rank m,
/// with the edge map onto thagomizer_graph(m) or boolean_graph(m).
struct ThagomizerIntervalModel {
  bool boolean = false;
  int size = 0;
  std::function<EdgeSet(EdgeSet)> map;
};

/// Classifies a flat of T_n (one edge from each of i spikes, or AB plus
/// i - 1 whole spikes) and returns its contraction model.
ThagomizerIntervalModel thagomizer_interval_model(int n, EdgeSet flat);

}  // namespace thagq
