#include "thagq/matroid_oracle.hpp"

#include "thagq/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace thagq {

namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

private:
  std::vector<int> parent_;
};

UnionFind components(const MultiGraph& g, EdgeSet set) {
  UnionFind uf(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (set >> e & 1U) uf.unite(g.edges[e].first, g.edges[e].second);
  return uf;
}

constexpr EdgeSet bit(int e) { return EdgeSet{1} << e; }

}  // namespace

void MultiGraph::validate() const {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  if (edges.size() > 64) throw ResourceError("more than 64 edges");
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw DomainError("edge endpoint out of range");
    if (a == b) throw DomainError("self-loops are not allowed (the matroid must be loopless)");
  }
}

EdgeSet MultiGraph::all_edges() const {
  return edges.size() >= 64 ? ~EdgeSet{0} : bit(static_cast<int>(edges.size())) - 1;
}

MultiGraph thagomizer_graph(int n) {
  if (n < 0) throw DomainError("thagomizer_graph needs n >= 0");
  MultiGraph g;
  g.vertex_count = n + 2;
  g.edges.emplace_back(0, 1);
  for (int j = 1; j <= n; ++j) {
    g.edges.emplace_back(0, j + 1);
    g.edges.emplace_back(1, j + 1);
  }
  return g;
}

MultiGraph boolean_graph(int m) {
  if (m < 0) throw DomainError("boolean_graph needs m >= 0");
  MultiGraph g;
  g.vertex_count = m + 1;
  for (int j = 1; j <= m; ++j) g.edges.emplace_back(0, j);
  return g;
}

MultiGraph build_family(Family family, int n) {
  if (n < 1) throw DomainError("build_family needs n >= 1");
  MultiGraph g = thagomizer_graph(n);
  if (family == Family::k2n) g.edges.erase(g.edges.begin());
  return g;
}

MultiGraph parse_graph(std::istream& in) {
  MultiGraph g;
  bool have_vertices = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("graph file line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      if (have_vertices) fail("duplicate 'v' line");
      if (!(ls >> g.vertex_count) || g.vertex_count < 0) fail("expected 'v <count>'");
      have_vertices = true;
    } else if (tag == "e") {
      if (!have_vertices) fail("'e' before 'v'");
      int a, b;
      if (!(ls >> a >> b)) fail("expected 'e <a> <b>'");
      g.edges.emplace_back(a, b);
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!have_vertices) throw DomainError("graph file has no 'v' line");
  g.validate();
  return g;
}

int graphic_rank(const MultiGraph& g, EdgeSet set) {
  UnionFind uf(g.vertex_count);
  int r = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if ((set >> e & 1U) && uf.unite(g.edges[e].first, g.edges[e].second)) ++r;
  return r;
}

EdgeSet graphic_closure(const MultiGraph& g, EdgeSet set) {
  UnionFind uf = components(g, set);
  EdgeSet out = set;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (uf.find(g.edges[e].first) == uf.find(g.edges[e].second)) out |= bit(static_cast<int>(e));
  return out;
}

int FlatLattice::find(EdgeSet flat) const {
  auto it = index.find(flat);
  if (it == index.end()) throw DomainError("edge set is not a flat of this lattice");
  return it->second;
}

std::vector<int> FlatLattice::rank_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(rank()) + 1, 0);
  for (int r : rank_of) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

FlatLattice lattice_of_flats(const MultiGraph& g, int max_edges) {
  g.validate();
  if (static_cast<int>(g.edges.size()) > max_edges)
    throw ResourceError("graph has " + std::to_string(g.edges.size()) + " edges; the guard is " +
                        std::to_string(max_edges));
  const int m = static_cast<int>(g.edges.size());
  FlatLattice L;
  L.edge_count = m;
  std::vector<EdgeSet> level{graphic_closure(g, 0)};
  int r = 0;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    std::set<EdgeSet> next;
    for (EdgeSet f : level) {
      L.index.emplace(f, static_cast<int>(L.flats.size()));
      L.flats.push_back(f);
      L.rank_of.push_back(r);
      for (int e = 0; e < m; ++e)
        if (!(f & bit(e))) next.insert(graphic_closure(g, f | bit(e)));
    }
    level.assign(next.begin(), next.end());
    ++r;
  }

  const std::size_t count = L.flats.size();
  L.mobius.assign(count, std::vector<long long>(count, 0));
  for (std::size_t x = 0; x < count; ++x) {
    L.mobius[x][x] = 1;
    for (std::size_t y = x + 1; y < count; ++y) {
      if (!L.leq(static_cast<int>(x), static_cast<int>(y)) || L.rank_of[y] == L.rank_of[x]) continue;
      long long s = 0;
      for (std::size_t z = x; z < y; ++z)
        if (L.rank_of[z] < L.rank_of[y] && L.leq(static_cast<int>(x), static_cast<int>(z)) &&
            L.leq(static_cast<int>(z), static_cast<int>(y)))
          s += L.mobius[x][z];
      L.mobius[x][y] = -s;
    }
  }
  return L;
}

UniPoly char_poly_interval(const FlatLattice& L, EdgeSet bottom_flat) {
  const int f = L.find(bottom_flat);
  const int top_rank = L.rank();
  std::vector<BigRational> coeffs(static_cast<std::size_t>(top_rank - L.rank_of[static_cast<std::size_t>(f)]) + 1, 0);
  for (int g = f; g < L.size(); ++g) {
    if (!L.leq(f, g)) continue;
    long mu = L.mobius[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
    coeffs[static_cast<std::size_t>(top_rank - L.rank_of[static_cast<std::size_t>(g)])] += mu;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<UniPoly> q_kls_all(const FlatLattice& L) {
  const int count = L.size();
  std::vector<UniPoly> q(static_cast<std::size_t>(count));
  auto rk = [&](int x) { return L.rank_of[static_cast<std::size_t>(x)]; };
  for (int g = 0; g < count; ++g) {
    const int r = rk(g) - rk(L.bottom());
    if (r == 0) {
      q[static_cast<std::size_t>(g)] = UniPoly{1};
      continue;
    }
    // S(t) = sum over F < G of (-1)^rk(F) Q_F(t) t^{rk(G)-rk(F)} chi_[F,G](1/t),
    // with t^{rk(G)-rk(F)} chi_[F,G](1/t) = sum_{F<=H<=G} mu(F,H) t^{rk(H)-rk(F)}.
    UniPoly sum;
    for (int f = 0; f < g; ++f) {
      if (!L.leq(f, g) || rk(f) == rk(g)) continue;
      std::vector<BigRational> rev(static_cast<std::size_t>(rk(g) - rk(f)) + 1, 0);
      for (int h = f; h <= g; ++h)
        if (L.leq(f, h) && L.leq(h, g))
          rev[static_cast<std::size_t>(rk(h) - rk(f))] += static_cast<long>(L.mobius[static_cast<std::size_t>(f)][static_cast<std::size_t>(h)]);
      UniPoly term = q[static_cast<std::size_t>(f)] * UniPoly(std::move(rev));
      if ((rk(f) - rk(L.bottom())) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    // (-1)^r S = t^r Q(1/t) - Q(t): the low half is -Q, the high half its mirror.
    UniPoly w = r % 2 == 0 ? sum : -sum;
    std::vector<BigRational> low;
    for (int i = 0; 2 * i < r; ++i) low.push_back(-w.coeff(i));
    UniPoly qg(std::move(low));
    std::vector<BigRational> mirror(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; 2 * i < r; ++i) mirror[static_cast<std::size_t>(r - i)] = qg.coeff(i);
    UniPoly expected = UniPoly(std::move(mirror)) - qg;
    if (!(expected == w))
      throw ConsistencyError("inverse KL recursion is not mirror-consistent at flat " + std::to_string(g) +
                             ": got " + w.to_string() + ", expected " + expected.to_string());
    if (!qg.is_integral()) throw ConsistencyError("inverse KL polynomial has a fractional coefficient");
    q[static_cast<std::size_t>(g)] = std::move(qg);
  }
  return q;
}

UniPoly q_kls(const FlatLattice& L) { return q_kls_all(L).back(); }

std::vector<std::string> lattice_problems(const MultiGraph& g, const FlatLattice& L) {
  std::vector<std::string> problems;
  if (L.flats.front() != graphic_closure(g, 0)) problems.push_back("bottom is not the closure of the empty set");
  if (L.flats.back() != g.all_edges()) problems.push_back("top is not the full edge set");
  for (int x = 0; x < L.size(); ++x) {
    EdgeSet f = L.flats[static_cast<std::size_t>(x)];
    if (graphic_rank(g, f) != L.rank_of[static_cast<std::size_t>(x)])
      problems.push_back("rank mismatch at flat " + std::to_string(x));
    if (graphic_closure(g, f) != f) problems.push_back("flat " + std::to_string(x) + " is not closed");
  }
  for (int x = 0; x < L.size(); ++x)
    for (int y = x; y < L.size(); ++y) {
      if (!L.leq(x, y)) continue;
      long long s = 0;
      for (int z = x; z <= y; ++z)
        if (L.leq(x, z) && L.leq(z, y)) s += L.mobius[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
      if (s != (x == y ? 1 : 0))
        problems.push_back("Moebius sum fails on [" + std::to_string(x) + ", " + std::to_string(y) + "]");
    }
  // Every closed set must appear: brute force when the ground set is small.
  if (L.edge_count <= 16) {
    std::size_t closed = 0;
    for (EdgeSet s = 0; s <= g.all_edges(); ++s)
      if (graphic_closure(g, s) == s) ++closed;
    if (closed != L.flats.size()) problems.push_back("flat count differs from brute-force enumeration");
  }
  return problems;
}

bool is_upper_interval_isomorphism(const FlatLattice& L, EdgeSet bottom_flat, const FlatLattice& target,
                                   const std::function<EdgeSet(EdgeSet)>& map) {
  const int f = L.find(bottom_flat);
  const int shift = L.rank_of[static_cast<std::size_t>(f)];
  std::vector<int> source, image;
  for (int g = 0; g < L.size(); ++g) {
    if (!L.leq(f, g)) continue;
    auto it = target.index.find(map(L.flats[static_cast<std::size_t>(g)]));
    if (it == target.index.end()) return false;
    if (target.rank_of[static_cast<std::size_t>(it->second)] != L.rank_of[static_cast<std::size_t>(g)] - shift)
      return false;
    source.push_back(g);
    image.push_back(it->second);
  }
  if (static_cast<int>(source.size()) != target.size()) return false;
  if (std::set<int>(image.begin(), image.end()).size() != image.size()) return false;
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (L.leq(source[a], source[b]) != target.leq(image[a], image[b])) return false;
  return true;
}

ThagomizerIntervalModel thagomizer_interval_model(int n, EdgeSet flat) {
  // Edge 0 is AB; spike j (1-based) owns edges 2j-1 (Aj) and 2j (Bj).
  auto spike_bits = [](int j) { return bit(2 * j - 1) | bit(2 * j); };
  std::vector<int> touched, free_spikes;
  bool all_full = true, all_single = true;
  for (int j = 1; j <= n; ++j) {
    int c = std::popcount(flat & spike_bits(j));
    if (c == 0) {
      free_spikes.push_back(j);
    } else {
      touched.push_back(j);
      if (c != 2) all_full = false;
      if (c != 1) all_single = false;
    }
  }
  const bool has_ab = flat & bit(0);
  ThagomizerIntervalModel model;
  if (!has_ab && all_single) {
    model.boolean = false;
    model.size = static_cast<int>(free_spikes.size());
    model.map = [free_spikes, spike_bits](EdgeSet g) {
      EdgeSet out = g & bit(0);
      for (std::size_t idx = 0; idx < free_spikes.size(); ++idx) {
        EdgeSet part = (g & spike_bits(free_spikes[idx])) >> (2 * free_spikes[idx] - 1);
        out |= part << (2 * static_cast<int>(idx) + 1);
      }
      return out;
    };
  } else if (has_ab && all_full) {
    model.boolean = true;
    model.size = static_cast<int>(free_spikes.size());
    model.map = [free_spikes, spike_bits](EdgeSet g) {
      EdgeSet out = 0;
      for (std::size_t idx = 0; idx < free_spikes.size(); ++idx)
        if ((g & spike_bits(free_spikes[idx])) == spike_bits(free_spikes[idx])) out |= bit(static_cast<int>(idx));
      return out;
    };
  } else {
    throw DomainError("edge set is neither type of thagomizer flat");
  }
  return model;
}

}  // namespace thagq
