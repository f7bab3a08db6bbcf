#include <random>

#include "markov/error.hpp"
#include "markov/foliation.hpp"
#include "tiling_detail.hpp"

namespace markov {

using detail::Gluing;
using detail::Slot;

namespace {

void check_rank(int rank, std::size_t count, const char* what) {
  if (rank < 0 || rank > static_cast<int>(count)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " rank " + std::to_string(rank) +
                                                " outside 0.." + std::to_string(count));
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
}

std::vector<Slot> slots_of(const Tiling& t, int edge_id) {
  std::vector<Slot> out;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      if (t.tiles[i].edges[s] == edge_id) out.push_back({i, s});
    }
  }
  return out;
}

// The other edge slot at the boundary corner touched by a-slot s.
int across_boundary_corner(int s) {
  const int c = detail::negative_corner(s);
  return s == c ? (c + 3) % 4 : c;
}

// Boundary corners met walking from an a-slot along its boundary circle;
// entry k is the slot by which segment k is left.
std::vector<Slot> boundary_walk(const Tiling& t, const Gluing& g, Slot start) {
  std::vector<Slot> exits;
  Slot cur = start;
  do {
    const Slot exit{cur.tile, across_boundary_corner(cur.slot)};
    exits.push_back(exit);
    cur = g.partner(exit);
    if (exits.size() > 4 * t.tiles.size()) throw Error(ErrorCode::InvalidTiling, "boundary walk did not close");
  } while (!(cur == start));
  return exits;
}

}  // namespace

Tiling insert_end_tile(const Tiling& t, const EndTileSite& site) {
  check_sign(site.sign);
  check_rank(site.axis_rank, t.vertices.size(), "axis");
  check_rank(site.theta_rank, t.singularities.size(), "theta");
  Tiling out = t;
  const int v = detail::next_id(t, 0);
  const int sing = detail::next_id(t, 1);
  FTile tile{detail::next_id(t, 3), TileKind::aa, sing, {}, {}};
  const int fresh = detail::next_edge_id(t);

  if (t.tiles.empty()) {
    if (site.a_edge || t.vertices.size() != 1) {
      throw Error(ErrorCode::InvalidArgument, "an end tile on a tiling without tiles needs the radial disc");
    }
    const int w = t.vertices[0].id;
    tile.vertices = {v, std::nullopt, w, std::nullopt};
    tile.edges = {fresh, fresh + 1, fresh + 1, fresh};
  } else {
    const FEdge* edge = site.a_edge ? t.find_edge(*site.a_edge) : nullptr;
    if (!edge || edge->kind != EdgeKind::a) throw Error(ErrorCode::InvalidArgument, "end tile needs an a-edge");
    const auto slots = slots_of(t, edge->id);
    if (slots.size() != 2) throw Error(ErrorCode::InvalidTiling, "edge is not glued in two slots");
    tile.vertices = {v, std::nullopt, *edge->endpoints[0], std::nullopt};
    tile.edges = {fresh, edge->id, fresh + 1, fresh};
    out.tiles[slots[1].tile].edges[slots[1].slot] = fresh + 1;
  }
  out.tiles.push_back(tile);
  detail::insert_rank(out.vertices, {v, 1, site.axis_rank});
  detail::insert_rank(out.singularities, {sing, site.sign, site.theta_rank});
  detail::rebuild(out);
  return out;
}

Tiling insert_ab_tile(const Tiling& t, const AbTileSite& site) {
  check_sign(site.sign);
  check_rank(site.axis_rank, t.vertices.size(), "axis");
  check_rank(site.theta_rank, t.singularities.size(), "theta");
  if (ledger_index(t) < 2) throw Error(ErrorCode::InvalidArgument, "an ab tile needs braid index at least 2");
  const Gluing g(t);
  const std::size_t ti = g.index_of(site.tile);
  if (site.slot < 0 || site.slot > 3 || t.tiles[ti].vertices[detail::negative_corner(site.slot)]) {
    throw Error(ErrorCode::InvalidArgument, "ab tile must start at an a-edge slot");
  }
  const Slot start{ti, site.slot};
  const auto exits = boundary_walk(t, g, start);
  const int total = static_cast<int>(exits.size());
  const int k = site.run_length;
  if (k < 0 || k > total) {
    throw Error(ErrorCode::InvalidArgument, "run of " + std::to_string(k) + " boundary segments, circle has " +
                                                std::to_string(total));
  }

  Tiling out = t;
  const int u = detail::next_id(t, 0);
  const int sing = detail::next_id(t, 1);
  const int fresh = detail::next_edge_id(t);
  auto vertex_at = [&](Slot s) { return t.tiles[s.tile].vertices[detail::positive_corner(s.slot)]; };
  auto set_edge = [&](Slot s, int id) { out.tiles[s.tile].edges[s.slot] = id; };
  const int a0 = t.tiles[ti].edges[site.slot];

  FTile tile{detail::next_id(t, 3), TileKind::ab, sing, {}, {}};
  if (k == 0) {
    const Corner p = vertex_at(start);
    tile.vertices = {p, std::nullopt, p, u};
    tile.edges = {a0, fresh, fresh + 1, fresh + 1};
    set_edge(start, fresh);
  } else {
    const Slot exit = exits[static_cast<std::size_t>(k - 1)];
    for (int j = 0; j < k; ++j) {
      const Slot seg = exits[static_cast<std::size_t>(j)];
      out.tiles[seg.tile].vertices[detail::negative_corner(seg.slot)] = u;
    }
    const int ak = t.tiles[exit.tile].edges[exit.slot];
    tile.vertices = {vertex_at(start), std::nullopt, vertex_at(exit), u};
    if (k == total) {
      tile.edges = {a0, a0, fresh + 1, fresh};
    } else {
      tile.edges = {a0, ak, fresh + 1, fresh};
    }
    set_edge(start, fresh);
    set_edge(exit, fresh + 1);
  }
  out.tiles.push_back(tile);
  detail::insert_rank(out.vertices, {u, -1, site.axis_rank});
  detail::insert_rank(out.singularities, {sing, site.sign, site.theta_rank});
  detail::rebuild(out);
  return out;
}

Tiling insert_inessential_pair(const Tiling& t, const InessentialPairSite& site) {
  check_sign(site.signs[0]);
  check_sign(site.signs[1]);
  check_rank(site.axis_rank, t.vertices.size(), "axis");
  check_rank(site.theta_ranks[0], t.singularities.size(), "theta");
  check_rank(site.theta_ranks[1], t.singularities.size() + 1, "theta");
  const FEdge* k = t.find_edge(site.edge);
  if (!k) throw Error(ErrorCode::InvalidArgument, "no edge " + std::to_string(site.edge));
  const auto slots = slots_of(t, k->id);
  if (slots.size() != 2) throw Error(ErrorCode::InvalidTiling, "edge is not glued in two slots");

  Tiling out = t;
  const int v = detail::next_id(t, 0);
  const int u = v + 1;
  const int s1 = detail::next_id(t, 1);
  const int t1 = detail::next_id(t, 3);
  const int e = detail::next_edge_id(t);
  const int edge_e = e, edge_f = e + 1, edge_g = e + 2, edge_k2 = e + 3;
  const Corner w = k->endpoints[0];
  const Corner n = k->endpoints[1];
  // T1 = (v, n, w, u), T2 = (v, u, w, n): glued to each other along v-u,
  // u-w and v-n; their n-w sides replace the two sides of the old edge.
  out.tiles.push_back({t1, TileKind::aa, s1, {v, n, w, u}, {edge_g, k->id, edge_f, edge_e}});
  out.tiles.push_back({t1 + 1, TileKind::aa, s1 + 1, {v, u, w, n}, {edge_e, edge_f, edge_k2, edge_g}});
  out.tiles[slots[1].tile].edges[slots[1].slot] = edge_k2;

  detail::insert_rank(out.vertices, {v, 1, site.axis_rank});
  detail::insert_rank(out.vertices, {u, -1, site.axis_rank + 1});
  detail::insert_rank(out.singularities, {s1, site.signs[0], site.theta_ranks[0]});
  detail::insert_rank(out.singularities, {s1 + 1, site.signs[1], site.theta_ranks[1]});
  detail::rebuild(out);
  return out;
}

Tiling grow_disc(const Tiling& seed, std::span<const GrowStep> script, std::uint64_t rng_seed) {
  if (script.size() > kMaxGrowScript) {
    throw Error(ErrorCode::InvalidArgument, "grow script longer than " + std::to_string(kMaxGrowScript));
  }
  std::mt19937_64 rng(rng_seed);
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto sign = [&] { return below(2) == 0 ? 1 : -1; };
  auto rank = [&](std::size_t count) { return static_cast<int>(below(count + 1)); };

  Tiling t = seed;
  for (GrowStep step : script) {
    if (t.tiles.empty() || (step == GrowStep::ab_tile && ledger_index(t) < 2)) step = GrowStep::end_tile;
    switch (step) {
      case GrowStep::end_tile: {
        EndTileSite site;
        if (!t.tiles.empty()) {
          std::vector<int> a_edges;
          for (const auto& e : t.edges) {
            if (e.kind == EdgeKind::a) a_edges.push_back(e.id);
          }
          site.a_edge = a_edges[below(a_edges.size())];
        }
        site.sign = sign();
        site.axis_rank = rank(t.vertices.size());
        site.theta_rank = rank(t.singularities.size());
        t = insert_end_tile(t, site);
        break;
      }
      case GrowStep::ab_tile: {
        std::vector<Slot> starts;
        for (std::size_t i = 0; i < t.tiles.size(); ++i) {
          for (int s = 0; s < 4; ++s) {
            if (!t.tiles[i].vertices[detail::negative_corner(s)]) starts.push_back({i, s});
          }
        }
        const Slot start = starts[below(starts.size())];
        const auto total = boundary_walk(t, Gluing(t), start).size();
        AbTileSite site;
        site.tile = t.tiles[start.tile].id;
        site.slot = start.slot;
        site.run_length = static_cast<int>(below(std::min<std::size_t>(total, 4) + 1));
        site.sign = sign();
        site.axis_rank = rank(t.vertices.size());
        site.theta_rank = rank(t.singularities.size());
        t = insert_ab_tile(t, site);
        break;
      }
      case GrowStep::inessential_pair: {
        InessentialPairSite site;
        site.edge = t.edges[below(t.edges.size())].id;
        site.signs = {sign(), sign()};
        site.axis_rank = rank(t.vertices.size());
        site.theta_ranks = {rank(t.singularities.size()), rank(t.singularities.size() + 1)};
        t = insert_inessential_pair(t, site);
        break;
      }
    }
  }
  return t;
}

std::vector<GrowStep> random_grow_script(std::size_t length, std::uint64_t rng_seed,
                                         bool include_inessential_pairs) {
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> kind(0, include_inessential_pairs ? 2 : 1);
  std::vector<GrowStep> script;
  script.reserve(length);
  for (std::size_t i = 0; i < length; ++i) script.push_back(static_cast<GrowStep>(kind(rng)));
  return script;
}

}  // namespace markov
