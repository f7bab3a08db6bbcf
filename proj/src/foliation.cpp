#include "markov/foliation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "markov/error.hpp"
#include "tiling_detail.hpp"

namespace markov {

using detail::Gluing;
using detail::Slot;

// ---------------------------------------------------------------------------
// Tiling accessors

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& items, int id) {
  for (const auto& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

}  // namespace

const FVertex* Tiling::find_vertex(int id) const { return find_by_id(vertices, id); }
const FSingularity* Tiling::find_singularity(int id) const { return find_by_id(singularities, id); }
const FEdge* Tiling::find_edge(int id) const { return find_by_id(edges, id); }
const FTile* Tiling::find_tile(int id) const { return find_by_id(tiles, id); }

int Tiling::positive_vertex_count() const {
  return static_cast<int>(
      std::count_if(vertices.begin(), vertices.end(), [](const FVertex& v) { return v.sign > 0; }));
}

int Tiling::negative_vertex_count() const {
  return static_cast<int>(vertices.size()) - positive_vertex_count();
}

std::string_view to_string(EdgeKind kind) { return kind == EdgeKind::a ? "a" : "b"; }

std::string_view to_string(TileKind kind) {
  switch (kind) {
    case TileKind::aa: return "aa";
    case TileKind::ab: return "ab";
    case TileKind::bb: return "bb";
  }
  return "?";
}

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::disc: return "disc";
    case SurfaceKind::annulus: return "annulus";
    case SurfaceKind::general: return "general";
  }
  return "?";
}

TileKind kind_from_census(const FTile& tile) {
  const int negatives = (tile.vertices[1] ? 1 : 0) + (tile.vertices[3] ? 1 : 0);
  return negatives == 0 ? TileKind::aa : negatives == 1 ? TileKind::ab : TileKind::bb;
}

Tiling radial_disc() {
  Tiling t;
  t.vertices.push_back({0, 1, 0});
  return t;
}

int ledger_index(const Tiling& t) { return t.positive_vertex_count() - t.negative_vertex_count(); }

int valence(const Tiling& t, int vertex_id) {
  int count = 0;
  for (const auto& tile : t.tiles) {
    for (const auto& c : tile.vertices) count += (c == vertex_id) ? 1 : 0;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Shared plumbing for the rewrites

namespace detail {

Gluing::Gluing(const Tiling& t) {
  partner_.resize(t.tiles.size());
  std::map<int, std::vector<Slot>> occurrences;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    index_.emplace(t.tiles[i].id, i);
    for (int s = 0; s < 4; ++s) occurrences[t.tiles[i].edges[s]].push_back({i, s});
  }
  for (const auto& [id, slots] : occurrences) {
    if (slots.size() != 2) {
      throw Error(ErrorCode::InvalidTiling,
                  "edge " + std::to_string(id) + " occurs in " + std::to_string(slots.size()) +
                      " tile slots");
    }
    partner_[slots[0].tile][slots[0].slot] = slots[1];
    partner_[slots[1].tile][slots[1].slot] = slots[0];
  }
}

std::size_t Gluing::index_of(int tile_id) const {
  auto it = index_.find(tile_id);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "unknown tile " + std::to_string(tile_id));
  return it->second;
}

std::vector<Slot> corners_at(const Tiling& t, int vertex_id) {
  std::vector<Slot> out;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      if (t.tiles[i].vertices[c] == vertex_id) out.push_back({i, c});
    }
  }
  return out;
}

void insert_rank(std::vector<FVertex>& vertices, FVertex v) {
  for (auto& w : vertices) {
    if (w.axis_rank >= v.axis_rank) ++w.axis_rank;
  }
  vertices.push_back(v);
}

void insert_rank(std::vector<FSingularity>& singularities, FSingularity s) {
  for (auto& w : singularities) {
    if (w.theta_rank >= s.theta_rank) ++w.theta_rank;
  }
  singularities.push_back(s);
}

int next_id(const Tiling& t, int which) {
  int best = -1;
  switch (which) {
    case 0: for (const auto& v : t.vertices) best = std::max(best, v.id); break;
    case 1: for (const auto& s : t.singularities) best = std::max(best, s.id); break;
    case 2: for (const auto& e : t.edges) best = std::max(best, e.id); break;
    default: for (const auto& x : t.tiles) best = std::max(best, x.id); break;
  }
  return best + 1;
}

int next_edge_id(const Tiling& t) {
  int best = next_id(t, 2);
  for (const auto& tile : t.tiles) {
    for (int e : tile.edges) best = std::max(best, e + 1);
  }
  return best;
}

void rebuild(Tiling& t) {
  std::map<int, FEdge> edges;
  for (auto& tile : t.tiles) {
    tile.kind = kind_from_census(tile);
    for (int s = 0; s < 4; ++s) {
      FEdge& e = edges[tile.edges[s]];
      e.id = tile.edges[s];
      e.endpoints = {tile.vertices[positive_corner(s)], tile.vertices[negative_corner(s)]};
      e.kind = e.endpoints[1] ? EdgeKind::b : EdgeKind::a;
      if (std::find(e.adjacent_tiles.begin(), e.adjacent_tiles.end(), tile.id) == e.adjacent_tiles.end()) {
        e.adjacent_tiles.push_back(tile.id);
      }
    }
  }
  t.edges.clear();
  for (auto& [id, e] : edges) t.edges.push_back(std::move(e));

  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(t.vertices.begin(), t.vertices.end(), by_id);
  std::sort(t.singularities.begin(), t.singularities.end(), by_id);
  std::sort(t.tiles.begin(), t.tiles.end(), by_id);

  std::vector<FVertex*> vs;
  for (auto& v : t.vertices) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->axis_rank < b->axis_rank; });
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i]->axis_rank = static_cast<int>(i);

  std::vector<FSingularity*> ss;
  for (auto& s : t.singularities) ss.push_back(&s);
  std::sort(ss.begin(), ss.end(), [](auto* a, auto* b) { return a->theta_rank < b->theta_rank; });
  for (std::size_t i = 0; i < ss.size(); ++i) ss[i]->theta_rank = static_cast<int>(i);
}

void splice_out(Tiling& t, const std::set<int>& removed) {
  const Gluing gluing(t);
  auto is_removed = [&](Slot s) { return removed.count(t.tiles[s.tile].id) > 0; };
  std::set<std::pair<std::size_t, int>> done;
  std::vector<std::array<int, 4>> edges(t.tiles.size());
  for (std::size_t i = 0; i < t.tiles.size(); ++i) edges[i] = t.tiles[i].edges;

  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    if (removed.count(t.tiles[i].id)) continue;
    for (int s = 0; s < 4; ++s) {
      const Slot start{i, s};
      if (done.count({i, s}) || !is_removed(gluing.partner(start))) continue;
      // Walk glue / pairing alternately through the removed tiles. Inside a
      // removed tile, the slots on either side of a positive corner collapse
      // onto each other: 0 with 3, 1 with 2.
      Slot cur = gluing.partner(start);
      Slot end{};
      for (std::size_t guard = 0;; ++guard) {
        if (guard > 4 * t.tiles.size()) throw Error(ErrorCode::InvalidTiling, "splice did not terminate");
        const Slot across = gluing.partner({cur.tile, 3 - cur.slot});
        if (!is_removed(across)) {
          end = across;
          break;
        }
        cur = across;
      }
      const int id = std::min(t.tiles[i].edges[s], t.tiles[end.tile].edges[end.slot]);
      edges[i][s] = id;
      edges[end.tile][end.slot] = id;
      done.insert({i, s});
      done.insert({end.tile, end.slot});
    }
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i) t.tiles[i].edges = edges[i];
  std::erase_if(t.tiles, [&](const FTile& x) { return removed.count(x.id) > 0; });
}

void erase_vertex(Tiling& t, int id) {
  std::erase_if(t.vertices, [id](const FVertex& v) { return v.id == id; });
}

void erase_singularity(Tiling& t, int id) {
  std::erase_if(t.singularities, [id](const FSingularity& s) { return s.id == id; });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (const auto& v : violations) out << v.code << ": " << v.detail << '\n';
  return out.str();
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i ? 1 : 0;
    return n;
  }

private:
  std::vector<std::size_t> parent_;
};

std::string corner_text(const Corner& c) { return c ? std::to_string(*c) : "boundary"; }

class Validator {
public:
  explicit Validator(const Tiling& t) : t_(t) {}

  ValidationReport run() {
    check_ids();
    check_ranks();
    if (!check_tiles()) return std::move(report_);
    if (!check_edges()) return std::move(report_);
    check_links();
    check_topology();
    return std::move(report_);
  }

private:
  void fail(std::string code, std::string detail) {
    report_.violations.push_back({std::move(code), std::move(detail)});
  }

  template <class T>
  void unique_ids(const std::vector<T>& items, const char* what) {
    std::set<int> seen;
    for (const auto& x : items) {
      if (!seen.insert(x.id).second) fail("duplicate id", std::string(what) + " " + std::to_string(x.id));
    }
  }

  void check_ids() {
    unique_ids(t_.vertices, "vertex");
    unique_ids(t_.singularities, "singularity");
    unique_ids(t_.edges, "edge");
    unique_ids(t_.tiles, "tile");
    for (const auto& v : t_.vertices) {
      if (v.sign != 1 && v.sign != -1) fail("bad sign", "vertex " + std::to_string(v.id));
    }
    for (const auto& s : t_.singularities) {
      if (s.sign != 1 && s.sign != -1) fail("bad sign", "singularity " + std::to_string(s.id));
    }
  }

  void check_ranks() {
    std::vector<int> axis;
    for (const auto& v : t_.vertices) axis.push_back(v.axis_rank);
    std::sort(axis.begin(), axis.end());
    for (std::size_t i = 0; i < axis.size(); ++i) {
      if (axis[i] != static_cast<int>(i)) {
        fail("axis ranks", "vertex axis ranks are not a permutation of 0..V-1");
        break;
      }
    }
    std::set<int> theta;
    for (const auto& s : t_.singularities) {
      if (!theta.insert(s.theta_rank).second) {
        fail("theta ranks", "theta rank " + std::to_string(s.theta_rank) + " repeated");
      }
    }
  }

  bool check_tiles() {
    bool structural = true;
    std::map<int, int> singularity_use;
    for (const auto& s : t_.singularities) singularity_use[s.id] = 0;
    for (const auto& tile : t_.tiles) {
      const std::string name = "tile " + std::to_string(tile.id);
      auto it = singularity_use.find(tile.singularity);
      if (it == singularity_use.end()) {
        fail("singularity not bijective", name + " names unknown singularity " + std::to_string(tile.singularity));
      } else {
        ++it->second;
      }
      for (int c = 0; c < 4; ++c) {
        const Corner& corner = tile.vertices[c];
        if (!corner) {
          if (c % 2 == 0) {
            fail("corner sign", name + " has the boundary at positive corner " + std::to_string(c));
            structural = false;
          }
          continue;
        }
        const FVertex* v = t_.find_vertex(*corner);
        if (!v) {
          fail("unknown vertex", name + " corner " + std::to_string(c) + " names vertex " + std::to_string(*corner));
          structural = false;
          continue;
        }
        const int want = c % 2 == 0 ? 1 : -1;
        if (v->sign != want) {
          fail("corner sign", name + " corner " + std::to_string(c) + " holds vertex " +
                                  std::to_string(v->id) + " of the wrong sign");
        }
      }
      if (tile.kind != kind_from_census(tile)) {
        fail("tile kind", name + " is marked " + std::string(to_string(tile.kind)) + " but has census " +
                              std::string(to_string(kind_from_census(tile))));
      }
    }
    for (const auto& [id, uses] : singularity_use) {
      if (uses != 1) {
        fail("singularity not bijective",
             "singularity " + std::to_string(id) + " lies in " + std::to_string(uses) + " tiles");
      }
    }
    return structural;
  }

  bool check_edges() {
    std::map<int, std::vector<Slot>> occurrences;
    for (std::size_t i = 0; i < t_.tiles.size(); ++i) {
      for (int s = 0; s < 4; ++s) occurrences[t_.tiles[i].edges[s]].push_back({i, s});
    }
    bool structural = true;
    for (const auto& [id, slots] : occurrences) {
      if (slots.size() != 2) {
        fail("edge multiplicity",
             "edge " + std::to_string(id) + " occurs in " + std::to_string(slots.size()) + " tile slots");
        structural = false;
      }
    }
    for (const auto& e : t_.edges) {
      const std::string name = "edge " + std::to_string(e.id);
      if (e.kind == EdgeKind::a && e.endpoints[0]) {
        const FVertex* v = t_.find_vertex(*e.endpoints[0]);
        if (v && v->sign < 0) fail("a-edge at negative vertex", name + " ends at vertex " + std::to_string(v->id));
      }
      if (e.kind == EdgeKind::b && e.endpoints[0] && e.endpoints[1]) {
        const FVertex* p = t_.find_vertex(*e.endpoints[0]);
        const FVertex* n = t_.find_vertex(*e.endpoints[1]);
        if (p && n && p->sign * n->sign != -1) fail("b-edge signs", name + " does not join + to -");
      }
      if (!occurrences.count(e.id)) fail("edge record", name + " is not used by any tile");
    }
    if (!structural) return false;

    for (const auto& [id, slots] : occurrences) {
      const std::string name = "edge " + std::to_string(id);
      auto ends = [&](Slot s) {
        const FTile& tile = t_.tiles[s.tile];
        return std::array<Corner, 2>{tile.vertices[detail::positive_corner(s.slot)],
                                     tile.vertices[detail::negative_corner(s.slot)]};
      };
      const auto first = ends(slots[0]);
      if (first != ends(slots[1])) {
        fail("gluing mismatch", name + " glues slots with different endpoints");
      }
      std::vector<int> adjacent{t_.tiles[slots[0].tile].id};
      if (slots[1].tile != slots[0].tile) adjacent.push_back(t_.tiles[slots[1].tile].id);
      const FEdge* record = t_.find_edge(id);
      if (!record) {
        fail("edge record", name + " has no record");
        continue;
      }
      const EdgeKind kind = first[1] ? EdgeKind::b : EdgeKind::a;
      std::vector<int> stored = record->adjacent_tiles;
      std::sort(stored.begin(), stored.end());
      std::sort(adjacent.begin(), adjacent.end());
      if (record->kind != kind || record->endpoints != first || stored != adjacent) {
        fail("edge record", name + " record disagrees with its tile slots (" + corner_text(first[0]) + ", " +
                                corner_text(first[1]) + ")");
      }
    }
    return true;
  }

  void check_links() {
    const Gluing gluing(t_);
    std::map<int, std::vector<Slot>> corners;
    for (std::size_t i = 0; i < t_.tiles.size(); ++i) {
      for (int c = 0; c < 4; ++c) {
        if (t_.tiles[i].vertices[c]) corners[*t_.tiles[i].vertices[c]].push_back({i, c});
      }
    }
    for (const auto& v : t_.vertices) {
      auto it = corners.find(v.id);
      if (it == corners.end()) {
        if (!t_.tiles.empty()) fail("isolated vertex", "vertex " + std::to_string(v.id) + " lies on no tile");
        continue;
      }
      const auto& list = it->second;
      UnionFind uf(list.size());
      auto locate = [&](std::size_t tile, int corner) {
        for (std::size_t k = 0; k < list.size(); ++k) {
          if (list[k].tile == tile && list[k].slot == corner) return k;
        }
        return list.size();
      };
      for (std::size_t k = 0; k < list.size(); ++k) {
        const int c = list[k].slot;
        for (int s : {(c + 3) % 4, c}) {
          const Slot other = gluing.partner({list[k].tile, s});
          // The corner of the partner slot occupied by this vertex.
          const int pc = detail::positive_corner(other.slot);
          const int nc = detail::negative_corner(other.slot);
          const int oc = (c % 2 == 0) ? pc : nc;
          const std::size_t j = locate(other.tile, oc);
          if (j < list.size()) uf.unite(k, j);
        }
      }
      if (uf.components() != 1) {
        fail("vertex link", "the tiles around vertex " + std::to_string(v.id) + " do not close up into one cycle");
      }
    }
  }

  void check_topology() {
    const Gluing gluing(t_);
    const long long v_count = static_cast<long long>(t_.vertices.size());
    const long long s_count = static_cast<long long>(t_.singularities.size());
    if (v_count - s_count != t_.chi) {
      fail("euler characteristic", "V - S = " + std::to_string(v_count - s_count) + " but chi is declared " +
                                       std::to_string(t_.chi));
    }
    if (t_.surface_kind == SurfaceKind::disc && (t_.chi != 1 || t_.boundary_count != 1)) {
      fail("surface kind", "a disc has chi 1 and one boundary circle");
    }
    if (t_.surface_kind == SurfaceKind::annulus && (t_.chi != 0 || t_.boundary_count != 2)) {
      fail("surface kind", "an annulus has chi 0 and two boundary circles");
    }

    // Boundary circles: boundary corners chained through the a-edges between them.
    std::vector<Slot> boundary;
    std::map<std::pair<std::size_t, int>, std::size_t> boundary_index;
    for (std::size_t i = 0; i < t_.tiles.size(); ++i) {
      for (int c : {1, 3}) {
        if (!t_.tiles[i].vertices[c]) {
          boundary_index[{i, c}] = boundary.size();
          boundary.push_back({i, c});
        }
      }
    }
    UnionFind circles(boundary.size());
    for (std::size_t k = 0; k < boundary.size(); ++k) {
      const int c = boundary[k].slot;
      for (int s : {(c + 3) % 4, c}) {
        const Slot other = gluing.partner({boundary[k].tile, s});
        auto it = boundary_index.find({other.tile, detail::negative_corner(other.slot)});
        if (it != boundary_index.end()) circles.unite(k, it->second);
      }
    }
    std::size_t circle_count = circles.components();
    if (t_.tiles.empty()) circle_count = t_.vertices.size();
    if (static_cast<int>(circle_count) != t_.boundary_count) {
      fail("boundary count", "found " + std::to_string(circle_count) + " boundary circles, declared " +
                                 std::to_string(t_.boundary_count));
    }

    // Connectivity over tiles and vertices.
    const std::size_t n_tiles = t_.tiles.size();
    std::map<int, std::size_t> vertex_index;
    for (const auto& v : t_.vertices) vertex_index.emplace(v.id, n_tiles + vertex_index.size());
    UnionFind parts(n_tiles + vertex_index.size());
    for (std::size_t i = 0; i < n_tiles; ++i) {
      for (int s = 0; s < 4; ++s) parts.unite(i, gluing.partner({i, s}).tile);
      for (const auto& c : t_.tiles[i].vertices) {
        if (c) parts.unite(i, vertex_index.at(*c));
      }
    }
    if (parts.components() > 1) fail("disconnected", "the surface has more than one component");

    if (t_.surface_kind == SurfaceKind::disc && ledger_index(t_) < 1) {
      fail("braid index", "p - n = " + std::to_string(ledger_index(t_)) + " is below 1");
    }
  }

  const Tiling& t_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_tiling(const Tiling& t) { return Validator(t).run(); }

// ---------------------------------------------------------------------------
// Rewrites

namespace {

const FEdge& b_edge(const Tiling& t, int edge_id) {
  const FEdge* e = t.find_edge(edge_id);
  if (!e) throw Error(ErrorCode::NotABArc, "no edge " + std::to_string(edge_id));
  if (e->kind != EdgeKind::b || !e->endpoints[0] || !e->endpoints[1]) {
    throw Error(ErrorCode::NotABArc, "edge " + std::to_string(edge_id) + " is an a-arc");
  }
  return *e;
}

// Returns an error code when the removal is not possible, nullopt otherwise.
std::optional<std::pair<ErrorCode, std::string>> removal_obstruction(const Tiling& t, int edge_id) {
  const FEdge* e = t.find_edge(edge_id);
  const std::string name = "edge " + std::to_string(edge_id);
  if (!e || e->kind != EdgeKind::b || !e->endpoints[0] || !e->endpoints[1]) {
    return std::pair{ErrorCode::NotABArc, name + " is not a b-arc"};
  }
  if (is_b_arc_essential(t, edge_id)) return std::pair{ErrorCode::EssentialArc, name + " is essential"};
  std::vector<int> tiles;
  for (const auto& tile : t.tiles) {
    for (int x : tile.edges) {
      if (x == edge_id) tiles.push_back(tile.id);
    }
  }
  if (tiles.size() != 2 || tiles[0] == tiles[1]) {
    return std::pair{ErrorCode::SelfAdjacentTiles, name + " has the same tile on both sides"};
  }
  for (int v : {*e->endpoints[0], *e->endpoints[1]}) {
    int inside = 0;
    int outside = 0;
    for (const auto& tile : t.tiles) {
      for (const auto& c : tile.vertices) {
        if (c != v) continue;
        (tile.id == tiles[0] || tile.id == tiles[1] ? inside : outside) += 1;
      }
    }
    if (inside != 2 || outside != 0) {
      return std::pair{ErrorCode::NonLocalConfiguration,
                       "vertex " + std::to_string(v) + " meets tiles beyond the two along " + name};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_b_arc_essential(const Tiling& t, int edge_id) {
  const FEdge& e = b_edge(t, edge_id);
  const FVertex* p = t.find_vertex(*e.endpoints[0]);
  const FVertex* n = t.find_vertex(*e.endpoints[1]);
  if (!p || !n) throw Error(ErrorCode::InvalidTiling, "edge " + std::to_string(edge_id) + " names unknown vertices");
  const int count = static_cast<int>(t.vertices.size());
  const int gap = std::abs(p->axis_rank - n->axis_rank);
  return !(gap == 1 || gap == count - 1);
}

bool can_remove_inessential_b_arc(const Tiling& t, int edge_id) {
  return !removal_obstruction(t, edge_id).has_value();
}

Tiling remove_inessential_b_arc(const Tiling& t, int edge_id) {
  if (auto why = removal_obstruction(t, edge_id)) throw Error(why->first, why->second);
  const FEdge& e = *t.find_edge(edge_id);
  Tiling out = t;
  std::set<int> removed;
  for (const auto& tile : t.tiles) {
    if (std::find(tile.edges.begin(), tile.edges.end(), edge_id) != tile.edges.end()) {
      removed.insert(tile.id);
      detail::erase_singularity(out, tile.singularity);
    }
  }
  detail::splice_out(out, removed);
  detail::erase_vertex(out, *e.endpoints[0]);
  detail::erase_vertex(out, *e.endpoints[1]);
  detail::rebuild(out);
  return out;
}

RewriteResult stabilize_along_ab_tile(const Tiling& t, int tile_id) {
  const FTile* tile = t.find_tile(tile_id);
  if (!tile) throw Error(ErrorCode::NotAbTile, "no tile " + std::to_string(tile_id));
  if (tile->kind != TileKind::ab || kind_from_census(*tile) != TileKind::ab) {
    throw Error(ErrorCode::NotAbTile, "tile " + std::to_string(tile_id) + " is " + std::string(to_string(tile->kind)));
  }
  const int negative = tile->vertices[1] ? *tile->vertices[1] : *tile->vertices[3];
  const FSingularity* sing = t.find_singularity(tile->singularity);
  if (!sing) throw Error(ErrorCode::InvalidTiling, "tile " + std::to_string(tile_id) + " has no singularity");

  Tiling out = t;
  detail::splice_out(out, {tile_id});
  for (auto& other : out.tiles) {
    for (auto& c : other.vertices) {
      if (c == negative) c.reset();
    }
  }
  detail::erase_vertex(out, negative);
  detail::erase_singularity(out, sing->id);
  detail::rebuild(out);
  return {std::move(out), Move::stabilization(sing->sign)};
}

RewriteResult destabilize_along_end_tile(const Tiling& t, int vertex_id) {
  const FVertex* v = t.find_vertex(vertex_id);
  const std::string name = "vertex " + std::to_string(vertex_id);
  if (!v) throw Error(ErrorCode::NotEndTile, "no " + name);
  if (v->sign < 0) throw Error(ErrorCode::NotEndTile, name + " is negative");
  const auto corners = detail::corners_at(t, vertex_id);
  if (corners.size() != 1) {
    throw Error(ErrorCode::NotEndTile, name + " has valence " + std::to_string(corners.size()));
  }
  const FTile& tile = t.tiles[corners[0].tile];
  const int c = corners[0].slot;
  if (kind_from_census(tile) != TileKind::aa || tile.edges[(c + 3) % 4] != tile.edges[c]) {
    throw Error(ErrorCode::NotEndTile, name + " does not sit in an aa tile glued to itself");
  }
  const FSingularity* sing = t.find_singularity(tile.singularity);
  if (!sing) throw Error(ErrorCode::InvalidTiling, "tile " + std::to_string(tile.id) + " has no singularity");

  Tiling out = t;
  detail::splice_out(out, {tile.id});
  detail::erase_vertex(out, vertex_id);
  detail::erase_singularity(out, sing->id);
  detail::rebuild(out);
  return {std::move(out), Move::destabilization(sing->sign)};
}

// ---------------------------------------------------------------------------
// Singular leaf graph

int LeafGraph::degree(int vertex_id) const {
  int d = 0;
  for (const auto& e : edges) d += (e.from == vertex_id ? 1 : 0) + (e.to == vertex_id ? 1 : 0);
  return d;
}

bool LeafGraph::is_tree() const {
  if (nodes.empty()) return false;
  if (edges.size() + 1 != nodes.size()) return false;
  std::map<int, std::size_t> index;
  for (int n : nodes) index.emplace(n, index.size());
  UnionFind uf(nodes.size());
  for (const auto& e : edges) uf.unite(index.at(e.from), index.at(e.to));
  return uf.components() == 1;
}

LeafGraph singular_leaf_graph(const Tiling& t) {
  for (const auto& tile : t.tiles) {
    if (kind_from_census(tile) != TileKind::aa) {
      throw Error(ErrorCode::NonAaTilesPresent, "tile " + std::to_string(tile.id) + " is not aa");
    }
  }
  LeafGraph g;
  for (const auto& v : t.vertices) g.nodes.push_back(v.id);
  if (t.tiles.empty()) return g;

  // Quarter complex: each tile is four quarters, one per edge slot. Quarters
  // s and s+1 meet along the prong to corner s+1; glued slots join quarters
  // of neighbouring tiles. Cutting along a tile's singular leaf severs its
  // two positive prongs (corners 0 and 2).
  const Gluing gluing(t);
  const std::size_t n = t.tiles.size();
  auto components = [&](std::optional<std::size_t> cut) {
    UnionFind uf(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int s = 0; s < 4; ++s) {
        const Slot other = gluing.partner({i, s});
        uf.unite(4 * i + static_cast<std::size_t>(s), 4 * other.tile + static_cast<std::size_t>(other.slot));
        const int corner = (s + 1) % 4;
        if (cut == i && corner % 2 == 0) continue;
        uf.unite(4 * i + static_cast<std::size_t>(s), 4 * i + static_cast<std::size_t>(corner));
      }
    }
    return uf.components();
  };
  const std::size_t base = components(std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    if (components(i) > base) continue;
    g.edges.push_back({t.tiles[i].id, *t.tiles[i].vertices[0], *t.tiles[i].vertices[2]});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Simplification

SimplifyResult simplify_disc(const Tiling& input, const SimplifyOptions& options) {
  if (input.surface_kind != SurfaceKind::disc) {
    throw Error(ErrorCode::InvalidTiling, "simplification needs a disc, got " +
                                              std::string(to_string(input.surface_kind)));
  }
  if (auto report = validate_tiling(input); !report.ok()) {
    throw Error(ErrorCode::InvalidTiling, report.to_string());
  }

  SimplifyResult result;
  result.certificate.initial_index = ledger_index(input);
  Tiling t = input;
  auto record = [&] {
    if (options.record_trace) result.trace.push_back(t);
  };
  record();

  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& e : t.edges) {
      if (e.kind == EdgeKind::b && can_remove_inessential_b_arc(t, e.id)) {
        t = remove_inessential_b_arc(t, e.id);
        ++result.inessential_removed;
        record();
        progress = true;
        break;
      }
    }
  }

  result.negatives_before_stabilization = t.negative_vertex_count();
  while (t.negative_vertex_count() > 0) {
    const FTile* pick = nullptr;
    int best = 0;
    for (const auto& tile : t.tiles) {
      if (kind_from_census(tile) != TileKind::ab) continue;
      const int rank = t.find_singularity(tile.singularity)->theta_rank;
      if (!pick || rank < best) {
        pick = &tile;
        best = rank;
      }
    }
    if (!pick) {
      throw Error(ErrorCode::StuckNoAbTile, std::to_string(t.negative_vertex_count()) +
                                                " negative vertices remain but no ab tile exists");
    }
    auto step = stabilize_along_ab_tile(t, pick->id);
    t = std::move(step.tiling);
    result.certificate.moves.push_back(step.move);
    record();
  }

  result.vertices_before_destabilization = static_cast<int>(t.vertices.size());
  while (!t.tiles.empty()) {
    const LeafGraph g = singular_leaf_graph(t);
    if (!g.is_tree()) throw Error(ErrorCode::InvalidTiling, "singular leaf graph is not a tree");
    const FVertex* leaf = nullptr;
    for (const auto& v : t.vertices) {
      if (g.degree(v.id) == 1 && (!leaf || v.axis_rank < leaf->axis_rank)) leaf = &v;
    }
    auto step = destabilize_along_end_tile(t, leaf->id);
    t = std::move(step.tiling);
    result.certificate.moves.push_back(step.move);
    record();
  }
  if (t.vertices.size() != 1 || !t.singularities.empty()) {
    throw Error(ErrorCode::InvalidTiling, "simplification did not end at the radial disc");
  }
  result.final_tiling = std::move(t);
  return result;
}

}  // namespace markov
