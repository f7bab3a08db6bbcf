#pragma once

// Combinatorial braid-foliated surfaces (tilings) and their rewrite moves.
//
// A tile is a quadrilateral around one saddle singularity. Its four corner
// slots are listed in cyclic order
//
//     vertices = [P0, N0, P1, N1]
//
// where P0 and P1 are positive vertices and each N slot is either a negative
// vertex or the boundary of the surface (std::nullopt). Edge slot s joins
// corner s to corner s+1 (mod 4):
//
//     edges = [P0-N0, N0-P1, P1-N1, N1-P0]
//
// An edge slot touching a boundary corner is an a-arc, otherwise a b-arc.
// Every edge id appears in exactly two slots (the two sides along which tiles
// are glued, possibly on the same tile). So aa/ab/bb tiles have 0/1/2
// negative corners, and bb tiles never meet the boundary.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "markov/move.hpp"

namespace markov {

enum class EdgeKind { a, b };
enum class TileKind { aa, ab, bb };
enum class SurfaceKind { disc, annulus, general };

/// A vertex id, or std::nullopt for the boundary of the surface.
using Corner = std::optional<int>;

struct FVertex {
  int id = 0;
  int sign = 1;
  int axis_rank = 0;  // position along the braid axis, 0..V-1
  friend bool operator==(const FVertex&, const FVertex&) = default;
};

struct FSingularity {
  int id = 0;
  int sign = 1;
  int theta_rank = 0;  // fibre order, distinct across the tiling
  friend bool operator==(const FSingularity&, const FSingularity&) = default;
};

struct FEdge {
  int id = 0;
  EdgeKind kind = EdgeKind::a;
  std::array<Corner, 2> endpoints{};  // positive vertex first
  std::vector<int> adjacent_tiles;    // one id when the tile is glued to itself
  friend bool operator==(const FEdge&, const FEdge&) = default;
};

struct FTile {
  int id = 0;
  TileKind kind = TileKind::aa;
  int singularity = 0;
  std::array<Corner, 4> vertices{};
  std::array<int, 4> edges{};
  friend bool operator==(const FTile&, const FTile&) = default;
};

struct Tiling {
  SurfaceKind surface_kind = SurfaceKind::disc;
  int chi = 1;
  int boundary_count = 1;
  std::vector<FVertex> vertices;
  std::vector<FSingularity> singularities;
  std::vector<FEdge> edges;
  std::vector<FTile> tiles;

  const FVertex* find_vertex(int id) const;
  const FSingularity* find_singularity(int id) const;
  const FEdge* find_edge(int id) const;
  const FTile* find_tile(int id) const;

  int positive_vertex_count() const;
  int negative_vertex_count() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

std::string_view to_string(EdgeKind kind);
std::string_view to_string(TileKind kind);
std::string_view to_string(SurfaceKind kind);

/// Tile kind implied by the number of negative corners.
TileKind kind_from_census(const FTile& tile);

/// The radially foliated disc: one positive vertex, no singularities.
Tiling radial_disc();

/// (#positive vertices) - (#negative vertices).
int ledger_index(const Tiling& t);

/// Number of singular-leaf endpoints at the vertex, i.e. tile corner slots
/// occupied by it.
int valence(const Tiling& t, int vertex_id);

struct Violation {
  std::string code;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view code) const;
  std::string to_string() const;
};

ValidationReport validate_tiling(const Tiling& t);

/// False iff the endpoints of the b-edge are cyclically adjacent along the
/// axis. Throws NotABArc for a-edges or unknown ids.
bool is_b_arc_essential(const Tiling& t, int edge_id);

/// Whether remove_inessential_b_arc would succeed on this edge.
bool can_remove_inessential_b_arc(const Tiling& t, int edge_id);

/// Cancels the two endpoints of an inessential b-edge together with the
/// singularities of its two adjacent tiles. Only the local picture is
/// handled: both endpoints lie on exactly the two tiles adjacent to the edge.
/// Throws EssentialArc, SelfAdjacentTiles or NonLocalConfiguration.
Tiling remove_inessential_b_arc(const Tiling& t, int edge_id);

struct RewriteResult {
  Tiling tiling;
  Move move;
};

/// Removes an ab tile, its singularity and its negative vertex; the tiles
/// that met that vertex now meet the boundary there. Braid index +1.
RewriteResult stabilize_along_ab_tile(const Tiling& t, int tile_id);

/// Removes a valence-one positive vertex together with the self-glued aa tile
/// around it. Braid index -1.
RewriteResult destabilize_along_end_tile(const Tiling& t, int vertex_id);

struct LeafGraph {
  struct Edge {
    int tile;
    int from;
    int to;
  };
  std::vector<int> nodes;  // vertex ids
  std::vector<Edge> edges;

  int degree(int vertex_id) const;
  bool is_tree() const;
};

/// Vertices plus one edge per aa tile joining its two positive corners,
/// keeping only edges whose cut leaves the tile complex connected.
/// Throws NonAaTilesPresent.
LeafGraph singular_leaf_graph(const Tiling& t);

struct SimplifyOptions {
  bool record_trace = false;
};

struct SimplifyResult {
  MoveCertificate certificate;
  Tiling final_tiling;
  int inessential_removed = 0;
  int negatives_before_stabilization = 0;
  int vertices_before_destabilization = 0;
  /// With record_trace: the input followed by the tiling after every rewrite.
  std::vector<Tiling> trace;
};

/// Reduces a disc tiling to the radial disc: cancel removable inessential
/// b-arcs, stabilize along ab tiles until no negative vertex is left, then
/// destabilize at leaves of the singular leaf tree.
/// Throws InvalidTiling or StuckNoAbTile.
SimplifyResult simplify_disc(const Tiling& t, const SimplifyOptions& options = {});

// ---------------------------------------------------------------------------
// Inverse moves, used to synthesize disc tilings.

struct EndTileSite {
  std::optional<int> a_edge;  // nullopt only on the radial disc
  int sign = 1;
  int axis_rank = 0;   // insertion position for the new vertex
  int theta_rank = 0;  // insertion position for the new singularity
};

/// Inverse of destabilize_along_end_tile: a new valence-one vertex and an aa
/// tile spliced into an a-edge.
Tiling insert_end_tile(const Tiling& t, const EndTileSite& site);

struct AbTileSite {
  int tile = 0;        // tile holding the starting a-edge slot
  int slot = 0;        // a-edge slot where the run of boundary segments begins
  int run_length = 0;  // number of consecutive boundary segments pulled onto the new vertex
  int sign = 1;
  int axis_rank = 0;
  int theta_rank = 0;
};

/// Inverse of stabilize_along_ab_tile: a new negative vertex absorbs a run
/// of boundary segments and a new ab tile is attached. Braid index -1.
Tiling insert_ab_tile(const Tiling& t, const AbTileSite& site);

struct InessentialPairSite {
  int edge = 0;
  std::array<int, 2> signs{1, 1};
  int axis_rank = 0;  // the new pair occupies axis_rank and axis_rank + 1
  std::array<int, 2> theta_ranks{0, 0};
};

/// Inverse of remove_inessential_b_arc: two new tiles glued along three
/// edges, inserted into an existing edge.
Tiling insert_inessential_pair(const Tiling& t, const InessentialPairSite& site);

enum class GrowStep { end_tile, ab_tile, inessential_pair };

inline constexpr std::size_t kMaxGrowScript = 4096;

/// Applies the script of inverse moves at random sites. Steps that cannot
/// apply (an ab tile at braid index 1, anything but an end tile on the
/// radial disc) fall back to an end tile.
Tiling grow_disc(const Tiling& seed, std::span<const GrowStep> script, std::uint64_t rng_seed);

std::vector<GrowStep> random_grow_script(std::size_t length, std::uint64_t rng_seed,
                                         bool include_inessential_pairs = true);

}  // namespace markov
