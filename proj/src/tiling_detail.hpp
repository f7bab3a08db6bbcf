#pragma once

// Internal helpers shared by the tiling rewrites and the disc generator.

#include <array>
#include <map>
#include <set>
#include <vector>

#include "markov/foliation.hpp"

namespace markov::detail {

/// A tile edge slot (or, depending on context, a corner) by tile index.
struct Slot {
  std::size_t tile = 0;
  int slot = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Positive / negative corner touched by edge slot s.
constexpr int positive_corner(int s) { return s % 2 == 0 ? s : (s + 1) % 4; }
constexpr int negative_corner(int s) { return s % 2 == 1 ? s : s + 1; }

/// Which slot is glued to which. Throws InvalidTiling unless every edge id
/// occurs in exactly two slots.
class Gluing {
public:
  explicit Gluing(const Tiling& t);
  Slot partner(Slot s) const { return partner_[s.tile][static_cast<std::size_t>(s.slot)]; }
  std::size_t index_of(int tile_id) const;

private:
  std::vector<std::array<Slot, 4>> partner_;
  std::map<int, std::size_t> index_;
};

std::vector<Slot> corners_at(const Tiling& t, int vertex_id);

/// Inserts at the given rank, shifting everything at or above it.
void insert_rank(std::vector<FVertex>& vertices, FVertex v);
void insert_rank(std::vector<FSingularity>& singularities, FSingularity s);

/// Fresh ids: which = 0 vertex, 1 singularity, 3 tile.
int next_id(const Tiling& t, int which);
int next_edge_id(const Tiling& t);

/// Recomputes tile kinds and edge records from the tiles, sorts by id and
/// re-ranks densely.
void rebuild(Tiling& t);

/// Deletes the tiles and re-glues what was glued to them.
void splice_out(Tiling& t, const std::set<int>& removed);

void erase_vertex(Tiling& t, int id);
void erase_singularity(Tiling& t, int id);

}  // namespace markov::detail
