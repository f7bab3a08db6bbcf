#include "markov/json_io.hpp"

#include <limits>
#include <set>

#include "markov/error.hpp"

namespace markov {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ParseError, path + ": " + why);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) bad(path, "out of range");
  return static_cast<int>(x);
}

int int_field(const json& obj, const char* key, const std::string& path) {
  return as_int(field(obj, key, path), path + "." + key);
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) bad(path + "." + key, "expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_array()) bad(path + "." + key, "expected an array");
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int sign_value(const json& v, const std::string& path) {
  const int s = as_int(v, path);
  if (s != 1 && s != -1) bad(path, "sign must be 1 or -1");
  return s;
}

Corner corner_value(const json& v, const std::string& path) {
  if (v.is_null()) return std::nullopt;
  return as_int(v, path);
}

json corner_json(const Corner& c) { return c ? json(*c) : json(nullptr); }

template <class Enum, std::size_t N>
Enum enum_field(const json& obj, const char* key, const std::string& path, const std::array<Enum, N>& options) {
  const std::string text = string_field(obj, key, path);
  for (Enum e : options) {
    if (to_string(e) == text) return e;
  }
  bad(path + "." + key, "unknown value \"" + text + "\"");
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

json tiling_to_json(const Tiling& t) {
  json j;
  j["surface_kind"] = std::string(to_string(t.surface_kind));
  j["chi"] = t.chi;
  j["boundary_count"] = t.boundary_count;
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back({{"id", v.id}, {"sign", v.sign}, {"axis_rank", v.axis_rank}});
  j["singularities"] = json::array();
  for (const auto& s : t.singularities) {
    j["singularities"].push_back({{"id", s.id}, {"sign", s.sign}, {"theta_rank", s.theta_rank}});
  }
  j["edges"] = json::array();
  for (const auto& e : t.edges) {
    j["edges"].push_back({{"id", e.id},
                          {"kind", std::string(to_string(e.kind))},
                          {"endpoints", {corner_json(e.endpoints[0]), corner_json(e.endpoints[1])}},
                          {"adjacent_tiles", e.adjacent_tiles}});
  }
  j["tiles"] = json::array();
  for (const auto& x : t.tiles) {
    json corners = json::array();
    for (const auto& c : x.vertices) corners.push_back(corner_json(c));
    j["tiles"].push_back({{"id", x.id},
                          {"kind", std::string(to_string(x.kind))},
                          {"singularity", x.singularity},
                          {"vertices", corners},
                          {"edges", x.edges}});
  }
  return j;
}

Tiling tiling_from_json(const json& j) {
  const std::string root = "tiling";
  Tiling t;
  t.surface_kind = enum_field(j, "surface_kind", root,
                              std::array{SurfaceKind::disc, SurfaceKind::annulus, SurfaceKind::general});
  t.chi = int_field(j, "chi", root);
  if (j.contains("boundary_count")) {
    t.boundary_count = int_field(j, "boundary_count", root);
  } else if (t.surface_kind == SurfaceKind::general) {
    bad(root + ".boundary_count", "required for general surfaces");
  } else {
    t.boundary_count = t.surface_kind == SurfaceKind::disc ? 1 : 2;
  }

  const json& vs = array_field(j, "vertices", root);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = at(root + ".vertices", i);
    t.vertices.push_back({int_field(vs[i], "id", p), sign_value(field(vs[i], "sign", p), p + ".sign"),
                          int_field(vs[i], "axis_rank", p)});
  }
  const json& ss = array_field(j, "singularities", root);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string p = at(root + ".singularities", i);
    t.singularities.push_back({int_field(ss[i], "id", p), sign_value(field(ss[i], "sign", p), p + ".sign"),
                               int_field(ss[i], "theta_rank", p)});
  }
  const json& es = array_field(j, "edges", root);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = at(root + ".edges", i);
    FEdge e;
    e.id = int_field(es[i], "id", p);
    e.kind = enum_field(es[i], "kind", p, std::array{EdgeKind::a, EdgeKind::b});
    const json& ends = array_field(es[i], "endpoints", p);
    if (ends.size() != 2) bad(p + ".endpoints", "expected 2 entries");
    e.endpoints = {corner_value(ends[0], p + ".endpoints[0]"), corner_value(ends[1], p + ".endpoints[1]")};
    const json& adj = array_field(es[i], "adjacent_tiles", p);
    for (std::size_t k = 0; k < adj.size(); ++k) e.adjacent_tiles.push_back(as_int(adj[k], at(p + ".adjacent_tiles", k)));
    t.edges.push_back(std::move(e));
  }
  const json& ts = array_field(j, "tiles", root);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string p = at(root + ".tiles", i);
    FTile x;
    x.id = int_field(ts[i], "id", p);
    x.kind = enum_field(ts[i], "kind", p, std::array{TileKind::aa, TileKind::ab, TileKind::bb});
    x.singularity = int_field(ts[i], "singularity", p);
    const json& corners = array_field(ts[i], "vertices", p);
    if (corners.size() != 4) bad(p + ".vertices", "expected 4 corners [P0, N0, P1, N1]");
    for (std::size_t k = 0; k < 4; ++k) x.vertices[k] = corner_value(corners[k], at(p + ".vertices", k));
    const json& edges = array_field(ts[i], "edges", p);
    if (edges.size() != 4) bad(p + ".edges", "expected 4 edge slots");
    for (std::size_t k = 0; k < 4; ++k) x.edges[k] = as_int(edges[k], at(p + ".edges", k));
    t.tiles.push_back(x);
  }
  return t;
}

// ---------------------------------------------------------------------------

json certificate_to_json(const MoveCertificate& cert) {
  json moves = json::array();
  for (const auto& m : cert.moves) {
    json entry{{"kind", std::string(to_string(m.kind))}};
    if (m.sign) entry["sign"] = *m.sign;
    if (m.witness) entry["witness"] = m.witness->to_string();
    moves.push_back(std::move(entry));
  }
  return {{"initial_index", cert.initial_index}, {"moves", moves}};
}

MoveCertificate certificate_from_json(const json& j) {
  const std::string root = "certificate";
  MoveCertificate cert;
  cert.initial_index = int_field(j, "initial_index", root);
  if (cert.initial_index < 1) bad(root + ".initial_index", "must be at least 1");
  const json& moves = array_field(j, "moves", root);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const std::string p = at(root + ".moves", i);
    Move m;
    const std::string kind = string_field(moves[i], "kind", p);
    try {
      m.kind = move_kind_from_string(kind);
    } catch (const Error&) {
      bad(p + ".kind", "unknown move kind \"" + kind + "\"");
    }
    if (moves[i].contains("sign")) m.sign = sign_value(moves[i]["sign"], p + ".sign");
    if (m.kind == MoveKind::stabilize && !m.sign) bad(p + ".sign", "stabilize needs a sign");
    if (m.kind == MoveKind::conjugate) {
      const std::string text = string_field(moves[i], "witness", p);
      try {
        m.witness = BraidWord::parse(text);
      } catch (const Error& e) {
        bad(p + ".witness", e.what());
      }
    }
    cert.moves.push_back(std::move(m));
  }
  return cert;
}

// ---------------------------------------------------------------------------

json diagram_to_json(const ColoredDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back({{"id", c.id}, {"over", std::string(to_string(c.over))}, {"under", std::string(to_string(c.under))}});
  }
  return {{"crossings", crossings}};
}

ColoredDiagram diagram_from_json(const json& j) {
  const std::string root = "diagram";
  ColoredDiagram d;
  const json& cs = array_field(j, "crossings", root);
  std::set<int> seen;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = at(root + ".crossings", i);
    ColoredCrossing c;
    c.id = int_field(cs[i], "id", p);
    c.over = enum_field(cs[i], "over", p, std::array{Color::red, Color::green});
    c.under = enum_field(cs[i], "under", p, std::array{Color::red, Color::green});
    if (!seen.insert(c.id).second) bad(p + ".id", "crossing id " + std::to_string(c.id) + " repeated");
    d.crossings.push_back(c);
  }
  return d;
}

json switches_to_json(const SwitchCertificate& s) {
  return {{"switched", s.switched}, {"count", s.switched.size()}};
}

}  // namespace markov
