#include "markov/unlink.hpp"

#include <set>
#include <string>

#include "markov/error.hpp"

namespace markov {

std::string_view to_string(Color c) { return c == Color::red ? "red" : "green"; }

Color color_from_string(std::string_view text) {
  if (text == "red") return Color::red;
  if (text == "green") return Color::green;
  throw Error(ErrorCode::ParseError, "colour must be \"red\" or \"green\", got \"" + std::string(text) + "\"");
}

void check_diagram(const ColoredDiagram& d) {
  std::set<int> seen;
  for (const auto& c : d.crossings) {
    if (!seen.insert(c.id).second) throw Error(ErrorCode::InvalidArgument, "crossing id " + std::to_string(c.id) + " repeated");
  }
}

int green_over_red_count(const ColoredDiagram& d) {
  int n = 0;
  for (const auto& c : d.crossings) n += (c.over == Color::green && c.under == Color::red) ? 1 : 0;
  return n;
}

SplitResult split_by_switches(const ColoredDiagram& d) {
  SplitResult r{d, {}};
  for (auto& c : r.diagram.crossings) {
    if (c.over == Color::green && c.under == Color::red) {
      std::swap(c.over, c.under);
      r.certificate.switched.push_back(c.id);
    }
  }
  return r;
}

}  // namespace markov
