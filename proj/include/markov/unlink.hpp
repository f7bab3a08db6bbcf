#pragma once

// Two-coloured crossing diagrams: the red and green sublinks can be pulled
// apart once green passes under red at every mixed crossing.

#include <string_view>
#include <vector>

namespace markov {

enum class Color { red, green };

std::string_view to_string(Color c);
Color color_from_string(std::string_view text);  // throws ParseError

struct ColoredCrossing {
  int id = 0;
  Color over = Color::red;
  Color under = Color::green;

  bool mixed() const noexcept { return over != under; }
  bool self_crossing() const noexcept { return over == under; }
  friend bool operator==(const ColoredCrossing&, const ColoredCrossing&) = default;
};

struct ColoredDiagram {
  std::vector<ColoredCrossing> crossings;
  friend bool operator==(const ColoredDiagram&, const ColoredDiagram&) = default;
};

/// Throws InvalidArgument on repeated crossing ids.
void check_diagram(const ColoredDiagram& d);

int green_over_red_count(const ColoredDiagram& d);

struct SwitchCertificate {
  std::vector<int> switched;  // crossing ids, in diagram order
  friend bool operator==(const SwitchCertificate&, const SwitchCertificate&) = default;
};

struct SplitResult {
  ColoredDiagram diagram;
  SwitchCertificate certificate;
};

/// Switches every green-over-red crossing. Same-colour crossings are left alone.
SplitResult split_by_switches(const ColoredDiagram& d);

}  // namespace markov
