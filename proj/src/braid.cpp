#include "markov/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "markov/error.hpp"

namespace markov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::NotDestabilizable: return "NotDestabilizable";
    case ErrorCode::TooFewStrands: return "TooFewStrands";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotABArc: return "NotABArc";
    case ErrorCode::EssentialArc: return "EssentialArc";
    case ErrorCode::SelfAdjacentTiles: return "SelfAdjacentTiles";
    case ErrorCode::NonLocalConfiguration: return "NonLocalConfiguration";
    case ErrorCode::NotAbTile: return "NotAbTile";
    case ErrorCode::NotEndTile: return "NotEndTile";
    case ErrorCode::NonAaTilesPresent: return "NonAaTilesPresent";
    case ErrorCode::InvalidTiling: return "InvalidTiling";
    case ErrorCode::StuckNoAbTile: return "StuckNoAbTile";
    case ErrorCode::LedgerMismatch: return "LedgerMismatch";
    case ErrorCode::MoveInapplicable: return "MoveInapplicable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void check_letters(int strands, const std::vector<Generator>& letters) {
  if (strands < 1) {
    throw Error(ErrorCode::InvalidArgument, "braid needs at least one strand");
  }
  for (const auto& g : letters) {
    if (g.index < 1 || g.index > strands - 1 || (g.sign != 1 && g.sign != -1)) {
      throw Error(ErrorCode::InvalidArgument,
                  "generator s" + std::to_string(g.index) + " out of range for B" +
                      std::to_string(strands));
    }
  }
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error(ErrorCode::StrandMismatch, "B" + std::to_string(a.strands()) + " vs B" +
                                               std::to_string(b.strands()));
  }
}

[[noreturn]] void parse_fail(std::size_t column, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "column " + std::to_string(column + 1) + ": " + msg);
}

// Parses a decimal integer starting at `pos`; advances pos.
int parse_int(std::string_view text, std::size_t& pos) {
  std::size_t begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (begin == pos) parse_fail(begin, "expected an integer");
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos) parse_fail(begin, "integer out of range");
  return value;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_letters(strands_, letters_);
}

BraidWord BraidWord::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != 'B') parse_fail(pos, "expected 'B<strands>:' header");
  ++pos;
  int strands = parse_int(text, pos);
  if (strands < 1) parse_fail(pos - 1, "strand count must be at least 1");
  if (pos >= text.size() || text[pos] != ':') parse_fail(pos, "expected ':' after strand count");
  ++pos;

  std::vector<Generator> letters;
  while (true) {
    std::size_t before = pos;
    skip_ws();
    if (pos >= text.size()) break;
    if (pos == before && !letters.empty()) parse_fail(pos, "tokens must be whitespace-separated");
    if (text[pos] != 's') parse_fail(pos, "expected generator 's<i>'");
    std::size_t token_start = pos;
    ++pos;
    int index = parse_int(text, pos);
    int sign = 1;
    if (text.substr(pos, 3) == "^-1") {
      sign = -1;
      pos += 3;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      parse_fail(pos, "unexpected character in generator token");
    }
    if (index < 1 || index > strands - 1) {
      parse_fail(token_start, "generator s" + std::to_string(index) + " out of range for B" +
                                  std::to_string(strands));
    }
    letters.push_back({index, sign});
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  out << 'B' << strands_ << ':';
  for (const auto& g : letters_) {
    out << " s" << g.index;
    if (g.sign < 0) out << "^-1";
  }
  return out.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidArgument, "permutation images must be a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
  }
  return cycles;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::StrandMismatch, "permutation sizes differ");
  std::vector<int> images(q.images_.size());
  for (std::size_t j = 0; j < images.size(); ++j) images[j] = p[q[static_cast<int>(j)]];
  return Permutation(std::move(images));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  std::vector<Generator> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<Generator> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<Generator> stack;
  stack.reserve(a.length());
  for (const auto& g : a.letters()) {
    if (!stack.empty() && stack.back() == g.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return BraidWord(a.strands(), std::move(stack));
}

Permutation permutation_of(const BraidWord& a) {
  std::vector<int> labels(static_cast<std::size_t>(a.strands()));
  std::iota(labels.begin(), labels.end(), 0);
  for (const auto& g : a.letters()) {
    std::swap(labels[static_cast<std::size_t>(g.index - 1)],
              labels[static_cast<std::size_t>(g.index)]);
  }
  return Permutation(std::move(labels));
}

int closure_component_count(const BraidWord& a) { return permutation_of(a).cycle_count(); }

int exponent_sum(const BraidWord& a) {
  int sum = 0;
  for (const auto& g : a.letters()) sum += g.sign;
  return sum;
}

BraidWord conjugate(const BraidWord& a, const BraidWord& g) {
  require_same_strands(a, g);
  return free_reduce(compose(compose(g, a), inverse(g)));
}

BraidWord cyclic_rotate(const BraidWord& a) {
  if (a.empty()) return a;
  std::vector<Generator> letters(a.letters().begin() + 1, a.letters().end());
  letters.push_back(a.letters().front());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& a, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  std::vector<Generator> letters = a.letters();
  letters.push_back({a.strands(), sign});
  return BraidWord(a.strands() + 1, std::move(letters));
}

namespace {

std::size_t count_top_generator(const BraidWord& a) {
  const int top = a.strands() - 1;
  return static_cast<std::size_t>(std::count_if(
      a.letters().begin(), a.letters().end(), [top](const Generator& g) { return g.index == top; }));
}

void require_destabilizable_shape(const BraidWord& a) {
  if (a.strands() < 2) throw Error(ErrorCode::NotDestabilizable, "B1 has no strand to remove");
  std::size_t count = count_top_generator(a);
  if (count != 1) {
    throw Error(ErrorCode::NotDestabilizable,
                "s" + std::to_string(a.strands() - 1) + " occurs " + std::to_string(count) +
                    " times");
  }
}

}  // namespace

BraidWord destabilize(const BraidWord& a) {
  require_destabilizable_shape(a);
  if (a.letters().back().index != a.strands() - 1) {
    throw Error(ErrorCode::NotDestabilizable,
                "s" + std::to_string(a.strands() - 1) + " is not the final letter");
  }
  std::vector<Generator> letters(a.letters().begin(), a.letters().end() - 1);
  return BraidWord(a.strands() - 1, std::move(letters));
}

int rotate_to_destabilizable(BraidWord& a) {
  require_destabilizable_shape(a);
  int rotations = 0;
  while (a.letters().back().index != a.strands() - 1) {
    a = cyclic_rotate(a);
    ++rotations;
  }
  return rotations;
}

BraidWord connect_sum(const BraidWord& v, const BraidWord& w) {
  const int shift = v.strands() - 1;
  std::vector<Generator> letters = v.letters();
  for (const auto& g : w.letters()) letters.push_back({g.index + shift, g.sign});
  return BraidWord(v.strands() + w.strands() - 1, std::move(letters));
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  return garside_form(a) == garside_form(b);
}

BraidWord normal_form(const BraidWord& a) { return to_word(garside_form(a)); }

}  // namespace markov
