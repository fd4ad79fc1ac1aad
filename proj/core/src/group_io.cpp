#include "grpstat/group_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "grpstat/error.hpp"

namespace grpstat {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Reads the integers in `s`, treating every non-digit as a separator.
std::vector<Point> read_integers(std::string_view s) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (!std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') {
        throw ParseError("unexpected character '" + std::string(1, s[i]) + "'");
      }
      ++i;
      continue;
    }
    Point value = 0;
    auto [next, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc()) throw ParseError("integer out of range");
    out.push_back(value);
    i = static_cast<std::size_t>(next - s.data());
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty generator");
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated image list");
    auto images = read_integers(text.substr(1, text.size() - 2));
    if (images.size() != degree) {
      throw ParseError("image list has " + std::to_string(images.size()) +
                       " entries, expected " + std::to_string(degree));
    }
    try {
      return Permutation(std::move(images));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle");
    auto cycle = read_integers(text.substr(pos + 1, close - pos - 1));
    for (Point x : cycle) {
      if (x >= degree) throw ParseError("point " + std::to_string(x) + " out of range");
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

PermGroup parse_group(std::string_view text) {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (!have_degree) {
        if (line.substr(0, 6) != "degree") throw ParseError("expected 'degree <t>'");
        auto values = read_integers(line.substr(6));
        if (values.size() != 1 || values[0] == 0) throw ParseError("bad degree");
        degree = values[0];
        have_degree = true;
        continue;
      }
      gens.push_back(parse_permutation(line, degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError("missing 'degree <t>' line");
  return {degree, std::move(gens)};
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group(buffer.str());
}

void write_group(std::ostream& out, const PermGroup& group) {
  out << "degree " << group.degree() << '\n';
  for (const auto& g : group.generators()) out << g.to_cycle_string() << '\n';
}

std::string format_group(const PermGroup& group) {
  std::ostringstream out;
  write_group(out, group);
  return out.str();
}

}  // namespace grpstat
