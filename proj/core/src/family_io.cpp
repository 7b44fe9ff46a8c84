#include "kneserlab/family_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "kneserlab/errors.hpp"

namespace kneserlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<int> parse_elements(std::string_view text) {
  std::vector<int> elements;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    if (!parse_int(token, value)) {
      throw DomainError("malformed element '" + std::string(trim(token)) + "' in '" + std::string(text) + "'");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return elements;
}

// "n=<n> r=<r>" in either order, whitespace separated.
bool parse_header(std::string_view line, int& n, int& r) {
  bool have_n = false;
  bool have_r = false;
  std::istringstream words{std::string(line)};
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) return false;
    const auto key = std::string_view(word).substr(0, eq);
    int value = 0;
    if (!parse_int(std::string_view(word).substr(eq + 1), value)) return false;
    if (key == "n" && !have_n) {
      n = value;
      have_n = true;
    } else if (key == "r" && !have_r) {
      r = value;
      have_r = true;
    } else {
      return false;
    }
  }
  return have_n && have_r;
}

}  // namespace

RSet parse_rset(std::string_view text, int universe_n) {
  const auto elements = parse_elements(trim(text));
  return RSet::from_elements(elements, universe_n);
}

Family parse_family(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  int n = 0;
  int r = 0;
  std::vector<RSet> members;
  std::unordered_map<Mask, std::size_t> seen_at;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      if (!parse_header(line, n, r)) {
        throw ParseError(line_no, "expected header 'n=<n> r=<r>', got '" + std::string(line) + "'");
      }
      if (n < 1 || n > kMaxUniverse || r < 0 || r > n) {
        throw ParseError(line_no, "header n=" + std::to_string(n) + " r=" + std::to_string(r) + " out of range");
      }
      have_header = true;
      continue;
    }

    RSet s;
    try {
      s = parse_rset(line, n);
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
    if (s.size() != r) {
      throw ParseError(line_no, "set {" + to_string(s) + "} has " + std::to_string(s.size()) +
                                    " elements, header says r=" + std::to_string(r));
    }
    if (auto [it, inserted] = seen_at.emplace(s.bits(), line_no); !inserted) {
      throw ParseError(line_no, "duplicate set {" + to_string(s) + "} (first seen on line " +
                                    std::to_string(it->second) + ")");
    }
    members.push_back(s);
  }
  if (!have_header) throw ParseError(0, "missing header 'n=<n> r=<r>'");
  return Family(n, r, std::move(members));
}

Family parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open family file '" + path.string() + "'");
  return parse_family(in);
}

void write_family(std::ostream& out, const Family& f, std::string_view comment) {
  std::size_t start = 0;
  while (start < comment.size()) {
    const auto nl = comment.find('\n', start);
    out << "# " << comment.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start) << '\n';
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  out << "n=" << f.universe() << " r=" << f.r() << '\n';
  for (const auto& s : f) out << to_string(s) << '\n';
}

std::string format_family(const Family& f, std::string_view comment) {
  std::ostringstream out;
  write_family(out, f, comment);
  return out.str();
}

void write_family_file(const std::filesystem::path& path, const Family& f, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write family file '" + path.string() + "'");
  write_family(out, f, comment);
}

}  // namespace kneserlab
