#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kneserlab/family.hpp"

namespace kneserlab {

// Family text format:
//
//   n=<n> r=<r>
//   1,5,6
//   2,5,6
//
// Blank lines and '#' comments are ignored. A repeated set is a ParseError naming its line.

// "1,5,6" -> RSet over [n]. Elements may come in any order but must be distinct.
RSet parse_rset(std::string_view text, int universe_n);

Family parse_family(std::istream& in);
Family parse_family(std::string_view text);
Family read_family_file(const std::filesystem::path& path);

// Each line of `comment` is emitted as a "# " line before the header.
void write_family(std::ostream& out, const Family& f, std::string_view comment = {});
std::string format_family(const Family& f, std::string_view comment = {});
void write_family_file(const std::filesystem::path& path, const Family& f, std::string_view comment = {});

}  // namespace kneserlab
