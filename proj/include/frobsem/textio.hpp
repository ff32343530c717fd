#ifndef FROBSEM_TEXTIO_HPP
#define FROBSEM_TEXTIO_HPP

// Small helpers shared by the line-oriented file formats.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobsem/linalg.hpp"

namespace frobsem::textio {

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);
// Throws FormatError unless the whole field is a finite double.
double parse_double(std::string_view field);
long long parse_int(std::string_view field);

// Splits on any run of the given separator characters, dropping empties.
std::vector<std::string_view> split(std::string_view line, std::string_view separators);
// Splits on every occurrence of sep, keeping empty fields.
std::vector<std::string_view> split_exact(std::string_view line, char sep);
std::string_view trim(std::string_view s);

std::string join_doubles(std::span<const double> values, char sep = ' ');
Vector parse_vector(std::string_view line);

std::vector<std::string> read_lines(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace frobsem::textio

#endif  // FROBSEM_TEXTIO_HPP
