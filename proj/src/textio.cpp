#include "frobsem/textio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace frobsem::textio {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorCode::FormatError, "cannot format number");
  return std::string(buf, ptr);
}

double parse_double(std::string_view field) {
  field = trim(field);
  double x = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && field.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || field.empty())
    throw Error(ErrorCode::FormatError, "not a number: '" + std::string(field) + "'");
  if (!std::isfinite(x)) throw Error(ErrorCode::FormatError, "non-finite number: '" + std::string(field) + "'");
  return x;
}

long long parse_int(std::string_view field) {
  field = trim(field);
  long long x = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
    throw Error(ErrorCode::FormatError, "not an integer: '" + std::string(field) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view line, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(separators, pos);
    if (start == std::string_view::npos) break;
    const std::size_t end = line.find_first_of(separators, start);
    out.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return out;
}

std::vector<std::string_view> split_exact(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string join_doubles(std::span<const double> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(sep);
    out += format_double(values[i]);
  }
  return out;
}

Vector parse_vector(std::string_view line) {
  std::vector<double> values;
  for (auto field : split(line, " \t")) values.push_back(parse_double(field));
  return Vector(std::move(values));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed: " + path);
  return lines;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace frobsem::textio
