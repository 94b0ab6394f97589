#include "gaxioms/parse.hpp"

#include <sstream>

#include "relcore/errors.hpp"

namespace gaxioms {

using relcore::parse_error;

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

AttributeSet parse_attr_list(const std::string& text, const std::string& line) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw parse_error("empty attribute name in: " + line);
    names.push_back(item);
  }
  if (names.empty()) throw parse_error("empty attribute list in: " + line);
  AttributeSet set(names);
  if (set.size() != names.size()) throw parse_error("repeated attribute in: " + line);
  return set;
}

}  // namespace

CIStatement parse_ci_line(const std::string& line) {
  auto indep = line.find("_|_");
  if (indep == std::string::npos) throw parse_error("missing _|_ in: " + line);
  auto at = line.rfind('@');
  if (at == std::string::npos || at < indep) throw parse_error("missing @ context in: " + line);

  std::string x_part = trim(line.substr(0, indep));
  std::string middle = trim(line.substr(indep + 3, at - indep - 3));
  std::string context = trim(line.substr(at + 1));
  if (context.empty()) throw parse_error("empty context in: " + line);

  std::string y_part, z_part;
  auto bar = middle.find("|-");
  if (bar != std::string::npos && trim(middle.substr(bar + 2)).empty()) {
    y_part = trim(middle.substr(0, bar));
  } else {
    auto pipe = middle.find('|');
    if (pipe == std::string::npos)
      throw parse_error("missing conditioning part ('| Z' or '|-') in: " + line);
    y_part = trim(middle.substr(0, pipe));
    z_part = trim(middle.substr(pipe + 1));
    if (z_part.empty()) throw parse_error("empty conditioning set (use '|-') in: " + line);
  }

  AttributeSet x = parse_attr_list(x_part, line);
  AttributeSet y = parse_attr_list(y_part, line);
  AttributeSet z = z_part.empty() ? AttributeSet{} : parse_attr_list(z_part, line);
  try {
    return CIStatement(x, z, y, context);
  } catch (const relcore::argument_error& e) {
    throw parse_error(std::string(e.what()) + " in: " + line);
  }
}

std::vector<CIStatement> parse_ci_lines(const std::string& text) {
  std::vector<CIStatement> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    out.push_back(parse_ci_line(line));
  }
  return out;
}

std::string format_ci(const CIStatement& s) { return s.to_string(); }

}  // namespace gaxioms
