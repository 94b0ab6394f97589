#include "relcore/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "relcore/errors.hpp"

namespace relcore {

namespace {

// One CSV record with standard quoting (embedded commas, doubled quotes).
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  int ch;
  while ((ch = in.get()) != EOF) {
    any = true;
    char c = static_cast<char>(ch);
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else if (c == '\r') {
      // swallow; \r\n handled by the following \n
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) throw parse_error("unterminated quoted CSV field");
  if (any) {
    fields.push_back(std::move(field));
    return true;
  }
  return false;
}

std::string quote_if_needed(const std::string& v) {
  if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

Relation read_csv(std::istream& in, const std::string& name) {
  std::vector<std::string> header;
  if (!read_record(in, header) || header.empty())
    throw parse_error("CSV for " + name + " is missing a header line");
  for (const auto& a : header) {
    if (a.empty()) throw parse_error("CSV for " + name + " has an empty attribute name");
  }
  AttributeSet schema(header);
  if (schema.size() != header.size())
    throw parse_error("CSV for " + name + " repeats an attribute name");

  // Header order may differ from the sorted schema order.
  Relation r(name, schema);
  std::vector<std::size_t> dest(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) dest[i] = r.column_index(header[i]);

  std::vector<std::string> fields;
  Tuple row(header.size());
  std::size_t line = 1;
  while (read_record(in, fields)) {
    ++line;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != header.size())
      throw parse_error("CSV for " + name + " line " + std::to_string(line) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(header.size()));
    for (std::size_t i = 0; i < fields.size(); ++i) row[dest[i]] = fields[i];
    r.add_row(row);
  }
  return r;
}

Relation read_csv_file(const std::string& path, const std::string& name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open CSV file " + path);
  return read_csv(in, name);
}

void write_csv(const Relation& r, std::ostream& out) {
  const auto& names = r.schema().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ',';
    out << quote_if_needed(names[i]);
  }
  out << '\n';
  for (const auto& row : r.expanded_rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << quote_if_needed(row[i]);
    }
    out << '\n';
  }
}

}  // namespace relcore
