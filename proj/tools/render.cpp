#include "render.hpp"

#include <algorithm>
#include <vector>

namespace flagbound::cli {

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_null()) return "";
  return value.dump();
}

bool is_scalar(const Json& value) { return !value.is_object() && !value.is_array(); }

bool is_record_list(const Json& value) {
  return value.is_array() && !value.empty() &&
         std::all_of(value.begin(), value.end(), [](const Json& row) { return row.is_object(); });
}

using Tables = std::vector<std::pair<std::string, const Json*>>;

// Flattens nested objects to dotted keys and scalar arrays to "[a, b]".
// Nested arrays of objects are collected into `tables` when given.
void flatten(const Json& object, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out,
             Tables* tables = nullptr) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out, tables);
    } else if (tables != nullptr && is_record_list(*it)) {
      tables->emplace_back(key, &*it);
    } else if (it->is_array() && !is_record_list(*it)) {
      std::string joined = "[";
      for (std::size_t i = 0; i < it->size(); ++i) {
        joined += (i ? ", " : "") + scalar_text((*it)[i]);
      }
      out.emplace_back(key, joined + "]");
    } else if (is_scalar(*it)) {
      out.emplace_back(key, scalar_text(*it));
    }
  }
}

std::vector<std::vector<std::pair<std::string, std::string>>> flatten_rows(const Json& rows) {
  std::vector<std::vector<std::pair<std::string, std::string>>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    flatten(row, "", out.back());
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return quoted + "\"";
}

void render_columns(std::ostream& out, const Json& rows) {
  const auto flat = flatten_rows(rows);
  std::vector<std::string> header;
  for (const auto& [key, _] : flat.front()) header.push_back(key);
  std::vector<std::size_t> width;
  for (const auto& key : header) width.push_back(key.size());
  for (const auto& row : flat) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].second.size());
    }
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : flat) {
    std::vector<std::string> cells;
    for (const auto& [_, value] : row) cells.push_back(value);
    cells.resize(header.size());
    line(cells);
  }
}

void render_table(std::ostream& out, const Json& body) {
  if (!body.is_object()) {
    out << (is_scalar(body) ? scalar_text(body) : body.dump()) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> fields;
  Tables tables;
  flatten(body, "", fields, &tables);
  if (fields.size() == 1 && tables.empty() && is_scalar(body.begin().value())) {
    out << fields.front().second << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, _] : fields) width = std::max(width, key.size());
  for (const auto& [key, value] : fields) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  for (const auto& [key, rows] : tables) {
    if (!fields.empty()) out << '\n';
    out << key << ":\n";
    render_columns(out, *rows);
  }
}

void render_csv(std::ostream& out, const Json& body) {
  if (!body.is_object()) {
    out << csv_field(scalar_text(body)) << '\n';
    return;
  }
  Json scalars = Json::object();
  const Json* rows = nullptr;
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (is_record_list(*it) && rows == nullptr) {
      rows = &*it;
    } else if (!is_record_list(*it)) {
      scalars[it.key()] = *it;
    }
  }
  std::vector<std::pair<std::string, std::string>> prefix;
  flatten(scalars, "", prefix);
  const auto emit = [&](const std::vector<std::pair<std::string, std::string>>& cells, bool keys) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << csv_field(keys ? cells[i].first : cells[i].second);
    }
    out << '\n';
  };
  if (rows == nullptr) {
    emit(prefix, true);
    emit(prefix, false);
    return;
  }
  auto flat = flatten_rows(*rows);
  for (auto& row : flat) row.insert(row.begin(), prefix.begin(), prefix.end());
  emit(flat.front(), true);
  for (const auto& row : flat) emit(row, false);
}

}  // namespace

void render(std::ostream& out, const Json& body, Format format) {
  switch (format) {
    case Format::json: out << body.dump() << '\n'; break;
    case Format::table: render_table(out, body); break;
    case Format::csv: render_csv(out, body); break;
  }
}

}  // namespace flagbound::cli
