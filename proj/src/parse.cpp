#include "dilemma/parse.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dilemma/errors.hpp"

namespace dilemma::io {

namespace {

struct Line {
  int number = 0;  // 1-based position in the file
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text, bool keep_blank) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank || keep_blank) lines.push_back({number, line});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  // A trailing newline produces a final empty line; drop it.
  if (keep_blank && !lines.empty() && lines.back().text.empty() &&
      !text.empty() && text.back() == '\n')
    lines.pop_back();
  return lines;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::int64_t parse_int(std::string_view token, int line, const std::string& what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, what + " must be an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

knapsack::KnapsackInstance parse_knapsack(std::string_view text) {
  const auto lines = split_lines(text, /*keep_blank=*/false);
  if (lines.empty()) throw ParseError(1, "empty instance");

  const auto head = tokens_of(lines[0].text);
  if (head.size() != 2)
    throw ParseError(lines[0].number, "expected 'n W', found " + std::to_string(head.size()) +
                                          " token(s)");
  const std::int64_t n = parse_int(head[0], lines[0].number, "item count");
  const std::int64_t capacity = parse_int(head[1], lines[0].number, "capacity");
  if (n < 0) throw ParseError(lines[0].number, "item count must be >= 0");
  if (capacity < 1) throw ParseError(lines[0].number, "capacity must be >= 1");

  knapsack::KnapsackInstance instance;
  instance.capacity = capacity;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t li = static_cast<std::size_t>(i) + 1;
    if (li >= lines.size()) {
      const int eof_line = lines.back().number + 1;
      throw ParseError(eof_line, "expected " + std::to_string(n) + " items, found " +
                                     std::to_string(static_cast<std::int64_t>(lines.size()) - 1));
    }
    const auto toks = tokens_of(lines[li].text);
    if (toks.size() != 2)
      throw ParseError(lines[li].number,
                       "expected 'v w', found " + std::to_string(toks.size()) + " token(s)");
    knapsack::Item item;
    item.id = static_cast<int>(i);
    item.value = parse_int(toks[0], lines[li].number, "value");
    item.weight = parse_int(toks[1], lines[li].number, "weight");
    if (item.value < 0) throw ParseError(lines[li].number, "value must be >= 0");
    if (item.weight < 1) throw ParseError(lines[li].number, "weight must be >= 1");
    instance.items.push_back(item);
  }
  if (lines.size() > static_cast<std::size_t>(n) + 1)
    throw ParseError(lines[static_cast<std::size_t>(n) + 1].number, "trailing garbage");
  return instance;
}

std::string write_knapsack(const knapsack::KnapsackInstance& instance) {
  std::ostringstream out;
  out << instance.items.size() << ' ' << instance.capacity << '\n';
  for (const auto& item : instance.items) out << item.value << ' ' << item.weight << '\n';
  return out.str();
}

tree::Dataset parse_dataset(std::string_view csv, const std::vector<BinSpec>& bin_specs) {
  const auto lines = split_lines(csv, /*keep_blank=*/false);
  if (lines.empty()) throw ParseError(1, "empty dataset");

  auto split_fields = [](std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string_view::npos) {
        fields.emplace_back(line.substr(pos));
        break;
      }
      fields.emplace_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return fields;
  };

  const std::vector<std::string> header = split_fields(lines[0].text);
  if (header.size() < 2)
    throw ParseError(lines[0].number, "need at least one attribute column and a class column");
  {
    std::set<std::string> seen;
    for (const auto& name : header)
      if (!seen.insert(name).second)
        throw ParseError(lines[0].number, "duplicate column name '" + name + "'");
  }
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, "dataset has no data rows");

  const std::size_t columns = header.size();
  std::vector<std::vector<std::string>> cells(columns);
  std::vector<int> row_lines;  // file line of each data row, for error reports
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto fields = split_fields(lines[li].text);
    if (fields.size() != columns)
      throw RaggedRowError(lines[li].number, "expected " + std::to_string(columns) +
                                                 " fields, found " +
                                                 std::to_string(fields.size()));
    for (std::size_t c = 0; c < columns; ++c) cells[c].push_back(std::move(fields[c]));
    row_lines.push_back(lines[li].number);
  }
  const std::size_t row_count = cells[0].size();

  tree::Dataset data;

  // Quantize requested columns in place before the schema is inferred.
  for (const auto& spec : bin_specs) {
    const auto it = std::find(header.begin(), header.end(), spec.column);
    if (it == header.end())
      throw UnknownAttributeError("cannot bin unknown column '" + spec.column + "'");
    const std::size_t c = static_cast<std::size_t>(it - header.begin());
    std::vector<double> numeric(row_count);
    for (std::size_t r = 0; r < row_count; ++r) {
      const std::string& cell = cells[c][r];
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), numeric[r]);
      if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError(static_cast<int>(r) + 2, "column '" + spec.column +
                                                      "' is binned but holds non-numeric '" +
                                                      cell + "'");
    }
    auto quantized = tree::quantize_numeric(numeric, spec.bins);
    cells[c] = std::move(quantized.labels);
    data.bins.push_back({spec.column, spec.bins, std::move(quantized.edges), quantized.collapsed});
  }

  const std::size_t class_col = columns - 1;
  data.class_name = header[class_col];

  auto sorted_unique = [](const std::vector<std::string>& column) {
    std::vector<std::string> values(column.begin(), column.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  };

  // Binned columns keep numeric bin order ("b2" before "b10"); everything
  // else sorts lexicographically so the schema is row-order independent.
  auto value_order = [&](std::size_t c) {
    for (const auto& b : data.bins)
      if (b.column == header[c]) {
        std::vector<std::string> values = sorted_unique(cells[c]);
        std::sort(values.begin(), values.end(), [](const std::string& a, const std::string& b2) {
          return std::stoi(a.substr(1)) < std::stoi(b2.substr(1));
        });
        return values;
      }
    return sorted_unique(cells[c]);
  };

  for (std::size_t c = 0; c < class_col; ++c)
    data.attributes.push_back({header[c], value_order(c)});
  data.classes = value_order(class_col);

  data.rows.assign(row_count, std::vector<int>(class_col));
  data.labels.resize(row_count);
  for (std::size_t c = 0; c < columns; ++c) {
    std::map<std::string, int> index;
    const auto& values = c == class_col ? data.classes : data.attributes[c].values;
    for (std::size_t v = 0; v < values.size(); ++v) index[values[v]] = static_cast<int>(v);
    for (std::size_t r = 0; r < row_count; ++r) {
      const int v = index.at(cells[c][r]);
      if (c == class_col)
        data.labels[r] = v;
      else
        data.rows[r][c] = v;
    }
  }
  return data;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing to '" + path + "'");
}

}  // namespace dilemma::io
