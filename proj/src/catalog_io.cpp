#include "latsq/catalog_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latsq {

namespace {
std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) continue;
    return line;
  }
  throw std::invalid_argument("unexpected end of input");
}
}  // namespace

LatinSquare parse_square(std::istream& in) {
  std::istringstream header(next_content_line(in));
  int n = 0;
  if (!(header >> n) || n < 1) throw std::invalid_argument("bad order line");
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < n; ++r) {
    std::istringstream row_in(next_content_line(in));
    std::vector<int> row;
    int v;
    while (row_in >> v) row.push_back(v);
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has wrong length");
    rows.push_back(std::move(row));
  }
  return LatinSquare::from_rows(rows);  // diagnostics name the violated row/column
}

LatinSquare parse_square_text(const std::string& text) {
  std::istringstream in(text);
  return parse_square(in);
}

std::string format_square(const LatinSquare& sq) {
  return std::to_string(sq.order()) + "\n" + sq.to_text();
}

LatinSquare read_square_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_square(in);
}

void write_square_file(const std::string& path, const LatinSquare& sq) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << format_square(sq);
}

void write_catalog(std::ostream& out, const Catalog& catalog, const std::string& filter,
                   const std::string& generator) {
  out << "latsq-catalog v1\n";
  out << "order " << catalog.order << "\n";
  out << "filter " << filter << "\n";
  out << "relation " << relation_name(catalog.relation) << "\n";
  out << "generator " << generator << "\n";
  out << "classes " << catalog.entries.size() << "\n";
  out << "squares " << u128_to_string(catalog.total_squares()) << "\n";
  for (const auto& e : catalog.entries) {
    out << "class " << e.stabilizer_order << " " << u128_to_string(e.class_size());
    const auto& cells = e.representative.cells();
    for (uint8_t v : cells) out << ' ' << static_cast<int>(v) + 1;
    out << "\n";
  }
}

void write_catalog_file(const std::string& path, const Catalog& catalog,
                        const std::string& filter, const std::string& generator) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_catalog(out, catalog, filter, generator);
}

CatalogFile read_catalog(std::istream& in) {
  auto expect_key = [&](const std::string& line, const std::string& key) {
    if (line.rfind(key + " ", 0) != 0 && line != key)
      throw std::invalid_argument("expected '" + key + "' line, got: " + line);
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
  };
  CatalogFile file;
  std::string line = next_content_line(in);
  if (line != "latsq-catalog v1") throw std::invalid_argument("bad catalog magic: " + line);
  file.header.order = std::stoi(expect_key(next_content_line(in), "order"));
  file.header.filter = expect_key(next_content_line(in), "filter");
  file.header.relation = parse_relation(expect_key(next_content_line(in), "relation"));
  file.header.generator = expect_key(next_content_line(in), "generator");
  file.header.class_count = std::stoull(expect_key(next_content_line(in), "classes"));
  file.header.square_count = u128_from_string(expect_key(next_content_line(in), "squares"));

  Catalog& cat = file.catalog;
  cat.order = file.header.order;
  cat.relation = file.header.relation;
  const int n = cat.order;
  for (uint64_t i = 0; i < file.header.class_count; ++i) {
    std::istringstream rec(next_content_line(in));
    std::string tag;
    rec >> tag;
    if (tag != "class") throw std::invalid_argument("expected class record");
    CatalogEntry e;
    std::string size_text;
    rec >> e.stabilizer_order >> size_text;
    std::vector<uint8_t> cells;
    cells.reserve(static_cast<size_t>(n) * n);
    int v;
    while (rec >> v) cells.push_back(static_cast<uint8_t>(v - 1));
    if (cells.size() != static_cast<size_t>(n) * n)
      throw std::invalid_argument("class record has wrong cell count");
    e.representative = LatinSquare::from_cells(n, std::move(cells));
    e.relation = cat.relation;
    if (e.class_size() != u128_from_string(size_text))
      throw std::invalid_argument("class size does not match stabiliser order");
    cat.entries.push_back(std::move(e));
  }
  unsigned __int128 total = cat.total_squares();
  if (total != file.header.square_count)
    throw std::invalid_argument("catalog totals do not match body");
  return file;
}

CatalogFile read_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_catalog(in);
}

}  // namespace latsq
