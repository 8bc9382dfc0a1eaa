#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "latsq/canonical.hpp"
#include "latsq/latin_square.hpp"

namespace latsq {

// Square text format: first line the order n, then n lines of n space
// separated symbols in 1..n. Lines starting with '#' are comments. The parser
// rejects non-Latin input with a diagnostic naming the violated row or column.
LatinSquare parse_square(std::istream& in);
LatinSquare parse_square_text(const std::string& text);
std::string format_square(const LatinSquare& sq);  // print . parse = identity

LatinSquare read_square_file(const std::string& path);
void write_square_file(const std::string& path, const LatinSquare& sq);

// Catalog files are line based and deterministic:
//   latsq-catalog v1
//   order N
//   filter <name>
//   relation <name>
//   generator <free-form parameters>
//   classes <count>
//   squares <decimal total>
//   class <stabiliser order> <class size> <n*n symbols, row-major, 1-based>
// The body is sorted by representative; totals match the body aggregates and
// all counts are decimal strings.
struct CatalogFileHeader {
  int order = 0;
  std::string filter;
  EquivalenceRelation relation = EquivalenceRelation::kIsomorphism;
  std::string generator;
  uint64_t class_count = 0;
  unsigned __int128 square_count = 0;
};

struct CatalogFile {
  CatalogFileHeader header;
  Catalog catalog;
};

void write_catalog(std::ostream& out, const Catalog& catalog, const std::string& filter,
                   const std::string& generator);
void write_catalog_file(const std::string& path, const Catalog& catalog,
                        const std::string& filter, const std::string& generator);
CatalogFile read_catalog(std::istream& in);
CatalogFile read_catalog_file(const std::string& path);

}  // namespace latsq
