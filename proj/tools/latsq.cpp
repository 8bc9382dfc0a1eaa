// Command-line driver: enumerate catalogs of Latin squares with conjugate
// symmetry, reclassify them under coarser equivalences, emit census tables,
// and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 runtime
// failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "latsq/catalog_io.hpp"
#include "latsq/census.hpp"
#include "latsq/verify.hpp"

using namespace latsq;

namespace {

PropertyFilter filter_from(const std::string& symmetry, const std::vector<std::string>& shapes) {
  bool reduced = false, diagonal = false, idempotent = false, unipotent = false;
  for (const auto& s : shapes) {
    if (s == "reduced") reduced = true;
    else if (s == "diagonal") diagonal = true;
    else if (s == "idempotent") idempotent = true;
    else if (s == "unipotent") unipotent = true;
    else throw CLI::ValidationError("--shape", "unknown shape: " + s);
  }
  return PropertyFilter::make(parse_symmetry(symmetry), reduced, diagonal, idempotent,
                              unipotent);
}

GenOptions gen_options(int jobs, int screen_depth, const std::string& checkpoint) {
  GenOptions opts;
  opts.jobs = jobs;
  opts.checkpoint_path = checkpoint;
  if (screen_depth == 0) {
    opts.no_screening = true;
  } else if (screen_depth > 0) {
    for (int r = 0; r < screen_depth; ++r) opts.screen_rows.push_back(r);
  }
  return opts;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census and verification of Latin squares with conjugate symmetry"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "write a catalog of class representatives");
  int order = 0, jobs = 1, screen_depth = -1;
  std::string symmetry, out_path, checkpoint;
  std::vector<std::string> shapes;
  bool raw = false;
  enumerate->add_option("--order", order, "square order")->required();
  enumerate->add_option("--symmetry", symmetry, "symmetric|semisymmetric|totally-symmetric")
      ->required();
  enumerate->add_option("--shape", shapes, "reduced|diagonal|idempotent|unipotent");
  enumerate->add_option("--out", out_path, "output file (default stdout)");
  enumerate->add_flag("--raw", raw, "stream raw squares instead of a catalog");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--screen-depth", screen_depth,
                        "rows screened for isomorphs (0 = none, -1 = default)");
  enumerate->add_option("--checkpoint", checkpoint, "resumable per-seed state file");

  // classify
  auto* classify = app.add_subcommand("classify", "merge a catalog under a coarser relation");
  std::string in_path, relation_name_arg, classify_out;
  classify->add_option("--in", in_path, "input catalog")->required();
  classify->add_option("--relation", relation_name_arg, "target relation")->required();
  classify->add_option("--out", classify_out, "output file (default stdout)");

  // table
  auto* table = app.add_subcommand("table", "emit a census table");
  std::string table_name, format = "csv";
  int max_order = 0;
  int table_jobs = 1;
  table->add_option("--name", table_name, "table name")->required();
  table->add_option("--max-order", max_order, "largest order to compute")->required();
  table->add_option("--format", format, "csv|json");
  table->add_option("--jobs", table_jobs, "worker threads");
  std::string table_out;
  table->add_option("--out", table_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  bool json = false;
  int verify_jobs = 1;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_flag("--json", json, "structured output");
  verify->add_option("--jobs", verify_jobs, "worker threads");

  // count
  auto* count = app.add_subcommand("count", "census counts for one category");
  int count_order = 0, count_jobs = 1;
  std::string count_symmetry;
  std::vector<std::string> count_shapes;
  count->add_option("--order", count_order, "square order")->required();
  count->add_option("--symmetry", count_symmetry, "category symmetry")->required();
  count->add_option("--shape", count_shapes, "reduced|diagonal|idempotent|unipotent");
  count->add_option("--jobs", count_jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) {
      PropertyFilter filter = filter_from(symmetry, shapes);
      GenOptions opts = gen_options(jobs, screen_depth, checkpoint);
      std::ofstream file;
      std::ostream& out = open_out(file, out_path);
      if (raw) {
        uint64_t streamed = 0;
        if (filter.symmetry() == Symmetry::kSymmetric && filter.reduced()) {
          gen_symmetric_reduced(order, [&](const LatinSquare& sq) {
            if (filter.matches(sq)) {
              out << format_square(sq) << "\n";
              ++streamed;
            }
          });
        } else {
          opts.raw_emit = [&](const LatinSquare& sq) {
            out << format_square(sq) << "\n";
            ++streamed;
          };
          gen_classes(order, filter, opts);
        }
        std::cerr << streamed << " squares\n";
        return 0;
      }
      Catalog cat = gen_classes(order, filter, opts);
      write_catalog(out, cat, filter.str(),
                    "enumerate order=" + std::to_string(order) + " screen-depth=" +
                        std::to_string(screen_depth));
      std::cerr << cat.class_count() << " classes\n";
      return 0;
    }

    if (*classify) {
      CatalogFile file = read_catalog_file(in_path);
      EquivalenceRelation target = parse_relation(relation_name_arg);
      if (!relation_refines(file.catalog.relation, target))
        throw std::invalid_argument("input relation " +
                                    relation_name(file.catalog.relation) +
                                    " is not finer than " + relation_name(target));
      Deduper dedup(target);
      for (const auto& e : file.catalog.entries)
        dedup.add_canonical(canonical_form(e.representative, target), e.stream_count);
      Catalog merged = dedup.finish(file.catalog.order);
      std::ofstream out_file;
      std::ostream& out = open_out(out_file, classify_out);
      write_catalog(out, merged, file.header.filter,
                    "classify from=" + relation_name(file.catalog.relation));
      std::cerr << merged.class_count() << " classes\n";
      return 0;
    }

    if (*table) {
      TableResult result = emit_table(table_name, max_order, table_jobs);
      std::ofstream out_file;
      std::ostream& out = open_out(out_file, table_out);
      if (format == "csv")
        out << table_csv(result);
      else if (format == "json")
        out << table_json(result) << "\n";
      else
        throw std::invalid_argument("unknown format: " + format);
      return 0;
    }

    if (*verify) {
      std::vector<std::string> names =
          suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      for (const auto& name : names) {
        VerifyReport report = run_verify_suite(name, verify_jobs);
        if (json)
          std::cout << report.to_json() << "\n";
        else
          std::cout << report.to_text();
        all_ok = all_ok && report.all_passed();
      }
      return all_ok ? 0 : 1;
    }

    if (*count) {
      PropertyFilter filter = filter_from(count_symmetry, count_shapes);
      if (filter.symmetry() == Symmetry::kSymmetric && !filter.reduced() &&
          !filter.diagonal() && !filter.idempotent() && !filter.unipotent()) {
        SymmetricCensus c =
            symmetric_census(count_order, SymmetricCensusMethod::kAutotopism, count_jobs);
        std::cout << "order=" << c.order << " reduced=" << c.reduced_count
                  << " rrs_isotopism_classes=" << c.rrs_classes << " species=" << c.species
                  << " isomorphism_classes=" << u128_to_string(c.isomorphism_classes)
                  << " loops=" << u128_to_string(c.loop_classes) << "\n";
        return 0;
      }
      GenOptions opts;
      opts.jobs = count_jobs;
      CategoryCensus c = category_census(count_order, filter, opts);
      std::cout << "order=" << c.order << " category=" << filter.str()
                << " isomorphism_classes=" << c.isomorphism_classes
                << " isotopism_classes=" << c.isotopism_classes << " species=" << c.species
                << " all_squares=" << u128_to_string(c.all_squares) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
