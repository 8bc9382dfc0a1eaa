#include "latsq/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latsq/parallel.hpp"

namespace latsq {

namespace {

uint64_t psi(const Isotopism& iso) {
  CycleStructure a = CycleStructure::of(iso.row);
  if (!(a == CycleStructure::of(iso.sym))) return 0;
  uint64_t prod = 1;
  for (auto [len, mult] : a.parts()) {
    for (int k = 2; k <= mult; ++k) prod *= k;
    for (int k = 0; k < mult; ++k) prod *= len;
  }
  return prod;
}

uint64_t lambda(const Isotopism& iso) {
  if (!(CycleStructure::of(iso.row) == CycleStructure::of(iso.sym))) return 0;
  return iso.row.fixed_point_count();
}

uint64_t factorial_u64(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

uint64_t burnside_isomorphism_count(const std::vector<Isotopism>& rrs_group) {
  uint64_t sum = 0;
  for (const auto& iso : rrs_group) sum += psi(iso);
  if (sum % rrs_group.size() != 0)
    throw std::logic_error("Burnside sum not divisible by the group order");
  return sum / rrs_group.size();
}

uint64_t burnside_loop_count(const std::vector<Isotopism>& rrs_group) {
  uint64_t sum = 0;
  for (const auto& iso : rrs_group) sum += lambda(iso);
  if (sum % rrs_group.size() != 0)
    throw std::logic_error("Burnside sum not divisible by the group order");
  return sum / rrs_group.size();
}

uint64_t burnside_isomorphism_count(const LatinSquare& rep) {
  if (!is_symmetric(rep))
    throw std::invalid_argument("burnside_isomorphism_count: square not symmetric");
  return burnside_isomorphism_count(rrs_autotopism_group(rep));
}

uint64_t burnside_loop_count(const LatinSquare& rep) {
  if (!is_symmetric(rep))
    throw std::invalid_argument("burnside_loop_count: square not symmetric");
  return burnside_loop_count(rrs_autotopism_group(rep));
}

Count total_from_classes(const Catalog& catalog) {
  Count total = 0;
  unsigned __int128 acting = acting_group_order(catalog.order, catalog.relation);
  for (const auto& e : catalog.entries) {
    if (acting % e.stabilizer_order != 0)
      throw std::logic_error("stabiliser order does not divide the acting group order");
    total += acting / e.stabilizer_order;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Symmetric census.

namespace {

// Distinct primes dividing n.
std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

// Species count of an even-order symmetric census: rrs classes merge in
// species only inside Omega_n, the squares with a semiregular prime-order
// principal autotopism.
uint64_t species_from_omega(int n, uint64_t rrs_classes, int jobs) {
  Deduper omega_rrs(EquivalenceRelation::kRrsIsotopism);
  for (int p : prime_divisors(n)) {
    CycleStructure theta_cs = CycleStructure::parse(
        std::to_string(p) + (n / p > 1 ? "^" + std::to_string(n / p) : ""));
    Permutation theta = theta_cs.representative();
    for (const LatinSquare& sq :
         gen_symmetric_autotopism_screened(n, theta, theta.inverse(), Permutation(n)))
      omega_rrs.add(sq);
  }
  auto items = omega_rrs.sorted_items();
  Deduper omega_species(EquivalenceRelation::kSpecies);
  std::vector<Deduper> locals(items.size(), Deduper(EquivalenceRelation::kSpecies));
  run_tasks(jobs, static_cast<int>(items.size()), [&](int t) {
    LatinSquare rep = LatinSquare::from_cells_unchecked(
        n, std::vector<uint8_t>(items[t].first.begin(), items[t].first.end()));
    locals[t].add(rep);
  });
  for (auto& d : locals) omega_species.merge(std::move(d));
  return rrs_classes - items.size() + omega_species.class_count();
}

}  // namespace

SymmetricCensus symmetric_census(int n, SymmetricCensusMethod method, int jobs) {
  SymmetricCensus out;
  out.order = n;
  out.method = method;
  if (n == 1) {
    out.reduced_count = 1;
    out.rrs_classes = out.species = 1;
    out.isomorphism_classes = out.loop_classes = 1;
    out.trivial_classes = 1;
    return out;
  }

  if (method == SymmetricCensusMethod::kBrute) {
    if (n > 8) throw std::invalid_argument("brute symmetric census supports n <= 8");
    std::vector<Deduper> locals(symmetric_reduced_task_count(n),
                                Deduper(EquivalenceRelation::kRrsIsotopism));
    out.reduced_count = gen_symmetric_reduced_tasks(
        n, jobs, [&](int t, const LatinSquare& sq) { locals[t].add(sq); }, nullptr);
    Deduper merged(EquivalenceRelation::kRrsIsotopism);
    for (auto& d : locals) merged.merge(std::move(d));
    auto items = merged.sorted_items();
    out.rrs_classes = items.size();

    // Burnside sums and species forms per class representative.
    std::vector<uint64_t> iso_counts(items.size()), loop_counts(items.size()),
        group_orders(items.size());
    std::vector<std::string> species_keys(items.size());
    run_tasks(jobs, static_cast<int>(items.size()), [&](int t) {
      LatinSquare rep = LatinSquare::from_cells_unchecked(
          n, std::vector<uint8_t>(items[t].first.begin(), items[t].first.end()));
      auto group = rrs_autotopism_group(rep);
      group_orders[t] = group.size();
      iso_counts[t] = burnside_isomorphism_count(group);
      loop_counts[t] = burnside_loop_count(group);
      LatinSquare sp = canonical_form(rep, EquivalenceRelation::kSpecies);
      species_keys[t] = std::string(sp.cells().begin(), sp.cells().end());
    });
    std::set<std::string> species_set(species_keys.begin(), species_keys.end());
    out.species = species_set.size();
    for (size_t t = 0; t < items.size(); ++t) {
      out.isomorphism_classes += iso_counts[t];
      out.loop_classes += loop_counts[t];
      if (group_orders[t] > 1)
        ++out.nontrivial_classes;
      else
        ++out.trivial_classes;
    }
    return out;
  }

  if (n > 9) throw std::invalid_argument("autotopism symmetric census supports n <= 9");
  out.reduced_count = gen_symmetric_reduced(n, nullptr, jobs);

  // Generate the squares with each admissible nontrivial rrs-autotopism and
  // classify them under rrs-isotopism; every class found this way has a
  // nontrivial group and every nontrivial class is found.
  auto shapes = admissible_autotopism_shapes(n);
  std::map<std::string, uint64_t> global;  // canonical cells -> first-seen
  std::vector<ShapeCensus> shape_results(shapes.size());
  std::vector<std::vector<std::string>> shape_keys(shapes.size());
  run_tasks(jobs, static_cast<int>(shapes.size()), [&](int t) {
    const auto& shape = shapes[t];
    Permutation alpha = shape.alpha_rep(), gamma = shape.gamma_rep();
    std::vector<LatinSquare> survivors =
        gen_symmetric_autotopism_screened(n, alpha, alpha, gamma);
    std::set<std::string> classes;
    for (const LatinSquare& sq : survivors) {
      LatinSquare canon = canonical_form(sq, EquivalenceRelation::kRrsIsotopism);
      classes.insert(std::string(canon.cells().begin(), canon.cells().end()));
    }
    shape_results[t] = {shape.alpha, shape.gamma, survivors.size(), classes.size()};
    shape_keys[t].assign(classes.begin(), classes.end());
  });
  out.shapes = shape_results;
  for (auto& keys : shape_keys)
    for (auto& key : keys) global.emplace(key, 0);

  out.nontrivial_classes = global.size();
  std::vector<std::string> reps;
  for (auto& [key, _] : global) reps.push_back(key);
  const uint64_t nfact = factorial_u64(n);
  std::vector<uint64_t> reduced_in_class(reps.size()), iso_counts(reps.size()),
      loop_counts(reps.size());
  run_tasks(jobs, static_cast<int>(reps.size()), [&](int t) {
    LatinSquare rep = LatinSquare::from_cells_unchecked(
        n, std::vector<uint8_t>(reps[t].begin(), reps[t].end()));
    auto group = rrs_autotopism_group(rep);
    if (group.size() <= 1) throw std::logic_error("expected a nontrivial rrs group");
    if (nfact % group.size() != 0)
      throw std::logic_error("group order does not divide n!");
    reduced_in_class[t] = nfact / group.size();
    iso_counts[t] = burnside_isomorphism_count(group);
    loop_counts[t] = burnside_loop_count(group);
  });
  uint64_t reduced_nontrivial = 0;
  for (size_t t = 0; t < reps.size(); ++t) {
    reduced_nontrivial += reduced_in_class[t];
    out.isomorphism_classes += iso_counts[t];
    out.loop_classes += loop_counts[t];
  }
  if (reduced_nontrivial > out.reduced_count ||
      (out.reduced_count - reduced_nontrivial) % nfact != 0)
    throw std::logic_error("reduced counts inconsistent with the class inventory");
  out.trivial_classes = (out.reduced_count - reduced_nontrivial) / nfact;
  out.rrs_classes = out.trivial_classes + out.nontrivial_classes;
  // A trivial-group class consists of n! isomorphism classes and n loop
  // classes (psi(e,e) = n!, lambda(e,e) = n).
  out.isomorphism_classes += static_cast<Count>(out.trivial_classes) * nfact;
  out.loop_classes += static_cast<Count>(out.trivial_classes) * n;

  if (n % 2 == 1) {
    out.species = out.rrs_classes;
  } else {
    out.species = species_from_omega(n, out.rrs_classes, jobs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Category census.

CategoryCensus category_census(int n, const PropertyFilter& filter, const GenOptions& opts) {
  CategoryCensus out;
  out.order = n;
  out.catalog = gen_classes(n, filter, opts);
  out.isomorphism_classes = out.catalog.class_count();
  out.all_squares = total_from_classes(out.catalog);

  std::vector<std::string> isot_keys(out.catalog.entries.size()),
      species_keys(out.catalog.entries.size());
  run_tasks(opts.jobs, static_cast<int>(out.catalog.entries.size()), [&](int t) {
    const LatinSquare& rep = out.catalog.entries[t].representative;
    LatinSquare ic = canonical_form(rep, EquivalenceRelation::kIsotopism);
    isot_keys[t] = std::string(ic.cells().begin(), ic.cells().end());
    LatinSquare sc = canonical_form(rep, EquivalenceRelation::kSpecies);
    species_keys[t] = std::string(sc.cells().begin(), sc.cells().end());
  });
  out.isotopism_classes =
      std::set<std::string>(isot_keys.begin(), isot_keys.end()).size();
  out.species = std::set<std::string>(species_keys.begin(), species_keys.end()).size();
  return out;
}

// ---------------------------------------------------------------------------
// Identity-derived rows.

CensusRow derived_census(int n, const PropertyFilter& filter, int jobs) {
  CensusRow row;
  row.order = n;
  row.category = filter.str();
  const Symmetry sym = filter.symmetry();
  auto fact = [&](int m) { return static_cast<Count>(factorial_u128(m)); };

  if (sym == Symmetry::kSymmetric) {
    if (filter.unipotent() && filter.reduced()) {
      // prolongation pairs these with the idempotent (equally, reduced)
      // symmetric squares one order down; isomorphism classes match the
      // species one order down
      if (n % 2 == 1) {
        row.all_squares = 0;
        row.provenance = "odd order: unipotent symmetric squares do not exist";
        return row;
      }
      SymmetricCensus base = symmetric_census(n - 1, SymmetricCensusMethod::kAutotopism, jobs);
      row.all_squares = base.reduced_count;
      row.isomorphism = base.species;
      row.rrs = std::nullopt;
      row.provenance = "prolongation from order " + std::to_string(n - 1);
      return row;
    }
    if (filter.unipotent()) {
      if (n % 2 == 1) {
        row.all_squares = 0;
        row.provenance = "odd order: unipotent symmetric squares do not exist";
        return row;
      }
      SymmetricCensus base = symmetric_census(n - 1, SymmetricCensusMethod::kAutotopism, jobs);
      row.isomorphism = base.isomorphism_classes;
      row.all_squares = fact(n) * base.reduced_count;
      row.provenance = "prolongation from order " + std::to_string(n - 1) +
                       "; total = n! * reduced(n-1)";
      return row;
    }
    if (filter.idempotent()) {
      if (n % 2 == 0) {
        row.all_squares = 0;
        row.provenance = "even order: idempotent symmetric squares do not exist";
        return row;
      }
      SymmetricCensus base = symmetric_census(n, SymmetricCensusMethod::kAutotopism, jobs);
      row.isomorphism = base.species;
      row.rrs = base.species;
      row.isotopism = base.species;
      row.species = base.species;
      row.all_squares = base.reduced_count;
      row.provenance = "diagonal renaming bijection with reduced symmetric squares";
      return row;
    }
    if (filter.diagonal() && !filter.reduced()) {
      if (n % 2 == 0) {
        row.all_squares = 0;
        row.provenance = "even order: diagonal symmetric squares do not exist";
        return row;
      }
      SymmetricCensus base = symmetric_census(n, SymmetricCensusMethod::kAutotopism, jobs);
      row.isomorphism = base.isomorphism_classes;
      row.rrs = base.rrs_classes;
      row.isotopism = base.species;
      row.species = base.species;
      row.all_squares = fact(n) * base.reduced_count;
      row.provenance = "odd-order symmetric squares are diagonal";
      return row;
    }
    // plain or reduced
    SymmetricCensus base = symmetric_census(n, SymmetricCensusMethod::kAutotopism, jobs);
    row.rrs = base.rrs_classes;
    row.isotopism = base.species;
    row.species = base.species;
    if (filter.reduced()) {
      row.isomorphism = base.loop_classes;
      row.all_squares = base.reduced_count;
      row.provenance = "loop counts via the fixed-point Burnside sum";
    } else {
      row.isomorphism = base.isomorphism_classes;
      row.all_squares = fact(n) * base.reduced_count;
      row.provenance = "total = n! * reduced; isomorphism via the Burnside sum";
    }
    return row;
  }

  if (sym == Symmetry::kSemisymmetric && filter.unipotent()) {
    CategoryCensus base = category_census(
        n, PropertyFilter::make(Symmetry::kSemisymmetric, true), {.jobs = jobs});
    row.isomorphism = base.isomorphism_classes;
    row.isotopism = base.isotopism_classes;
    row.species = base.species;
    row.all_squares = base.all_squares;  // catalog counts unipotent squares
    row.provenance = "unipotent semisymmetric squares are the loops; total = n * reduced";
    return row;
  }

  if (sym == Symmetry::kTotallySymmetric && (filter.unipotent() || filter.reduced())) {
    if (n % 2 == 1) {
      row.all_squares = 0;
      row.provenance = "odd order: unipotent totally symmetric squares do not exist";
      return row;
    }
    CategoryCensus base =
        category_census(n - 1, PropertyFilter::make(Symmetry::kTotallySymmetric, false,
                                                    false, true),
                        {.jobs = jobs});
    row.isomorphism = base.species;
    row.isotopism = base.species;
    row.species = base.species;
    if (filter.unipotent() && !filter.reduced())
      row.all_squares = static_cast<Count>(n) * base.all_squares;
    else
      row.all_squares = base.all_squares;
    row.provenance = "prolongation from idempotent order " + std::to_string(n - 1);
    return row;
  }

  throw std::invalid_argument("no derivation path for " + filter.str());
}

// ---------------------------------------------------------------------------
// Table emitters.

namespace {

std::string count_str(Count v) { return u128_to_string(v); }

struct TableDef {
  const char* name;
  int min_order;
  int max_order;
};

constexpr TableDef kTables[] = {
    {"tabsym", 2, 9},   {"comloop", 2, 8}, {"agopts", 2, 9},  {"semi", 2, 9},
    {"diag", 2, 9},     {"idem", 3, 9},    {"semiloop", 2, 10}, {"totsym", 2, 12},
    {"unipsym", 2, 8},  {"sts", 3, 15},
};

const TableDef& table_def(const std::string& name) {
  for (const auto& def : kTables)
    if (name == def.name) return def;
  throw std::invalid_argument("unknown table: " + name);
}

TableResult semisym_table(const std::string& name, int max_order, int jobs) {
  TableResult out;
  out.name = name;
  out.columns = {"order", "isomorphism_classes", "isotopism_classes", "species",
                 "all_squares"};
  for (int n = (name == "idem" ? 3 : 2); n <= max_order; ++n) {
    if (name == "idem" && n % 3 == 2) continue;      // excluded orders
    if (name == "semiloop" && n % 3 == 0) continue;  // excluded orders
    PropertyFilter f = PropertyFilter::make(
        Symmetry::kSemisymmetric, false, name == "diag", name == "idem",
        name == "semiloop");
    CategoryCensus c = category_census(n, f, {.jobs = jobs});
    Count all = c.all_squares;
    if (name == "semiloop") {
      // the table reports reduced squares; the catalog counts unipotent ones
      if (all % n != 0) throw std::logic_error("unipotent total not divisible by n");
      all /= n;
    }
    out.rows.push_back({std::to_string(n), count_str(c.isomorphism_classes),
                        count_str(c.isotopism_classes), count_str(c.species),
                        count_str(all)});
  }
  return out;
}

}  // namespace

std::vector<std::string> table_names() {
  std::vector<std::string> out;
  for (const auto& def : kTables) out.push_back(def.name);
  return out;
}

int table_max_order(const std::string& name) { return table_def(name).max_order; }

TableResult emit_table(const std::string& name, int max_order, int jobs) {
  const TableDef& def = table_def(name);
  if (max_order < def.min_order || max_order > def.max_order)
    throw std::invalid_argument("table " + name + " supports orders " +
                                std::to_string(def.min_order) + ".." +
                                std::to_string(def.max_order));
  TableResult out;
  out.name = name;

  if (name == "tabsym") {
    out.columns = {"order", "rrs_isotopism_classes", "species", "reduced"};
    for (int n = 2; n <= max_order; ++n) {
      SymmetricCensus c = symmetric_census(n, SymmetricCensusMethod::kAutotopism, jobs);
      out.rows.push_back({std::to_string(n), std::to_string(c.rrs_classes),
                          std::to_string(c.species), std::to_string(c.reduced_count)});
    }
    return out;
  }
  if (name == "comloop") {
    out.columns = {"order", "isomorphism_classes", "loops"};
    for (int n = 2; n <= max_order; ++n) {
      SymmetricCensus c = symmetric_census(n, SymmetricCensusMethod::kAutotopism, jobs);
      out.rows.push_back({std::to_string(n), count_str(c.isomorphism_classes),
                          count_str(c.loop_classes)});
    }
    return out;
  }
  if (name == "agopts") {
    out.columns = {"order", "alpha", "gamma", "ls"};
    for (int n = 2; n <= max_order; ++n) {
      SymmetricCensus c = symmetric_census(n, SymmetricCensusMethod::kAutotopism, jobs);
      for (const auto& shape : c.shapes)
        out.rows.push_back({std::to_string(n), shape.alpha.str(), shape.gamma.str(),
                            std::to_string(shape.rrs_classes)});
    }
    return out;
  }
  if (name == "semi" || name == "diag" || name == "idem" || name == "semiloop")
    return semisym_table(name, max_order, jobs);
  if (name == "totsym") {
    out.columns = {"order", "isomorphism_classes", "species", "all_squares"};
    for (int n = 2; n <= max_order; ++n) {
      CategoryCensus c =
          category_census(n, PropertyFilter::make(Symmetry::kTotallySymmetric), {.jobs = jobs});
      out.rows.push_back({std::to_string(n), count_str(c.isomorphism_classes),
                          count_str(c.species), count_str(c.all_squares)});
    }
    return out;
  }
  if (name == "unipsym") {
    out.columns = {"order", "isomorphism_classes", "rrs_isotopism_classes", "species"};
    for (int n = 2; n <= max_order; n += 2) {
      // isomorphism refines the coarser relations, so they reclassify the
      // isomorphism-class representatives
      Deduper iso(EquivalenceRelation::kIsomorphism);
      gen_reduced_unipotent_symmetric(n, [&](const LatinSquare& sq) { iso.add(sq); });
      Deduper rrs(EquivalenceRelation::kRrsIsotopism);
      Deduper species(EquivalenceRelation::kSpecies);
      for (const auto& [cells, count] : iso.sorted_items()) {
        LatinSquare rep = LatinSquare::from_cells_unchecked(
            n, std::vector<uint8_t>(cells.begin(), cells.end()));
        rrs.add(rep);
        species.add(rep);
      }
      out.rows.push_back({std::to_string(n), std::to_string(iso.class_count()),
                          std::to_string(rrs.class_count()),
                          std::to_string(species.class_count())});
    }
    return out;
  }
  if (name == "sts") {
    out.columns = {"order", "species", "all_squares"};
    for (int n = 3; n <= max_order; ++n) {
      if (n % 6 != 1 && n % 6 != 3) continue;  // no triple systems otherwise
      CategoryCensus c = category_census(
          n, PropertyFilter::make(Symmetry::kTotallySymmetric, false, false, true),
          {.jobs = jobs});
      out.rows.push_back(
          {std::to_string(n), count_str(c.species), count_str(c.all_squares)});
    }
    return out;
  }
  throw std::logic_error("unhandled table");
}

std::string table_csv(const TableResult& table) {
  std::ostringstream out;
  for (size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

std::string table_json(const TableResult& table) {
  std::ostringstream out;
  out << "{\"table\":\"" << table.name << "\",\"rows\":[";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? "," : "") << "{";
    for (size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << "\"" << table.columns[i] << "\":";
      out << "\"" << table.rows[r][i] << "\"";  // counts stay decimal strings
    }
    out << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace latsq
