// Copyright 2026 The Regulith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regulith/cli.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "regulith/decompose.h"
#include "regulith/design_io.h"
#include "regulith/pb_catalog.h"
#include "regulith/polynomial.h"
#include "regulith/regular.h"

namespace regulith {

namespace {

using Json = nlohmann::ordered_json;

// Input problems that map to kExitInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string FractionString(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string MonomialName(int m, Mask alpha) {
  return alpha == 0 ? "1" : "X" + MultiIndex(m, alpha).Label();
}

Json FactorList(Mask alpha, int m) {
  Json out = Json::array();
  for (int j = 0; j < m; ++j) {
    if ((alpha >> j) & 1) out.push_back(j + 1);
  }
  return out;
}

Json LevelsJson(const Point& p) { return Json(p.Levels()); }

Json PolynomialJson(const CountingPolynomial& f) {
  Json terms = Json::array();
  for (Mask a : f.Support()) {
    terms.push_back({{"monomial", MonomialName(f.factors(), a)},
                     {"factors", FactorList(a, f.factors())},
                     {"coefficient", FractionString(f.Coefficient(a))}});
  }
  return {{"factors", f.factors()},
          {"denominator", f.denominator()},
          {"text", f.ToString()},
          {"terms", std::move(terms)}};
}

Json SpecJson(const RegularSpec& r) {
  Json gens = Json::array();
  for (int j = 0; j < r.rank(); ++j) {
    gens.push_back({{"monomial", MonomialName(r.factors(), r.generators()[j])},
                    {"factors", FactorList(r.generators()[j], r.factors())},
                    {"sign", r.signs()[j]}});
  }
  Json points = Json::array();
  for (const Point& p : PointsOf(r).Points()) points.push_back(LevelsJson(p));
  return {{"indicator", r.ToString()},
          {"runs", r.size()},
          {"generators", std::move(gens)},
          {"points", std::move(points)}};
}

std::string LevelsText(const Point& p) {
  std::ostringstream out;
  out << "(";
  for (int j = 0; j < p.factors(); ++j) {
    if (j) out << ",";
    out << (p.Level(j) > 0 ? "+1" : "-1");
  }
  out << ")";
  return out.str();
}

void PrintSpecText(std::ostream& out, const RegularSpec& r,
                   const std::string& indent) {
  out << indent << r.ToString() << "\n" << indent << "  runs:";
  for (const Point& p : PointsOf(r).Points()) out << " " << LevelsText(p);
  out << "\n";
}

struct LoadedDesign {
  Fraction fraction;
  CountingPolynomial polynomial;
};

LoadedDesign Load(const std::string& path) {
  const DesignTable table = ReadDesignFile(path);
  Fraction f = table.ToFraction();
  CountingPolynomial poly = FromFraction(f);
  return {std::move(f), std::move(poly)};
}

const CountingPolynomial& RequireIndicator(const LoadedDesign& d) {
  if (!d.fraction.IsSet()) {
    throw InputError(
        "the design has replicated runs; this command needs a 0/1 indicator");
  }
  return d.polynomial;
}

int DimensionForSize(const LoadedDesign& d, std::int64_t size) {
  if (size <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(size))) {
    throw InputError("--size must be a power of two");
  }
  if (size > d.fraction.RunCount()) {
    throw InputError("--size exceeds the run count");
  }
  return std::bit_width(static_cast<std::uint64_t>(size)) - 1;
}

// ---------------------------------------------------------------------------

int CmdAnalyze(const std::string& path, bool json, std::ostream& out) {
  const LoadedDesign d = Load(path);
  const CountingPolynomial& f = d.polynomial;
  const bool indicator = IsIndicator(f);
  std::optional<int> strength;
  std::optional<RegularSpec> regular;
  if (indicator) {
    strength = OrthogonalStrength(f);
    regular = RegularityOf(f);
  }
  if (json) {
    Json doc = {{"factors", f.factors()},
                {"runs", d.fraction.RunCount()},
                {"distinct_runs", d.fraction.DistinctRunCount()},
                {"indicator", indicator},
                {"polynomial", PolynomialJson(f)}};
    doc["strength"] = strength ? Json(*strength) : Json(nullptr);
    doc["regular"] = indicator ? Json(regular.has_value()) : Json(nullptr);
    doc["regular_spec"] = regular ? SpecJson(*regular) : Json(nullptr);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "factors: " << f.factors() << "\n"
      << "runs: " << d.fraction.RunCount() << "\n"
      << "distinct runs: " << d.fraction.DistinctRunCount() << "\n"
      << (indicator ? "indicator polynomial: " : "counting polynomial: ")
      << f.ToString() << "\n";
  if (!indicator) {
    out << "strength: n/a (replicated runs)\n"
        << "regular: n/a (replicated runs)\n";
    return kExitOk;
  }
  out << "strength: " << *strength << "\n";
  if (regular) {
    out << "regular: yes, " << regular->rank() << " generating equation"
        << (regular->rank() == 1 ? "" : "s") << "\n";
    PrintSpecText(out, *regular, "  ");
  } else {
    out << "regular: no\n";
  }
  return kExitOk;
}

int CmdSubfractions(const std::string& path, std::int64_t size, bool json,
                    std::ostream& out) {
  const LoadedDesign d = Load(path);
  const CountingPolynomial& f = RequireIndicator(d);
  const int dim = DimensionForSize(d, size);
  const std::vector<RegularSpec> found =
      FindRegularSubfractions(f, f.factors() - dim, SearchStrategy::kAuto);
  if (json) {
    Json list = Json::array();
    for (const auto& r : found) list.push_back(SpecJson(r));
    out << Json{{"size", size}, {"count", found.size()}, {"subfractions", list}}
               .dump(2)
        << "\n";
  } else {
    out << found.size() << " regular subfraction(s) of size " << size << "\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
      out << "[" << i + 1 << "]\n";
      PrintSpecText(out, found[i], "  ");
    }
  }
  return found.empty() ? kExitEmpty : kExitOk;
}

Json DecompositionJson(const Decomposition& d) {
  Json parts = Json::array();
  for (const auto& r : d.parts) parts.push_back(SpecJson(r));
  return {{"parts", std::move(parts)}};
}

void PrintDecompositionText(std::ostream& out, const Decomposition& d) {
  for (const auto& r : d.parts) PrintSpecText(out, r, "  ");
}

int CmdDecompose(const std::string& path, std::optional<std::int64_t> size,
                 bool json, std::ostream& out) {
  const LoadedDesign d = Load(path);
  const CountingPolynomial& f = RequireIndicator(d);
  if (!size) {
    const Decomposition greedy = DecomposeGreedy(f);
    if (json) {
      out << Json{{"mode", "greedy"}, {"decomposition", DecompositionJson(greedy)}}
                 .dump(2)
          << "\n";
    } else {
      out << "greedy decomposition into " << greedy.parts.size()
          << " regular fraction(s)\n";
      PrintDecompositionText(out, greedy);
    }
    return kExitOk;
  }
  DimensionForSize(d, *size);
  if (d.fraction.RunCount() % *size != 0) {
    throw InputError("--size does not divide the run count");
  }
  const std::vector<Decomposition> all = DecomposeAll(f, *size);
  if (json) {
    Json list = Json::array();
    for (const auto& dec : all) list.push_back(DecompositionJson(dec));
    out << Json{{"mode", "fixed"},
                {"size", *size},
                {"count", all.size()},
                {"decompositions", list}}
               .dump(2)
        << "\n";
  } else {
    out << all.size() << " decomposition(s) into regular fractions of size "
        << *size << "\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      out << "[" << i + 1 << "]\n";
      PrintDecompositionText(out, all[i]);
    }
  }
  return all.empty() ? kExitEmpty : kExitOk;
}

int CmdPbCols(const std::string& labels, bool json, std::ostream& out) {
  std::vector<int> columns;
  try {
    columns = ParsePbColumns(labels);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const PBDesign design = BuildPb12();
  DesignTable table;
  for (int c : columns) table.header.push_back(std::string(1, 'A' + c));
  Fraction projected = Project(design, columns);
  for (const Point& row : design.rows) {
    Mask bits = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if ((row.bits() >> columns[j]) & 1) bits |= Mask{1} << j;
    }
    table.runs.emplace_back(static_cast<int>(columns.size()), bits);
  }
  if (json) {
    Json runs = Json::array();
    for (const Point& p : table.runs) runs.push_back(LevelsJson(p));
    out << Json{{"columns", PbColumnLabels(columns)},
                {"runs", std::move(runs)},
                {"distinct_runs", projected.DistinctRunCount()}}
               .dump(2)
        << "\n";
  } else {
    WriteDesign(out, table);
  }
  return kExitOk;
}

int CmdPbClassify(bool json, std::ostream& out) {
  const std::vector<ProjectionClass> classes = ClassifyProjections(BuildPb12());
  int twelve = 0, eleven = 0, total = 0;
  for (const auto& c : classes) {
    total += c.member_count;
    if (c.distinct_run_count == 12) ++twelve;
    if (c.distinct_run_count == 11) ++eleven;
  }
  if (json) {
    Json list = Json::array();
    for (const auto& c : classes) {
      Json members = Json::array();
      for (const auto& cols : c.members) members.push_back(PbColumnLabels(cols));
      list.push_back({{"id", c.class_id},
                      {"members", c.member_count},
                      {"distinct_runs", c.distinct_run_count},
                      {"column_sets", std::move(members)}});
    }
    out << Json{{"projections", total},
                {"classes", classes.size()},
                {"classes_with_12_runs", twelve},
                {"classes_with_11_runs", eleven},
                {"table", std::move(list)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "projections: " << total << "\n"
      << "classes: " << classes.size() << " (" << twelve
      << " with 12 distinct runs, " << eleven << " with 11)\n"
      << "id\tmembers\tdistinct_runs\tfirst_columns\n";
  for (const auto& c : classes) {
    out << c.class_id << "\t" << c.member_count << "\t" << c.distinct_run_count
        << "\t" << PbColumnLabels(c.members.front()) << "\n";
  }
  return kExitOk;
}

int CmdPbCatalog(bool json, std::ostream& out) {
  const std::vector<CatalogEntry> catalog = BuildStrength2Catalog();
  if (json) {
    Json list = Json::array();
    for (const auto& e : catalog) {
      Json parts = Json::array();
      for (const auto& r : e.parts) parts.push_back(SpecJson(r));
      list.push_back({{"pattern", e.pattern_index + 1},
                      {"signs", e.signs},
                      {"strength", OrthogonalStrength(e.indicator)},
                      {"indicator", PolynomialJson(e.indicator)},
                      {"parts", std::move(parts)}});
    }
    out << Json{{"count", catalog.size()}, {"members", std::move(list)}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << catalog.size() << " distinct strength-2 indicator functions\n";
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& e = catalog[i];
    out << "[" << i + 1 << "] pattern " << e.pattern_index + 1 << " signs (";
    for (int j = 0; j < 6; ++j) out << (j ? "," : "") << (e.signs[j] > 0 ? "+" : "-");
    out << "): " << e.indicator.ToString() << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Indicator polynomials, regular subfractions and "
               "decompositions of two-level fractional factorial designs"};
  app.name(args.empty() ? "regulith" : args[0]);
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Polynomial, strength, regularity");
  analyze->add_option("file", path, "Design CSV")->required();
  add_format(analyze);

  std::int64_t size = 0;
  auto* subfractions =
      app.add_subcommand("subfractions", "Regular fractions of a given size inside a design");
  subfractions->add_option("file", path, "Design CSV")->required();
  subfractions->add_option("--size", size, "Runs per regular fraction")->required();
  add_format(subfractions);

  bool greedy = false;
  auto* decompose =
      app.add_subcommand("decompose", "Partitions into disjoint regular fractions");
  decompose->add_option("file", path, "Design CSV")->required();
  auto* size_opt =
      decompose->add_option("--size", size, "Runs per part (all partitions)");
  auto* greedy_opt = decompose->add_flag("--greedy", greedy, "Greedy largest-first");
  size_opt->excludes(greedy_opt);
  add_format(decompose);

  std::string cols;
  bool classify = false, catalog = false;
  auto* pb = app.add_subcommand("pb", "12-run Plackett-Burman design tools");
  auto* cols_opt = pb->add_option("--cols", cols, "Project onto columns, e.g. A,B,F,H,I");
  auto* classify_opt = pb->add_flag("--classify", classify, "Classify 5-column projections");
  auto* catalog_opt = pb->add_flag("--oa-catalog", catalog, "Strength-2 OA catalog");
  cols_opt->excludes(classify_opt)->excludes(catalog_opt);
  classify_opt->excludes(catalog_opt);
  add_format(pb);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1),
                                     args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const bool json = format == "json";
  try {
    if (analyze->parsed()) return CmdAnalyze(path, json, out);
    if (subfractions->parsed()) return CmdSubfractions(path, size, json, out);
    if (decompose->parsed()) {
      if (!greedy && size_opt->count() == 0) {
        throw InputError("decompose needs --size N or --greedy");
      }
      return CmdDecompose(path,
                          greedy ? std::nullopt : std::optional<std::int64_t>(size),
                          json, out);
    }
    if (pb->parsed()) {
      if (cols_opt->count() > 0) return CmdPbCols(cols, json, out);
      if (classify) return CmdPbClassify(json, out);
      if (catalog) return CmdPbCatalog(json, out);
      throw InputError("pb needs one of --cols, --classify, --oa-catalog");
    }
  } catch (const DesignParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace regulith
