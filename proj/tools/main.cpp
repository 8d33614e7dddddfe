#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidsurf/abelian.hpp"
#include "braidsurf/braid.hpp"
#include "braidsurf/cover.hpp"
#include "braidsurf/factorization.hpp"
#include "braidsurf/finite_group.hpp"
#include "braidsurf/free_word.hpp"
#include "braidsurf/presentation.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace braidsurf;

constexpr const char* kToolVersion = "0.1.0";
constexpr int kReportSchema = 1;
constexpr long long kDefaultEnumerateMax = 100000;

// The two reference factorizations the variant family is built from.
constexpr const char* kBaseText1 =
    "strands 4\n"
    "band (C C b) a\n"
    "band () b\n"
    "band (a c c c) b\n"
    "band (a c c c c c B) a\n"
    "band () c\n"
    "band () c\n"
    "band (a a a) b\n";
constexpr const char* kBaseText2 =
    "strands 4\n"
    "band () b\n"
    "band (a c) b\n"
    "band (a c) b\n"
    "band (a c a c) b\n"
    "band (a c a c) b\n"
    "band (a c a c a c) b\n"
    "band (a a a) b\n";

json make_report(const std::string& command, json inputs, json result) {
  json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["result"] = std::move(result);
  report["versions"] = {{"braidsurf", kToolVersion}, {"report_schema", kReportSchema}};
  return report;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json invariants_json(const Factorization& f) {
  SurfaceInvariants inv = invariants(f);
  json j;
  j["strands"] = inv.strands;
  j["bands"] = inv.band_count;
  j["euler_characteristic"] = inv.euler_characteristic;
  j["connected"] = inv.connected;
  j["boundary_components"] = inv.boundary_components;
  if (inv.genus)
    j["genus"] = *inv.genus;
  else
    j["genus"] = nullptr;
  std::vector<std::string> trans;
  for (const Band& b : f.bands()) trans.push_back(band_transposition(b).cycle_string());
  j["transpositions"] = trans;
  return j;
}

void print_invariants(const json& j) {
  std::cout << "strands: " << j["strands"] << "\n";
  std::cout << "bands: " << j["bands"] << "\n";
  std::cout << "euler characteristic: " << j["euler_characteristic"] << "\n";
  std::cout << "connected: " << (j["connected"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "boundary components: " << j["boundary_components"] << "\n";
  if (j["genus"].is_null())
    std::cout << "genus: undefined (disconnected)\n";
  else
    std::cout << "genus: " << j["genus"] << "\n";
  std::cout << "transpositions:";
  for (const auto& t : j["transpositions"]) std::cout << " " << t.get<std::string>();
  std::cout << "\n";
}

json counts_json(const Fingerprint& fp) {
  json arr = json::array();
  for (const auto& [label, count] : fp.counts) arr.push_back({{"group", label}, {"homs", count}});
  return arr;
}

void print_counts(const Fingerprint& fp, const std::string& indent = "") {
  for (const auto& [label, count] : fp.counts)
    std::cout << indent << label << ": " << count << "\n";
}

int cmd_invariants(const std::string& file, bool as_json) {
  Factorization f = read_factorization_file(file);
  json result = invariants_json(f);
  if (as_json)
    emit(make_report("invariants", {{"file", file}}, result));
  else
    print_invariants(result);
  return 0;
}

int cmd_equal(const std::string& file1, const std::string& file2, bool as_json) {
  Factorization f1 = read_factorization_file(file1);
  Factorization f2 = read_factorization_file(file2);
  const bool same = braid_equal(product_word(f1), product_word(f2));
  if (as_json)
    emit(make_report("equal", {{"file1", file1}, {"file2", file2}},
                     {{"same_braid", same}}));
  else
    std::cout << "same braid: " << (same ? "yes" : "no") << "\n";
  return same ? 0 : 10;
}

int cmd_pi1(const std::string& file, bool simplify, bool as_json) {
  Factorization f = read_factorization_file(file);
  Presentation p = complement_presentation(f);
  if (simplify) p = tietze_simplify(p);
  json result;
  result["generators"] = p.generators();
  result["relators"] = relator_strings(p);
  if (as_json) {
    emit(make_report("pi1", {{"file", file}, {"simplify", simplify}}, result));
  } else {
    std::cout << "generators: " << p.generators() << "\n";
    std::cout << "relators: " << p.relator_count() << "\n";
    for (const std::string& r : relator_strings(p)) std::cout << "  " << r << "\n";
  }
  return 0;
}

int cmd_fingerprint(const std::string& file, const std::string& panel_spec, bool as_json) {
  Factorization f = read_factorization_file(file);
  std::vector<FiniteGroup> panel = parse_panel(panel_spec);
  Fingerprint fp = fingerprint(complement_presentation(f), panel);
  if (as_json)
    emit(make_report("fingerprint", {{"file", file}, {"panel", panel_spec}},
                     {{"counts", counts_json(fp)}}));
  else
    print_counts(fp);
  return 0;
}

int cmd_compare(const std::string& file1, const std::string& file2,
                const std::string& panel_spec, bool as_json) {
  Factorization f1 = read_factorization_file(file1);
  Factorization f2 = read_factorization_file(file2);
  std::vector<FiniteGroup> panel = parse_panel(panel_spec);

  const bool same_braid = braid_equal(product_word(f1), product_word(f2));
  const SurfaceInvariants i1 = invariants(f1), i2 = invariants(f2);
  const bool same_invariants =
      i1.strands == i2.strands && i1.band_count == i2.band_count &&
      i1.euler_characteristic == i2.euler_characteristic && i1.connected == i2.connected &&
      i1.boundary_components == i2.boundary_components && i1.genus == i2.genus;

  Fingerprint fp1 = fingerprint(complement_presentation(f1), panel);
  Fingerprint fp2 = fingerprint(complement_presentation(f2), panel);
  json first_difference = nullptr;
  for (size_t i = 0; i < fp1.counts.size(); ++i)
    if (fp1.counts[i].second != fp2.counts[i].second) {
      first_difference = {{"group", fp1.counts[i].first},
                          {"count1", fp1.counts[i].second},
                          {"count2", fp2.counts[i].second}};
      break;
    }
  const bool distinguished = !first_difference.is_null();

  if (as_json) {
    json result;
    result["same_braid"] = same_braid;
    result["same_invariants"] = same_invariants;
    result["distinguished"] = distinguished;
    result["first_difference"] = first_difference;
    result["counts1"] = counts_json(fp1);
    result["counts2"] = counts_json(fp2);
    emit(make_report("compare", {{"file1", file1}, {"file2", file2}, {"panel", panel_spec}},
                     result));
  } else {
    std::cout << "same braid: " << (same_braid ? "yes" : "no") << "\n";
    std::cout << "same invariants: " << (same_invariants ? "yes" : "no") << "\n";
    if (distinguished)
      std::cout << "distinguished: yes, first difference at "
                << first_difference["group"].get<std::string>() << " ("
                << first_difference["count1"] << " vs " << first_difference["count2"] << ")\n";
    else
      std::cout << "distinguished: no\n";
    std::cout << "fingerprint of " << file1 << ":\n";
    print_counts(fp1, "  ");
    std::cout << "fingerprint of " << file2 << ":\n";
    print_counts(fp2, "  ");
  }
  return 0;
}

int cmd_cover(const std::string& file, const std::string& panel_spec, long long enumerate_max,
              bool as_json) {
  Factorization f = read_factorization_file(file);
  std::vector<FiniteGroup> panel = parse_panel(panel_spec);
  CoverPresentation cover = cover_presentation(complement_presentation(f));
  Presentation simplified = tietze_simplify(cover.presentation);
  AbelianInvariants ab = abelianize(simplified);
  Fingerprint fp = fingerprint(simplified, panel);
  EnumerationResult enumeration = coset_enumerate(simplified, enumerate_max);
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  const bool surjects = exists_surjection(simplified, z3);

  std::vector<std::string> origins;
  for (const SchreierOrigin& o : cover.origins) origins.push_back(origin_name(o));

  json result;
  result["raw_generators"] = cover.presentation.generators();
  result["raw_relator_count"] = cover.presentation.relator_count();
  result["generator_origins"] = origins;
  result["generators"] = simplified.generators();
  result["relators"] = relator_strings(simplified);
  result["abelianization"] = {{"free_rank", ab.free_rank}, {"torsion", ab.torsion}};
  result["counts"] = counts_json(fp);
  json enum_json;
  enum_json["outcome"] =
      enumeration.kind == EnumerationResult::Kind::order ? "order" : "inconclusive";
  if (enumeration.kind == EnumerationResult::Kind::order)
    enum_json["order"] = enumeration.order;
  else
    enum_json["order"] = nullptr;
  enum_json["cosets_used"] = enumeration.cosets_used;
  result["enumeration"] = enum_json;
  result["surjects_onto_z3"] = surjects;

  if (as_json) {
    emit(make_report(
        "cover",
        {{"file", file}, {"panel", panel_spec}, {"enumerate_max", enumerate_max}}, result));
  } else {
    std::cout << "raw cover: " << cover.presentation.generators() << " generators, "
              << cover.presentation.relator_count() << " relators (";
    for (size_t i = 0; i < origins.size(); ++i) std::cout << (i ? " " : "") << origins[i];
    std::cout << ")\n";
    std::cout << "simplified: " << simplified.generators() << " generators, "
              << simplified.relator_count() << " relators\n";
    for (const std::string& r : relator_strings(simplified)) std::cout << "  " << r << "\n";
    std::cout << "abelianization: free rank " << ab.free_rank << ", torsion [";
    for (size_t i = 0; i < ab.torsion.size(); ++i) std::cout << (i ? " " : "") << ab.torsion[i];
    std::cout << "]\n";
    std::cout << "fingerprint:\n";
    print_counts(fp, "  ");
    if (enumeration.kind == EnumerationResult::Kind::order)
      std::cout << "enumeration: order " << enumeration.order << " (" << enumeration.cosets_used
                << " cosets defined)\n";
    else
      std::cout << "enumeration: inconclusive (" << enumeration.cosets_used
                << " cosets defined)\n";
    std::cout << "surjects onto Z3: " << (surjects ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_variant(int s, int which, const std::string& out_path, bool as_json) {
  if (s < 3 || s % 2 == 0)
    throw std::invalid_argument("variant parameter s must be an odd integer >= 3");
  if (which != 1 && which != 2) throw std::invalid_argument("variant 'which' must be 1 or 2");
  Factorization base = parse_factorization(which == 1 ? kBaseText1 : kBaseText2);
  std::string text = serialize_factorization(variant_factorization(base, s));
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file '" + out_path + "'");
  out << text;
  out.close();
  if (!out) throw std::invalid_argument("cannot write output file '" + out_path + "'");

  if (as_json)
    emit(make_report("variant", {{"s", s}, {"which", which}, {"output", out_path}},
                     {{"written", out_path}, {"bytes", text.size()}}));
  else
    std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Band-generator braid factorizations: surface invariants, complement groups, "
               "finite-quotient fingerprints, double branched covers"};
  app.require_subcommand(1);

  std::string file1, file2, out_path;
  std::string panel_spec = kDefaultPanelSpec;
  long long enumerate_max = kDefaultEnumerateMax;
  bool as_json = false;
  bool simplify = false;
  int s_param = 0;
  int which = 0;

  CLI::App* inv = app.add_subcommand("invariants", "Surface invariants of a factorization");
  inv->add_option("file", file1, "factorization file")->required();
  inv->add_flag("--json", as_json, "emit JSON");

  CLI::App* eq = app.add_subcommand("equal", "Decide whether two factorizations give the same braid");
  eq->add_option("file1", file1, "first factorization file")->required();
  eq->add_option("file2", file2, "second factorization file")->required();
  eq->add_flag("--json", as_json, "emit JSON");

  CLI::App* pi1 = app.add_subcommand("pi1", "Fundamental group presentation of the complement");
  pi1->add_option("file", file1, "factorization file")->required();
  pi1->add_flag("--simplify", simplify, "Tietze-simplify the presentation");
  pi1->add_flag("--json", as_json, "emit JSON");

  CLI::App* fp = app.add_subcommand("fingerprint", "Homomorphism counts over a finite-group panel");
  fp->add_option("file", file1, "factorization file")->required();
  fp->add_option("--panel", panel_spec, "panel spec, e.g. Z2-Z6,S3,S4,D3-D8");
  fp->add_flag("--json", as_json, "emit JSON");

  CLI::App* cmp = app.add_subcommand("compare", "Compare two factorizations' complement groups");
  cmp->add_option("file1", file1, "first factorization file")->required();
  cmp->add_option("file2", file2, "second factorization file")->required();
  cmp->add_option("--panel", panel_spec, "panel spec");
  cmp->add_flag("--json", as_json, "emit JSON");

  CLI::App* cov = app.add_subcommand("cover", "Fundamental group of the double branched cover");
  cov->add_option("file", file1, "factorization file")->required();
  cov->add_option("--panel", panel_spec, "panel spec");
  cov->add_option("--enumerate-max", enumerate_max, "live-coset bound for enumeration");
  cov->add_flag("--json", as_json, "emit JSON");

  CLI::App* var = app.add_subcommand("variant", "Write a member of the a^s b a^-s family");
  var->add_option("--s", s_param, "odd exponent >= 3")->required();
  var->add_option("--which", which, "base factorization, 1 or 2")->required();
  var->add_option("-o", out_path, "output path")->required();
  var->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*inv) return cmd_invariants(file1, as_json);
    if (*eq) return cmd_equal(file1, file2, as_json);
    if (*pi1) return cmd_pi1(file1, simplify, as_json);
    if (*fp) return cmd_fingerprint(file1, panel_spec, as_json);
    if (*cmp) return cmd_compare(file1, file2, panel_spec, as_json);
    if (*cov) {
      if (enumerate_max < 1)
        throw std::invalid_argument("--enumerate-max must be at least 1");
      return cmd_cover(file1, panel_spec, enumerate_max, as_json);
    }
    if (*var) return cmd_variant(s_param, which, out_path, as_json);
  } catch (const braidsurf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
