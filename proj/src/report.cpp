#include "dsheaf/report.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsheaf/shimura.hpp"

namespace dsheaf {

using njson = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "md") return Format::md;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw domain_error("unknown format '" + name + "' (expected md, csv or json)");
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

Int parse_int_text(const std::string& text, const std::string& context) {
  std::size_t start = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw domain_error(context + ": not a number: '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw domain_error(context + ": not a number: '" + text + "'");
    }
  }
  return Int(text);
}

njson int_to_json(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Int json_to_int(const njson& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return parse_int_text(j.get<std::string>(), what);
  throw domain_error(what + ": expected an integer");
}

std::string ratio_cell(const std::optional<Rat>& ratio) {
  if (!ratio) return "-";
  return rat_str(*ratio) + " (" + rat_decimal4(*ratio) + ")";
}

std::string degrees_cell(const std::vector<int>& degrees) {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(degrees[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<ReferenceRow> load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open reference file '" + path + "'");
  std::vector<ReferenceRow> rows;
  std::set<std::pair<int, Int>> seen;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string context = "reference line " + std::to_string(line_no);
    if (!header_seen) {
      if (line != "q,genus,max_known,upper_bound") {
        throw domain_error(context +
                           ": expected header q,genus,max_known,upper_bound");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 4) {
      throw domain_error(context + ": expected 4 fields, got " +
                         std::to_string(fields.size()));
    }
    ReferenceRow row;
    Int q = parse_int_text(fields[0], context);
    if (q < 2 || q > 1000000) throw domain_error(context + ": bad q");
    row.q = q.convert_to<int>();
    row.genus = parse_int_text(fields[1], context);
    row.max_known = parse_int_text(fields[2], context);
    row.upper_bound = parse_int_text(fields[3], context);
    if (row.genus < 0) throw domain_error(context + ": genus must be >= 0");
    if (row.max_known > row.upper_bound) {
      throw domain_error(context + " ('" + line + "'): max_known > upper_bound");
    }
    if (!seen.insert({row.q, row.genus}).second) {
      throw domain_error(context + " ('" + line + "'): duplicate (q, genus) key");
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw domain_error("reference file '" + path + "' is empty");
  return rows;
}

std::vector<TableRow> comparison_table_rows(
    const Field& f, const Place& o, int max_genus,
    const std::optional<std::vector<ReferenceRow>>& reference,
    const Budget& budget) {
  if (o.is_infinity()) throw domain_error("o must be a finite place");
  std::map<std::pair<int, Int>, std::pair<Int, Int>> ref_index;
  if (reference) {
    for (const ReferenceRow& row : *reference) {
      ref_index[{row.q, row.genus}] = {row.max_known, row.upper_bound};
    }
  }
  // Genus and supersingular count are functions of the degrees, so the rows
  // range over degree pairs. A pair is dropped only when o's own degree
  // cannot supply o plus the row's places of that degree; other short
  // supplies are tolerated, matching the shipped golden tables.
  Int o_degree_count = count_places_of_degree(f, o.degree());
  auto o_fits = [&](int d1, int d2) {
    int taken = (d1 == o.degree() ? 1 : 0) + (d2 == o.degree() ? 1 : 0);
    return taken == 0 || o_degree_count - 1 >= taken;
  };
  auto degree_budget_check = [&](int d) {
    if (d > budget.max_degree) {
      throw resource_error("table scan reached degree " + std::to_string(d) +
                           ", beyond budget (max_degree=" +
                           std::to_string(budget.max_degree) + ")");
    }
  };

  std::vector<TableRow> rows;
  for (int d1 = 1;; ++d1) {
    degree_budget_check(d1);
    if (genus_from_degrees(f, {d1, d1}) > max_genus) break;
    for (int d2 = d1;; ++d2) {
      degree_budget_check(d2);
      Int g = genus_from_degrees(f, {d1, d2});
      if (g > max_genus) break;
      if (!o_fits(d1, d2)) continue;
      TableRow row;
      row.r_degrees = {d1, d2};
      row.genus = g;
      row.supersingular = class_number_from_degrees(f, {d1, d2}, o.degree());
      auto it = ref_index.find({f.q(), g});
      if (it != ref_index.end()) {
        row.max_known = it->second.first;
        row.upper_bound = it->second.second;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, bool with_reference,
                         Format format) {
  std::ostringstream out;
  if (format == Format::md) {
    out << "| R | genus | supersingular |";
    if (with_reference) out << " max_known | upper_bound |";
    out << "\n| --- | --- | --- |";
    if (with_reference) out << " --- | --- |";
    out << "\n";
    for (const TableRow& row : rows) {
      out << "| (" << row.r_degrees[0] << "," << row.r_degrees[1] << ") | "
          << row.genus << " | " << row.supersingular << " |";
      if (with_reference) {
        out << " " << (row.max_known ? row.max_known->str() : "-") << " | "
            << (row.upper_bound ? row.upper_bound->str() : "-") << " |";
      }
      out << "\n";
    }
    return out.str();
  }
  if (format == Format::csv) {
    out << "d1,d2,genus,supersingular";
    if (with_reference) out << ",max_known,upper_bound";
    out << "\n";
    for (const TableRow& row : rows) {
      out << row.r_degrees[0] << "," << row.r_degrees[1] << "," << row.genus
          << "," << row.supersingular;
      if (with_reference) {
        out << "," << (row.max_known ? row.max_known->str() : "") << ","
            << (row.upper_bound ? row.upper_bound->str() : "");
      }
      out << "\n";
    }
    return out.str();
  }
  njson array = njson::array();
  for (const TableRow& row : rows) {
    njson j;
    j["r_degrees"] = {row.r_degrees[0], row.r_degrees[1]};
    j["genus"] = int_to_json(row.genus);
    j["supersingular"] = int_to_json(row.supersingular);
    if (row.max_known) j["max_known"] = int_to_json(*row.max_known);
    if (row.upper_bound) j["upper_bound"] = int_to_json(*row.upper_bound);
    array.push_back(std::move(j));
  }
  return array.dump(2) + "\n";
}

std::string emit_comparison_table(
    const Field& f, const Place& o, int max_genus,
    const std::optional<std::vector<ReferenceRow>>& reference, Format format,
    const Budget& budget) {
  return render_table(comparison_table_rows(f, o, max_genus, reference, budget),
                      reference.has_value(), format);
}

namespace {

njson report_to_njson(const InvariantReport& r) {
  njson j;
  j["q"] = r.q;
  j["r_degrees"] = r.r_degrees;
  j["r_polys"] = r.r_polys;
  if (r.o) j["o"] = *r.o;
  if (r.mass) j["mass"] = rat_str(*r.mass);
  if (r.class_number) j["class_number"] = int_to_json(*r.class_number);
  if (r.supersingular) j["supersingular"] = int_to_json(*r.supersingular);
  if (r.rationality_field) j["rationality_field"] = int_to_json(*r.rationality_field);
  if (r.extra_autos_kind) j["extra_autos_kind"] = *r.extra_autos_kind;
  j["extra_autos"] = int_to_json(r.extra_autos);
  j["genus"] = int_to_json(r.genus);
  j["chi0"] = int_to_json(r.chi0);
  if (r.ratio) j["ratio"] = rat_str(*r.ratio);
  return j;
}

InvariantReport report_from_njson(const njson& j) {
  InvariantReport r;
  try {
    r.q = j.at("q").get<int>();
    r.r_degrees = j.at("r_degrees").get<std::vector<int>>();
    r.r_polys = j.at("r_polys").get<std::vector<std::string>>();
    if (j.contains("o")) r.o = j.at("o").get<std::string>();
    if (j.contains("mass")) r.mass = parse_rat(j.at("mass").get<std::string>());
    if (j.contains("class_number")) {
      r.class_number = json_to_int(j.at("class_number"), "class_number");
    }
    if (j.contains("supersingular")) {
      r.supersingular = json_to_int(j.at("supersingular"), "supersingular");
    }
    if (j.contains("rationality_field")) {
      r.rationality_field = json_to_int(j.at("rationality_field"), "rationality_field");
    }
    if (j.contains("extra_autos_kind")) {
      r.extra_autos_kind = j.at("extra_autos_kind").get<std::string>();
    }
    r.extra_autos = json_to_int(j.at("extra_autos"), "extra_autos");
    r.genus = json_to_int(j.at("genus"), "genus");
    r.chi0 = json_to_int(j.at("chi0"), "chi0");
    if (j.contains("ratio")) r.ratio = parse_rat(j.at("ratio").get<std::string>());
  } catch (const njson::exception& e) {
    throw domain_error(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

njson parse_json_text(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const njson::exception& e) {
    throw domain_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string report_to_json(const InvariantReport& report) {
  return report_to_njson(report).dump(2) + "\n";
}

InvariantReport report_from_json(const std::string& text) {
  return report_from_njson(parse_json_text(text));
}

std::string reports_to_json(const std::vector<InvariantReport>& reports) {
  njson array = njson::array();
  for (const InvariantReport& r : reports) array.push_back(report_to_njson(r));
  return array.dump(2) + "\n";
}

std::vector<InvariantReport> reports_from_json(const std::string& text) {
  njson array = parse_json_text(text);
  if (!array.is_array()) throw domain_error("expected a JSON array of reports");
  std::vector<InvariantReport> out;
  for (const njson& j : array) out.push_back(report_from_njson(j));
  return out;
}

namespace {

std::string report_csv_header() {
  return "q,r_degrees,r_polys,o,mass,class_number,supersingular,extra_autos,"
         "genus,chi0,ratio,ratio_decimal\n";
}

std::string report_csv_row(const InvariantReport& r) {
  std::vector<std::string> degree_items;
  for (int d : r.r_degrees) degree_items.push_back(std::to_string(d));
  std::ostringstream out;
  out << r.q << "," << join(degree_items, ";") << "," << join(r.r_polys, ";")
      << "," << r.o.value_or("") << "," << (r.mass ? rat_str(*r.mass) : "")
      << "," << (r.class_number ? r.class_number->str() : "") << ","
      << (r.supersingular ? r.supersingular->str() : "") << ","
      << r.extra_autos.str() << "," << r.genus.str() << "," << r.chi0.str()
      << "," << (r.ratio ? rat_str(*r.ratio) : "") << ","
      << (r.ratio ? rat_decimal4(*r.ratio) : "") << "\n";
  return out.str();
}

}  // namespace

std::string render_report(const InvariantReport& r, Format format) {
  if (format == Format::json) return report_to_json(r);
  if (format == Format::csv) return report_csv_header() + report_csv_row(r);
  std::ostringstream out;
  out << "q: " << r.q << "\n";
  out << "R: " << degrees_cell(r.r_degrees) << "\n";
  out << "r_polys: " << join(r.r_polys, ", ") << "\n";
  if (r.o) out << "o: " << *r.o << "\n";
  if (r.mass) out << "mass: " << rat_str(*r.mass) << "\n";
  if (r.class_number) out << "class_number: " << *r.class_number << "\n";
  if (r.supersingular) {
    out << "supersingular: " << *r.supersingular;
    if (r.rationality_field) out << " (rational over F_" << *r.rationality_field << ")";
    out << "\n";
  }
  out << "extra_autos: " << r.extra_autos;
  if (r.extra_autos_kind) out << " (" << *r.extra_autos_kind << ")";
  out << "\n";
  out << "genus: " << r.genus << "\n";
  out << "chi0: " << r.chi0 << "\n";
  if (r.ratio) out << "ratio: " << ratio_cell(r.ratio) << "\n";
  return out.str();
}

std::string render_reports(const std::vector<InvariantReport>& reports,
                           Format format) {
  if (format == Format::json) return reports_to_json(reports);
  std::ostringstream out;
  if (format == Format::csv) {
    out << report_csv_header();
    for (const InvariantReport& r : reports) out << report_csv_row(r);
    return out.str();
  }
  out << "| deg(r) | R | genus | supersingular | ratio |\n";
  out << "| --- | --- | --- | --- | --- |\n";
  for (const InvariantReport& r : reports) {
    int disc_degree = std::accumulate(r.r_degrees.begin(), r.r_degrees.end(), 0);
    out << "| " << disc_degree << " | " << degrees_cell(r.r_degrees) << " | "
        << r.genus << " | "
        << (r.supersingular ? r.supersingular->str() : "-") << " | "
        << ratio_cell(r.ratio) << " |\n";
  }
  return out.str();
}

namespace {

std::vector<int> parse_degree_list(const std::vector<int>& degrees) {
  if (degrees.empty()) throw domain_error("empty degree list");
  return degrees;
}

Discriminant discriminant_from_args(const Field& f,
                                    const std::vector<int>& degrees,
                                    const std::vector<std::string>& polys,
                                    const std::optional<Place>& avoid,
                                    const Budget& budget) {
  if (!degrees.empty()) {
    return Discriminant::from_degrees(f, parse_degree_list(degrees), avoid, budget);
  }
  PlaceSet places;
  for (const std::string& text : polys) {
    places.push_back(Place::finite(f, parse_poly(f, text)));
  }
  return Discriminant::make(f, std::move(places));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Invariants of modular curves of D-elliptic sheaves over F_q(T)"};
  app.name("dsheaf");
  app.require_subcommand(1);

  int q = 0;
  std::string o_text = "T";
  std::string format_text;
  std::vector<int> r_degrees;
  std::vector<std::string> r_polys;

  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", q, "field size, a prime power")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format: md, csv or json");
  };
  auto add_discriminant = [&](CLI::App* sub) {
    auto* group = sub->add_option_group("discriminant");
    group->add_option("--r-degrees", r_degrees,
                      "degrees of the places of R, e.g. 1,3")
        ->delimiter(',');
    group->add_option("--r-polys", r_polys,
                      "places of R as monic irreducible polynomials, e.g. T,T^3+T+1")
        ->delimiter(',');
    group->require_option(1);
  };

  CLI::App* places_cmd = app.add_subcommand("places", "enumerate places of P^1");
  int max_degree = 4;
  bool no_infinity = false;
  add_q(places_cmd);
  places_cmd->add_option("--max-degree", max_degree, "largest degree to list")
      ->capture_default_str();
  places_cmd->add_flag("--no-infinity", no_infinity, "list finite places only");

  CLI::App* invariants_cmd =
      app.add_subcommand("invariants", "all invariants for one (q, R, o)");
  add_q(invariants_cmd);
  add_discriminant(invariants_cmd);
  invariants_cmd->add_option("--o", o_text, "characteristic place o");

  CLI::App* genus_cmd = app.add_subcommand("genus", "genus of X^R");
  add_q(genus_cmd);
  add_discriminant(genus_cmd);

  CLI::App* chi_cmd =
      app.add_subcommand("chi", "Euler characteristic, bare or with level");
  add_q(chi_cmd);
  add_discriminant(chi_cmd);
  std::string level_text;
  int level_exp = 1;
  auto* level_opt =
      chi_cmd->add_option("--level", level_text, "level place as a polynomial");
  chi_cmd->add_option("--level-exp", level_exp, "level exponent")
      ->capture_default_str()
      ->needs(level_opt);

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "invariants of every R up to a degree bound");
  add_q(scan_cmd);
  scan_cmd->add_option("--o", o_text, "characteristic place o")
      ->capture_default_str();
  int max_disc_degree = 0;
  std::string r_cardinality = "all";
  scan_cmd->add_option("--max-disc-degree", max_disc_degree, "largest deg(r)")
      ->required();
  scan_cmd
      ->add_option("--r-cardinality", r_cardinality,
                   "#R: an even integer, or 'all'")
      ->capture_default_str();

  CLI::App* table_cmd =
      app.add_subcommand("table", "supersingular/genus comparison table");
  add_q(table_cmd);
  table_cmd->add_option("--o", o_text, "characteristic place o")
      ->capture_default_str();
  int max_genus = 50;
  std::string reference_path;
  table_cmd->add_option("--max-genus", max_genus, "largest genus to include")
      ->capture_default_str();
  table_cmd->add_option("--reference", reference_path,
                        "CSV with known point counts, joined on (q, genus)");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "genus-zero and hyperelliptic flags");
  add_q(classify_cmd);
  add_discriminant(classify_cmd);

  CLI::App* shimura_cmd =
      app.add_subcommand("shimura", "genus of the Shimura curve X^d over Q");
  std::int64_t shimura_d = 0;
  int zeta_q = 0;
  auto* shimura_group = shimura_cmd->add_option_group("what");
  shimura_group->add_option("--d", shimura_d,
                            "squarefree discriminant with an even number of prime factors");
  shimura_group->add_option("--zeta-q", zeta_q,
                            "print the zeta constants (1/6, 1/(q^2-1)) instead");
  shimura_group->require_option(1);

  add_format(places_cmd);
  add_format(invariants_cmd);
  add_format(scan_cmd);
  add_format(table_cmd);
  add_format(classify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    Budget budget = Budget::from_env();
    // Commands printing a single structured record default to json, the
    // table-like ones to md.
    auto format_or = [&](const char* preset) {
      return parse_format(format_text.empty() ? preset : format_text);
    };

    if (app.got_subcommand(places_cmd)) {
      Format format = format_or("md");
      Field f = Field::from_order(q, budget);
      PlaceSet places = enumerate_places(f, max_degree, !no_infinity, budget);
      if (format == Format::json) {
        njson array = njson::array();
        for (const Place& x : places) {
          array.push_back({{"place", place_str(f, x)}, {"degree", x.degree()}});
        }
        out << array.dump(2) << "\n";
      } else if (format == Format::csv) {
        out << "degree,place\n";
        for (const Place& x : places) {
          out << x.degree() << "," << place_str(f, x) << "\n";
        }
      } else {
        out << "| degree | place |\n| --- | --- |\n";
        for (const Place& x : places) {
          out << "| " << x.degree() << " | " << place_str(f, x) << " |\n";
        }
      }
    } else if (app.got_subcommand(invariants_cmd)) {
      Format format = format_or("json");
      Field f = Field::from_order(q, budget);
      std::optional<Place> o;
      if (invariants_cmd->count("--o") > 0) o = parse_place(f, o_text);
      Discriminant r = discriminant_from_args(f, r_degrees, r_polys, o, budget);
      out << render_report(compute_report(f, r, o), format);
    } else if (app.got_subcommand(genus_cmd)) {
      Field f = Field::from_order(q, budget);
      Discriminant r =
          discriminant_from_args(f, r_degrees, r_polys, std::nullopt, budget);
      out << genus(f, r) << "\n";
    } else if (app.got_subcommand(chi_cmd)) {
      Field f = Field::from_order(q, budget);
      Discriminant r =
          discriminant_from_args(f, r_degrees, r_polys, std::nullopt, budget);
      if (level_text.empty()) {
        out << chi_bare(f, r) << "\n";
      } else {
        Place level_place = Place::finite(f, parse_poly(f, level_text));
        LevelIdeal level = LevelIdeal::make(f, {{level_place, level_exp}});
        out << chi_level(f, r, level) << "\n";
      }
    } else if (app.got_subcommand(scan_cmd)) {
      Format format = format_or("md");
      Field f = Field::from_order(q, budget);
      Place o = parse_place(f, o_text);
      std::optional<int> cardinality;
      if (r_cardinality != "all") {
        cardinality =
            parse_int_text(r_cardinality, "--r-cardinality").convert_to<int>();
      }
      out << render_reports(
          optimality_scan(f, o, max_disc_degree, cardinality, budget), format);
    } else if (app.got_subcommand(table_cmd)) {
      Format format = format_or("md");
      Field f = Field::from_order(q, budget);
      Place o = parse_place(f, o_text);
      std::optional<std::vector<ReferenceRow>> reference;
      if (!reference_path.empty()) reference = load_reference(reference_path);
      out << emit_comparison_table(f, o, max_genus, reference, format, budget);
    } else if (app.got_subcommand(classify_cmd)) {
      Format format = format_or("json");
      Field f = Field::from_order(q, budget);
      Discriminant r =
          discriminant_from_args(f, r_degrees, r_polys, std::nullopt, budget);
      Classification c = classify(f, r);
      if (format == Format::json) {
        njson j;
        j["genus_zero"] = c.genus_zero;
        j["hyperelliptic"] = to_string(c.hyperelliptic);
        out << j.dump(2) << "\n";
      } else if (format == Format::csv) {
        out << "genus_zero,hyperelliptic\n"
            << (c.genus_zero ? "true" : "false") << ","
            << to_string(c.hyperelliptic) << "\n";
      } else {
        out << "genus_zero: " << (c.genus_zero ? "true" : "false") << "\n"
            << "hyperelliptic: " << to_string(c.hyperelliptic) << "\n";
      }
    } else if (app.got_subcommand(shimura_cmd)) {
      if (shimura_cmd->count("--zeta-q") > 0) {
        auto [zeta_z, zeta_a] = zeta_constants(zeta_q);
        out << "-zeta_Z(-1): " << rat_str(zeta_z) << "\n"
            << "-zeta_A(-1): " << rat_str(zeta_a) << "\n";
      } else {
        out << shimura_genus(shimura_d) << "\n";
      }
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const contract_violation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dsheaf
