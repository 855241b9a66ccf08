#include "hbq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hbq/cases.hpp"
#include "hbq/io/export.hpp"
#include "hbq/io/json_io.hpp"
#include "hbq/io/pricebook_doc.hpp"
#include "hbq/io/store.hpp"
#include "hbq/service.hpp"

namespace hbq {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "': file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  file << text;
}

std::optional<std::filesystem::path> store_path(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  return pricebook_path_from_env();
}

/// Book from --pricebook / HBQ_PRICEBOOK when given, the shipped defaults otherwise.
PriceBook load_book(const std::string& flag) {
  if (auto p = store_path(flag)) return load_pricebook_file(*p);
  return default_pricebook();
}

std::unique_ptr<PriceBookStore> open_store(const std::string& flag) {
  auto p = store_path(flag);
  if (!p) {
    throw Error(ErrorCode::io_error, std::string("no price-book store: pass --pricebook or set ") +
                                         kPricebookEnvVar);
  }
  return PriceBookStore::open(*p);
}

std::pair<Material, Money> parse_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorCode::validation_error, "expected MATERIAL=PRICE, got '" + text + "'",
                "override");
  }
  const std::string key = text.substr(0, eq);
  const std::string field = "overrides." + key;
  const Material m = parse_enum<Material>(key, ErrorCode::validation_error, field);
  Money price;
  try {
    price = Money::parse(text.substr(eq + 1));
  } catch (const Error& e) {
    throw Error(ErrorCode::validation_error, e.message(), field);
  }
  if (price.pesewas() <= 0) throw Error(ErrorCode::non_positive_price, "price must be positive", field);
  return {m, price};
}

struct RunFlags {
  std::string spec_path;
  std::string layout_path;
  std::string pricebook;
  std::string region;
  bool case_compat = false;
  bool extras_outside = false;
  std::optional<double> w_cut;
  std::vector<std::string> overrides;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--layout", f.layout_path, "Floor-plan layout document (JSON)");
  cmd->add_option("--pricebook", f.pricebook, "Price-book document (default: $HBQ_PRICEBOOK or shipped)");
  cmd->add_option("--region", f.region, "Override the spec region");
  cmd->add_flag("--case-compat", f.case_compat, "Case reproduction flags (no block cutting wastage)");
  cmd->add_flag("--extras-outside", f.extras_outside, "Add package extras after contingency");
  cmd->add_option("--w-cut", f.w_cut, "Block cutting wastage fraction")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--override", f.overrides, "MATERIAL=PRICE for this run only");
}

Estimate run_estimate(const RunFlags& f, std::ostream* warnings = nullptr) {
  EstimateRequest req = request_from_json(parse_json_text(read_file(f.spec_path), f.spec_path));
  if (!f.region.empty()) req.spec.region = parse_enum<Region>(f.region, ErrorCode::validation_error, "region");
  if (f.case_compat) req.options = EstimateOptions::case_compatible();
  if (f.extras_outside) req.options.placement = ContingencyPlacement::extras_outside;
  if (f.w_cut) req.options.w_cut = *f.w_cut;
  if (!f.layout_path.empty()) {
    req.layout = layout_from_json(parse_json_text(read_file(f.layout_path), f.layout_path));
  }
  PriceBook book = load_book(f.pricebook);
  for (const auto& [m, price] : req.overrides) book.overrides[m] = PriceOverride{price, book.timestamp};
  for (const auto& text : f.overrides) {
    auto [m, price] = parse_assignment(text);
    book.overrides[m] = PriceOverride{price, book.timestamp};
  }
  if (req.layout && warnings) {
    for (const auto& finding : check_room_minimums(*req.layout)) {
      *warnings << "hbq: warning: room " << finding.room_index << " (" << to_string(finding.kind)
                << ") is " << finding.actual_m2 << " m2, below the " << finding.required_m2
                << " m2 minimum\n";
    }
  }
  return estimate(req.spec, req.layout ? &*req.layout : nullptr, book, req.options);
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string reproduce_report(const CaseRun& run) {
  std::ostringstream o;
  o << "Case " << run.fixture->id << ": " << run.fixture->title << "\n";
  std::size_t width = 3;
  for (const auto& c : run.checks) width = std::max(width, c.expected.key.size());
  o << std::left << std::setw(static_cast<int>(width)) << "key" << "  " << std::right
    << std::setw(14) << "expected" << std::setw(14) << "computed" << "  " << std::left
    << std::setw(14) << "tolerance" << "result\n";
  int failed = 0;
  for (const auto& c : run.checks) {
    const bool report = c.expected.tolerance.kind == ToleranceKind::report_only;
    if (!c.pass) ++failed;
    o << std::left << std::setw(static_cast<int>(width)) << c.expected.key << "  " << std::right
      << std::setw(14) << format_number(c.expected.expected) << std::setw(14)
      << format_number(c.computed) << "  " << std::left << std::setw(14)
      << c.expected.tolerance.describe() << (report ? "info" : c.pass ? "PASS" : "FAIL");
    if (!c.expected.note.empty()) o << "  (" << c.expected.note << ")";
    o << "\n";
  }
  o << (failed == 0 ? "all checks within tolerance\n"
                    : std::to_string(failed) + " check(s) out of tolerance\n");
  return o.str();
}

std::string prices_text(const PriceBook& book, Region region) {
  std::ostringstream o;
  o << "price book v" << book.version << " (" << book.timestamp << "), region " << name(region)
    << "\n";
  std::size_t width = 0;
  for (const auto& [m, label] : all_values<Material>()) width = std::max(width, label.size());
  for (const auto& [m, label] : all_values<Material>()) {
    o << std::left << std::setw(static_cast<int>(width)) << label << "  " << std::setw(12)
      << name(supply_class(m)) << std::right << std::setw(12)
      << resolve_price(book, m, region).to_string();
    if (book.overrides.count(m)) o << "  (override)";
    o << "\n";
  }
  o << std::left << std::setw(static_cast<int>(width)) << "labour_per_m2" << "  "
    << std::setw(12) << "" << std::right << std::setw(12)
    << resolve_labour_rate(book, region).to_string() << "\n";
  return o.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hbq: itemised bill of quantities and completeness-gap estimates for Ghanaian homes",
               "hbq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  // estimate
  RunFlags est;
  std::string est_format = "table";
  std::string est_output;
  auto* estimate_cmd = app.add_subcommand("estimate", "Itemised BoQ for a building spec");
  estimate_cmd->add_option("--spec", est.spec_path, "Building spec or estimate request (JSON)")->required();
  add_run_flags(estimate_cmd, est);
  estimate_cmd->add_option("--format", est_format, "table | csv | json | markdown")
      ->check(CLI::IsMember({"table", "csv", "json", "structured", "markdown", "md"}));
  estimate_cmd->add_option("-o,--output", est_output, "Write to a file instead of stdout");

  // gap
  RunFlags gp;
  std::string gap_estimate;
  std::optional<double> gap_low;
  std::optional<double> gap_high;
  std::string gap_format = "text";
  auto* gap_cmd = app.add_subcommand("gap", "Completeness gap against the informal per-m2 band");
  auto* gap_spec_opt = gap_cmd->add_option("--spec", gp.spec_path, "Building spec (JSON)");
  auto* gap_est_opt = gap_cmd->add_option("--estimate", gap_estimate, "Saved estimate (JSON)");
  gap_spec_opt->excludes(gap_est_opt);
  add_run_flags(gap_cmd, gp);
  gap_cmd->add_option("--low", gap_low, "Informal band low (GHS/m2)");
  gap_cmd->add_option("--high", gap_high, "Informal band high (GHS/m2)");
  gap_cmd->add_option("--format", gap_format, "text | markdown | json")
      ->check(CLI::IsMember({"text", "markdown", "md", "json"}));

  // reproduce
  std::string case_id;
  std::string repro_format = "text";
  std::string repro_pricebook;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a published case study fixture");
  reproduce_cmd->add_option("case", case_id, "A, B or C")->required();
  reproduce_cmd->add_option("--format", repro_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  reproduce_cmd->add_option("--pricebook", repro_pricebook, "Price book (default: shipped)");

  // prices
  std::string prices_store;
  auto* prices_cmd = app.add_subcommand("prices", "Inspect and edit the price book");
  prices_cmd->add_option("--pricebook", prices_store, "Price-book store (default: $HBQ_PRICEBOOK)");
  prices_cmd->require_subcommand(1);
  prices_cmd->fallthrough();
  std::string show_region = "greater_accra";
  std::string show_format = "text";
  auto* show_cmd = prices_cmd->add_subcommand("show", "Resolved unit prices");
  show_cmd->add_option("--region", show_region, "Region for the multipliers");
  show_cmd->add_option("--format", show_format, "text | ini | json")
      ->check(CLI::IsMember({"text", "ini", "json"}));
  std::string set_material;
  std::string set_price;
  std::optional<std::uint64_t> set_base;
  std::string set_stamp;
  auto* set_cmd = prices_cmd->add_subcommand("set", "Override one material price (new version)");
  set_cmd->add_option("material", set_material, "Material id")->required();
  set_cmd->add_option("price", set_price, "Unit price in GHS")->required();
  set_cmd->add_option("--base-version", set_base, "Fail if the store has moved past this version");
  set_cmd->add_option("--timestamp", set_stamp, "ISO-8601 timestamp (default: now)");
  std::string import_path;
  auto* import_cmd = prices_cmd->add_subcommand("import", "Validate a document and make it current");
  import_cmd->add_option("file", import_path, "Price-book document")->required();
  std::string export_prices_out;
  auto* export_prices_cmd = prices_cmd->add_subcommand("export", "Write the current document");
  export_prices_cmd->add_option("-o,--output", export_prices_out, "Output file (default: stdout)");

  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string serve_store;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP API");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--pricebook", serve_store, "Price-book store (default: $HBQ_PRICEBOOK, else in-memory defaults)");

  // export
  std::string export_in;
  std::string export_format = "markdown";
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "Re-render a saved estimate");
  export_cmd->add_option("--estimate", export_in, "Estimate document (JSON)")->required();
  export_cmd->add_option("--format", export_format, "csv | json | markdown | table")
      ->check(CLI::IsMember({"table", "csv", "json", "structured", "markdown", "md"}));
  export_cmd->add_option("-o,--output", export_out, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*estimate_cmd) {
      const ExportFormat format = parse_export_format(est_format);
      write_output(export_boq(run_estimate(est, &err), format), est_output, out);
      return kExitOk;
    }
    if (*gap_cmd) {
      if (gp.spec_path.empty() && gap_estimate.empty()) {
        err << "gap: one of --spec or --estimate is required\n";
        return kExitUsage;
      }
      PriceBook book = load_book(gp.pricebook);
      const Estimate e = gap_estimate.empty()
                             ? run_estimate(gp)
                             : estimate_from_json(parse_json_text(read_file(gap_estimate), gap_estimate));
      InformalBand band = book.informal_band;
      if (gap_low) band.low = Money::from_ghs_double(*gap_low);
      if (gap_high) band.high = Money::from_ghs_double(*gap_high);
      const GapReport report = gap(e, band);
      if (gap_format == "text") out << gap_to_text(report);
      else if (gap_format == "markdown" || gap_format == "md") out << gap_to_markdown(report);
      else if (gap_format == "json") out << to_json(report).dump(2) << "\n";
      else throw Error(ErrorCode::unknown_format, "unknown gap format '" + gap_format + "'");
      return kExitOk;
    }
    if (*reproduce_cmd) {
      const CaseFixture& fixture = find_case(case_id);
      const PriceBook book = repro_pricebook.empty() ? default_pricebook()
                                                     : load_pricebook_file(repro_pricebook);
      const CaseRun run = run_case(fixture, book);
      if (repro_format == "json") out << to_json(run).dump(2) << "\n";
      else if (repro_format == "text") out << reproduce_report(run);
      else throw Error(ErrorCode::unknown_format, "unknown reproduce format '" + repro_format + "'");
      return run.passed() ? kExitOk : kExitFailure;
    }
    if (*prices_cmd) {
      if (*show_cmd) {
        const PriceBook book = load_book(prices_store);
        const Region region = parse_enum<Region>(show_region, ErrorCode::validation_error, "region");
        if (show_format == "text") out << prices_text(book, region);
        else if (show_format == "ini") out << save_pricebook(book);
        else if (show_format == "json") out << pricebook_to_json(book).dump(2) << "\n";
        else throw Error(ErrorCode::unknown_format, "unknown prices format '" + show_format + "'");
        return kExitOk;
      }
      if (*set_cmd) {
        auto store = open_store(prices_store);
        auto [m, price] = parse_assignment(set_material + "=" + set_price);
        auto next = store->apply_overrides({{m, price}}, set_stamp.empty() ? now_iso8601() : set_stamp,
                                           set_base);
        out << "price book v" << next->version << ": " << name(m) << " = "
            << price.to_string() << "\n";
        return kExitOk;
      }
      if (*import_cmd) {
        PriceBook incoming = load_pricebook_file(import_path);
        auto store = open_store(prices_store);
        auto next = store->replace(std::move(incoming));
        out << "price book v" << next->version << " imported from " << import_path << "\n";
        return kExitOk;
      }
      if (*export_prices_cmd) {
        write_output(save_pricebook(load_book(prices_store)), export_prices_out, out);
        return kExitOk;
      }
    }
    if (*serve_cmd) {
      std::unique_ptr<PriceBookStore> store;
      if (auto p = store_path(serve_store)) store = PriceBookStore::open(*p);
      else store = std::make_unique<PriceBookStore>(default_pricebook());
      if (!serve(*store, host, port)) {
        err << "cannot listen on " << host << ":" << port << "\n";
        return kExitFailure;
      }
      return kExitOk;
    }
    if (*export_cmd) {
      const ExportFormat format = parse_export_format(export_format);
      const Estimate e = estimate_from_json(parse_json_text(read_file(export_in), export_in));
      write_output(export_boq(e, format), export_out, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "hbq: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hbq
