#include "zdsky/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>

#include "zdsky/emanation.hpp"
#include "zdsky/io.hpp"
#include "zdsky/theorems.hpp"

namespace zdsky::cli {

namespace {

using nlohmann::ordered_json;

std::uint32_t parse_number(std::string_view s, const std::string& what) {
  std::uint32_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid " + what + " '" + std::string(s) + "'");
  }
  return v;
}

struct Options {
  std::string n = "";
  std::string s = "";
  std::string method = "brute";
  std::string format = "csv";
  std::string out;
  bool overlay = false;
  unsigned threads = 0;
  bool list = false;
  std::vector<std::string> operands;
  std::string suite;
  std::string bits = "8,16";
};

int exponent_of(const Options& o, int fallback = -1) {
  if (o.n.empty()) {
    if (fallback < 0) throw UsageError("--n is required");
    return fallback;
  }
  const Range r = parse_range(o.n);
  if (r.first != r.last) throw UsageError("--n takes a single value here");
  return static_cast<int>(r.first);
}

void guard_exponent(int n) {
  if (n < 2 || n > kMaxExponent) throw UsageError("--n must lie in 2.." + std::to_string(kMaxExponent));
  if (n > max_exponent()) {
    throw UsageError("N = " + std::to_string(n) + " exceeds ZDSKY_MAX_N = " + std::to_string(max_exponent()));
  }
}

StrutContext strut_of(int n, Index s) {
  guard_exponent(n);
  const Index g = Index{1} << (n - 1);
  if (s == 0 || s >= g) throw UsageError("--s must lie in (0, " + std::to_string(g) + ") for N = " + std::to_string(n));
  return StrutContext(n, s);
}

Range strut_range(const Options& o, int n) {
  if (o.s.empty()) return {1, (std::uint32_t{1} << (n - 1)) - 1};
  return parse_range(o.s);
}

TableMethod method_of(const Options& o) {
  if (o.method == "brute") return TableMethod::kBruteForce;
  if (o.method == "recipe") return TableMethod::kRecipe;
  throw UsageError("--method must be recipe or brute");
}

void require_recipe_domain(TableMethod m, Index s) {
  if (m == TableMethod::kRecipe && !recipe_applies(s)) {
    throw UsageError("the recipe needs S > 8 and not a power of two (S = " + std::to_string(s) +
                     "); use --method brute");
  }
}

void emit(const Options& o, const std::string& bytes, std::ostream& out) {
  if (o.out.empty()) {
    out << bytes;
  } else {
    write_file_atomic(o.out, bytes);
  }
}

std::string sign_text(int sign, Index index) { return (sign < 0 ? "-" : "+") + std::to_string(index); }

int cmd_mult(const Options& o, std::ostream& out) {
  const int n = exponent_of(o);
  if (n < 2 || n > kMaxExponent) throw UsageError("--n must lie in 2.." + std::to_string(kMaxExponent));
  if (o.operands.size() != 2) throw UsageError("mult takes two basis indices");
  const AlgebraContext ctx(n);
  const Index a = parse_number(o.operands[0], "index"), b = parse_number(o.operands[1], "index");
  if (!ctx.contains(a) || !ctx.contains(b)) {
    throw UsageError("indices must lie below " + std::to_string(ctx.dimension()));
  }
  const SignedBasis p = basis_product(ctx, a, b);
  out << sign_text(p.sign, p.index) << "\n";
  return kExitOk;
}

int cmd_trips(const Options& o, std::ostream& out) {
  const int n = exponent_of(o);
  if (n < 2 || n > kMaxExponent) throw UsageError("--n must lie in 2.." + std::to_string(kMaxExponent));
  if (!o.list) {
    out << trip_count(n) << "\n";
    return kExitOk;
  }
  guard_exponent(n);
  const auto trips = enumerate_trips(AlgebraContext(n));
  for (const Trip& t : trips) out << "(" << t.a << ", " << t.b << ", " << t.c << ")\n";
  out << trips.size() << " trips\n";
  return kExitOk;
}

int cmd_boxkites(const Options& o, std::ostream& out) {
  const int n = exponent_of(o);
  guard_exponent(n);
  const Range range = strut_range(o, n);
  ordered_json report = ordered_json::array();
  for (Index s = range.first; s <= range.last; ++s) {
    const StrutContext sc = strut_of(n, s);
    for (const BoxKite& bk : enumerate_candidate_boxkites(sc)) {
      const Classification c = classify_boxkite(bk);
      if (o.format == "json") {
        report.push_back({{"N", n},
                          {"S", s},
                          {"low", bk.low},
                          {"kind", to_string(c.kind)},
                          {"reversals", c.reversals},
                          {"viable", bk.functional},
                          {"dmz_edges", c.dmz_edges}});
        continue;
      }
      out << "N=" << n << " S=" << s << " ";
      for (int k = 0; k < 6; ++k) out << BoxKite::letter_name(k) << "=" << bk.low[k] << " ";
      out << to_string(c.kind) << " reversals=" << c.reversals << (bk.functional ? " viable" : " hidden") << "\n";
    }
  }
  if (o.format == "json") out << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_et(const Options& o, std::ostream& out) {
  const int n = exponent_of(o);
  if (o.s.empty()) throw UsageError("--s is required");
  const Range r = parse_range(o.s);
  if (r.first != r.last) throw UsageError("et takes a single S; use flipbook for sweeps");
  const StrutContext sc = strut_of(n, r.first);
  const TableMethod method = method_of(o);
  require_recipe_domain(method, sc.strut());
  const EmanationTable et = build_table(sc, method, o.threads);
  if (const auto v = et.invariant_violations(); !v.empty()) {
    throw std::logic_error("table invariant violated: " + v.front());
  }

  if (o.format == "csv") {
    emit(o, export_csv(et), out);
  } else if (o.format == "json") {
    emit(o, export_json(et, boxkite_count(sc)), out);
  } else {
    const ImageFormat f = parse_image_format(o.format);
    const Palette palette;
    emit(o, render_image(et, palette, f, {o.overlay, 0}), out);
  }
  return kExitOk;
}

int cmd_counts(const Options& o, std::ostream& out) {
  const int n = exponent_of(o);
  guard_exponent(n);
  const Range range = strut_range(o, n);
  ordered_json report = ordered_json::array();
  for (Index s = range.first; s <= range.last; ++s) {
    const StrutContext sc = strut_of(n, s);
    const BoxKiteCount c = boxkite_count(sc);
    if (o.format == "json") {
      report.push_back({{"N", n}, {"S", s}, {"band", to_string(c.band)}, {"boxkite_count", c.count}});
    } else {
      out << "N=" << n << " S=" << s << " band=" << to_string(c.band) << " boxkites=" << c.count << "\n";
    }
  }
  if (o.format == "json") out << report.dump(2) << "\n";
  return kExitOk;
}

CheckReport viziers_suite(const StrutContext& sc) {
  CheckReport report("viziers N=" + std::to_string(sc.exponent()) + " S=" + std::to_string(sc.strut()));
  for (const BoxKite& bk : enumerate_candidate_boxkites(sc)) {
    std::string name;
    for (Index l : bk.low) name += std::to_string(l) + " ";
    const Classification c = classify_boxkite(bk);
    report.check(c.consistent(), "box-kite " + name + "is neither fully viable nor fully hidden");
    const VizierReport v = viziers_check(bk);
    report.check(v.vz1_unsigned(), "box-kite " + name + "fails VZ1 indices");
    report.check(v.vz3_unsigned(), "box-kite " + name + "fails VZ3 indices");
    if (bk.functional) report.check(v.vz2(), "viable box-kite " + name + "fails VZ2");
  }
  return report;
}

CheckReport hidefill_suite(const StrutContext& sc, const std::vector<Index>& bits) {
  CheckReport report("hide/fill N=" + std::to_string(sc.exponent()) + " S=" + std::to_string(sc.strut()));
  const Index limit = bits.empty() ? sc.generator() : bits.front();
  for (Index u = 1; u < limit; ++u) {
    for (Index v = u + 1; v < limit; ++v) {
      if (u == sc.strut() || v == sc.strut() || !dmz_test(sc, u, v)) continue;
      const auto status = hidefill_probe(sc, u, v, bits);
      bool alternates = true;
      std::string seq;
      for (std::size_t k = 0; k < status.size(); ++k) {
        alternates = alternates && status[k] == (k % 2 == 0);
        seq += status[k] ? "DMZ " : "none ";
      }
      report.check(alternates, "(" + std::to_string(u) + ", " + std::to_string(v) + "): " + seq);
    }
  }
  return report;
}

std::vector<Index> parse_bits(const std::string& text) {
  std::vector<Index> bits;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    bits.push_back(parse_number(piece, "bit"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return bits;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CheckReport> reports;
  const std::string& suite = o.suite;

  if (suite == "numberhub") {
    const Range nr = parse_range(o.n.empty() ? "5" : o.n);
    for (std::uint32_t n = nr.first; n <= nr.last; ++n) {
      guard_exponent(static_cast<int>(n));
      reports.push_back(number_hub_check(static_cast<int>(n)));
    }
  } else {
    const bool nested = suite == "recursion" || suite == "fourcorners" || suite == "frenchwindows";
    const int n = exponent_of(o, suite == "hidefill" ? 6 : 5);
    guard_exponent(nested ? n + 1 : n);
    const Range range = o.s.empty() && suite == "hidefill" ? Range{1, 7} : strut_range(o, n);
    const std::vector<Index> bits = parse_bits(o.bits);
    for (Index s = range.first; s <= range.last; ++s) {
      const StrutContext sc = strut_of(n, s);
      if (suite == "viziers") {
        reports.push_back(viziers_suite(sc));
      } else if (suite == "equivalence") {
        require_recipe_domain(TableMethod::kRecipe, s);
        reports.push_back(recipe_vs_bruteforce(sc));
      } else if (suite == "hidefill") {
        reports.push_back(hidefill_suite(sc, bits));
      } else if (suite == "recursion") {
        reports.push_back(skybox_embed_check(s, n));
      } else if (suite == "fourcorners") {
        reports.push_back(four_corners_check(s, n));
      } else if (suite == "frenchwindows") {
        reports.push_back(french_windows_check(s, n));
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
    }
  }

  return report_checks(suite, reports, o.format == "json", out, err);
}

SweepOptions sweep_options(const Options& o) {
  SweepOptions so;
  so.format = parse_image_format(o.format == "csv" ? "ppm" : o.format);
  so.method = method_of(o);
  so.skybox_overlay = o.overlay;
  so.threads = o.threads;
  return so;
}

void print_sequence(const FrameSequence& seq, std::ostream& out, std::ostream& err) {
  for (const Frame& f : seq.frames) out << f.parameter << " " << f.path.string() << "\n";
  for (const auto& note : seq.notices) err << "notice: " << note << "\n";
}

int cmd_flipbook(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = exponent_of(o);
  guard_exponent(n);
  if (o.s.empty() || o.out.empty()) throw UsageError("flipbook needs --s a..b and --out DIR");
  const Range r = parse_range(o.s);
  print_sequence(flipbook(n, r.first, r.last, o.out, sweep_options(o)), out, err);
  return kExitOk;
}

int cmd_balloon(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.s.empty() || o.n.empty() || o.out.empty()) throw UsageError("balloon needs --s S, --n a..b and --out DIR");
  const Range sr = parse_range(o.s);
  if (sr.first != sr.last) throw UsageError("balloon takes a single S");
  const Range nr = parse_range(o.n);
  guard_exponent(static_cast<int>(nr.first));
  guard_exponent(static_cast<int>(nr.last));
  print_sequence(balloon_ride(sr.first, static_cast<int>(nr.first), static_cast<int>(nr.last), o.out, sweep_options(o)),
                 out, err);
  return kExitOk;
}

}  // namespace

int report_checks(const std::string& suite, const std::vector<CheckReport>& reports, bool json, std::ostream& out,
                  std::ostream& err) {
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (json) {
    ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed;
    j["checks"] = ordered_json::array();
    for (const CheckReport& r : reports) {
      j["checks"].push_back({{"name", r.name},
                             {"passed", r.passed},
                             {"cells_checked", r.cells_checked},
                             {"mismatch_count", r.mismatch_count},
                             {"mismatches", r.mismatches}});
    }
    out << j.dump(2) << "\n";
  }
  std::ostream& text = json ? err : out;
  for (const CheckReport& r : reports) {
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cells_checked << " checks";
    if (!r.passed) text << ", " << r.mismatch_count << " mismatches";
    text << ")\n";
    for (const auto& m : r.mismatches) text << "  " << m << "\n";
  }
  text << suite << ": " << (passed ? "all checks passed" : "FAILED") << "\n";
  return passed ? kExitOk : kExitCheckFailed;
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_number(text, "value");
    return {v, v};
  }
  const Range r{parse_number(std::string_view(text).substr(0, dots), "range start"),
                parse_number(std::string_view(text).substr(dots + 2), "range end")};
  if (r.first > r.last) throw UsageError("range '" + text + "' is descending");
  return r;
}

int max_exponent() {
  const char* env = std::getenv("ZDSKY_MAX_N");
  if (env == nullptr || *env == '\0') return 8;
  const auto v = parse_number(env, "ZDSKY_MAX_N");
  if (v < 2 || v > static_cast<std::uint32_t>(kMaxExponent)) {
    throw UsageError("ZDSKY_MAX_N must lie in 2.." + std::to_string(kMaxExponent));
  }
  return static_cast<int>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor box-kites and emanation tables of the 2^N-ions", "zdsky"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub, bool with_s) {
    sub->add_option("--n", o.n, "Cayley-Dickson exponent N (or a..b where sweeps allow)");
    if (with_s) sub->add_option("--s", o.s, "strut constant S, or an inclusive range a..b");
    sub->add_option("--format", o.format, "csv|json|ppm|svg")->check(CLI::IsMember({"csv", "json", "ppm", "svg"}));
  };
  const auto tables = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "recipe|brute")->check(CLI::IsMember({"recipe", "brute"}));
    sub->add_option("--out", o.out, "output file (et) or directory (sweeps)");
    sub->add_flag("--overlay", o.overlay, "outline nested skyboxes in images");
    sub->add_option("--threads", o.threads, "worker threads for brute-force tables (0 = all cores)");
  };

  auto* mult = app.add_subcommand("mult", "signed product of two basis units");
  common(mult, false);
  mult->add_option("operands", o.operands, "two basis indices")->expected(2);

  auto* trips = app.add_subcommand("trips", "count (or --list) associative triples");
  common(trips, false);
  trips->add_flag("--list", o.list, "print every trip in cyclic positive order");

  auto* boxkites = app.add_subcommand("boxkites", "enumerate and classify box-kite candidates");
  common(boxkites, true);

  auto* et = app.add_subcommand("et", "build and write an emanation table");
  common(et, true);
  tables(et);

  auto* counts = app.add_subcommand("counts", "box-kite counts and bands");
  common(counts, true);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "viziers|recursion|fourcorners|frenchwindows|numberhub|hidefill|equivalence")
      ->required()
      ->check(CLI::IsMember(
          {"viziers", "recursion", "fourcorners", "frenchwindows", "numberhub", "hidefill", "equivalence"}));
  common(verify, true);
  verify->add_option("--bits", o.bits, "hidefill: comma-separated bits added to S in turn");

  auto* flip = app.add_subcommand("flipbook", "images for fixed N across a range of S");
  common(flip, true);
  tables(flip);

  auto* balloon = app.add_subcommand("balloon", "images for fixed S across a range of N");
  common(balloon, true);
  tables(balloon);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (mult->parsed()) return cmd_mult(o, out);
    if (trips->parsed()) return cmd_trips(o, out);
    if (boxkites->parsed()) return cmd_boxkites(o, out);
    if (et->parsed()) return cmd_et(o, out);
    if (counts->parsed()) return cmd_counts(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (flip->parsed()) return cmd_flipbook(o, out, err);
    if (balloon->parsed()) return cmd_balloon(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedFormat& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zdsky::cli
