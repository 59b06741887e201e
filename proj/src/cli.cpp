#include "balancing/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "balancing/identities.hpp"
#include "balancing/report.hpp"
#include "balancing/sequences.hpp"
#include "balancing/series.hpp"

namespace balancing::cli {
namespace {

enum class Format { kPlain, kCsv, kJson };

struct Common {
  std::string format = "plain";
  std::string output;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
};

void add_common(CLI::App* cmd, Common& common, bool with_params) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  cmd->add_option("--output", common.output, "Write to this file instead of standard output");
  if (with_params) {
    cmd->add_option("--a", common.a, "Recurrence coefficient a");
    cmd->add_option("--b", common.b, "Recurrence coefficient b");
  }
}

Format format_of(const Common& common) {
  if (common.format == "csv") return Format::kCsv;
  if (common.format == "json") return Format::kJson;
  return Format::kPlain;
}

SeqParams params_or(const Common& common, SeqParams fallback) {
  if (common.a.has_value() != common.b.has_value()) throw std::invalid_argument("--a and --b must be given together");
  if (!common.a) return fallback;
  return SeqParams(*common.a, *common.b);
}

NRange make_range(std::optional<std::int64_t> n, std::optional<std::int64_t> lo, std::optional<std::int64_t> hi,
                  std::int64_t default_lo) {
  if (n) {
    if (lo || hi) throw std::invalid_argument("--n cannot be combined with --n-min/--n-max");
    return {*n, *n};
  }
  if (!hi) throw std::invalid_argument("either --n or --n-max is required");
  NRange range{lo.value_or(default_lo), *hi};
  if (range.lo > range.hi) {
    throw std::invalid_argument("malformed range: n-min " + std::to_string(range.lo) + " > n-max " +
                                std::to_string(range.hi));
  }
  if (range.lo < 0) throw std::invalid_argument("n must be nonnegative");
  return range;
}

nlohmann::ordered_json params_json(const SeqParams& p) {
  return {{"a", std::to_string(p.a())}, {"b", std::to_string(p.b())}};
}

// Writes "n,value" style output shared by conv and closed.
void write_values(std::ostream& out, Format format, const std::string& label, const SeqParams& params,
                  std::int64_t r, const std::vector<std::pair<std::int64_t, ArbInt>>& rows) {
  switch (format) {
    case Format::kPlain:
      for (const auto& [n, value] : rows) out << n << ' ' << value << '\n';
      break;
    case Format::kCsv:
      out << "n,value\n";
      for (const auto& [n, value] : rows) out << n << ',' << value << '\n';
      break;
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["what"] = label;
      doc["params"] = params_json(params);
      doc["r"] = std::to_string(r);
      auto values = nlohmann::ordered_json::array();
      for (const auto& [n, value] : rows) values.push_back({{"n", std::to_string(n)}, {"value", to_decimal(value)}});
      doc["values"] = std::move(values);
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

int cmd_seq(std::ostream& out, const Common& common, const std::string& kind_name, std::int64_t from,
            std::int64_t to) {
  const auto kind = parse_sequence_kind(kind_name);
  if (!kind) throw std::invalid_argument("unknown sequence kind '" + kind_name + "'");
  if (from < 0 || from > to) throw std::invalid_argument("malformed range: need 0 <= from <= to");
  const bool general = *kind == SequenceKind::kU || *kind == SequenceKind::kV;
  if (!general && common.a) throw std::invalid_argument("--a/--b only apply to --kind u or v");
  const SeqParams params = params_or(common, SeqParams::balancing());
  const auto values = sequence_prefix(*kind, params, to);

  switch (format_of(common)) {
    case Format::kPlain:
      for (std::int64_t n = from; n <= to; ++n) out << n << ' ' << values[static_cast<std::size_t>(n)] << '\n';
      break;
    case Format::kCsv:
      for (std::int64_t n = from; n <= to; ++n) out << (n == from ? "" : ",") << values[static_cast<std::size_t>(n)];
      out << '\n';
      break;
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["kind"] = to_string(*kind);
      if (general) doc["params"] = params_json(params);
      doc["range"] = {std::to_string(from), std::to_string(to)};
      auto list = nlohmann::ordered_json::array();
      for (std::int64_t n = from; n <= to; ++n) list.push_back(to_decimal(values[static_cast<std::size_t>(n)]));
      doc["values"] = std::move(list);
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_conv(std::ostream& out, const Common& common, const std::string& type, std::int64_t r, NRange range) {
  const SeqParams params = params_or(common, SeqParams::balancing());
  Workspace ws(params);
  std::vector<std::pair<std::int64_t, ArbInt>> rows;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    ArbInt value;
    if (type == "plain") {
      value = ws.conv_power(r, n);
    } else if (type == "alt") {
      value = alt_weighted_conv(ws, r, n);
    } else if (type == "binom-u") {
      value = ws.binom_conv_u(r, n);
    } else {
      value = ws.binom_conv_v(r, n);
    }
    rows.emplace_back(n, std::move(value));
  }
  write_values(out, format_of(common), "conv " + type, params, r, rows);
  return kOk;
}

struct IdentitySelection {
  IdentityId id;
  SeqParams params;
  std::int64_t r;
};

IdentitySelection select_identity(const std::string& name, const Common& common, std::optional<std::int64_t> r) {
  const auto id = parse_identity_id(name);
  if (!id) throw std::invalid_argument("unknown identity '" + name + "'");
  const SeqParams params = params_or(common, default_params(*id));
  check_params(*id, params);
  return {*id, params, resolve_r(*id, r)};
}

int cmd_closed(std::ostream& out, const Common& common, const std::string& name, std::optional<std::int64_t> r_in,
               NRange range) {
  const auto sel = select_identity(name, common, r_in);
  Workspace ws(sel.params);
  std::vector<std::pair<std::int64_t, ArbInt>> rows;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) rows.emplace_back(n, evaluate(sel.id, ws, sel.r, n).rhs);
  write_values(out, format_of(common), "closed " + name, sel.params, sel.r, rows);
  return kOk;
}

int cmd_verify(std::ostream& out, const Common& common, const std::string& name, std::optional<std::int64_t> r_in,
               NRange range) {
  const auto sel = select_identity(name, common, r_in);
  const auto report = verify_identity(sel.id, sel.params, sel.r, range);
  switch (format_of(common)) {
    case Format::kPlain:
      out << "identity " << to_string(report.identity) << '\n'
          << "params   a=" << report.params.a() << " b=" << report.params.b() << '\n'
          << "r        " << report.r << '\n'
          << "range    [" << report.range.lo << ", " << report.range.hi << "]\n"
          << "checked  " << report.checked << '\n'
          << "failures " << report.failures.size() << '\n';
      for (const auto& f : report.failures) out << "  n=" << f.n << " lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
      out << (report.passed() ? "PASS" : "FAIL") << '\n';
      break;
    case Format::kCsv:
      out << "identity,a,b,r,lo,hi,checked,failed\n"
          << to_string(report.identity) << ',' << report.params.a() << ',' << report.params.b() << ',' << report.r
          << ',' << report.range.lo << ',' << report.range.hi << ',' << report.checked << ','
          << report.failures.size() << '\n';
      break;
    case Format::kJson:
      out << serialize_report(report) << '\n';
      break;
  }
  return report.passed() ? kOk : kMismatch;
}

int cmd_table(std::ostream& out, const Common& common, const std::string& name, std::optional<std::int64_t> r_in,
              NRange range) {
  const auto sel = select_identity(name, common, r_in);
  const std::int64_t lo = std::max(range.lo, identity_info(sel.id).min_n(sel.r));
  if (lo > range.hi) throw std::invalid_argument("range misses the identity's domain");
  Workspace ws(sel.params);
  const Format format = format_of(common);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool all_match = true;
  if (format == Format::kCsv) out << "n,lhs,rhs,match\n";
  for (std::int64_t n = lo; n <= range.hi; ++n) {
    const auto e = evaluate(sel.id, ws, sel.r, n);
    all_match = all_match && e.matches();
    const char* match = e.matches() ? "yes" : "no";
    if (format == Format::kPlain) {
      out << std::setw(5) << n << "  " << e.lhs << "  " << e.rhs << "  " << match << '\n';
    } else if (format == Format::kCsv) {
      out << n << ',' << e.lhs << ',' << e.rhs << ',' << match << '\n';
    } else {
      rows.push_back({{"n", std::to_string(n)}, {"lhs", to_decimal(e.lhs)}, {"rhs", to_decimal(e.rhs)},
                      {"match", e.matches()}});
    }
  }
  if (format == Format::kJson) {
    nlohmann::ordered_json doc;
    doc["identity"] = name;
    doc["params"] = params_json(sel.params);
    doc["r"] = std::to_string(sel.r);
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
  }
  return all_match ? kOk : kMismatch;
}

int cmd_series_check(std::ostream& out, const Common& common, const std::string& check, std::optional<std::int64_t> r,
                     std::int64_t order) {
  bool ok = false;
  std::int64_t reported_r = 2;
  if (check == "f2") {
    ok = verify_f2_relation(order);
  } else {
    if (!r) throw std::invalid_argument("--check lemma needs --r");
    reported_r = *r;
    ok = verify_lemma_expansion(*r, order);
  }
  switch (format_of(common)) {
    case Format::kPlain:
      out << check << " r=" << reported_r << " order=" << order << ": " << (ok ? "pass" : "fail") << '\n';
      break;
    case Format::kCsv:
      out << "check,r,order,result\n" << check << ',' << reported_r << ',' << order << ',' << (ok ? "pass" : "fail")
          << '\n';
      break;
    case Format::kJson: {
      nlohmann::ordered_json doc{{"check", check}, {"r", std::to_string(reported_r)},
                                 {"order", std::to_string(order)}, {"pass", ok}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return ok ? kOk : kMismatch;
}

int cmd_bench(std::ostream& out, const Common& common, std::int64_t r, std::int64_t n) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](auto start) { return std::chrono::duration<double>(clock::now() - start).count(); };

  auto start = clock::now();
  const ArbInt closed = rhs_general_plain(r, n);
  const double closed_s = seconds(start);

  start = clock::now();
  const ArbInt series = conv_power(SeqParams::balancing(), r, n);
  const double series_s = seconds(start);

  const bool agree = closed == series;
  switch (format_of(common)) {
    case Format::kPlain:
      out << "r=" << r << " n=" << n << '\n'
          << "closed form  " << std::fixed << std::setprecision(6) << closed_s << " s\n"
          << "series power " << series_s << " s\n"
          << "values agree " << (agree ? "yes" : "no") << '\n';
      break;
    case Format::kCsv:
      out << "method,r,n,seconds\n" << std::fixed << std::setprecision(6) << "closed," << r << ',' << n << ','
          << closed_s << '\n'
          << "series," << r << ',' << n << ',' << series_s << '\n';
      break;
    case Format::kJson: {
      nlohmann::ordered_json doc{{"r", std::to_string(r)}, {"n", std::to_string(n)},
                                 {"closed_seconds", closed_s}, {"series_seconds", series_s}, {"agree", agree}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return agree ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balancing-number sequences, convolutions and identity verification", "balconv"};
  app.require_subcommand(1, 1);

  Common common;
  std::string kind = "balancing";
  std::string type = "plain";
  std::string identity;
  std::string check;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n_min;
  std::optional<std::int64_t> n_max;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t order = 0;

  auto add_range = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Single index");
    cmd->add_option("--n-min", n_min, "First index (default: start of the domain)");
    cmd->add_option("--n-max", n_max, "Last index");
  };

  auto* seq = app.add_subcommand("seq", "Print a sequence prefix");
  seq->add_option("--kind", kind, "balancing | lucas-balancing | fibonacci | lucas | u | v");
  seq->add_option("--from", from, "First index");
  seq->add_option("--to", to, "Last index")->required();
  add_common(seq, common, true);

  auto* conv = app.add_subcommand("conv", "Evaluate convolution sums");
  conv->add_option("--type", type, "plain | alt | binom-u | binom-v")
      ->check(CLI::IsMember({"plain", "alt", "binom-u", "binom-v"}));
  conv->add_option("--r", r, "Number of factors")->required();
  add_range(conv);
  add_common(conv, common, true);

  auto* closed = app.add_subcommand("closed", "Evaluate an identity's closed form");
  auto* verify = app.add_subcommand("verify", "Check an identity over a range of n");
  auto* table = app.add_subcommand("table", "Print both sides of an identity side by side");
  for (auto* cmd : {closed, verify, table}) {
    cmd->add_option("--identity", identity, "Identity id")->required();
    cmd->add_option("--r", r, "Number of factors (family identities)");
    add_range(cmd);
    add_common(cmd, common, true);
  }

  auto* series = app.add_subcommand("series-check", "Check generating-function relations as truncated series");
  series->add_option("--check", check, "f2 | lemma")->required()->check(CLI::IsMember({"f2", "lemma"}));
  series->add_option("--r", r, "Power for the lemma check");
  series->add_option("--order", order, "Truncation order")->required();
  add_common(series, common, false);

  auto* bench = app.add_subcommand("bench", "Time the closed form against the series oracle");
  bench->add_option("--r", r, "Number of factors")->required();
  bench->add_option("--n", n, "Index")->required();
  add_common(bench, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  std::ostream& sink = common.output.empty() ? out : buffer;
  int code = kOk;
  try {
    if (seq->parsed()) {
      code = cmd_seq(sink, common, kind, from, to);
    } else if (conv->parsed()) {
      if (*r < 1) throw std::invalid_argument("--r must be >= 1");
      code = cmd_conv(sink, common, type, *r, make_range(n, n_min, n_max, 0));
    } else if (closed->parsed()) {
      code = cmd_closed(sink, common, identity, r, make_range(n, n_min, n_max, 0));
    } else if (verify->parsed()) {
      code = cmd_verify(sink, common, identity, r, make_range(n, n_min, n_max, 0));
    } else if (table->parsed()) {
      code = cmd_table(sink, common, identity, r, make_range(n, n_min, n_max, 0));
    } else if (series->parsed()) {
      code = cmd_series_check(sink, common, check, r, order);
    } else if (bench->parsed()) {
      if (*r < 2 || *n < *r) throw std::invalid_argument("bench needs n >= r >= 2");
      code = cmd_bench(sink, common, *r, *n);
    }
  } catch (const IntegralityViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!common.output.empty()) {
    std::ofstream file(common.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << common.output << "' for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace balancing::cli
