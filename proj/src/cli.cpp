#include "immanants/cli.hpp"

#include "immanants/conjecture.hpp"
#include "immanants/moments.hpp"
#include "immanants/montecarlo.hpp"
#include "immanants/weingarten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace immanants::cli {

using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  std::string out_path;

  int prop = 0;
  std::string n_text;
  std::string N_text;
  std::string gamma_text;
  bool gamma_all = false;
  bool force = false;
  std::string ensemble = "unitary";
  int power = 2;
  long samples = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string formula;
  bool symbolic = false;
};

std::string scalar_text(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Flattens {"inputs": {...}, ...} into ordered (column, value) pairs.
std::vector<std::pair<std::string, std::string>> flatten(const Json& record) {
  std::vector<std::pair<std::string, std::string>> cells;
  for (const auto& [key, value] : record.items()) {
    if (value.is_object()) {
      for (const auto& [inner, v] : value.items()) cells.emplace_back(inner, scalar_text(v));
    } else {
      cells.emplace_back(key, scalar_text(value));
    }
  }
  return cells;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const std::vector<Json>& records, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << Json(records).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (records.empty()) return;
    const auto header = flatten(records.front());
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_escape(header[i].first);
    out << "\n";
    for (const auto& r : records) {
      const auto cells = flatten(r);
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i].second);
      out << "\n";
    }
    return;
  }
  for (const auto& r : records) {
    bool first = true;
    for (const auto& [key, value] : flatten(r)) {
      out << (first ? "" : " ") << key << "=";
      if (value.find(' ') == std::string::npos) out << value;
      else out << std::quoted(value);
      first = false;
    }
    out << "\n";
  }
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<int>(value);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

std::pair<long, long> range_or(const std::string& text, std::pair<long, long> fallback, const char* what) {
  if (text.empty()) return fallback;
  try {
    return parse_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid ") + what + " range: " + e.what());
  }
}

Partition parse_gamma(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid partition: ") + e.what());
  }
}

// Either the single --gamma, or every partition of each n in --n.
std::vector<Partition> gamma_grid(const Options& o, int max_n) {
  if (!o.gamma_text.empty()) {
    if (o.gamma_all) throw UsageError("--gamma and --gamma-all are mutually exclusive");
    auto g = parse_gamma(o.gamma_text);
    if (g.size() < 1 || g.size() > max_n) {
      throw UsageError("partition size must be in 1.." + std::to_string(max_n));
    }
    return {g};
  }
  if (o.n_text.empty()) throw UsageError("either --gamma or --n is required");
  const auto [lo, hi] = range_or(o.n_text, {0, 0}, "--n");
  if (lo < 1 || hi > max_n) throw UsageError("--n must lie in 1.." + std::to_string(max_n));
  std::vector<Partition> grid;
  for (long n = lo; n <= hi; ++n) {
    for (const auto& g : partitions_of(static_cast<int>(n))) grid.push_back(g);
  }
  return grid;
}

void notice_pole(std::ostream& err, const std::string& what, long N, const PoleError& e) {
  err << "notice: skipping " << what << " at N = " << N << " (pole: " << e.what() << ")\n";
}

int run_verify(const Options& o, std::vector<Json>& records, std::ostream& err) {
  static constexpr int limits[] = {0, 4, 2, 3, 4, 3};
  if (o.prop < 1 || o.prop > 5) throw UsageError("--prop must be one of 1, 2, 3, 4, 5");
  const int limit = limits[o.prop];

  std::vector<Partition> gammas;
  std::vector<int> sizes;
  if (o.prop == 2 || o.prop == 5) {
    if (!o.gamma_text.empty()) throw UsageError("--prop " + std::to_string(o.prop) + " takes --n, not --gamma");
    const auto [lo, hi] = range_or(o.n_text, {1, limit}, "--n");
    if (lo < 1 || hi > limit) throw UsageError("--n must lie in 1.." + std::to_string(limit) + " for this check");
    for (long n = lo; n <= hi; ++n) sizes.push_back(static_cast<int>(n));
  } else {
    Options copy = o;
    if (copy.n_text.empty() && copy.gamma_text.empty()) copy.n_text = "1.." + std::to_string(limit);
    gammas = gamma_grid(copy, limit);
  }

  bool all_equal = true;
  auto N_range = [&](int n) { return range_or(o.N_text, {2L * n, 2L * n + 4}, "--N"); };
  auto record = [&](Json inputs, const Rational& exact, const Rational& oracle) {
    const bool equal = exact == oracle;
    all_equal = all_equal && equal;
    records.push_back(Json{{"command", "verify"},
                           {"inputs", std::move(inputs)},
                           {"exact", to_string(exact)},
                           {"oracle", to_string(oracle)},
                           {"equal", equal}});
  };

  for (const auto& gamma : gammas) {
    const auto [lo, hi] = N_range(gamma.size());
    for (long N = lo; N <= hi; ++N) {
      if (N < gamma.size()) {
        err << "notice: skipping gamma = " << gamma.to_string() << " at N = " << N << " (N < n)\n";
        continue;
      }
      try {
        Rational exact;
        Rational oracle;
        switch (o.prop) {
          case 1: exact = unitary_imm_sq(gamma, N); oracle = oracle_prop1(gamma, N); break;
          case 3: exact = coe_imm_sq(gamma, N); oracle = oracle_coe(gamma, N); break;
          default: exact = orth_imm_sq(gamma, N); oracle = oracle_orth(gamma, N); break;
        }
        record(Json{{"prop", o.prop}, {"gamma", gamma.to_string()}, {"N", N}}, exact, oracle);
      } catch (const PoleError& e) {
        notice_pole(err, "gamma = " + gamma.to_string(), N, e);
      }
    }
  }

  for (int n : sizes) {
    const auto [lo, hi] = N_range(n);
    for (long N = lo; N <= hi; ++N) {
      if (N < n) {
        err << "notice: skipping n = " << n << " at N = " << N << " (N < n)\n";
        continue;
      }
      try {
        if (o.prop == 2) {
          record(Json{{"prop", 2}, {"n", n}, {"N", N}}, unitary_per_4(n, N), oracle_prop2(n, N));
          continue;
        }
        for (const auto ensemble : {Ensemble::unitary, Ensemble::orthogonal}) {
          const auto closed = perm_poly_quad(n, N, ensemble);
          const auto brute = oracle_perm_poly(n, N, ensemble);
          for (int k1 = 0; k1 <= n; ++k1) {
            for (int k2 = 0; k2 <= n; ++k2) {
              const Rational expected = k1 == k2 ? closed[static_cast<std::size_t>(n - k1)] : Rational(0);
              record(Json{{"prop", 5},
                          {"ensemble", std::string(to_string(ensemble))},
                          {"n", n},
                          {"N", N},
                          {"k1", k1},
                          {"k2", k2}},
                     expected, brute[static_cast<std::size_t>(k1)][static_cast<std::size_t>(k2)]);
            }
          }
        }
      } catch (const PoleError& e) {
        notice_pole(err, "n = " + std::to_string(n), N, e);
      }
    }
  }
  return all_equal ? ok : mismatch;
}

int run_conjecture(const Options& o, std::vector<Json>& records, std::ostream& err) {
  if (o.n_text.empty()) throw UsageError("--n is required");
  const int n = parse_int(o.n_text, "--n");
  if (n < 1) throw UsageError("--n must be positive");
  if (n > 7) throw UsageError("--n above 7 is not supported");
  if (n > 6) {
    if (!o.force) throw UsageError("--n above 6 requires --force");
    err << "warning: n = " << n << " lies beyond the range n <= 6 covered by the reference checks\n";
  }
  const auto [lo, hi] = range_or(o.N_text, default_conjecture_range(n), "--N");
  if (lo < 1 || hi < lo) throw UsageError("--N range must be positive and non-empty");

  const auto reports = check_conjecture(n, lo, hi, o.threads);
  bool all = true;
  for (const auto& r : reports) {
    for (long N : r.skipped_poles) {
      err << "notice: skipping gamma = " << r.gamma.to_string() << " at N = " << N << " (pole)\n";
    }
    all = all && r.verified;
    Json record{{"command", "conjecture"},
                {"inputs", Json{{"n", n}, {"gamma", r.gamma.to_string()}, {"N_lo", lo}, {"N_hi", hi}}}};
    if (!r.tested_N.empty()) {
      const long first = r.tested_N.front();
      record["exact"] = r.first_failure ? to_string(r.first_failure->rhs) : to_string(conjecture_rhs(r.gamma, first));
      record["exact_N"] = r.first_failure ? r.first_failure->N : first;
    } else {
      record["exact"] = nullptr;
      record["exact_N"] = nullptr;
    }
    record["tested"] = r.tested_N.size();
    record["skipped"] = r.skipped_poles.size();
    record["degree_bound"] = r.degree_bound;
    record["verified"] = r.verified;
    record["certified"] = r.certified;
    if (r.first_failure) {
      record["failure_N"] = r.first_failure->N;
      record["lhs"] = to_string(r.first_failure->lhs);
      record["rhs"] = to_string(r.first_failure->rhs);
    }
    records.push_back(std::move(record));
  }
  return all ? ok : mismatch;
}

int run_mc(const Options& o, std::vector<Json>& records, std::ostream&) {
  Ensemble ensemble;
  try {
    ensemble = parse_ensemble(o.ensemble);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.gamma_text.empty()) throw UsageError("--gamma is required");
  const auto gamma = parse_gamma(o.gamma_text);
  if (o.N_text.empty()) throw UsageError("--N is required");
  const long N = parse_int(o.N_text, "--N");
  if (o.samples < 2) throw UsageError("--samples must be at least 2");

  MomentResult exact;
  MCEstimate estimate;
  try {
    exact = exact_moment(ensemble, gamma, N, o.power);
    estimate = mc_moment(ensemble, gamma, static_cast<int>(N), o.power, o.samples, o.seed, o.threads);
  } catch (const PoleError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double target = to_double(exact.value);
  const double z = estimate.std_error > 0 ? (estimate.mean - target) / estimate.std_error : 0.0;
  records.push_back(Json{{"command", "mc"},
                         {"inputs",
                          Json{{"ensemble", std::string(to_string(ensemble))},
                               {"gamma", gamma.to_string()},
                               {"N", N},
                               {"power", o.power}}},
                         {"exact", to_string(exact.value)},
                         {"mean", estimate.mean},
                         {"stderr", estimate.std_error},
                         {"z", z},
                         {"samples", estimate.samples},
                         {"seed", estimate.seed}});
  return std::abs(z) <= 4.0 ? ok : mismatch;
}

int run_table(const Options& o, std::vector<Json>& records, std::ostream& err) {
  const std::string& f = o.formula;
  const bool by_n = f == "prop2" || f == "perm-poly";
  const bool by_gamma = f == "prop1" || f == "coe" || f == "orth" || f == "conj-lhs" || f == "conj-rhs" ||
                        f == "wg-unitary" || f == "wg-orthogonal" || f == "wg-coe";
  if (!by_n && !by_gamma) {
    throw UsageError("unknown --formula '" + f +
                     "' (prop1, prop2, coe, orth, conj-lhs, conj-rhs, wg-unitary, wg-orthogonal, wg-coe, perm-poly)");
  }
  const bool symbolic_ok = f == "prop1" || f == "prop2" || f == "coe" || f == "orth";
  if (o.symbolic && !symbolic_ok) throw UsageError("--symbolic is available for prop1, prop2, coe and orth");
  if (o.N_text.empty() && !o.symbolic) throw UsageError("--N is required");
  std::optional<std::pair<long, long>> N_range;
  if (!o.N_text.empty()) N_range = range_or(o.N_text, {0, 0}, "--N");

  auto emit_points = [&](Json inputs, const std::string& label, const std::function<Rational(long)>& value,
                         const std::optional<RationalFunction>& closed) {
    if (closed) {
      Json r{{"command", "table"}, {"inputs", inputs}, {"symbolic", closed->to_string()}};
      if (!N_range) records.push_back(std::move(r));
    }
    if (!N_range) return;
    for (long N = N_range->first; N <= N_range->second; ++N) {
      try {
        Json in = inputs;
        in["N"] = N;
        Json r{{"command", "table"}, {"inputs", std::move(in)}, {"exact", to_string(value(N))}};
        if (closed) r["symbolic"] = closed->to_string();
        records.push_back(std::move(r));
      } catch (const PoleError& e) {
        notice_pole(err, label, N, e);
      }
    }
  };

  if (by_n) {
    if (o.n_text.empty()) throw UsageError("--n is required for " + f);
    const auto [lo, hi] = range_or(o.n_text, {0, 0}, "--n");
    const int limit = f == "prop2" ? 8 : 10;
    if (lo < 1 || hi > limit) throw UsageError("--n must lie in 1.." + std::to_string(limit));
    for (long n = lo; n <= hi; ++n) {
      const int ni = static_cast<int>(n);
      if (f == "prop2") {
        std::optional<RationalFunction> closed;
        if (o.symbolic) closed = unitary_per_4_rf(ni).reduced();
        emit_points(Json{{"formula", f}, {"n", ni}}, "n = " + std::to_string(ni),
                    [&](long N) { return unitary_per_4(ni, N); }, closed);
        continue;
      }
      for (const auto ensemble : {Ensemble::unitary, Ensemble::orthogonal}) {
        for (int m = 0; m <= ni; ++m) {
          emit_points(Json{{"formula", f}, {"ensemble", std::string(to_string(ensemble))}, {"n", ni}, {"m", m}},
                      "n = " + std::to_string(ni),
                      [&](long N) { return perm_poly_quad(ni, N, ensemble)[static_cast<std::size_t>(m)]; },
                      std::nullopt);
        }
      }
    }
    return ok;
  }

  const int limit = f == "conj-lhs" || f == "conj-rhs" || f == "wg-orthogonal" || f == "wg-coe" ? 7 : 10;
  for (const auto& gamma : gamma_grid(o, limit)) {
    std::function<Rational(long)> value;
    std::optional<RationalFunction> closed;
    if (f == "prop1") {
      value = [&](long N) { return unitary_imm_sq(gamma, N); };
      if (o.symbolic) closed = unitary_imm_sq_rf(gamma).reduced();
    } else if (f == "coe") {
      value = [&](long N) { return coe_imm_sq(gamma, N); };
      if (o.symbolic) closed = coe_imm_sq_rf(gamma).reduced();
    } else if (f == "orth") {
      value = [&](long N) { return orth_imm_sq(gamma, N); };
      if (o.symbolic) closed = orth_imm_sq_rf(gamma).reduced();
    } else if (f == "conj-lhs") {
      value = [&](long N) { return conjecture_lhs(gamma, N); };
    } else if (f == "conj-rhs") {
      value = [&](long N) { return conjecture_rhs(gamma, N); };
    } else if (f == "wg-unitary") {
      value = [&](long N) { return wg_unitary(gamma, N); };
    } else if (f == "wg-orthogonal") {
      value = [&](long N) { return wg_orthogonal(gamma, N); };
    } else {
      value = [&](long N) { return wg_coe(gamma, N); };
    }
    const char* key = f.rfind("wg-", 0) == 0 ? "mu" : "gamma";
    emit_points(Json{{"formula", f}, {key, gamma.to_string()}}, std::string(key) + " = " + gamma.to_string(), value,
                closed);
  }
  return ok;
}

}  // namespace

std::pair<long, long> parse_range(const std::string& text) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("'" + text + "' is not an integer or a..b range");
    }
    if (used != part.size()) throw std::invalid_argument("'" + text + "' is not an integer or a..b range");
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = number(text);
    return {v, v};
  }
  const long lo = number(text.substr(0, dots));
  const long hi = number(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact and Monte Carlo moments of immanants of Haar random matrix blocks", "immanants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out_path, "Write records to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Compare closed forms with brute-force oracles");
  verify->add_option("--prop", o.prop, "1 unitary |Imm|^2, 2 unitary |Per|^4, 3 COE, 4 orthogonal, 5 Per(U - z)")
      ->required();
  verify->add_option("--n", o.n_text, "Size n or range a..b");
  verify->add_option("--gamma", o.gamma_text, "Single partition, e.g. 2,1");
  verify->add_option("--N", o.N_text, "Matrix size N or inclusive range a..b (default 2n..2n+4)");

  auto* conjecture = app.add_subcommand("conjecture", "Check the orthogonal sum identity for every gamma of n");
  conjecture->add_option("--n", o.n_text, "Partition size n")->required();
  conjecture->add_option("--N", o.N_text, "Inclusive range a..b (default covers twice the degree bound)");
  conjecture->add_flag("--force", o.force, "Allow n = 7");
  conjecture->add_option("--threads", o.threads, "Worker threads (default IMMANANTS_THREADS or all cores)");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate against the exact moment");
  mc->add_option("--ensemble", o.ensemble, "unitary, orthogonal or coe");
  mc->add_option("--gamma", o.gamma_text, "Partition, e.g. 2,1")->required();
  mc->add_option("--N", o.N_text, "Matrix size")->required();
  mc->add_option("--power", o.power, "2, or 4 for the unitary permanent");
  mc->add_option("--samples", o.samples, "Number of samples");
  mc->add_option("--seed", o.seed, "64-bit seed");
  mc->add_option("--threads", o.threads, "Worker threads (default IMMANANTS_THREADS or all cores)");

  auto* table = app.add_subcommand("table", "Tabulate a formula over a grid");
  table->add_option("--formula", o.formula,
                    "prop1, prop2, coe, orth, conj-lhs, conj-rhs, wg-unitary, wg-orthogonal, wg-coe, perm-poly")
      ->required();
  table->add_option("--gamma", o.gamma_text, "Single partition (mu for wg-*)");
  table->add_flag("--gamma-all", o.gamma_all, "Every partition of each n in --n");
  table->add_option("--n", o.n_text, "Size n or range a..b");
  table->add_option("--N", o.N_text, "Matrix size N or inclusive range a..b");
  table->add_flag("--symbolic", o.symbolic, "Include the closed form as a rational function of N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return usage;
  }

  std::vector<Json> records;
  int code = ok;
  try {
    if (verify->parsed()) code = run_verify(o, records, err);
    else if (conjecture->parsed()) code = run_conjecture(o, records, err);
    else if (mc->parsed()) code = run_mc(o, records, err);
    else code = run_table(o, records, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  if (o.out_path.empty()) {
    emit(records, o.format, out);
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return usage;
    }
    emit(records, o.format, file);
  }
  return code;
}

}  // namespace immanants::cli
