// hankelid: command-line front end for the shifted-Hankel identity checks.
//
// Exit codes: 0 every checked identity held, 1 some identity failed,
// 2 usage or parse error, 3 precondition failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "hankel/detkit.hpp"
#include "hankel/error.hpp"
#include "hankel/identity.hpp"
#include "hankel/json_io.hpp"
#include "hankel/moments.hpp"
#include "hankel/orthopoly.hpp"
#include "hankel/symbolic.hpp"

namespace {

using hankel::Error;
using hankel::ErrorKind;
using hankel::Json;

enum ExitCode : int { kOk = 0, kIdentityFailed = 1, kUsage = 2, kPrecondition = 3 };

struct Range {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

Range parse_range(const std::string& text) {
  auto parse_count = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::ParseError, "malformed range '" + text + "'");
    }
    return std::stoul(part);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_count(text);
  } else {
    r.lo = parse_count(text.substr(0, dots));
    r.hi = parse_count(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw Error(ErrorKind::ParseError, "empty range '" + text + "'");
  return r;
}

Range parse_positive_range(const std::string& text) {
  const Range r = parse_range(text);
  if (r.lo < 1) throw Error(ErrorKind::ParseError, "range '" + text + "' must start at 1 or more");
  return r;
}

hankel::MomentSequence parse_sequence_source(const std::string& source) {
  if (source == "catalan") return hankel::MomentSequence::catalan_sequence();
  if (source.rfind("random:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(source.substr(7));
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) {
      throw Error(ErrorKind::ParseError, "expected random:SEED:COUNT:BOUND, got '" + source + "'");
    }
    try {
      return hankel::MomentSequence::random_moments(std::stoull(parts[0]), std::stoul(parts[1]),
                                                    std::stoull(parts[2]));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "malformed random sequence spec '" + source + "'");
    }
  }
  return hankel::load_sequence_file(source);
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ParseError ? kUsage : kPrecondition;
}

void report_error(ErrorKind kind, const std::string& message) {
  std::cerr << Json{{"error", std::string(hankel::kind_name(kind))}, {"message", message}}.dump()
            << '\n';
}

// One grid cell: a record to print, whether the checked identity held, or
// the error that stopped it.
struct CellOutcome {
  std::optional<Json> record;
  bool holds = true;
  std::optional<Error> error;
};

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

class Writer {
 public:
  Writer(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

  void write(const Json& record) {
    if (!csv_) {
      out_ << record.dump() << '\n';
      return;
    }
    if (!header_written_) {
      std::string line;
      for (const auto& [key, value] : record.items()) line += (line.empty() ? "" : ",") + key;
      out_ << line << '\n';
      header_written_ = true;
    }
    std::string line;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
      if (!first) line += ",";
      line += csv_field(value);
      first = false;
    }
    out_ << line << '\n';
  }

 private:
  std::ostream& out_;
  bool csv_;
  bool header_written_ = false;
};

// Runs cells concurrently and emits them in submission order.
int run_cells(std::vector<std::function<CellOutcome()>> cells, Writer& writer) {
  std::vector<std::future<CellOutcome>> futures;
  futures.reserve(cells.size());
  for (auto& cell : cells) {
    futures.push_back(std::async(std::launch::async, [cell = std::move(cell)]() {
      try {
        return cell();
      } catch (const Error& e) {
        CellOutcome failed;
        failed.error = e;
        return failed;
      }
    }));
  }
  bool any_failed = false;
  std::optional<ErrorKind> first_error;
  for (auto& f : futures) {
    CellOutcome outcome = f.get();
    if (outcome.record) writer.write(*outcome.record);
    if (outcome.error) {
      report_error(outcome.error->kind(), outcome.error->what());
      if (!first_error) first_error = outcome.error->kind();
    }
    any_failed = any_failed || !outcome.holds;
  }
  if (any_failed) return kIdentityFailed;
  if (first_error) return exit_code_for(*first_error);
  return kOk;
}

struct Options {
  std::string seq = "catalan";
  std::string m = "1";
  std::string n = "1";
  std::string engine = "auto";
  std::string form = "original";
  std::string format;
  std::string out;
  std::string matrix;
  std::size_t offset = 0;
  std::string size = "1";
  std::string sizes = "2..6";
  std::string engines = "laplace,bareiss,dodgson";
  std::string check = "restated";
};

using Cells = std::vector<std::function<CellOutcome()>>;

Cells verify_cells(const Options& opt) {
  const auto seq = parse_sequence_source(opt.seq);
  const auto engine = hankel::parse_engine(opt.engine);
  const Range ms = parse_positive_range(opt.m);
  const Range ns = parse_positive_range(opt.n);
  if (opt.form != "original" && opt.form != "restated" && opt.form != "both") {
    throw Error(ErrorKind::ParseError, "unknown form '" + opt.form + "'");
  }
  Cells cells;
  for (std::size_t m = ms.lo; m <= ms.hi; ++m) {
    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
      auto add = [&](bool original) {
        cells.push_back([=] {
          const auto report = original ? hankel::verify_cigler(seq, m, n, engine)
                                       : hankel::verify_restated(seq, m, n, engine);
          return CellOutcome{hankel::to_json(report), report.equal, std::nullopt};
        });
      };
      if (opt.form != "restated") add(true);
      if (opt.form != "original") add(false);
    }
  }
  return cells;
}

Cells poly_cells(const Options& opt) {
  const auto seq = parse_sequence_source(opt.seq);
  const auto engine = hankel::parse_engine(opt.engine);
  const Range ns = parse_range(opt.n);
  Cells cells;
  for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
    cells.push_back([=] {
      return CellOutcome{hankel::to_json(hankel::ortho_coeffs(seq, n, engine)), true, std::nullopt};
    });
  }
  return cells;
}

Cells det_cells(const Options& opt) {
  const auto engine = hankel::parse_engine(opt.engine);
  std::vector<hankel::Matrix> matrices;
  if (!opt.matrix.empty()) {
    matrices.push_back(hankel::load_matrix_file(opt.matrix));
  } else {
    const auto seq = parse_sequence_source(opt.seq);
    const Range sizes = parse_positive_range(opt.size);
    for (std::size_t s = sizes.lo; s <= sizes.hi; ++s) {
      matrices.push_back(hankel::hankel_matrix(seq, opt.offset, s));
    }
  }
  Cells cells;
  for (auto& m : matrices) {
    cells.push_back([m = std::move(m), engine] {
      return CellOutcome{hankel::to_json(hankel::det(m, engine)), true, std::nullopt};
    });
  }
  return cells;
}

Cells trace_cells(const Options& opt) {
  const auto seq = parse_sequence_source(opt.seq);
  const auto engine = hankel::parse_engine(opt.engine);
  const Range ms = parse_positive_range(opt.m);
  const Range ns = parse_positive_range(opt.n);
  Cells cells;
  for (std::size_t m = ms.lo; m <= ms.hi; ++m) {
    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
      cells.push_back([=] {
        const auto trace = hankel::reduction_trace(seq, m, n, engine);
        return CellOutcome{hankel::to_json(trace), trace.all_passed(), std::nullopt};
      });
    }
  }
  return cells;
}

Cells symbolic_cells(const Options& opt) {
  Cells cells;
  if (opt.check == "restated") {
    const Range ms = parse_positive_range(opt.m);
    const Range ns = parse_positive_range(opt.n);
    for (std::size_t m = ms.lo; m <= ms.hi; ++m) {
      for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
        cells.push_back([=] {
          const auto check = hankel::sym_verify_restated(m, n);
          Json record{{"check", "restated"},
                      {"m", m},
                      {"n", n},
                      {"equal", check.equal},
                      {"lhs_terms", check.lhs.terms().size()},
                      {"difference", hankel::to_json(check.difference)}};
          return CellOutcome{std::move(record), check.equal, std::nullopt};
        });
      }
    }
  } else if (opt.check == "affinity") {
    // Every a <= j < b with b - a in --size and a in 0..2.
    const Range widths = parse_positive_range(opt.size);
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t w = widths.lo; w <= widths.hi; ++w) {
        for (std::size_t j = a; j < a + w; ++j) {
          cells.push_back([=] {
            const bool holds = hankel::sym_lambda_affinity(j, a, a + w);
            Json record{{"check", "affinity"}, {"j", j}, {"a", a}, {"b", a + w}, {"equal", holds}};
            return CellOutcome{std::move(record), holds, std::nullopt};
          });
        }
      }
    }
  } else {
    throw Error(ErrorKind::ParseError, "unknown symbolic check '" + opt.check + "'");
  }
  return cells;
}

Cells corollary_cells(const Options& opt) {
  const Range ms = parse_positive_range(opt.m);
  const Range ns = parse_positive_range(opt.n);
  Cells cells;
  for (std::size_t m = ms.lo; m <= ms.hi; ++m) {
    for (std::size_t n = ns.lo; n <= ns.hi; ++n) {
      cells.push_back([=] {
        const auto values = hankel::catalan_corollary(m, n);
        return CellOutcome{hankel::to_json(values, m, n), values.all_equal(), std::nullopt};
      });
    }
  }
  return cells;
}

// Timed sequentially so measurements do not compete for cores.
int run_bench(const Options& opt, Writer& writer) {
  const Range sizes = parse_positive_range(opt.sizes);
  std::vector<hankel::Engine> engines;
  {
    std::stringstream ss(opt.engines);
    for (std::string name; std::getline(ss, name, ',');) {
      engines.push_back(hankel::parse_engine(name));
    }
  }
  if (engines.empty()) throw Error(ErrorKind::ParseError, "--engines is empty");
  for (const auto e : engines) {
    const std::size_t cap = e == hankel::Engine::laplace ? hankel::kLaplaceCap : 12;
    if (sizes.hi > cap) {
      throw Error(ErrorKind::SizeCapExceeded, std::string(hankel::engine_name(e)) +
                                                  " benchmark is capped at size " +
                                                  std::to_string(cap));
    }
  }

  const auto catalan = hankel::MomentSequence::catalan_sequence();
  bool all_agree = true;
  for (std::size_t s = sizes.lo; s <= sizes.hi; ++s) {
    const auto m = hankel::hankel_matrix(catalan, 0, s);
    std::vector<hankel::DetResult> results;
    std::vector<double> seconds;
    for (const auto e : engines) {
      const auto start = std::chrono::steady_clock::now();
      results.push_back(hankel::det(m, e));
      seconds.push_back(
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    bool agree = true;
    for (const auto& r : results) agree = agree && r.value == results.front().value;
    all_agree = all_agree && agree;
    for (std::size_t k = 0; k < engines.size(); ++k) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(9) << seconds[k];
      writer.write(Json{{"size", s},
                        {"engine", std::string(hankel::engine_name(engines[k]))},
                        {"value", results[k].value.to_string()},
                        {"fallback", results[k].fallback},
                        {"seconds", secs.str()},
                        {"max_bits", results[k].max_bits},
                        {"agree", agree}});
    }
  }
  return all_agree ? kOk : kIdentityFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of shifted-moment Hankel determinant identities"};
  app.require_subcommand(1);
  Options opt;

  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", opt.seq, "catalan | PATH.json | random:SEED:COUNT:BOUND");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--m", opt.m, "m range, A..B inclusive");
    sub->add_option("--n", opt.n, "n range, A..B inclusive");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", opt.engine, "laplace | bareiss | dodgson | auto");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json | csv");
    sub->add_option("--out", opt.out, "output path (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "check the identity over an (m, n) grid");
  add_seq(verify);
  add_grid(verify);
  add_engine(verify);
  add_output(verify);
  verify->add_option("--form", opt.form, "original | restated | both");

  auto* poly = app.add_subcommand("poly", "orthogonal polynomial coefficients");
  add_seq(poly);
  poly->add_option("--n", opt.n, "degree range");
  add_engine(poly);
  add_output(poly);

  auto* detcmd = app.add_subcommand("det", "determinant of a matrix file or Hankel matrices");
  detcmd->add_option("--matrix", opt.matrix, "matrix JSON file");
  add_seq(detcmd);
  detcmd->add_option("--offset", opt.offset, "Hankel offset");
  detcmd->add_option("--size", opt.size, "Hankel size range");
  add_engine(detcmd);
  add_output(detcmd);

  auto* trace = app.add_subcommand("trace", "replay the reduction step by step");
  add_seq(trace);
  add_grid(trace);
  add_engine(trace);
  add_output(trace);

  auto* symbolic = app.add_subcommand("symbolic", "polynomial-identity certification");
  add_grid(symbolic);
  symbolic->add_option("--check", opt.check, "restated | affinity");
  symbolic->add_option("--size", opt.size, "b-a range for the affinity check");
  add_output(symbolic);

  auto* corollary = app.add_subcommand("corollary", "Catalan binomial-determinant corollary");
  add_grid(corollary);
  add_output(corollary);

  auto* bench = app.add_subcommand("bench", "compare determinant engines on Catalan Hankel matrices");
  bench->add_option("--sizes", opt.sizes, "size range");
  bench->add_option("--engines", opt.engines, "comma-separated engine list");
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const bool is_bench = bench->parsed();
    const std::string format = opt.format.empty() ? (is_bench ? "csv" : "json") : opt.format;
    if (format != "json" && format != "csv") {
      throw Error(ErrorKind::ParseError, "unknown format '" + format + "'");
    }

    // Build all work before touching the output file.
    Cells cells;
    if (verify->parsed()) cells = verify_cells(opt);
    if (poly->parsed()) cells = poly_cells(opt);
    if (detcmd->parsed()) cells = det_cells(opt);
    if (trace->parsed()) cells = trace_cells(opt);
    if (symbolic->parsed()) cells = symbolic_cells(opt);
    if (corollary->parsed()) cells = corollary_cells(opt);

    std::ofstream file;
    if (!opt.out.empty()) {
      file.open(opt.out);
      if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + opt.out + "'");
    }
    std::ostream& out = opt.out.empty() ? std::cout : file;
    Writer writer(out, format == "csv");
    return is_bench ? run_bench(opt, writer) : run_cells(std::move(cells), writer);
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return exit_code_for(e.kind());
  }
}
