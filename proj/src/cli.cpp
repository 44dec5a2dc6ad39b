#include "gimel/cli.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gimel/io.hpp"
#include "gimel/pipeline.hpp"
#include "gimel/verify.hpp"

namespace gimel::cli {

namespace fs = std::filesystem;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation:
    case ErrorKind::Internal:
      return kValidationFailure;
    case ErrorKind::Nondegeneracy:
    case ErrorKind::Decomposition:
      return kDecompositionFailure;
    default:
      return kInputError;
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error(ErrorKind::Internal, "SHA-256 failed");
  }
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    fs::path p = fs::path(dir_) / (key + ".json");
    if (!fs::exists(p)) return std::nullopt;
    return read_text_file(p.string());
  }

  void put(const std::string& key, const std::string& content) const {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create cache directory '" + dir_ + "'");
    // Write then rename so concurrent readers never see a partial entry.
    fs::path final_path = fs::path(dir_) / (key + ".json");
    fs::path tmp = final_path;
    tmp += ".tmp";
    write_text_file(tmp.string(), content);
    fs::rename(tmp, final_path, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot finalize cache entry '" + final_path.string() + "'");
  }

 private:
  std::string dir_;
};

struct ComputeArgs {
  std::string fixture, pd, potential = "auto", alpha = "1", output, cache_dir;
  int n = 0;
  int basepoint = 0;
};

std::string run_compute(const ComputeArgs& a) {
  if (a.fixture.empty() == a.pd.empty()) {
    throw Error(ErrorKind::MalformedInput, "compute needs exactly one of --fixture or --pd");
  }
  std::string input_key;
  std::optional<GradedFreeComplex> complex;
  std::optional<Diagram> diagram;
  if (!a.fixture.empty()) {
    complex = load_fixture(a.fixture);
    if (a.n && a.n != complex->ctx.n()) {
      throw Error(ErrorKind::DegreeMismatch, "--n " + std::to_string(a.n) + " does not match the fixture's n = " +
                                                 std::to_string(complex->ctx.n()));
    }
    input_key = "fixture\n" + fixture_to_json(*complex).dump();
  } else {
    if (a.n && a.n != 2) {
      throw Error(ErrorKind::UnsupportedInput, "diagram input is only supported for n = 2");
    }
    diagram = parse_pd(a.pd);
    if (a.basepoint) {
      diagram->basepoint = a.basepoint;
      diagram = parse_pd(diagram->to_string());
    }
    input_key = "pd\n" + diagram->to_string();
  }
  const bool full = a.potential == "auto";
  Cache cache(a.cache_dir);
  std::string key = sha256_hex("gimel-compute-v1\n" + input_key + "\npotential=" + a.potential +
                               (full ? "" : "\nalpha=" + a.alpha));
  if (auto hit = cache.get(key)) return *hit;

  std::string result;
  if (full) {
    PipelineResult r = complex ? compute_from_complex(*complex) : compute_from_pd(*diagram);
    if (complex) r.report.name = complex->name;
    result = dump_json(report_to_json(r.report));
  } else {
    RingCtx pot = RingCtx::specialized_from_string(a.potential);
    Rational alpha = parse_rational(a.alpha);
    GradedFreeComplex c = complex ? *complex : build_equivariant_sl2(*diagram);
    Json j;
    j["n"] = c.ctx.n();
    j["name"] = complex ? complex->name : diagram->to_string();
    j["potential"] = pot.potential_string();
    j["alpha"] = to_string(alpha);
    j["s"] = to_string(s_invariant(c, pot, alpha));
    result = dump_json(j);
  }
  cache.put(key, result);
  return result;
}

std::string run_decompose(const std::string& fixture, const std::string& outdir, int& code) {
  GradedFreeComplex c = load_fixture(fixture);
  require_valid(c);
  GradedFreeComplex simplified = gauss_simplify(c);
  Decomposition dec = split_components(simplified);
  Json j;
  j["name"] = c.name;
  j["summands"] = Json::array();
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    Json s = fixture_to_json(dec.summands[i]);
    s["euler"] = euler(dec.summands[i]);
    j["summands"].push_back(s);
    if (!outdir.empty()) {
      fs::create_directories(outdir);
      save_fixture(dec.summands[i], (fs::path(outdir) / ("summand" + std::to_string(i) + ".json")).string());
    }
  }
  j["sn"] = nullptr;
  code = kOk;
  try {
    GradedFreeComplex sn = extract_sn(dec);
    for (std::size_t i = 0; i < dec.summands.size(); ++i) {
      if (dec.summands[i] == sn) {
        j["sn"] = i;
        break;
      }
    }
  } catch (const Error& e) {
    j["error"] = e.what();
    code = exit_code(e.kind());
  }
  return dump_json(j);
}

Json verdict_json(const PropertyVerdict& v, const std::string& subject) {
  Json j;
  j["property"] = v.name;
  j["subject"] = subject;
  j["holds"] = v.holds;
  j["worst_t"] = to_string(v.worst_t);
  j["slack"] = to_string(v.slack);
  return j;
}

std::string run_verify(const std::vector<std::string>& reports, int& code) {
  if (reports.size() != 1 && reports.size() != 3) {
    throw Error(ErrorKind::MalformedInput, "verify takes one report, or three (A, B, A#B)");
  }
  std::vector<GimelReport> rs;
  for (const auto& p : reports) rs.push_back(load_report(p));
  Json out;
  out["verdicts"] = Json::array();
  bool ok = true;
  auto add = [&](const PropertyVerdict& v, const std::string& subject) {
    ok = ok && v.holds;
    out["verdicts"].push_back(verdict_json(v, subject));
  };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    add(check_cone(rs[i].gimel), reports[i]);
    add(check_gap(rs[i].gimel), reports[i]);
    if (rs[i].n == 2) add(check_linear(rs[i].gimel), reports[i]);
  }
  if (rs.size() == 3) {
    for (const auto& v : check_quasi_all(rs[0].gimel, rs[1].gimel, rs[2].gimel)) {
      if (v.name != "quasi") add(v, reports[2]);
    }
  }
  out["ok"] = ok;
  code = ok ? kOk : kValidationFailure;
  return dump_json(out);
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation of the piecewise-linear concordance invariant gimel_n", "gimel"};
  app.require_subcommand(1);
  std::string cache_dir;
  if (const char* env = std::getenv("GIMEL_CACHE_DIR")) cache_dir = env;
  app.add_option("--cache-dir", cache_dir, "Content-addressed result cache (also GIMEL_CACHE_DIR)");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute the report of a fixture or a planar diagram");
  compute->add_option("--fixture", ca.fixture, "Fixture JSON file");
  compute->add_option("--pd", ca.pd, "Planar diagram, e.g. \"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\"");
  compute->add_option("--n", ca.n, "n (diagram input supports n = 2 only)");
  compute->add_option("--basepoint", ca.basepoint, "Basepoint edge for diagram input (default 1)");
  compute->add_option("--potential", ca.potential, "'auto' for the full report, or a monic potential for s only");
  compute->add_option("--alpha", ca.alpha, "Simple rational root of the potential (with --potential)");
  compute->add_option("-o,--output", ca.output, "Output file (default stdout)");

  std::string dec_fixture, dec_out;
  auto* decompose = app.add_subcommand("decompose", "Split a fixture into summands and identify S_n");
  decompose->add_option("--fixture", dec_fixture, "Fixture JSON file")->required();
  decompose->add_option("-o,--output-dir", dec_out, "Directory for one fixture file per summand");

  std::vector<std::string> tensor_in;
  std::string tensor_out;
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two fixtures (connected sum)");
  tensor_cmd->add_option("inputs", tensor_in, "Two fixture files")->required()->expected(2);
  tensor_cmd->add_option("-o,--output", tensor_out, "Output fixture file (default stdout)");

  std::string dual_in, dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "Dual complex of a fixture (mirror image)");
  dual_cmd->add_option("input", dual_in, "Fixture file")->required();
  dual_cmd->add_option("-o,--output", dual_out, "Output fixture file (default stdout)");

  std::vector<std::string> reports;
  auto* verify_cmd = app.add_subcommand("verify", "Check cone, gap, quasi-additivity and linearity on reports");
  verify_cmd->add_option("--reports", reports, "Report files: A, or A B A#B")->required();

  std::string plot_report, plot_out;
  auto* plot = app.add_subcommand("plot", "Write (t, gimel(t)) samples as CSV");
  plot->add_option("--report", plot_report, "Report file")->required();
  plot->add_option("-o,--output", plot_out, "CSV output file (default stdout)");

  std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, to_string(ErrorKind::MalformedInput), e.what());
    return kInputError;
  }

  try {
    if (*compute) {
      ca.cache_dir = cache_dir;
      emit(run_compute(ca), ca.output, out);
      return kOk;
    }
    if (*decompose) {
      int code = kOk;
      out << run_decompose(dec_fixture, dec_out, code);
      return code;
    }
    if (*tensor_cmd) {
      GradedFreeComplex a = load_fixture(tensor_in[0]);
      GradedFreeComplex b = load_fixture(tensor_in[1]);
      require_valid(a);
      require_valid(b);
      GradedFreeComplex ab = tensor(a, b);
      ab.name = a.name + " # " + b.name;
      require_valid(ab);
      emit(dump_json(fixture_to_json(ab)), tensor_out, out);
      return kOk;
    }
    if (*dual_cmd) {
      GradedFreeComplex a = load_fixture(dual_in);
      require_valid(a);
      GradedFreeComplex d = dual(a);
      require_valid(d);
      emit(dump_json(fixture_to_json(d)), dual_out, out);
      return kOk;
    }
    if (*verify_cmd) {
      int code = kOk;
      out << run_verify(reports, code);
      return code;
    }
    if (*plot) {
      GimelReport r = load_report(plot_report);
      emit(plot_csv(r.gimel), plot_out, out);
      return kOk;
    }
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    print_error(err, to_string(ErrorKind::Io), e.what());
    return kInputError;
  }
  return kOk;
}

}  // namespace gimel::cli
