// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact rational equalities; the only
// tolerances are the wall-clock limits printed on each line.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gimel/cube.hpp"
#include "gimel/pipeline.hpp"
#include "gimel/verify.hpp"
#include "planting.hpp"
#include "support.hpp"

using namespace gimel;
using gimel::testing::fixture;
using gimel::testing::fixture_path;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

struct CorpusEntry {
  std::string name;
  std::string pd;
  Rational slope;
};

std::vector<CorpusEntry> corpus() {
  Json j = Json::parse(read_text_file(fixture_path("pd_corpus.json")));
  std::vector<CorpusEntry> out;
  for (const auto& e : j["diagrams"]) {
    out.push_back({e["name"].get<std::string>(), e["pd"].get<std::string>(),
                   parse_rational(e["slope"].get<std::string>())});
  }
  return out;
}

std::string family(int n) { return "p2m37_n" + std::to_string(n) + ".json"; }

GradedFreeComplex six_tensor() { return tensor(fixture("s3_p754.json"), fixture("s3_p976.json")); }

PiecewiseLinear line(const Rational& slope) { return PiecewiseLinear::linear(0, slope); }

// Knot complexes whose reports the identity and theorem criteria range over.
struct Subject {
  std::string name;
  PipelineResult result;
};

std::vector<Subject> all_subjects() {
  std::vector<Subject> out;
  for (int n = 3; n <= 8; ++n) out.push_back({family(n), compute_from_complex(fixture(family(n)))});
  out.push_back({"s3_p754", compute_from_complex(fixture("s3_p754.json"))});
  out.push_back({"s3_p976", compute_from_complex(fixture("s3_p976.json"))});
  out.push_back({"tensor", compute_from_complex(six_tensor())});
  out.push_back({"dual", compute_from_complex(dual(six_tensor()))});
  for (const auto& e : corpus()) {
    Diagram d = parse_pd(e.pd);
    out.push_back({e.name, compute_from_pd(d)});
    if (!d.crossings.empty()) out.push_back({e.name + " mirror", compute_from_pd(mirror(d))});
  }
  return out;
}

// ---------------------------------------------------------------------------

void unknot_calibration(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    PipelineResult r = compute_from_complex(unknot_complex(RingCtx::equivariant(n)));
    PiecewiseLinear expected = PiecewiseLinear::linear(-(n - 1), n - 1);
    o.require(r.report.gamma == expected, "n=" + std::to_string(n) + " gamma " + r.report.gamma.to_string());
    o.require(r.report.gimel == PiecewiseLinear(), "n=" + std::to_string(n) + " gimel " + r.report.gimel.to_string());
  }
}

void two_generator_family(Outcome& o) {
  for (int n = 3; n <= 8; ++n) {
    auto start = std::chrono::steady_clock::now();
    PipelineResult r = compute_from_complex(fixture(family(n)));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Rational m = n - 1;
    Rational half(1, 2);
    Rational at_half = Rational(-n) / m * half;
    Rational at_one = Rational(-(n + 2)) / m + 1 / m;
    PiecewiseLinear expected({0, half, 1}, {0, at_half, at_one});
    o.require(r.report.gimel == expected, "n=" + std::to_string(n) + " gimel " + r.report.gimel.to_string());
    o.require(r.report.gimel.breakpoints().size() == 3, "n=" + std::to_string(n) + " breakpoints");
    o.require(secs < 1.0, "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
  }
}

void tensor_example(Outcome& o) {
  PipelineResult r = compute_from_complex(six_tensor());
  Rational third(1, 3);
  PiecewiseLinear gamma({0, third, 1}, {-2, Rational(4, 3) - 2, 0});
  PiecewiseLinear gimel({0, third, 1}, {0, 0, Rational(-3, 4) + Rational(1, 4)});
  o.require(r.report.gamma == gamma, "gamma " + r.report.gamma.to_string());
  o.require(r.report.gimel == gimel, "gimel " + r.report.gimel.to_string());
  PipelineResult d = compute_from_complex(dual(six_tensor()));
  o.require(d.report.gimel == PiecewiseLinear(), "dual gimel " + d.report.gimel.to_string());
}

void sl2_end_to_end(Outcome& o) {
  auto entries = corpus();
  for (const auto& e : entries) {
    Diagram d = parse_pd(e.pd);
    PipelineResult r = compute_from_pd(d);
    o.require(r.report.gimel == line(e.slope), e.name + " gimel " + r.report.gimel.to_string());
    o.require(r.report.gimel.is_linear(), e.name + " not linear");
    if (!d.crossings.empty()) {
      PipelineResult m = compute_from_pd(mirror(d));
      o.require(m.report.gimel == line(-e.slope), e.name + " mirror gimel " + m.report.gimel.to_string());
      o.require(m.report.gimel.is_linear(), e.name + " mirror not linear");
    }
    if (e.name == "trefoil") {
      // The mirror of this diagram is the left-handed trefoil.
      o.require(compute_from_pd(mirror(d)).report.gimel == line(1), "left-handed trefoil is not t");
    }
    if (e.name == "figure-eight") {
      // u from an exhaustive scan over quantum degrees on the unsimplified cube.
      GradedFreeComplex full = build_equivariant_sl2(d);
      ScalarComplex s = expand(evaluate(full, RingCtx::gimel_potential(2)));
      Vector psi = embed_cochain(s, gornik_cocycle_sl2(d));
      int u = gimel::testing::filtration_oracle(s, psi);
      o.require(r.report.u == u, "figure-eight u " + to_string(r.report.u) + " vs scan " + std::to_string(u));
      o.require(u == 1, "figure-eight scan gives u = " + std::to_string(u) + ", expected 1");
    }
  }
}

void identities(Outcome& o) {
  for (const auto& [name, res] : all_subjects()) {
    const GimelReport& r = res.report;
    Rational m = r.n - 1;
    o.require(r.gamma(1) == r.u, name + ": gamma(1) != u");
    o.require(r.gimel(1) == (r.u - m) / (2 * m), name + ": gimel(1) != (u-n+1)/(2(n-1))");
    o.require(r.gimel(1) == r.s, name + ": gimel(1) != s");
    o.require(r.s == s_general(res.scalar, 1), name + ": s differs from the eigenspace computation");
    o.require(r.gamma(0) == -m, name + ": gamma(0) != -(n-1)");
    o.require(r.gimel(0) == 0, name + ": gimel(0) != 0");
  }
}

void theorem_suite(Outcome& o) {
  for (const auto& [name, res] : all_subjects()) {
    for (const auto& v : {check_cone(res.report.gimel), check_gap(res.report.gimel)}) {
      o.require(v.holds, name + ": " + v.name + " fails at t=" + to_string(v.worst_t));
    }
  }
  auto check_pair = [&o](const std::string& label, const GradedFreeComplex& a, const GradedFreeComplex& b) {
    PiecewiseLinear ga = compute_from_complex(a).report.gimel;
    PiecewiseLinear gb = compute_from_complex(b).report.gimel;
    PiecewiseLinear gab = compute_from_complex(tensor(a, b)).report.gimel;
    for (const auto& v : check_quasi_all(ga, gb, gab)) o.require(v.holds, label + ": " + v.name);
  };
  std::vector<std::string> n3 = {family(3), "s3_p754.json", "s3_p976.json"};
  for (std::size_t i = 0; i < n3.size(); ++i)
    for (std::size_t j = i; j < n3.size(); ++j) check_pair(n3[i] + " # " + n3[j], fixture(n3[i]), fixture(n3[j]));
  for (int n = 4; n <= 8; ++n) check_pair(family(n) + " # itself", fixture(family(n)), fixture(family(n)));
  check_pair("s3_p754 # dual tensor", fixture("s3_p754.json"), dual(six_tensor()));

  std::vector<std::pair<std::string, GradedFreeComplex>> knots;
  for (const auto& e : corpus()) {
    Diagram d = parse_pd(e.pd);
    knots.emplace_back(e.name, compute_from_pd(d).sn);
    if (!d.crossings.empty()) knots.emplace_back(e.name + " mirror", compute_from_pd(mirror(d)).sn);
  }
  for (std::size_t i = 0; i < knots.size(); ++i)
    for (std::size_t j = i; j < knots.size(); ++j)
      check_pair(knots[i].first + " # " + knots[j].first, knots[i].second, knots[j].second);
}

void oracle_equivalence(Outcome& o) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> den_dist(1, 97);
  for (const auto& [name, res] : all_subjects()) {
    for (int i = 0; i < 50; ++i) {
      int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(0, den);
      Rational t(num_dist(rng), den);
      t.canonicalize();
      Rational direct = gamma_at(res.scalar, res.psi, t);
      o.require(res.report.gamma(t) == direct,
                name + " at t=" + to_string(t) + ": sweep " + to_string(res.report.gamma(t)) + " vs " +
                    to_string(direct));
    }
  }
}

void decomposition_recovery(Outcome& o) {
  std::mt19937 rng(20240611);
  for (const char* f : {"s3_p754.json", "s3_p976.json"}) {
    GradedFreeComplex base = fixture(f);
    auto planted = gimel::testing::plant_pairs(base, 5, 12, rng);
    o.require(validate(planted.complex).ok, std::string(f) + ": padded complex invalid");
    o.require(planted.shears_applied == 12, std::string(f) + ": only " + std::to_string(planted.shears_applied) + " shears");
    SimplifyResult simple = gauss_simplify_tracked(planted.complex);
    Decomposition dec = split_components(simple.complex);
    GradedFreeComplex sn = extract_sn(dec);
    o.require(simple.cancelled_pairs == 5, std::string(f) + ": cancelled " + std::to_string(simple.cancelled_pairs));
    o.require(gimel::testing::isomorphic_up_to_scaling(base, sn), std::string(f) + ": summand differs");
    long chi = 0;
    for (const auto& s : dec.summands) chi += euler(s);
    o.require(chi == euler(planted.complex), std::string(f) + ": Euler characteristic not preserved");
    o.require(euler(sn) == 1, std::string(f) + ": S_n has Euler characteristic " + std::to_string(euler(sn)));
  }
}

void structural_validation(Outcome& o) {
  auto check = [&o](const std::string& name, const GradedFreeComplex& c) {
    ComplexReport r = validate(c);
    o.require(r.ok, name + ": " + r.failure);
  };
  for (int n = 3; n <= 8; ++n) {
    check(family(n), fixture(family(n)));
    check(family(n) + " evaluated", evaluate(fixture(family(n)), RingCtx::gimel_potential(n)));
  }
  for (const char* f : {"s3_p754.json", "s3_p976.json"}) {
    check(f, fixture(f));
    check(std::string(f) + " dual", dual(fixture(f)));
  }
  check("tensor", six_tensor());
  check("tensor dual", dual(six_tensor()));
  check("tensor evaluated", evaluate(six_tensor(), RingCtx::gimel_potential(3)));
  for (const auto& e : corpus()) {
    Diagram d = parse_pd(e.pd);
    check(e.name + " cube", build_equivariant_sl2(d));
    check(e.name + " mirror cube", build_equivariant_sl2(mirror(d)));
    GradedFreeComplex sn = compute_from_pd(d).sn;
    check(e.name + " S_2", sn);
    check(e.name + " S_2 dual", dual(sn));
    check(e.name + " S_2 squared", tensor(sn, sn));
  }
}

void genus_bounds(Outcome& o) {
  GimelReport five = compute_from_complex(fixture(family(5))).report;
  o.require(five.genus_bound == Rational(3, 2), "n=5 bound " + to_string(five.genus_bound));
  o.require(five.genus_bound_ceil == 2, "n=5 ceiling " + five.genus_bound_ceil.get_str());
  GimelReport six = compute_from_complex(six_tensor()).report;
  o.require(six.genus_bound > 0, "tensor bound " + to_string(six.genus_bound));
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "unknot calibration", 1.0, unknot_calibration},
      {2, "two-generator family, n = 3..8", 6.0, two_generator_family},
      {3, "tensor example and its dual", 5.0, tensor_example},
      {4, "sl2 end-to-end on the diagram corpus", 30.0, sl2_end_to_end},
      {5, "internal identities on every report", 60.0, identities},
      {6, "cone, gap and quasi-additivity", 60.0, theorem_suite},
      {7, "sweep vs. direct gamma at 50 random t", 60.0, oracle_equivalence},
      {8, "decomposition recovery with planted pairs", 10.0, decomposition_recovery},
      {9, "structural validation of constructed complexes", 30.0, structural_validation},
      {10, "genus bounds", 5.0, genus_bounds},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_seconds) o.require(false, "exceeded the time limit");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed;
    line.precision(2);
    line << secs << " s, limit " << c.limit_seconds << " s)";
    if (!o.ok) line << ": " << o.detail.str();
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
