// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: mrep_acceptance [path-to-mrep-binary]
// Without a binary path the CLI criterion runs the command handler in
// process instead of spawning the executable.

#include "support/fixtures.hpp"

#include "cli/app.hpp"
#include "cli/document.hpp"

#include <mrep/error.hpp>
#include <mrep/oracle.hpp>
#include <mrep/zonotope.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using namespace mrep;
using namespace mrep::test;

namespace {

// Every comparison below is exact rational equality (tolerance 0).
constexpr double kTimeLimitSeconds = 10.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > kTimeLimitSeconds) o.require(false, "time limit exceeded");
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              secs, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

std::string show(const std::vector<Point>& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    s += i ? " (" : "(";
    for (std::size_t j = 0; j < points[i].size(); ++j) {
      s += (j ? "," : "") + to_string(points[i][j]);
    }
    s += ")";
  }
  return s + "}";
}

std::vector<Point> hull_of(const Representation& rep, const Limits& limits = {}) {
  return hull_vertices(candidate_vertices(rep, limits), limits).vertices;
}

const char* kP1Document = R"({
  "schemaVersion": 1, "kind": "zrep", "dim": 2,
  "center": ["0", "0"],
  "generators": [["1", "0"], ["-1", "-1"]],
  "exponents": {"rowHeights": [2], "colWidths": [2],
                "blocks": [{"block": "dense", "rows": 2, "cols": 2, "bits": [1, 0, 0, 1]}]}
})";

std::string p2_document(const char* third) {
  return std::string(R"({
  "schemaVersion": 1, "kind": "zrep", "dim": 2,
  "center": ["0", "0"],
  "generators": [["-0.5", "-0.5"], ["-0.5", "-0.5"], )") +
         third + R"(, ["-0.5", "-0.5"], ["0.5", "0.5"]],
  "exponents": {"rowHeights": [3], "colWidths": [5],
                "blocks": [{"block": "dense", "rows": 3, "cols": 5,
                            "bits": [1, 0, 0, 1, 0,  0, 1, 0, 0, 1,  0, 0, 1, 1, 1]}]}
})";
}

Outcome parallelogram_pair(const char* third) {
  Outcome o;
  const Representation p1 = cli::parse_document(kP1Document).rep;
  const Representation p2 = cli::parse_document(p2_document(third)).rep;
  const auto expected = parallelogram_vertices();
  const auto h1 = hull_of(p1);
  const auto h2 = hull_of(p2);
  o.require(h1 == expected, "P1 hull " + show(h1));
  o.require(h2 == expected, "P2 hull " + show(h2) + " != " + show(expected));
  o.require(sets_equal(p1, p2), "sets_equal(P1, P2) is false");
  return o;
}

struct Pair {
  MRep a;
  MRep b;
};

// Chain-form pairs with d <= 3 and at most 64 distinct candidate points
// for every operation result.
std::vector<Pair> random_pairs(Rng& rng, std::size_t count) {
  std::vector<Pair> pairs;
  while (pairs.size() < count) {
    const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
    Pair p{rng.chain(d, static_cast<std::size_t>(rng.integer(1, 4))),
           rng.chain(d, static_cast<std::size_t>(rng.integer(1, 4)))};
    if (candidate_vertices(minkowski_sum(p.a, p.b)).size() > 64) continue;
    if (candidate_vertices(convex_hull(p.a, p.b)).size() > 64) continue;
    pairs.push_back(std::move(p));
  }
  return pairs;
}

// Command runner: the real executable when a path is given, otherwise
// the in-process handler.
class Runner {
 public:
  Runner(std::string binary, fs::path dir) : binary_(std::move(binary)), dir_(std::move(dir)) {}

  int operator()(const std::vector<std::string>& args) {
    if (binary_.empty()) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      out_ = out.str();
      err_ = err.str();
      return code;
    }
    std::string cmd = quote(binary_);
    for (const auto& a : args) cmd += " " + quote(a);
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
    const int status = std::system(cmd.c_str());
    out_ = cli::read_text_file(out);
    err_ = cli::read_text_file(err);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  const std::string& out() const { return out_; }
  const std::string& err() const { return err_; }

 private:
  static std::string quote(const std::string& s) {
    std::string r = "'";
    for (char c : s) r += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return r + "'";
  }

  std::string binary_;
  fs::path dir_;
  std::string out_;
  std::string err_;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  std::printf("acceptance: exact arithmetic (tolerance 0), %.0fs limit per criterion, seed %llu\n",
              kTimeLimitSeconds, static_cast<unsigned long long>(kSeed));

  criterion(1, "two Z-representations of one parallelogram coincide",
            [] { return parallelogram_pair(R"(["0.5", "0"])"); });
  {
    // Informational only: the same check with (1, 0) as the third generator
    // of P2.
    const Outcome o = parallelogram_pair(R"(["1", "0"])");
    std::printf("     info   : P2 with third generator (1,0): %s%s%s\n",
                o.pass ? "coincides with P1" : "differs", o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
  }

  criterion(2, "zonotope-aware reduction on worked examples", [] {
    Outcome o;
    const VRep five(square_with_apex());
    const Reduction r = reduce(five);
    o.require(r.rep.basis_count() == 3,
              "5-point reduce has " + std::to_string(r.rep.basis_count()) + " basis vectors");
    o.require(hull_of(r.rep) == hull_vertices(five).vertices, "5-point reduce set differs");
    const Reduction z = reduce(VRep(parallelogram_vertices()));
    o.require(z.rep.basis_count() == 2,
              "parallelogram reduce has " + std::to_string(z.rep.basis_count()) + " basis vectors");
    o.require(z.rep.start() == pt({-2, -1}), "parallelogram reduce start " + show({z.rep.start()}));
    o.require(sorted(z.rep.basis().columns()) == pts({{2, 0}, {2, 2}}),
              "parallelogram reduce basis " + show(z.rep.basis().columns()));
    o.require(z.rep.exponents().materialize() == BitMatrix::identity(2),
              "parallelogram reduce exponents are not I_2");
    return o;
  });

  criterion(3, "Chain form: 200 random point sets", [] {
    Outcome o;
    Rng rng(kSeed + 3);
    for (int i = 0; i < 200 && o.pass; ++i) {
      const std::size_t d = static_cast<std::size_t>(rng.integer(2, 3));
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 8));
      const VRep v(rng.distinct_points(d, n));
      const MRep c = chain_from_points(v);
      const std::string tag = "instance " + std::to_string(i);
      o.require(c.basis_count() == n - 1, tag + ": h != n-1");
      o.require(chain_vertices(c) == v, tag + ": chain_vertices round trip");
      o.require(sets_equal(c, v), tag + ": sets_equal");
    }
    return o;
  });

  Rng pair_rng(kSeed + 4);
  const std::vector<Pair> pairs = random_pairs(pair_rng, 100);

  criterion(4, "Operation basis-vector counts on 100 pairs", [&] {
    Outcome o;
    for (std::size_t i = 0; i < pairs.size() && o.pass; ++i) {
      const std::size_t h1 = pairs[i].a.basis_count();
      const std::size_t h2 = pairs[i].b.basis_count();
      const std::size_t lo = std::min(h1, h2);
      const std::size_t hi = std::max(h1, h2);
      const std::string tag = "pair " + std::to_string(i);
      o.require(minkowski_sum(pairs[i].a, pairs[i].b).basis_count() == h1 + h2, tag + ": minkowski");
      o.require(convex_hull(pairs[i].a, pairs[i].b).basis_count() == hi + 2 * lo + 1,
                tag + ": convex_hull_m");
      o.require(convex_hull(to_crep(pairs[i].a), to_crep(pairs[i].b)).basis_count() == h1 + h2 + 1,
                tag + ": convex_hull_c");
      const ZRep za(pairs[i].a.start(), pairs[i].a.basis(), pairs[i].a.exponents());
      const ZRep zb(pairs[i].b.start(), pairs[i].b.basis(), pairs[i].b.exponents());
      o.require(convex_hull(za, zb).generator_count() == 2 * h1 + 2 * h2 + 1,
                tag + ": convex_hull_z");
    }
    return o;
  });

  criterion(5, "Oracle equivalence on 100 pairs", [&] {
    Outcome o;
    for (std::size_t i = 0; i < pairs.size() && o.pass; ++i) {
      const VRep va = candidate_vertices(pairs[i].a);
      const VRep vb = candidate_vertices(pairs[i].b);
      const auto sum = minkowski_oracle(va, vb).points();
      const auto hull = convex_hull_oracle(va, vb).points();
      const std::string tag = "pair " + std::to_string(i);
      o.require(hull_of(minkowski_sum(pairs[i].a, pairs[i].b)) == sum, tag + ": minkowski_m");
      o.require(hull_of(convex_hull(pairs[i].a, pairs[i].b)) == hull, tag + ": convex_hull_m");
      o.require(hull_of(convex_hull(to_crep(pairs[i].a), to_crep(pairs[i].b))) == hull,
                tag + ": convex_hull_c");
    }
    return o;
  });

  criterion(6, "Zonotope suite on 50 generic segment lists", [] {
    Outcome o;
    Rng rng(kSeed + 6);
    Limits limits;
    limits.max_zonotope_points = 16;  // d = 3, h = 4 has 14 vertices
    o.require(zonotope_vertex_count(3, 3) == 8, "zonotope_vertex_count(3,3) != 8");
    for (int i = 0; i < 50 && o.pass; ++i) {
      const std::size_t d = static_cast<std::size_t>(i == 0 ? 3 : rng.integer(1, 3));
      const std::size_t h = i == 0 ? 3 : (d == 1 ? 1 : static_cast<std::size_t>(rng.integer(1, 4)));
      std::vector<Segment> segs;
      for (const Point& g : rng.generic_directions(d, h)) {
        const Point from = rng.point(d, 3, 2);
        segs.push_back({from, from + g});
      }
      const auto hull = hull_of(zonotope_from_segments(SegmentList(segs)));
      const std::size_t n = hull.size();
      const std::string tag = "instance " + std::to_string(i) + " (d=" + std::to_string(d) +
                              ", h=" + std::to_string(h) + ", n=" + std::to_string(n) + ")";
      o.require(2 * h <= n, tag + ": h > n/2");
      o.require(zonotope_vertex_count(d, h) == n, tag + ": vertex count formula");
      const auto z = detect_zonotope(VRep(hull), limits);
      o.require(z.has_value(), tag + ": not detected");
      if (z) {
        o.require(hull_of(zonotope_from_segments(z->segments)) == hull,
                  tag + ": regenerated hull differs");
      }
    }
    return o;
  });

  criterion(7, "Point symmetry of 50 chain-exponent Z-reps", [] {
    Outcome o;
    Rng rng(kSeed + 7);
    for (int i = 0; i < 50 && o.pass; ++i) {
      const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
      const MRep chain = rng.chain(d, static_cast<std::size_t>(rng.integer(1, 6)));
      const Point c = rng.point(d);
      const ZRep z(c, chain.basis(), chain.exponents());
      const auto v = candidate_vertices(z).points();
      std::vector<Point> mirrored;
      for (const Point& x : v) mirrored.push_back(Rational(2) * c - x);
      o.require(sorted(mirrored) == v, "instance " + std::to_string(i));
    }
    return o;
  });

  criterion(8, "Canonical factor vectors on 100 chains", [] {
    Outcome o;
    Rng rng(kSeed + 8);
    for (int i = 0; i < 100 && o.pass; ++i) {
      const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
      const MRep chain = rng.chain(d, static_cast<std::size_t>(rng.integer(1, 8)));
      const auto a = rng.alpha(chain.factor_count());
      o.require(evaluate(chain, a) == evaluate(chain, canonical_alpha(a, chain)),
                "instance " + std::to_string(i));
    }
    return o;
  });

  criterion(9, "Exponent storage of chain-form results", [&] {
    Outcome o;
    Rng rng(kSeed + 9);
    for (std::size_t i = 0; i < pairs.size() && o.pass; ++i) {
      const std::string tag = "pair " + std::to_string(i);
      o.require(minkowski_sum(pairs[i].a, pairs[i].b).exponents().storage_size() <= 8,
                tag + ": minkowski storage");
      o.require(convex_hull(pairs[i].a, pairs[i].b).exponents().storage_size() <= 24,
                tag + ": convex hull storage");
    }
    for (int i = 0; i < 100 && o.pass; ++i) {
      const std::size_t d = static_cast<std::size_t>(rng.integer(1, 4));
      const MRep chain = rng.chain(d, static_cast<std::size_t>(rng.integer(2, 20)));
      const std::size_t h = chain.basis_count();
      o.require(representation_size(chain) == (h + 1) * d + 2,
                "chain " + std::to_string(i) + ": size");
    }
    const MRep big_a = rng.chain(2, 200);
    const MRep big_b = rng.chain(2, 150);
    o.require(minkowski_sum(big_a, big_b).exponents().storage_size() == 8, "large minkowski");
    o.require(convex_hull(big_a, big_b).exponents().storage_size() == 24, "large convex hull");
    return o;
  });

  criterion(10, "CLI round trips and pipeline", [&] {
    Outcome o;
    Rng rng(kSeed + 10);
    std::vector<Representation> reps{VRep(square_with_apex()), triangle_chain(),
                                     MRep(pt({1, 2})), to_crep(triangle_chain()), parallelogram_p1(),
                                     parallelogram_p2(), convex_hull(parallelogram_p1(), parallelogram_p1())};
    for (int i = 0; i < 20; ++i) {
      const MRep a = rng.chain(3, static_cast<std::size_t>(rng.integer(1, 5)));
      const MRep b = rng.chain(3, static_cast<std::size_t>(rng.integer(1, 5)));
      reps.push_back(convex_hull(a, b));
      reps.push_back(minkowski_sum(a, b));
      reps.push_back(to_crep(a));
    }
    for (std::size_t i = 0; i < reps.size() && o.pass; ++i) {
      const cli::RepDocument doc{cli::kSchemaVersion, reps[i]};
      const std::string text = cli::serialize_document(doc);
      o.require(cli::parse_document(text) == doc, "round trip " + std::to_string(i));
      o.require(cli::serialize_document(cli::parse_document(text)) == text,
                "reserialization " + std::to_string(i));
    }

    const fs::path dir = fs::temp_directory_path() / "mrep_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto file = [&](const std::string& name) { return (dir / name).string(); };
    auto save = [&](const std::string& name, const Representation& rep) {
      cli::write_text_file(file(name), cli::serialize_document({cli::kSchemaVersion, rep}));
      return file(name);
    };
    auto basis_of = [&](const std::string& name) {
      return std::get<MRep>(cli::parse_document(cli::read_text_file(file(name))).rep)
          .basis_count();
    };
    Runner run(binary, dir);

    save("five.json", VRep(square_with_apex()));
    save("square.json", VRep(pts({{0, 0}, {0, 2}, {2, 2}, {2, 0}})));
    save("apex.json", VRep(pts({{1, 3}})));
    save("para.json", VRep(parallelogram_vertices()));
    save("shifted.json", VRep(pts({{1, 0}, {1, 2}, {3, 2}, {3, 0}, {2, 3}})));

    o.require(run({"reduce", file("five.json"), "-o", file("r5.json")}) == cli::kOk, "reduce five");
    o.require(basis_of("r5.json") == 3, "reduce five: h != 3");
    o.require(run.err().find("branch=zonotope") != std::string::npos, "reduce five: branch");
    o.require(run({"reduce", file("para.json"), "-o", file("rf.json")}) == cli::kOk, "reduce parallelogram");
    o.require(basis_of("rf.json") == 2, "reduce parallelogram: h != 2");

    o.require(run({"reduce", file("square.json"), "-o", file("sq.json")}) == cli::kOk,
              "reduce square");
    o.require(run({"chain", file("apex.json"), "-o", file("apex_m.json")}) == cli::kOk,
              "chain apex");
    o.require(run({"convhull", file("sq.json"), file("apex_m.json"), "--rep", "m", "-o",
                   file("hull.json")}) == cli::kOk,
              "convhull");
    o.require(basis_of("hull.json") == 3, "convhull: h != 3");
    o.require(run({"vertices", file("hull.json"), "--filter-hull", "-o", file("v.json")}) ==
                  cli::kOk,
              "vertices");
    o.require(std::get<VRep>(cli::parse_document(cli::read_text_file(file("v.json"))).rep)
                      .points() == sorted(square_with_apex()),
              "vertices: wrong hull");
    o.require(run({"equal", file("v.json"), file("five.json")}) == cli::kOk, "equal: exit != 0");
    o.require(run({"equal", file("hull.json"), file("five.json")}) == cli::kOk,
              "equal mrep: exit != 0");
    o.require(run({"equal", file("v.json"), file("shifted.json")}) == cli::kNotEqual,
              "equal shifted: exit != 1");

    cli::write_text_file(file("bad.json"),
                         R"({"schemaVersion": 1, "kind": "vrep", "dim": 1, "vertices": [["1/0"]]})");
    o.require(run({"chain", file("bad.json")}) == cli::kParseError, "malformed: exit != 2");
    save("tri3.json", VRep(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 1}})));
    o.require(run({"plot", file("tri3.json"), "-o", file("x.svg")}) == cli::kDimensionError,
              "plot 3-D: exit != 3");
    save("p2.json", parallelogram_p2());
    o.require(run({"--cap-p", "2", "vertices", file("p2.json")}) == cli::kCapExceeded,
              "cap: exit != 4");
    fs::remove_all(dir);
    return o;
  });

  std::printf("acceptance: %d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
