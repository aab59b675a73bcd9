// Copyright 2026 The spcpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Usage: spcpm_acceptance <path-to-spcpm-cli> <workdir>
//
// Prints one PASS or FAIL line per criterion and exits non-zero if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "spcpm/dilation.hpp"
#include "spcpm/error.hpp"
#include "spcpm/io.hpp"
#include "spcpm/sp.hpp"
#include "../test_support.hpp"

namespace {

using namespace spcpm;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

DecomposedSpace random_space(std::mt19937_64& rng, int max_block) {
  std::uniform_int_distribution<int> d(1, max_block);
  const int d1 = d(rng);
  return DecomposedSpace(d1, d(rng));
}

bool all_verifiers(const KrausRep& rep, double tol) {
  bool ok = is_sp_definition(rep, tol) && is_sp_kraus_blocks(rep, tol) &&
            is_sp_commutation(rep, tol);
  if (is_trace_preserving(rep, tol)) ok = ok && is_sp_trace(rep, tol);
  return ok;
}

Outcome verifier_equivalence() {
  const auto start = Clock::now();
  int disagreements = 0;
  int wrong_verdicts = 0;
  int trace_checked = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(seed);
    const DecomposedSpace src = random_space(rng, 3);
    const DecomposedSpace tgt = random_space(rng, 3);
    const bool perturb = seed >= 250;
    const bool tp = seed % 2 == 0;
    const std::size_t k = std::max<std::size_t>(
        1 + seed % 4, tp ? testing::min_tp_kraus(src, tgt) : 1);
    KrausRep rep = random_sp_channel(src, tgt, k, tp, seed);
    if (perturb) {
      rep = testing::perturb_cross_blocks(rep, 1e-2, rng);
      if (tp) rep = testing::normalize_trace(rep);
    }
    const bool def = is_sp_definition(rep);
    bool agree = def == is_sp_kraus_blocks(rep) && def == is_sp_commutation(rep);
    if (is_trace_preserving(rep)) {
      ++trace_checked;
      agree = agree && def == is_sp_trace(rep);
    }
    if (!agree) ++disagreements;
    if (def == perturb) ++wrong_verdicts;
  }
  const double t = seconds_since(start);
  return {disagreements == 0 && wrong_verdicts == 0 && t < 30.0,
          fmt("500 maps, %d disagreements, %d wrong verdicts, %d with trace "
              "verifier, %.2f s",
              disagreements, wrong_verdicts, trace_checked, t)};
}

Outcome composition_closure() {
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const DecomposedSpace s = random_space(rng, 3);
    const DecomposedSpace t = random_space(rng, 3);
    const DecomposedSpace r = random_space(rng, 3);
    const bool tp = seed % 2 == 0;
    const std::size_t ka = std::max<std::size_t>(
        1 + seed % 3, tp ? testing::min_tp_kraus(s, t) : 1);
    const std::size_t kb = std::max<std::size_t>(
        1 + seed % 2, tp ? testing::min_tp_kraus(t, r) : 1);
    const KrausRep a = random_sp_channel(s, t, ka, tp, seed);
    const KrausRep b = random_sp_channel(t, r, kb, tp, seed + 5000);
    if (!all_verifiers(compose(b, a), 1e-9)) ++failures;
  }
  return {failures == 0, fmt("100 composed pairs, %d failures", failures)};
}

Outcome f_matrix_bijection() {
  double worst_f = 0.0;
  double worst_map = 0.0;
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const DecomposedSpace s = random_space(rng, 2);
    const DecomposedSpace t = random_space(rng, 2);
    const Index m = s.dim() * t.dim();
    const Index rank = 1 + static_cast<Index>(seed) % m;
    const ComplexMatrix f = testing::random_psd(m, rank, rng);
    const double err =
        (kraus_to_f(f_to_kraus(FMatrixRep(s, t, f))).f() - f).norm();
    worst_f = std::max(worst_f, err);
    if (err > 1e-9) ++failures;

    const KrausRep rep = testing::random_kraus(s, t, 1 + seed % 5, rng);
    const KrausRep back = f_to_kraus(kraus_to_f(rep));
    worst_map = std::max(worst_map, testing::oracle_map_distance(rep, back));
    if (!channels_equal(rep, back, 1e-10)) ++failures;
  }
  return {failures == 0,
          fmt("200 round trips, %d failures, max F error %.2e, max map error "
              "%.2e",
              failures, worst_f, worst_map)};
}

Outcome kraus_number_invariance() {
  int failures = 0;
  int sp_samples = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const DecomposedSpace s = random_space(rng, 2);
    const DecomposedSpace t = random_space(rng, 2);
    const std::size_t k = 1 + seed % 6;
    const bool sp = seed % 2 == 0;
    const KrausRep rep = sp ? random_sp_channel(s, t, k, false, seed)
                            : testing::random_kraus(s, t, k, rng);
    const std::size_t kn = kraus_number(rep);
    bool ok = kn == testing::oracle_rank(kraus_to_f(rep).f(), 1e-10);

    const ComplexMatrix u = linalg::haar_unitary(static_cast<Index>(k), rng);
    ok = ok && kraus_number(unitary_mix(rep, u)) == kn;

    std::vector<ComplexMatrix> padded = rep.ops();
    const int zeros = 1 + static_cast<int>(seed % 3);
    for (int z = 0; z < zeros; ++z) {
      padded.push_back(ComplexMatrix::Zero(t.dim(), s.dim()));
    }
    ok = ok && kraus_number(KrausRep(s, t, padded)) == kn;

    const ComplexMatrix f = kraus_to_f(rep).f();
    const ComplexMatrix a = testing::random_invertible(f.rows(), rng);
    const ComplexMatrix g = a * f * a.adjoint();
    ok = ok && linalg::numerical_rank(g) == kn &&
         testing::oracle_rank(g, 1e-10) == kn;

    if (sp) {
      ++sp_samples;
      ok = ok && sp_kraus_bound_holds(rep) && kn <= sp_kraus_bound(s, t);
    }
    if (!ok) ++failures;
  }
  return {failures == 0,
          fmt("100 maps (%d SP), %d failures", sp_samples, failures)};
}

Outcome block_psd_lemma() {
  int oracle_mismatch = 0;
  int side_mismatch = 0;
  int positives = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 4);
    const Index k = size(rng);
    const Index l = size(rng);
    const Index rank = 1 + static_cast<Index>(seed) % (k + l);
    const ComplexMatrix full = testing::random_psd(k + l, rank, rng);
    const ComplexMatrix a = full.topLeftCorner(k, k);
    const ComplexMatrix b = full.bottomRightCorner(l, l);
    ComplexMatrix c = full.topRightCorner(k, l);
    if (seed % 2 == 1) {
      // Push C until the assembled matrix is clearly indefinite.
      const ComplexMatrix g = linalg::ginibre(k, l, rng);
      double step = 0.05;
      while (true) {
        c += step * g;
        const RealVector ev =
            testing::oracle_eigenvalues(linalg::assemble_blocks(a, b, c));
        if (ev.minCoeff() < -1e-3 * std::max(1.0, ev.cwiseAbs().maxCoeff())) {
          break;
        }
        step *= 2.0;
      }
    }
    const bool oracle =
        testing::oracle_is_psd(linalg::assemble_blocks(a, b, c), 1e-9);
    if (oracle) ++positives;
    const bool via_b = linalg::block_psd_check(
        a, b, c, 1e-9, linalg::SchurSide::complement_of_b);
    const bool via_a = linalg::block_psd_check(
        a, b, c, 1e-9, linalg::SchurSide::complement_of_a);
    if (via_b != oracle) ++oracle_mismatch;
    if (via_a != via_b) ++side_mismatch;
  }
  return {oracle_mismatch == 0 && side_mismatch == 0 && positives == 200,
          fmt("400 triples (%d PSD), %d oracle mismatches, %d side mismatches",
              positives, oracle_mismatch, side_mismatch)};
}

Outcome generator_bijection() {
  int failures = 0;
  double worst = 0.0;
  double worst_leak = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const DecomposedSpace s = random_space(rng, 2);
    const DecomposedSpace t = random_space(rng, 2);
    const Index m = sp_kraus_bound(s, t);
    const SPBlockRep blocks =
        random_sp_blocks(s, t, 1 + static_cast<Index>(seed) % m, seed);
    const KrausRep rep = f_to_kraus(sp_from_blocks(blocks));
    const SPBlockRep back = blocks_from_sp(rep);
    const double err = std::max(
        {(back.a() - blocks.a()).norm(), (back.b() - blocks.b()).norm(),
         (back.c() - blocks.c()).norm()});
    worst = std::max(worst, err);
    bool ok = err <= 1e-9 && all_verifiers(rep, 1e-9);

    const bool tp = seed % 2 == 0;
    const KrausRep channel = random_sp_channel(
        s, t,
        std::max<std::size_t>(1 + seed % 4, tp ? testing::min_tp_kraus(s, t) : 1),
        tp, seed);
    const double leak = off_block_mass(kraus_to_f(channel));
    worst_leak = std::max(worst_leak, leak);
    ok = ok && leak <= 1e-9;
    if (!ok) ++failures;
  }
  return {failures == 0,
          fmt("100 triples and 100 channels, %d failures, max block error "
              "%.2e, max off-block mass %.2e",
              failures, worst, worst_leak)};
}

Outcome unitary_dilation() {
  const auto start = Clock::now();
  const DecomposedSpace s(2, 2);
  const Index n = s.dim();
  int failures = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const KrausRep rep = random_sp_channel(s, s, 1 + seed % 5, true, seed);
    const UnitaryDilation dil = build_dilation(rep);
    const Index na = dil.ancilla_dim;
    const ComplexMatrix id = ComplexMatrix::Identity(n * na, n * na);
    const ComplexMatrix ia = ComplexMatrix::Identity(na, na);
    const ComplexMatrix p1 = linalg::tensor(projector(s, Block::first), ia);
    const ComplexMatrix p2 = linalg::tensor(projector(s, Block::second), ia);
    const double unitarity = (dil.u.adjoint() * dil.u - id).norm();
    const double isometry = std::max(
        {(dil.v1 * dil.v1.adjoint() - p1).norm(),
         (dil.v1.adjoint() * dil.v1 - p1).norm(),
         (dil.v2 * dil.v2.adjoint() - p2).norm(),
         (dil.v2.adjoint() * dil.v2 - p2).norm()});
    const double support = std::max(
        (p1 * dil.v1 * p1 - dil.v1).norm(), (p2 * dil.v2 * p2 - dil.v2).norm());
    double recovery = 0.0;
    int units = 0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const ComplexMatrix e = linalg::matrix_unit(n, n, i, j);
        recovery = std::max(
            recovery,
            (apply_dilation(dil, e) - testing::direct_apply(rep.ops(), e)).norm());
        ++units;
      }
    }
    worst = std::max({worst, unitarity, isometry, support, recovery});
    const bool ok = unitarity <= 1e-9 && isometry <= 1e-9 && support <= 1e-9 &&
                    recovery <= 1e-9 && units == 16 &&
                    na == static_cast<Index>(kraus_number(rep)) + 1 &&
                    (dil.u - dil.v1 - dil.v2).norm() <= 1e-12;
    if (!ok) ++failures;
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 60.0,
          fmt("50 channels, %d failures, max residual %.2e, %.2f s", failures,
              worst, t)};
}

Outcome cauchy_schwarz() {
  int failures = 0;
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = size(rng);
    const Index rank = 1 + trial % n;
    const ComplexMatrix d = testing::random_psd(n, rank, rng);
    const ComplexVector a = linalg::ginibre(n, 1, rng);
    const ComplexVector b = linalg::ginibre(n, 1, rng);
    const double lhs = std::norm(a.dot(d * b));
    const double rhs =
        a.dot(d * a).real() * b.dot(d * b).real() * (1.0 + 1e-9);
    if (lhs > rhs) ++failures;
  }
  return {failures == 0, fmt("1000 triples, %d violations", failures)};
}

class Cli {
 public:
  Cli(std::string exe, fs::path dir) : exe_(std::move(exe)), dir_(std::move(dir)) {
    fs::create_directories(dir_);
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  int run(const std::string& args) const {
    const std::string cmd = "\"" + exe_ + "\" " + args + " > \"" +
                            path("stdout.txt").string() + "\" 2> \"" +
                            path("stderr.txt").string() + "\"";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

 private:
  std::string exe_;
  fs::path dir_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

Outcome cli_end_to_end(const Cli& cli) {
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const DecomposedSpace s = random_space(rng, 2);
    const DecomposedSpace t = random_space(rng, 2);
    const std::string k = std::to_string(1 + seed % 3);
    const std::string sd = std::to_string(seed);
    const std::string dims = fmt(
        "%ld,%ld,%ld,%ld", long(s.d1()), long(s.d2()), long(t.d1()),
        long(t.d2()));
    const fs::path ch = cli.path("ch.json");
    const fs::path ch2 = cli.path("ch_again.json");
    const fs::path blocks = cli.path("blocks.json");
    const std::string gen = "gen --dims " + dims + " --kraus " + k + " --seed " + sd;
    bool ok = cli.run(gen + " --out " + quoted(ch)) == 0 &&
              cli.run(gen + " --out " + quoted(ch2)) == 0 &&
              slurp(ch) == slurp(ch2) &&
              cli.run("verify " + quoted(ch) + " --method all") == 0 &&
              cli.run("convert " + quoted(ch) + " --to blocks --out " +
                      quoted(blocks)) == 0;
    if (ok) {
      const KrausRep rep = io::channel_from_json(io::read_json_file(ch));
      const SPBlockRep b = io::blocks_from_json(io::read_json_file(blocks));
      ok = channels_equal(f_to_kraus(sp_from_blocks(b)), rep);
    }

    const fs::path tp = cli.path("tp.json");
    const fs::path tp2 = cli.path("tp_again.json");
    const fs::path dil = cli.path("dil.json");
    const std::string sq = fmt("%ld,%ld,%ld,%ld", long(s.d1()), long(s.d2()),
                               long(s.d1()), long(s.d2()));
    const std::string gen_tp =
        "gen --dims " + sq + " --kraus " + k + " --tp --seed " + sd;
    ok = ok && cli.run(gen_tp + " --out " + quoted(tp)) == 0 &&
         cli.run(gen_tp + " --out " + quoted(tp2)) == 0 &&
         slurp(tp) == slurp(tp2) &&
         cli.run("dilate " + quoted(tp) + " --out " + quoted(dil)) == 0;
    if (ok) {
      const KrausRep rep = io::channel_from_json(io::read_json_file(tp));
      ok = verify_dilation(io::dilation_from_json(io::read_json_file(dil)), rep);
    }
    if (!ok) ++failures;
  }
  return {failures == 0, fmt("20 seeds, %d failures", failures)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: spcpm_acceptance <spcpm-cli> <workdir>\n";
    return 2;
  }
  const Cli cli(argv[1], argv[2]);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"verifier equivalence", verifier_equivalence},
      {"composition closure", composition_closure},
      {"F-matrix bijection", f_matrix_bijection},
      {"Kraus number invariance", kraus_number_invariance},
      {"block PSD lemma", block_psd_lemma},
      {"SP generator bijection", generator_bijection},
      {"unitary dilation", unitary_dilation},
      {"Cauchy-Schwarz inequality", cauchy_schwarz},
      {"CLI end to end", [&] { return cli_end_to_end(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
              << criteria[i].first << " (" << o.detail << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
