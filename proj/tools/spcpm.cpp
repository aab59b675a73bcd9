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

// spcpm: generate, verify, convert, compose and dilate subspace-preserving
// completely positive maps stored as spcpm/1 JSON documents.
//
// Exit status: 0 success, 1 domain-negative (not SP, not trace preserving,
// verification failed), 2 usage or format error, 3 internal numeric failure.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spcpm/cpm.hpp"
#include "spcpm/dilation.hpp"
#include "spcpm/error.hpp"
#include "spcpm/io.hpp"
#include "spcpm/sp.hpp"

namespace {

using namespace spcpm;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_sp:
    case ErrorCode::not_trace_preserving:
    case ErrorCode::residual_off_block:
    case ErrorCode::source_target_mismatch:
      return kExitNegative;
    case ErrorCode::singular_normalizer:
    case ErrorCode::singular_matrix:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(out, text);
  }
}

struct GenArgs {
  std::vector<int> dims;
  std::size_t kraus = 1;
  bool tp = false;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  if (args.dims.size() != 4) {
    std::cerr << "--dims expects four integers d_s1,d_s2,d_t1,d_t2\n";
    return kExitUsage;
  }
  for (int d : args.dims) {
    if (d < 1) {
      std::cerr << "every block dimension must be at least 1\n";
      return kExitUsage;
    }
  }
  if (args.kraus < 1) {
    std::cerr << "--kraus must be at least 1\n";
    return kExitUsage;
  }
  const DecomposedSpace source(args.dims[0], args.dims[1]);
  const DecomposedSpace target(args.dims[2], args.dims[3]);
  const KrausRep rep =
      random_sp_channel(source, target, args.kraus, args.tp, args.seed);
  emit(io::dump(io::channel_to_json(rep)), args.out);
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  std::string method = "all";
};

void report(std::ostream& os, const std::string& name, const SpCheck& check) {
  os << std::setw(12) << std::left << name << ' ';
  if (check) {
    os << "SP (max residual " << check.residual << ")\n";
  } else {
    os << "NOT SP: " << check.violated << " violated, residual "
       << check.residual << "\n";
  }
}

int run_verify(const VerifyArgs& args, double tol) {
  const KrausRep rep = io::map_from_json(io::read_json_file(args.file));
  const bool all = args.method == "all";
  std::vector<std::pair<std::string, SpCheck>> results;
  if (all || args.method == "definition") {
    results.emplace_back("definition", check_sp_definition(rep, tol));
  }
  if (all || args.method == "blocks") {
    results.emplace_back("blocks", check_sp_kraus_blocks(rep, tol));
  }
  if (all || args.method == "commutation") {
    results.emplace_back("commutation", check_sp_commutation(rep, tol));
  }
  if (args.method == "trace") {
    try {
      results.emplace_back("trace", check_sp_trace(rep, tol));
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
  } else if (all) {
    if (is_trace_preserving(rep, tol)) {
      results.emplace_back("trace", check_sp_trace(rep, tol));
    } else {
      std::cout << std::setw(12) << std::left << "trace"
                << " skipped (map is not trace preserving)\n";
    }
  }

  for (const auto& [name, check] : results) report(std::cout, name, check);
  const bool verdict = results.front().second.holds;
  for (const auto& [name, check] : results) {
    if (check.holds != verdict) {
      std::cerr << "verifiers disagree; residuals are too close to the "
                   "tolerance to decide\n";
      return kExitNumeric;
    }
  }
  std::cout << "verdict: " << (verdict ? "SP" : "NOT SP") << "\n";
  return verdict ? kExitOk : kExitNegative;
}

struct ConvertArgs {
  std::string file;
  std::string to;
  std::string out;
};

int run_convert(const ConvertArgs& args, double tol) {
  const KrausRep rep = io::map_from_json(io::read_json_file(args.file));
  io::json doc;
  if (args.to == "f-matrix") {
    doc = io::f_matrix_to_json(kraus_to_f(rep));
  } else if (args.to == "kraus-min") {
    doc = io::channel_to_json(f_to_kraus(kraus_to_f(rep)));
  } else if (args.to == "orthonormal") {
    doc = io::orthonormal_to_json(
        rep.source(), rep.target(), orthonormal_kraus(rep));
  } else {
    doc = io::blocks_to_json(blocks_from_sp(rep, tol));
  }
  emit(io::dump(doc), args.out);
  return kExitOk;
}

struct ComposeArgs {
  std::string first;
  std::string second;
  std::string out;
};

int run_compose(const ComposeArgs& args) {
  const KrausRep a = io::map_from_json(io::read_json_file(args.first));
  const KrausRep b = io::map_from_json(io::read_json_file(args.second));
  emit(io::dump(io::channel_to_json(compose(b, a))), args.out);
  return kExitOk;
}

struct DilateArgs {
  std::string file;
  std::string out;
};

int run_dilate(const DilateArgs& args, double tol) {
  const KrausRep rep = io::map_from_json(io::read_json_file(args.file));
  const UnitaryDilation dil = build_dilation(rep, tol);
  if (!verify_dilation(dil, rep, tol)) {
    const DilationResiduals r = dilation_residuals(dil);
    std::cerr << "constructed dilation failed verification (unitarity "
              << r.unitarity << ", isometry " << r.isometry << ")\n";
    return kExitNumeric;
  }
  emit(io::dump(io::dilation_to_json(dil)), args.out);
  return kExitOk;
}

int run_kraus_number(const std::string& file, double tol) {
  const KrausRep rep = io::map_from_json(io::read_json_file(file));
  std::cout << "kraus_number: " << kraus_number(rep) << "\n";
  if (is_sp_kraus_blocks(rep, tol)) {
    std::cout << "sp_bound: " << sp_kraus_bound(rep.source(), rep.target())
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subspace-preserving completely positive maps"};
  app.require_subcommand(1);
  app.fallthrough();
  double tol = linalg::kDefaultTol;
  app.add_option("--tol", tol, "Residual tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Sample a random SP map");
  gen_cmd->add_option("--dims", gen.dims, "d_s1,d_s2,d_t1,d_t2")
      ->required()
      ->delimiter(',')
      ->expected(4);
  gen_cmd->add_option("--kraus", gen.kraus, "Number of Kraus operators")
      ->capture_default_str();
  gen_cmd->add_flag("--tp", gen.tp, "Normalize to a trace-preserving map");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check whether a map is SP");
  verify_cmd->add_option("file", verify.file)->required();
  verify_cmd->add_option("--method", verify.method)
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"definition", "blocks", "commutation", "trace", "all"}));

  ConvertArgs convert;
  CLI::App* convert_cmd =
      app.add_subcommand("convert", "Change the representation of a map");
  convert_cmd->add_option("file", convert.file)->required();
  convert_cmd->add_option("--to", convert.to)
      ->required()
      ->check(CLI::IsMember({"f-matrix", "kraus-min", "orthonormal", "blocks"}));
  convert_cmd->add_option("--out", convert.out, "Output file (default: stdout)");

  ComposeArgs compose_args;
  CLI::App* compose_cmd =
      app.add_subcommand("compose", "Apply the first map, then the second");
  compose_cmd->add_option("first", compose_args.first)->required();
  compose_cmd->add_option("second", compose_args.second)->required();
  compose_cmd->add_option(
      "--out", compose_args.out, "Output file (default: stdout)");

  DilateArgs dilate;
  CLI::App* dilate_cmd = app.add_subcommand(
      "dilate", "Unitary dilation of a trace-preserving SP channel");
  dilate_cmd->add_option("file", dilate.file)->required();
  dilate_cmd->add_option("--out", dilate.out, "Output file (default: stdout)");

  std::string kn_file;
  CLI::App* kn_cmd =
      app.add_subcommand("kraus-number", "Print the Kraus number of a map");
  kn_cmd->add_option("file", kn_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify, tol);
    if (*convert_cmd) return run_convert(convert, tol);
    if (*compose_cmd) return run_compose(compose_args);
    if (*dilate_cmd) return run_dilate(dilate, tol);
    if (*kn_cmd) return run_kraus_number(kn_file, tol);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
