// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0
//
// tsq: JSON-in/JSON-out front end for the squeezing-certificate pipeline.
//
// Exit codes: 0 success or Accept, 1 verification Reject or a rejected
// rational direction, 2 invalid input or parse error, 3 search exhausted
// or more precision needed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tsq/json_io.hpp"

namespace {

using tsq::Json;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitExhausted = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code_for(const tsq::Error& e) {
  switch (e.code()) {
    case tsq::errc::rational_direction_rejected:
      return kExitReject;
    case tsq::errc::needs_refinement:
    case tsq::errc::search_exhausted:
      return kExitExhausted;
    default:
      return kExitInvalid;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) tsq::fail(tsq::errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    tsq::fail(tsq::errc::parse_error, std::string("malformed JSON for ") + what);
  return j;
}

tsq::QSurd golden_ratio() { return tsq::QSurd(tsq::Rat(1, 2), tsq::Rat(1, 2), 5); }

// Named presets reproducing the squeezing examples; otherwise inline JSON.
tsq::DirectionSpec parse_direction(const std::string& name, int digits) {
  using tsq::Rat;
  using tsq::ScalarSpec;
  if (name == "golden")
    return tsq::normalize_direction({ScalarSpec(golden_ratio()), ScalarSpec(Rat(1))});
  if (name == "sqrt2")
    return tsq::normalize_direction(
        {ScalarSpec(Rat(1)), ScalarSpec(tsq::QSurd(Rat(0), Rat(1), 2))});
  if (name == "sqrt23")
    return tsq::normalize_direction({ScalarSpec(Rat(1)),
                                     ScalarSpec(tsq::sqrt_enclosure(Rat(2), digits)),
                                     ScalarSpec(tsq::sqrt_enclosure(Rat(3), digits))});
  if (name == "cat3-dominant") return tsq::cat3_dominant(digits).direction;
  return tsq::direction_from_json(parse_json(name, "direction"));
}

tsq::IntVec parse_tuple(const std::string& text) {
  if (!text.empty() && text.front() == '[') return tsq::intvec_from_json(parse_json(text, "tuple"));
  tsq::IntVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(tsq::parse_int(item));
  if (v.empty()) tsq::fail(tsq::errc::parse_error, "empty tuple");
  return v;
}

struct Options {
  std::string direction;
  std::string r = "1";
  std::string in;
  std::string a_file, b_file;
  std::string tuple;
  std::string w;
  std::string point;
  std::string kind = "cat2";
  int n = 0;
  int index_max = 64;
  long q_max = 1 << 24;
  long approx_q_max = 256;
  long bound = 10;
  unsigned k = 0;
  int digits = tsq::default_precision().digits;
  bool trace = false;
  bool has_k = false;
};

int run_approx(const Options& opt) {
  tsq::DirectionSpec v = parse_direction(opt.direction, opt.digits);
  Json steps = Json::array();
  if (v.n() == 2) {
    auto run = tsq::convergents_2d_run(v.working()[1], opt.index_max);
    for (size_t i = 0; i < run.convergents.size(); ++i)
      steps.push_back(tsq::approx_step_to_json(
          tsq::convergent_step(run.convergents[i], static_cast<int>(i + 1), v.working()[1])));
  } else {
    for (tsq::Int q = 2; q <= tsq::Int(opt.approx_q_max); q *= 2)
      steps.push_back(tsq::approx_step_to_json(tsq::simultaneous_approx(v, q)));
  }
  Json out;
  out["steps"] = std::move(steps);
  emit(out);
  return kExitOk;
}

int run_complete(const Options& opt) {
  tsq::IntVec p = parse_tuple(opt.tuple);
  tsq::CompletionTrace trace = tsq::unimodular_complete_traced(p);
  emit(tsq::completion_to_json(trace, opt.trace));
  return kExitOk;
}

int run_embed(const Options& opt) {
  tsq::DirectionSpec v = parse_direction(opt.direction, opt.digits);
  if (opt.n != 0 && opt.n != v.n())
    tsq::fail(tsq::errc::invalid_input, "--n disagrees with the direction dimension");
  tsq::EmbedLimits limits;
  limits.max_index = opt.index_max;
  limits.q_max = opt.q_max;
  limits.precision.digits = opt.digits;
  tsq::EmbeddingCertificate cert = tsq::embed(v, tsq::Rat::parse(opt.r), limits);
  emit(tsq::certificate_to_json(cert));
  return kExitOk;
}

int run_verify(const Options& opt) {
  tsq::EmbeddingCertificate cert =
      tsq::certificate_from_json(parse_json(read_input(opt.in), "certificate"));
  tsq::VerifyResult res = tsq::verify_certificate(cert);
  if (res.accepted()) {
    Json out;
    out["accept"] = true;
    emit(out);
    return kExitOk;
  }
  Json out;
  out["reject"] = res.reason;
  if (res.witness_vertex >= 0) out["witness"] = res.witness_vertex;
  if (res.status == tsq::VerifyResult::Status::needs_refinement) {
    out.erase("reject");
    out["needs_refinement"] = res.reason;
    emit(out);
    return kExitExhausted;
  }
  emit(out);
  return kExitReject;
}

int run_map(const Options& opt) {
  tsq::EmbeddingCertificate cert =
      tsq::certificate_from_json(parse_json(read_input(opt.in), "certificate"));
  tsq::MapPoint pt = tsq::map_point_from_json(parse_json(opt.point, "point"));
  emit(tsq::map_point_to_json(tsq::apply_map(cert, pt)));
  return kExitOk;
}

int run_bottleneck(const Options& opt) {
  tsq::Barcode a = tsq::barcode_from_json(parse_json(read_input(opt.a_file), "barcode a"));
  tsq::Barcode b = tsq::barcode_from_json(parse_json(read_input(opt.b_file), "barcode b"));
  emit(tsq::bot_distance_to_json(tsq::bottleneck_distance(a, b)));
  return kExitOk;
}

int run_spectrum(const Options& opt) {
  tsq::Barcode b = tsq::barcode_from_json(parse_json(read_input(opt.in), "barcode"));
  tsq::Endpoints e = tsq::endpoints_multiset(b);
  Json out;
  Json vals = Json::array();
  for (const tsq::Rat& x : e.values) vals.push_back(x.str());
  out["endpoints"] = std::move(vals);
  out["infinite"] = e.infinite_count;
  auto ms = tsq::min_marked_spectrum(b);
  out["min_marked_spectrum"] = ms ? Json(ms->str()) : Json(nullptr);
  emit(out);
  return kExitOk;
}

int run_ortho(const Options& opt) {
  tsq::DirectionSpec w = parse_direction(opt.w, opt.digits);
  auto z = tsq::shortest_orthogonal(w, opt.bound);
  Json out;
  if (!z) {
    out["none_below_bound"] = true;
  } else {
    out["z"] = tsq::intvec_to_json(*z, false);
    tsq::Int norm2 = 0;
    for (const tsq::Int& x : *z) norm2 += x * x;
    out["norm2"] = norm2.get_si();
  }
  emit(out);
  return kExitOk;
}

int run_cat(const Options& opt) {
  tsq::CatKind kind;
  if (opt.kind == "cat2")
    kind = tsq::CatKind::cat2;
  else if (opt.kind == "cat3")
    kind = tsq::CatKind::cat3;
  else
    tsq::fail(tsq::errc::invalid_input, "--kind must be cat2 or cat3");
  tsq::IntMat m = tsq::cat_matrix(kind);
  Json out;
  out["matrix"] = tsq::intmat_to_json(m, false);
  if (kind == tsq::CatKind::cat3) {
    tsq::Cat3Eigen eig = tsq::cat3_dominant(opt.digits);
    Json lam;
    lam["lo"] = eig.lambda.lo().str();
    lam["hi"] = eig.lambda.hi().str();
    out["dominant_eigenvalue"] = std::move(lam);
    out["dominant_direction"] = tsq::direction_to_json(eig.direction);
  }
  if (opt.has_k) {
    if (opt.direction.empty())
      tsq::fail(tsq::errc::invalid_input, "--k needs --direction for the width");
    tsq::DirectionSpec v = parse_direction(opt.direction, opt.digits);
    tsq::Extent ext = tsq::iterate_width(m, opt.k, tsq::Rat::parse(opt.r), v);
    out["k"] = opt.k;
    out["width"] = tsq::extent_to_json(ext);
  }
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic squeezing certificates on T*T^n"};
  app.require_subcommand(1);
  Options opt;

  auto add_digits = [&](CLI::App* cmd) {
    cmd->add_option("--digits", opt.digits, "enclosure precision in decimal digits");
  };

  CLI::App* approx = app.add_subcommand("approx", "rational approximation steps of a direction");
  approx->add_option("--direction", opt.direction, "direction preset or inline JSON")->required();
  approx->add_option("--index-max", opt.index_max, "convergent count (n = 2)");
  approx->add_option("--Q-max", opt.approx_q_max, "largest Dirichlet Q (n >= 3)");
  add_digits(approx);

  CLI::App* complete = app.add_subcommand("complete", "bounded unimodular completion of a tuple");
  complete->add_option("--tuple", opt.tuple, "coprime integer tuple, e.g. [2,3,5]")->required();
  complete->add_flag("--trace", opt.trace, "include the full construction trace");

  CLI::App* embed = app.add_subcommand("embed", "search for an embedding certificate");
  embed->add_option("--direction", opt.direction, "direction preset or inline JSON")->required();
  embed->add_option("--r", opt.r, "simplex size (exact rational)")->required();
  embed->add_option("--n", opt.n, "expected dimension (validated)");
  embed->add_option("--index-max", opt.index_max, "convergent cap (n = 2)");
  embed->add_option("--Q-max", opt.q_max, "Dirichlet Q cap (n >= 3)");
  add_digits(embed);

  CLI::App* verify = app.add_subcommand("verify", "independently verify a certificate");
  verify->add_option("--in", opt.in, "certificate file, or - for stdin")->required();

  CLI::App* map = app.add_subcommand("map", "apply a certificate's symplectomorphism to a point");
  map->add_option("--in", opt.in, "certificate file, or - for stdin")->required();
  map->add_option("--point", opt.point, R"(point JSON {"base":[...],"fiber":[...]})")->required();

  CLI::App* bottleneck = app.add_subcommand("bottleneck", "bottleneck distance of two barcodes");
  bottleneck->add_option("--a", opt.a_file, "first barcode file")->required();
  bottleneck->add_option("--b", opt.b_file, "second barcode file")->required();

  CLI::App* spectrum = app.add_subcommand("spectrum", "endpoint multiset and minimal spectrum");
  spectrum->add_option("--in", opt.in, "barcode file, or - for stdin")->required();

  CLI::App* ortho = app.add_subcommand("ortho", "shortest integer vector orthogonal to w");
  ortho->add_option("--w", opt.w, "direction preset or inline JSON")->required();
  ortho->add_option("--bound", opt.bound, "sup-norm search bound");
  add_digits(ortho);

  CLI::App* cat = app.add_subcommand("cat", "hyperbolic torus automorphism generators");
  cat->add_option("--kind", opt.kind, "cat2 or cat3");
  cat->add_option("--k", opt.k, "iterate count for the width")->each([&](const std::string&) {
    opt.has_k = true;
  });
  cat->add_option("--r", opt.r, "simplex size for the width");
  cat->add_option("--direction", opt.direction, "direction for the width");
  add_digits(cat);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(approx)) return run_approx(opt);
    if (app.got_subcommand(complete)) return run_complete(opt);
    if (app.got_subcommand(embed)) return run_embed(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(map)) return run_map(opt);
    if (app.got_subcommand(bottleneck)) return run_bottleneck(opt);
    if (app.got_subcommand(spectrum)) return run_spectrum(opt);
    if (app.got_subcommand(ortho)) return run_ortho(opt);
    if (app.got_subcommand(cat)) return run_cat(opt);
  } catch (const tsq::FiniteExpansionError& e) {
    Json out;
    out["error"] = "finite-expansion";
    Json list = Json::array();
    for (const auto& c : e.convergents())
      list.push_back(Json::array({c.p.get_str(), c.q.get_str()}));
    out["convergents"] = std::move(list);
    emit(out);
    return kExitInvalid;
  } catch (const tsq::Error& e) {
    Json out;
    if (e.code() == tsq::errc::rational_direction_rejected)
      out["reject"] = "rational-direction-rejected";
    else
      out["error"] = e.what();
    emit(out);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    Json out;
    out["error"] = e.what();
    emit(out);
    return kExitInvalid;
  }
  return kExitInvalid;
}
