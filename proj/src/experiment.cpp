// Copyright 2026 The isamp Authors.
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

#include "isamp/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>

#include "isamp/error.hpp"
#include "isamp/loss.hpp"

namespace isamp {

namespace {

std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  fail(ErrorCode::config, "invalid value '" + std::string(value) + "' for " + std::string(key));
}

double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    bad_value(key, text);
  }
  return v;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) bad_value(key, text);
  return v;
}

bool parse_flag(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  bad_value(key, text);
}

/// "1,2,3" or "1..5".
std::vector<std::uint64_t> parse_seeds(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = parse_count("seeds", text.substr(0, dots));
    const auto hi = parse_count("seeds", text.substr(dots + 2));
    if (hi < lo || hi - lo > 100000) bad_value("seeds", text);
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  for (auto part : split_on(text, ',')) seeds.push_back(parse_count("seeds", part));
  return seeds;
}

StepSchedule::Kind parse_schedule(std::string_view text) {
  if (text == "lambda_t" || text == "inverse_lambda_t") return StepSchedule::Kind::inverse_lambda_t;
  if (text == "inverse_strong") return StepSchedule::Kind::inverse_strong;
  if (text == "constant") return StepSchedule::Kind::constant;
  bad_value("sgd_schedule", text);
}

RegChoice parse_reg(std::string_view text) {
  if (text == "l2") return RegChoice::l2;
  if (text == "l1-smoothed" || text == "l1_smoothed" || text == "l1") return RegChoice::l1_smoothed;
  bad_value("reg", text);
}

std::string file_stem(const AlgorithmSpec& algo) {
  std::string s = algo.name();
  std::replace(s.begin(), s.end(), ':', '_');
  return s;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::io, "write error on " + path.string());
}

void append_optional(std::string& out, const std::optional<double>& v) {
  if (v) out += format_double(*v);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size();
  return k % 2 == 1 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string AlgorithmSpec::name() const {
  if (solver == Solver::sgd) return "sgd:" + std::string(to_string(sgd_sampling));
  return "sdca:" + std::string(to_string(sdca_sampling)) + ":" + std::string(to_string(option));
}

AlgorithmSpec parse_algorithm(std::string_view text) {
  const auto parts = split_on(trim(text), ':');
  AlgorithmSpec spec;
  if (parts[0] == "sgd") {
    if (parts.size() > 2) fail(ErrorCode::config, "bad algorithm '" + std::string(text) + "'");
    spec.solver = AlgorithmSpec::Solver::sgd;
    if (parts.size() == 2) spec.sgd_sampling = parse_sgd_sampling(parts[1]);
    return spec;
  }
  if (parts[0] == "sdca") {
    if (parts.size() > 3) fail(ErrorCode::config, "bad algorithm '" + std::string(text) + "'");
    spec.solver = AlgorithmSpec::Solver::sdca;
    if (parts.size() >= 2) spec.sdca_sampling = parse_sdca_sampling(parts[1]);
    if (parts.size() == 3) spec.option = parse_sdca_option(parts[2]);
    return spec;
  }
  fail(ErrorCode::config, "unknown solver in '" + std::string(text) + "' (expected sgd or sdca)");
}

ProblemSpec ExperimentConfig::sgd_problem() const {
  if (reg == RegChoice::l2) return composite_svm_problem(loss, lambda, projection);
  return l1_svm_problem(loss, lambda, projection);
}

ProblemSpec ExperimentConfig::sdca_problem() const {
  if (reg == RegChoice::l2) return dual_svm_problem(loss, lambda);
  return smoothed_l1_svm_problem(loss, lambda, epsilon);
}

StepSchedule ExperimentConfig::schedule() const {
  switch (sgd_schedule) {
    case StepSchedule::Kind::inverse_strong: return StepSchedule::inverse_strong(sgd_alpha, sgd_mu, sgd_gamma);
    case StepSchedule::Kind::constant: return StepSchedule::constant(sgd_eta);
    case StepSchedule::Kind::inverse_lambda_t: break;
  }
  return StepSchedule::inverse_lambda_t(lambda);
}

void ExperimentConfig::validate() const {
  if (!(lambda > 0.0)) fail(ErrorCode::config, "lambda must be positive");
  if (algorithms.empty()) fail(ErrorCode::config, "at least one algorithm is required");
  if (seeds.empty()) fail(ErrorCode::config, "at least one seed is required");
  if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
    fail(ErrorCode::config, "test_fraction must lie in [0,1)");
  }
  if (!data) synthetic.validate();
  bool any_sgd = false;
  for (const auto& algo : algorithms) {
    if (algo.solver == AlgorithmSpec::Solver::sdca) {
      SdcaConfig sc;
      sc.option = algo.option;
      sc.sampling = algo.sdca_sampling;
      sc.norm_ratio = norm_ratio;
      sc.validate(sdca_problem());
      continue;
    }
    any_sgd = true;
    const ProblemSpec p = sgd_problem();
    if (algo.sgd_sampling == SgdSampling::smoothness && loss != LossKind::squared_hinge) {
      fail(ErrorCode::config, "sgd:smoothness needs the squared hinge loss");
    }
    if (algo.sgd_sampling == SgdSampling::lipschitz && loss == LossKind::squared_hinge &&
        !p.radius && !p.l2_in_loss) {
      fail(ErrorCode::config, "sgd:lipschitz with squared hinge needs projection");
    }
  }
  if (any_sgd) schedule().validate();
}

const std::vector<std::string_view>& ConfigMap::known_keys() {
  static const std::vector<std::string_view> keys = {
      "data",      "test_data",   "test_fraction", "split_seed", "dim",
      "syn_n",     "syn_d",       "syn_sigma",     "syn_nnz",    "syn_noise",
      "syn_seed",  "loss",        "reg",           "lambda",     "epsilon",
      "epochs",    "seeds",       "algo",          "sgd_schedule", "sgd_eta",
      "sgd_alpha", "sgd_mu",      "sgd_gamma",     "projection", "averaging",
      "uniform_first_epoch",      "timing",        "sdca_t0",    "norm_ratio",
      "out"};
  return keys;
}

void ConfigMap::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  const auto& keys = known_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
    fail(ErrorCode::config, "unknown config key '" + std::string(key) + "'");
  }
  if (key == "algo") {
    for (auto part : split_on(value, ',')) {
      part = trim(part);
      if (part.empty()) continue;
      parse_algorithm(part);  // reject early
      algorithms_.emplace_back(part);
    }
    return;
  }
  values_[std::string(key)] = std::string(value);
}

void ConfigMap::load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::config, "config line " + std::to_string(line_no) + ": expected key = value");
    }
    set(view.substr(0, eq), view.substr(eq + 1));
  }
}

void ConfigMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open config " + path);
  load(in);
}

ExperimentConfig ConfigMap::build() const {
  ExperimentConfig c;
  auto get = [&](const char* key) -> std::optional<std::string_view> {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return std::string_view(it->second);
  };
  if (auto v = get("data"); v && !v->empty()) c.data = std::string(*v);
  if (auto v = get("test_data"); v && !v->empty()) c.test_data = std::string(*v);
  if (auto v = get("test_fraction")) c.test_fraction = parse_real("test_fraction", *v);
  if (auto v = get("split_seed")) c.split_seed = parse_count("split_seed", *v);
  if (auto v = get("dim")) c.dim = parse_count("dim", *v);
  if (auto v = get("syn_n")) c.synthetic.n = parse_count("syn_n", *v);
  if (auto v = get("syn_d")) {
    c.synthetic.d = parse_count("syn_d", *v);
    c.synthetic.nnz = std::min(c.synthetic.nnz, c.synthetic.d);
  }
  if (auto v = get("syn_sigma")) c.synthetic.sigma = parse_real("syn_sigma", *v);
  if (auto v = get("syn_nnz")) c.synthetic.nnz = parse_count("syn_nnz", *v);
  if (auto v = get("syn_noise")) c.synthetic.noise = parse_real("syn_noise", *v);
  if (auto v = get("syn_seed")) c.synthetic.seed = parse_count("syn_seed", *v);
  if (auto v = get("loss")) c.loss = parse_loss_kind(*v);
  if (auto v = get("reg")) c.reg = parse_reg(*v);
  if (auto v = get("lambda")) c.lambda = parse_real("lambda", *v);
  if (auto v = get("epsilon")) c.epsilon = parse_real("epsilon", *v);
  if (auto v = get("epochs")) c.epochs = parse_count("epochs", *v);
  if (auto v = get("seeds")) c.seeds = parse_seeds(*v);
  if (auto v = get("sgd_schedule")) c.sgd_schedule = parse_schedule(*v);
  if (auto v = get("sgd_eta")) c.sgd_eta = parse_real("sgd_eta", *v);
  if (auto v = get("sgd_alpha")) c.sgd_alpha = parse_real("sgd_alpha", *v);
  if (auto v = get("sgd_mu")) c.sgd_mu = parse_real("sgd_mu", *v);
  if (auto v = get("sgd_gamma")) c.sgd_gamma = parse_real("sgd_gamma", *v);
  if (auto v = get("projection")) c.projection = parse_flag("projection", *v);
  if (auto v = get("averaging")) c.averaging = parse_flag("averaging", *v);
  if (auto v = get("uniform_first_epoch")) c.uniform_first_epoch = parse_flag("uniform_first_epoch", *v);
  if (auto v = get("timing")) c.timing = parse_flag("timing", *v);
  if (auto v = get("sdca_t0")) c.sdca_average_start = parse_count("sdca_t0", *v);
  if (auto v = get("norm_ratio")) c.norm_ratio = parse_real("norm_ratio", *v);
  if (auto v = get("out")) c.out = std::string(*v);

  for (const auto& a : algorithms_) c.algorithms.push_back(parse_algorithm(a));
  if (c.algorithms.empty()) {
    // Default head-to-head: uniform against importance sampling per solver.
    const bool smooth = c.loss == LossKind::squared_hinge;
    for (const char* a : {"sgd:uniform", "sgd:lipschitz", "sdca:uniform"}) {
      c.algorithms.push_back(parse_algorithm(a));
    }
    c.algorithms.push_back(parse_algorithm(smooth ? "sdca:smooth" : "sdca:lipschitz"));
  }
  return c;
}

LoadedData load_experiment_data(const ExperimentConfig& config) {
  LoadedData out;
  if (!config.data) {
    out.train = generate_synthetic(config.synthetic);
  } else {
    out.train = load_libsvm(*config.data, config.dim);
  }
  if (config.test_data) {
    LabeledDataset test = load_libsvm(*config.test_data, config.dim);
    const std::size_t d = std::max(out.train.dim(), test.dim());
    // LIBSVM files carry no header, so align both parts to the wider one.
    if (out.train.dim() != d) {
      out.train = LabeledDataset({out.train.examples().begin(), out.train.examples().end()}, d);
    }
    if (test.dim() != d) test = LabeledDataset({test.examples().begin(), test.examples().end()}, d);
    out.test = std::move(test);
  } else if (config.test_fraction > 0.0) {
    auto [train, test] = split(out.train, config.test_fraction, config.split_seed);
    out.train = std::move(train);
    out.test = std::move(test);
  }
  return out;
}

std::string trace_csv(const std::vector<TraceRecord>& trace) {
  std::string out = "epoch,primal,dual,gap,variance,test_error,wall_time\n";
  for (const auto& r : trace) {
    out += format_double(r.epoch);
    out += ',';
    out += format_double(r.primal);
    out += ',';
    append_optional(out, r.dual);
    out += ',';
    append_optional(out, r.gap);
    out += ',';
    out += format_double(r.variance);
    out += ',';
    append_optional(out, r.test_error);
    out += ',';
    append_optional(out, r.wall_time);
    out += '\n';
  }
  return out;
}

ConstantRatios compute_ratios(const LabeledDataset& data, const ExperimentConfig& config) {
  ConstantRatios r;
  ProblemSpec sgd = config.sgd_problem();
  if (!sgd.radius) {
    sgd.radius = config.reg == RegChoice::l2 ? 1.0 / std::sqrt(config.lambda) : 1.0 / config.lambda;
  }
  r.sgd = constant_ratio_sgd(sgd_gradient_bounds(data, sgd));
  const ProblemSpec dual = config.sdca_problem();
  const auto constants = per_example_constants(config.loss, data);
  if (config.loss == LossKind::squared_hinge) {
    r.sdca = constant_ratio_sdca(constants.gamma, dual.lambda, data.size(), config.norm_ratio);
  } else {
    r.sdca = constant_ratio_sdca_lipschitz(constants.lipschitz);
  }
  return r;
}

std::string format_ratios(const ConstantRatios& ratios) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "sgd %.4f\nsdca %.4f\n", ratios.sgd, ratios.sdca);
  return buf;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const LoadedData data = load_experiment_data(config);
  const LabeledDataset* test = data.test ? &*data.test : nullptr;
  const ProblemSpec sgd_problem = config.sgd_problem();
  const ProblemSpec sdca_problem = config.sdca_problem();

  const std::filesystem::path dir(config.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::io, "cannot create output directory " + config.out + ": " + ec.message());

  ExperimentResult result;
  for (const auto& algo : config.algorithms) {
    for (std::uint64_t seed : config.seeds) {
      RunOutput run;
      run.algorithm = algo.name();
      run.seed = seed;
      if (algo.solver == AlgorithmSpec::Solver::sgd) {
        SgdConfig sc;
        sc.schedule = config.schedule();
        sc.epochs = config.epochs;
        sc.sampling = algo.sgd_sampling;
        sc.uniform_first_epoch = config.uniform_first_epoch;
        sc.seed = seed;
        sc.averaging = config.averaging;
        sc.timing = config.timing;
        run.trace = run_sgd(data.train, sgd_problem, sc, test).trace;
      } else {
        SdcaConfig sc;
        sc.option = algo.option;
        sc.sampling = algo.sdca_sampling;
        sc.epochs = config.epochs;
        sc.seed = seed;
        sc.uniform_first_epoch = config.uniform_first_epoch;
        sc.average_start = config.sdca_average_start;
        sc.norm_ratio = config.norm_ratio;
        sc.timing = config.timing;
        run.trace = run_sdca(data.train, sdca_problem, sc, test).trace;
      }
      const auto path = dir / (file_stem(algo) + "_seed" + std::to_string(seed) + ".csv");
      write_text(path, trace_csv(run.trace));
      run.path = path.string();
      result.runs.push_back(std::move(run));
    }
  }

  // Across-seed aggregation; runs of one algorithm share checkpoints.
  std::string summary =
      "algorithm,epoch,primal_mean,primal_median,dual_mean,dual_median,gap_mean,gap_median,"
      "variance_mean,variance_median,test_error_mean,test_error_median\n";
  const std::size_t per_algo = config.seeds.size();
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    const auto first = result.runs.begin() + static_cast<std::ptrdiff_t>(a * per_algo);
    const std::size_t rows = first->trace.size();
    for (std::size_t k = 0; k < rows; ++k) {
      summary += first->algorithm;
      summary += ',';
      summary += format_double(first->trace[k].epoch);
      auto column = [&](auto field) {
        std::vector<double> xs;
        for (std::size_t s = 0; s < per_algo; ++s) {
          const auto v = field((first + static_cast<std::ptrdiff_t>(s))->trace[k]);
          if (v) xs.push_back(*v);
        }
        summary += ',';
        if (!xs.empty()) summary += format_double(mean(xs));
        summary += ',';
        if (!xs.empty()) summary += format_double(median(xs));
      };
      column([](const TraceRecord& r) { return std::optional<double>(r.primal); });
      column([](const TraceRecord& r) { return r.dual; });
      column([](const TraceRecord& r) { return r.gap; });
      column([](const TraceRecord& r) { return std::optional<double>(r.variance); });
      column([](const TraceRecord& r) { return r.test_error; });
      summary += '\n';
    }
  }
  result.summary_path = (dir / "summary.csv").string();
  write_text(result.summary_path, summary);

  const ConstantRatios ratios = compute_ratios(data.train, config);
  result.ratios_path = (dir / "ratios.csv").string();
  write_text(result.ratios_path, "metric,value\nconstant_ratio_sgd," + format_double(ratios.sgd) +
                                     "\nconstant_ratio_sdca," + format_double(ratios.sdca) + "\n");
  return result;
}

}  // namespace isamp
