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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails. INFO lines are reported, never failed.

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isamp/data_io.hpp"
#include "isamp/diagnostics.hpp"
#include "isamp/experiment.hpp"
#include "isamp/loss.hpp"
#include "isamp/regularizer.hpp"
#include "isamp/sampling.hpp"
#include "isamp/sdca.hpp"
#include "isamp/sgd.hpp"
#include "oracle.hpp"

using namespace isamp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_passed = true;

void report(const char* id, bool pass, const std::string& detail, double secs) {
  all_passed = all_passed && pass;
  std::printf("%s %s %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, detail.c_str(), secs);
  std::fflush(stdout);
}

void info(const char* id, const std::string& detail) {
  std::printf("INFO %s %s\n", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size();
  return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

// Runs collected for the weak-duality and feasibility criterion.
struct DualRun {
  std::string name;
  const LabeledDataset* data;
  ProblemSpec problem;
  SdcaConfig config;
  std::vector<TraceRecord> trace;
};

std::vector<DualRun> dual_runs;

// Enumerated variance sum_i p_i ||g_i/(n p_i) - mean||^2 from dense gradients.
double enumerated_variance(const std::vector<std::vector<double>>& g, const std::vector<double>& p) {
  const std::size_t n = g.size();
  const std::size_t d = g[0].size();
  const double nd = static_cast<double>(n);
  std::vector<double> mean(d, 0.0);
  for (const auto& gi : g) {
    for (std::size_t j = 0; j < d; ++j) mean[j] += gi[j] / nd;
  }
  double v = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = g[i][j] / (nd * p[i]) - mean[j];
      s += diff * diff;
    }
    v += p[i] * s;
  }
  return v;
}

void ac1() {
  const auto start = Clock::now();
  Rng rng(101);
  std::uniform_int_distribution<std::size_t> size_n(2, 50), size_d(1, 10);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::lognormal_distribution<double> scale(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  bool ok = true;
  double worst = -1e300;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t n = size_n(rng), d = size_d(rng);
    std::bernoulli_distribution keep(0.4);
    // Gradient i is the hinge term of (x_i = g_i, y = -1) at w = 0.
    std::vector<std::vector<double>> g(n, std::vector<double>(d, 0.0));
    std::vector<LabeledExample> examples;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = scale(rng);
      std::vector<Index> idx;
      std::vector<double> val;
      for (std::size_t j = 0; j < d; ++j) {
        if (keep(rng) || (j + 1 == d && idx.empty())) {
          g[i][j] = s * gauss(rng);
          if (g[i][j] == 0.0) g[i][j] = s;
          idx.push_back(static_cast<Index>(j));
          val.push_back(g[i][j]);
        }
      }
      examples.push_back({SparseVector(d, std::move(idx), std::move(val)), -1.0});
    }
    const LabeledDataset data(std::move(examples), d);
    ProblemSpec problem;
    problem.loss = LossKind::hinge;
    problem.reg = Regularizer::none();
    problem.lambda = 1.0;
    const std::vector<double> w(d, 0.0);
    const auto best = build_gradient_norm(gradient_norms(w, data, problem));
    std::vector<double> p_best(n);
    for (std::size_t i = 0; i < n; ++i) p_best[i] = best.probability(i);
    const double v_best = enumerated_variance(g, p_best);

    std::vector<std::vector<double>> rivals{std::vector<double>(n, 1.0 / static_cast<double>(n))};
    for (int r = 0; r < 20; ++r) {
      std::vector<double> q(n);
      double total = 0.0;
      for (double& x : q) total += (x = expo(rng) + 1e-12);
      for (double& x : q) x /= total;
      rivals.push_back(q);
    }
    for (const auto& q : rivals) {
      const double v = enumerated_variance(g, q);
      worst = std::max(worst, v_best - v);
      ok = ok && v_best <= v + 1e-12;
    }
    // The library's variance agrees with the enumeration.
    const double lib = gradient_variance(w, data, problem, best);
    ok = ok && std::abs(lib - v_best) <= 1e-9 * std::max(1.0, v_best);
  }
  const double secs = seconds_since(start);
  report("AC-1", ok && secs < 5.0,
         "variance minimality: 100 instances x 21 rivals, max(V_opt - V_rival) = " + fmt("%.3e", worst),
         secs);
}

void ac2() {
  const auto start = Clock::now();
  SyntheticSpec spec;
  spec.n = 500;
  spec.d = 20;
  spec.nnz = 20;
  spec.sigma = 0.5;
  spec.noise = 0.05;
  static const LabeledDataset data = generate_synthetic(spec);
  const double lambda = 1e-2;
  const double R = 1.0;
  const auto problem = dual_svm_problem(LossKind::squared_hinge, lambda);
  // Smoothness of w -> (1 - y x.w)_+^2 is 2||x||^2, so 1/gamma_i = 2||x_i||^2.
  const double nd = 500.0;
  double s = nd;
  for (std::size_t i = 0; i < data.size(); ++i) s += R * R * 2.0 * data.squared_norm(i) / (lambda * nd);
  const auto T = static_cast<std::uint64_t>(std::ceil(s * std::log(s / 1e-6)));

  int hits = 0;
  std::string gaps;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SdcaConfig config;
    config.option = SdcaOption::fixed;
    config.sampling = SdcaSampling::smooth;
    config.uniform_first_epoch = false;
    config.iterations = T;
    config.seed = seed;
    config.norm_ratio = R;
    const auto r = run_sdca(data, problem, config);
    const double gap = *r.trace.back().gap;
    hits += gap <= 1e-6;
    gaps += (seed > 1 ? " " : "") + fmt("%.2e", gap);
    dual_runs.push_back({"ac2 seed " + std::to_string(seed), &data, problem, config, r.trace});
  }
  const double secs = seconds_since(start);
  report("AC-2", hits >= 4 && secs < 10.0,
         "linear rate: T = " + std::to_string(T) + ", final gaps [" + gaps + "], " +
             std::to_string(hits) + "/5 seeds <= 1e-6",
         secs);
}

void ac3() {
  const auto start = Clock::now();
  ConfigMap map;
  map.set("syn_n", "2000");
  map.set("syn_d", "50");
  map.set("syn_sigma", "2");
  map.set("loss", "sqhinge");
  map.set("reg", "l2");
  map.set("lambda", "0.1");
  map.set("epochs", "5");
  const auto config = map.build();
  static const LabeledDataset data = generate_synthetic(config.synthetic);
  const auto sdca_problem = config.sdca_problem();
  const auto sgd_problem = config.sgd_problem();

  auto sdca_gaps = [&](SdcaSampling sampling, SdcaOption option, bool keep) {
    std::vector<double> gaps;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SdcaConfig c;
      c.option = option;
      c.sampling = sampling;
      c.epochs = 5;
      c.seed = seed;
      c.uniform_first_epoch = true;
      const auto r = run_sdca(data, sdca_problem, c);
      gaps.push_back(*r.trace.back().gap);
      if (keep) {
        dual_runs.push_back({"ac3 " + std::string(to_string(sampling)) + " seed " + std::to_string(seed),
                             &data, sdca_problem, c, r.trace});
      }
    }
    return median(gaps);
  };
  auto sgd_primal = [&](SgdSampling sampling) {
    std::vector<double> primal;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SgdConfig c;
      c.schedule = StepSchedule::inverse_lambda_t(config.lambda);
      c.epochs = 5;
      c.sampling = sampling;
      c.seed = seed;
      c.uniform_first_epoch = true;
      primal.push_back(run_sgd(data, sgd_problem, c).trace.back().primal);
    }
    return median(primal);
  };

  const double gap_uniform = sdca_gaps(SdcaSampling::uniform, SdcaOption::fixed, true);
  const double gap_smooth = sdca_gaps(SdcaSampling::smooth, SdcaOption::fixed, true);
  const double p_uniform = sgd_primal(SgdSampling::uniform);
  const double p_lipschitz = sgd_primal(SgdSampling::lipschitz);
  const double secs = seconds_since(start);
  report("AC-3", gap_smooth <= gap_uniform && p_lipschitz <= p_uniform && secs < 30.0,
         "skewed data, median after 5 epochs: sdca option V gap smooth " + fmt("%.4g", gap_smooth) +
             " <= uniform " + fmt("%.4g", gap_uniform) + "; sgd primal lipschitz " +
             fmt("%.4g", p_lipschitz) + " <= uniform " + fmt("%.4g", p_uniform),
         secs);

  const double exact_uniform = sdca_gaps(SdcaSampling::uniform, SdcaOption::exact, false);
  const double exact_smooth = sdca_gaps(SdcaSampling::smooth, SdcaOption::exact, false);
  info("AC-3", "option I on the same data: median gap smooth " + fmt("%.4g", exact_smooth) +
                   ", uniform " + fmt("%.4g", exact_uniform));
}

void ac4() {
  const auto start = Clock::now();
  Rng rng(404);
  std::uniform_real_distribution<double> log_lambda(-3.0, 0.0);
  bool ok = true;
  double worst = 0.0;
  std::size_t states = 0;
  for (LossKind loss : {LossKind::hinge, LossKind::squared_hinge}) {
    std::uniform_real_distribution<double> a(0.0, loss == LossKind::hinge ? 1.0 : 3.0);
    for (int block = 0; block < 50; ++block) {
      SyntheticSpec spec;
      spec.n = 20;
      spec.d = 8;
      spec.nnz = 5;
      spec.sigma = 1.0;
      spec.noise = 0.1;
      spec.seed = 1000 + block;
      const auto data = generate_synthetic(spec);
      const auto problem = dual_svm_problem(loss, std::pow(10.0, log_lambda(rng)));
      for (int k = 0; k < 20; ++k) {
        DualState state = DualState::zero(data);
        for (double& x : state.alpha) x = a(rng);
        state.v = oracle::dual_v(problem, data, state.alpha);
        state.w = state.v;
        const std::size_t i = static_cast<std::size_t>(k);
        const double got = sdca_increment(SdcaOption::exact, SdcaStepContext{}, problem, data, state, i,
                                          1.0 / 20.0);
        const auto want = oracle::maximize_1d_dual(problem, data, state.alpha, state.v, i);
        const double err = std::abs(got - want.arg);
        worst = std::max(worst, err);
        ok = ok && err <= 1e-8;
        ++states;
      }
    }
  }
  const double secs = seconds_since(start);
  report("AC-4", ok && states == 2000 && secs < 5.0,
         "exact coordinate step vs 1-D oracle: " + std::to_string(states) +
             " states, max |delta error| = " + fmt("%.3e", worst),
         secs);
}

void ac5() {
  const auto start = Clock::now();
  Rng rng(505);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> u(1e-3, 3.0);
  bool ok = true;
  double worst = -1e300;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 1 + trial % 12;
    std::vector<double> z(d), gu(d), gv(d);
    for (std::size_t j = 0; j < d; ++j) {
      z[j] = 2.0 * gauss(rng);
      gu[j] = 2.0 * gauss(rng);
      gv[j] = 2.0 * gauss(rng);
    }
    const double eta = u(rng), lambda = u(rng);
    const auto a = prox_gradient_update(z, gu, eta, lambda, Regularizer::l1());
    const auto b = prox_gradient_update(z, gv, eta, lambda, Regularizer::l1());
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      lhs += (a[j] - b[j]) * (a[j] - b[j]);
      rhs += (gu[j] - gv[j]) * (gu[j] - gv[j]);
    }
    const double margin = std::sqrt(lhs) - eta * std::sqrt(rhs);
    worst = std::max(worst, margin);
    ok = ok && margin <= 1e-12;
  }
  const double secs = seconds_since(start);
  report("AC-5", ok && secs < 1.0,
         "prox non-expansiveness: 1000 triples, max(||u-v|| - eta||gu-gv||) = " + fmt("%.3e", worst),
         secs);
}

// Replays a run prefix to each checkpoint and checks the gap from scratch
// together with feasibility of every dual coordinate.
void ac6() {
  const auto start = Clock::now();
  bool ok = true;
  double min_gap = 1e300;
  std::size_t checkpoints = 0;
  std::string first_failure;
  for (const auto& run : dual_runs) {
    const double cap = oracle::dual_cap(run.problem.loss);
    const std::uint64_t n = run.data->size();
    for (const auto& rec : run.trace) {
      ++checkpoints;
      const double gap = *rec.gap;
      min_gap = std::min(min_gap, gap);
      bool here = gap >= -1e-10;
      const auto steps = static_cast<std::uint64_t>(std::llround(rec.epoch * static_cast<double>(n)));
      if (steps > 0) {
        SdcaConfig c = run.config;
        c.iterations = steps;
        const auto replay = run_sdca(*run.data, run.problem, c);
        for (double a : replay.state.alpha) here = here && a >= 0.0 && a <= cap;
        const double independent = oracle::primal(run.problem, *run.data, replay.state.w) -
                                   oracle::dual(run.problem, *run.data, replay.state.alpha);
        min_gap = std::min(min_gap, independent);
        here = here && independent >= -1e-10;
      }
      if (!here && first_failure.empty()) first_failure = " first failure: " + run.name;
      ok = ok && here;
    }
  }
  const double secs = seconds_since(start);
  report("AC-6", ok && !dual_runs.empty(),
         "weak duality and feasibility: " + std::to_string(dual_runs.size()) + " runs, " +
             std::to_string(checkpoints) + " checkpoints, min gap = " + fmt("%.3e", min_gap) +
             first_failure,
         secs);
}

void ac7() {
  const auto start = Clock::now();
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  const SamplingDistribution dist(p, SamplingKind::lipschitz);
  Rng rng(707);
  const std::size_t draws = 1000000;
  std::vector<double> counts(4, 0.0);
  for (std::size_t k = 0; k < draws; ++k) counts[dist.draw(rng)] += 1.0;
  bool ok = true;
  double chi2 = 0.0;
  const double m = static_cast<double>(draws);
  for (std::size_t i = 0; i < 4; ++i) {
    ok = ok && std::abs(counts[i] / m - p[i]) <= 4.0 * std::sqrt(p[i] * (1.0 - p[i]) / m);
    chi2 += (counts[i] - m * p[i]) * (counts[i] - m * p[i]) / (m * p[i]);
  }
  const double critical = boost::math::quantile(
      boost::math::complement(boost::math::chi_squared_distribution<double>(3.0), 1e-4));
  ok = ok && chi2 <= critical;
  const double secs = seconds_since(start);
  report("AC-7", ok && secs < 2.0,
         "sampler statistics: chi2 = " + fmt("%.3f", chi2) + " <= " + fmt("%.3f", critical) +
             ", frequencies within 4 sd",
         secs);
}

double gradient_relative_error(LossKind loss, const LabeledExample& ex, const std::vector<double>& w) {
  const auto lib = loss_subgradient(loss, ex, w).to_dense();
  const auto f = [&](std::span<const double> u) { return oracle::loss(loss, ex.label * dot(ex.features, u)); };
  double diff = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double fd = oracle::central_difference(f, w, j, 1e-6);
    diff += (fd - lib[j]) * (fd - lib[j]);
    scale = std::max(scale, std::max(std::abs(fd), std::abs(lib[j])));
  }
  return scale == 0.0 ? 0.0 : std::sqrt(diff) / (scale * std::sqrt(static_cast<double>(w.size())));
}

void ac8() {
  const auto start = Clock::now();
  Rng rng(808);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SyntheticSpec spec;
  spec.n = 1000;
  spec.d = 10;
  spec.nnz = 6;
  spec.sigma = 0.5;
  const auto data = generate_synthetic(spec);
  double worst_sq = 0.0, worst_hinge = 0.0;
  std::size_t hinge_points = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::vector<double> w(10);
    for (double& x : w) x = gauss(rng);
    worst_sq = std::max(worst_sq, gradient_relative_error(LossKind::squared_hinge, data.example(i), w));
    const double margin = data.label(i) * dot(data.features(i), w);
    if (std::abs(1.0 - margin) > 1e-3) {
      worst_hinge = std::max(worst_hinge, gradient_relative_error(LossKind::hinge, data.example(i), w));
      ++hinge_points;
    }
  }
  const double secs = seconds_since(start);
  report("AC-8", worst_sq <= 1e-5 && worst_hinge <= 1e-5 && hinge_points >= 900,
         "gradient vs central differences: squared hinge max rel err " + fmt("%.3e", worst_sq) +
             ", hinge (" + std::to_string(hinge_points) + " points off the kink) " +
             fmt("%.3e", worst_hinge),
         secs);
}

// Long-double references for the three ratios.
long double ref_sgd(const std::vector<double>& g) {
  long double s = 0, q = 0;
  for (double x : g) {
    s += x;
    q += static_cast<long double>(x) * x;
  }
  return static_cast<long double>(g.size()) * q / (s * s);
}

long double ref_sdca(const std::vector<double>& gamma, double lambda) {
  const long double n = gamma.size();
  const long double gmin = *std::min_element(gamma.begin(), gamma.end());
  long double sum = 0;
  for (double x : gamma) sum += gmin / x;
  return (n * lambda * gmin + 1) / (n * lambda * gmin + sum / n);
}

long double ref_lip(const std::vector<double>& l) {
  long double s = 0, mx = 0;
  for (double x : l) {
    s += x;
    mx = std::max<long double>(mx, x);
  }
  const long double mean = s / l.size();
  return mx * mx / (mean * mean);
}

void ac9() {
  const auto start = Clock::now();
  bool ok = true;
  for (std::size_t n : {1u, 2u, 3u, 7u, 10u, 100u, 1000u, 4097u}) {
    for (double c : {1e-3, 0.1, 0.7, 2.5, 1e4}) {
      const std::vector<double> v(n, c);
      ok = ok && constant_ratio_sgd(v) == 1.0;
      ok = ok && constant_ratio_sdca(v, 1e-4, n, 1.0) == 1.0;
      ok = ok && constant_ratio_sdca_lipschitz(v) == 1.0;
    }
  }
  Rng rng(909);
  std::lognormal_distribution<double> spread(0.0, 1.5);
  std::uniform_real_distribution<double> log_lambda(-6.0, 1.0);
  std::uniform_int_distribution<std::size_t> size(1, 200);
  double max_rel = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> v(size(rng));
    for (double& x : v) x = spread(rng);
    const double lambda = std::pow(10.0, log_lambda(rng));
    const double a = constant_ratio_sgd(v);
    const double b = constant_ratio_sdca(v, lambda, v.size(), 1.0);
    const double c = constant_ratio_sdca_lipschitz(v);
    ok = ok && a >= 1.0 && b >= 1.0 && c >= 1.0;
    const auto rel = [](double x, long double ref) {
      return static_cast<double>(std::abs((x - std::max<long double>(1.0L, ref)) / ref));
    };
    max_rel = std::max({max_rel, rel(a, ref_sgd(v)), rel(b, ref_sdca(v, lambda)), rel(c, ref_lip(v))});
  }
  ok = ok && max_rel <= 1e-12;
  const double secs = seconds_since(start);
  report("AC-9", ok,
         "constant ratios: exactly 1 on equal inputs, >= 1 on 10^4 random inputs, max rel err vs "
         "long double " + fmt("%.2e", max_rel),
         secs);

  // Network-gated reproduction of published SDCA ratios, reported only.
  struct Known {
    const char* env;
    const char* name;
    double expected;
  };
  for (const Known& k : {Known{"ISAMP_IJCNN1_PATH", "ijcnn1", 1.1262}, Known{"ISAMP_W8A_PATH", "w8a", 1.3467}}) {
    const char* path = std::getenv(k.env);
    if (!path || !*path) {
      info("AC-9", std::string(k.name) + " ratio skipped: set " + k.env + " to a LIBSVM file");
      continue;
    }
    try {
      const auto data = load_libsvm(path);
      const auto constants = per_example_constants(LossKind::squared_hinge, data);
      const double got = constant_ratio_sdca(constants.gamma, 1e-4, data.size(), 1.0);
      const double rel = std::abs(got - k.expected) / k.expected;
      info("AC-9", std::string(k.name) + " sdca ratio " + fmt("%.4f", got) + " vs published " +
                       fmt("%.4f", k.expected) + (rel <= 0.01 ? " (within 1%)" : " (outside 1%)"));
    } catch (const std::exception& e) {
      info("AC-9", std::string(k.name) + " could not be evaluated: " + e.what());
    }
  }
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ac10() {
  const auto start = Clock::now();
  const auto base = fs::temp_directory_path() / "isamp_acceptance_determinism";
  fs::remove_all(base);
  auto run_once = [&](const std::string& sub) {
    ConfigMap map;
    map.set("syn_n", "400");
    map.set("syn_d", "15");
    map.set("syn_nnz", "8");
    map.set("syn_sigma", "1.5");
    map.set("syn_noise", "0.05");
    map.set("test_fraction", "0.25");
    map.set("lambda", "0.01");
    map.set("epochs", "3");
    map.set("seeds", "1..3");
    map.set("algo", "sgd:uniform,sgd:lipschitz,sgd:smoothness,sgd:oracle");
    map.set("algo", "sdca:uniform:optionI,sdca:smooth:optionI,sdca:smooth:optionV,sdca:uniform:optionII");
    map.set("out", (base / sub).string());
    return run_experiment(map.build());
  };
  run_once("a");
  run_once("b");
  bool ok = true;
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    const auto other = base / "b" / entry.path().filename();
    ok = ok && fs::exists(other) && slurp(entry.path()) == slurp(other);
    ++files;
  }
  ok = ok && files == 8 * 3 + 2;
  fs::remove_all(base);
  const double secs = seconds_since(start);
  report("AC-10", ok, "determinism: " + std::to_string(files) + " CSV files byte-identical across two runs",
         secs);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4}, {"AC-5", ac5},
      {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8}, {"AC-9", ac9}, {"AC-10", ac10}};
  for (const auto& [id, check] : criteria) {
    try {
      check();
    } catch (const std::exception& e) {
      report(id, false, std::string("threw: ") + e.what(), 0.0);
    }
  }
  return all_passed ? 0 : 1;
}
