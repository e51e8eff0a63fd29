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

#include "isamp/data_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "isamp/error.hpp"
#include "isamp/sampling.hpp"

namespace isamp {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::optional<double> to_double(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t begin = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > begin) out.push_back(line.substr(begin, pos - begin));
  }
  return out;
}

struct RawExample {
  std::vector<Index> indices;
  std::vector<double> values;
  double label = 0.0;
};

void append_number(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

LabeledDataset parse_libsvm(std::istream& in, std::optional<std::size_t> dim) {
  std::vector<RawExample> raw;
  std::size_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto toks = tokens(view);
    if (toks.empty()) continue;
    RawExample ex;
    const auto label = to_double(toks[0]);
    if (!label) parse_error(line_no, "bad label '" + std::string(toks[0]) + "'");
    ex.label = *label;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      const auto tok = toks[k];
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) {
        parse_error(line_no, "expected index:value, got '" + std::string(tok) + "'");
      }
      const auto idx_text = tok.substr(0, colon);
      unsigned long long idx = 0;
      const auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
      if (ec != std::errc() || ptr != idx_text.data() + idx_text.size() || idx_text.empty()) {
        parse_error(line_no, "bad index '" + std::string(idx_text) + "'");
      }
      if (idx == 0) parse_error(line_no, "indices are 1-based");
      if (idx > std::numeric_limits<Index>::max()) parse_error(line_no, "index too large");
      const auto value = to_double(tok.substr(colon + 1));
      if (!value) parse_error(line_no, "bad value in '" + std::string(tok) + "'");
      const auto zero_based = static_cast<Index>(idx - 1);
      if (!ex.indices.empty() && zero_based <= ex.indices.back()) {
        parse_error(line_no, "indices must be strictly ascending");
      }
      if (dim && zero_based >= *dim) {
        parse_error(line_no, "index " + std::to_string(idx) + " exceeds dimension " + std::to_string(*dim));
      }
      max_index = std::max<std::size_t>(max_index, idx);
      ex.indices.push_back(zero_based);
      ex.values.push_back(*value);
    }
    raw.push_back(std::move(ex));
  }
  if (in.bad()) fail(ErrorCode::io, "read error");
  if (raw.empty()) fail(ErrorCode::parse, "no examples found");

  const bool zero_one = std::all_of(raw.begin(), raw.end(), [](const RawExample& e) {
    return e.label == 0.0 || e.label == 1.0;
  });
  const bool has_zero =
      std::any_of(raw.begin(), raw.end(), [](const RawExample& e) { return e.label == 0.0; });

  const std::size_t d = std::max<std::size_t>(dim.value_or(max_index), 1);
  std::vector<LabeledExample> examples;
  examples.reserve(raw.size());
  for (auto& ex : raw) {
    double y = ex.label;
    if (zero_one && has_zero) y = y == 0.0 ? -1.0 : 1.0;
    examples.push_back({SparseVector(d, std::move(ex.indices), std::move(ex.values)), y});
  }
  return LabeledDataset(std::move(examples), d);
}

LabeledDataset parse_libsvm(std::string_view text, std::optional<std::size_t> dim) {
  std::istringstream in{std::string(text)};
  return parse_libsvm(in, dim);
}

LabeledDataset load_libsvm(const std::string& path, std::optional<std::size_t> dim) {
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) fail(ErrorCode::io, "cannot open " + path);
    std::string text;
    char buf[1 << 16];
    int got = 0;
    while ((got = gzread(f, buf, sizeof(buf))) > 0) text.append(buf, static_cast<std::size_t>(got));
    const bool failed = got < 0;
    gzclose(f);
    if (failed) fail(ErrorCode::io, "gzip read error in " + path);
    return parse_libsvm(std::string_view(text), dim);
  }
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open " + path);
  return parse_libsvm(in, dim);
}

std::string to_libsvm(const LabeledDataset& data) {
  std::string out;
  for (const auto& ex : data.examples()) {
    append_number(out, ex.label);
    const auto idx = ex.features.indices();
    const auto val = ex.features.values();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      out.push_back(' ');
      out.append(std::to_string(static_cast<unsigned long long>(idx[k]) + 1));
      out.push_back(':');
      append_number(out, val[k]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_libsvm(std::ostream& out, const LabeledDataset& data) {
  const std::string text = to_libsvm(data);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::io, "write error");
}

void save_libsvm(const std::string& path, const LabeledDataset& data) {
  const std::string text = to_libsvm(data);
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "wb");
    if (!f) fail(ErrorCode::io, "cannot open " + path + " for writing");
    const int wrote = text.empty() ? 0 : gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
    const int closed = gzclose(f);
    if (wrote != static_cast<int>(text.size()) || closed != Z_OK) {
      fail(ErrorCode::io, "gzip write error in " + path);
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot open " + path + " for writing");
  write_libsvm(out, data);
}

void SyntheticSpec::validate() const {
  if (n == 0 || d == 0) fail(ErrorCode::config, "synthetic n and d must be positive");
  if (nnz == 0 || nnz > d) fail(ErrorCode::config, "synthetic nnz must lie in [1, d]");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) fail(ErrorCode::config, "synthetic sigma must be >= 0");
  if (!(noise >= 0.0 && noise < 1.0)) fail(ErrorCode::config, "synthetic noise must lie in [0,1)");
  if (d > std::numeric_limits<Index>::max()) fail(ErrorCode::config, "synthetic d too large");
}

LabeledDataset generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  DenseVector teacher(spec.d);
  for (double& v : teacher) v = gauss(rng);

  std::vector<Index> perm(spec.d);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<LabeledExample> examples;
  examples.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    // Partial Fisher-Yates picks nnz distinct coordinates.
    for (std::size_t k = 0; k < spec.nnz; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, spec.d - 1);
      std::swap(perm[k], perm[pick(rng)]);
    }
    std::vector<std::pair<Index, double>> entries(spec.nnz);
    double sq = 0.0;
    for (std::size_t k = 0; k < spec.nnz; ++k) {
      double v = gauss(rng);
      if (v == 0.0) v = 1.0;
      entries[k] = {perm[k], v};
      sq += v * v;
    }
    std::sort(entries.begin(), entries.end());
    const double scale = std::exp(spec.sigma * gauss(rng)) / std::sqrt(sq);
    double score = 0.0;
    for (auto& [j, v] : entries) {
      v *= scale;
      score += v * teacher[j];
    }
    double y = score >= 0.0 ? 1.0 : -1.0;
    if (spec.noise > 0.0 && unit(rng) < spec.noise) y = -y;
    examples.push_back({SparseVector(spec.d, entries), y});
  }
  return LabeledDataset(std::move(examples), spec.d);
}

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& data, double test_fraction,
                                                std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    fail(ErrorCode::invalid_argument, "test fraction must lie in (0,1)");
  }
  const std::size_t n = data.size();
  const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
  if (n_test == 0 || n_test >= n) {
    fail(ErrorCode::invalid_argument, "split leaves an empty part (n=" + std::to_string(n) + ")");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> test_rows(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
  std::vector<std::size_t> train_rows(order.begin() + static_cast<std::ptrdiff_t>(n_test), order.end());
  // Keep file order inside each part.
  std::sort(test_rows.begin(), test_rows.end());
  std::sort(train_rows.begin(), train_rows.end());
  return {data.subset(train_rows), data.subset(test_rows)};
}

}  // namespace isamp
