#include "netcoord/influence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace netcoord {

namespace {

constexpr double kStandardizedTol = 1e-6;

std::vector<int> scope_sizes(const LocalFunction& f) {
  std::vector<int> sizes;
  sizes.reserve(f.scope.size());
  for (int v : f.scope) sizes.push_back(int(f.model->variable(v).support.size()));
  return sizes;
}

std::size_t table_size(const std::vector<int>& sizes) {
  std::size_t total = 1;
  for (int s : sizes) total *= std::size_t(s);
  return total;
}

void check_function(const LocalFunction& f) {
  if (!f.model) throw std::invalid_argument("local function: missing input model");
  for (std::size_t i = 0; i < f.scope.size(); ++i) {
    int v = f.scope[i];
    if (v < 0 || v >= f.model->variable_count())
      throw std::invalid_argument("local function: scope index out of range");
    if (i > 0 && f.scope[i] <= f.scope[i - 1])
      throw std::invalid_argument("local function: scope must be sorted and distinct");
  }
  if (f.table.size() != table_size(scope_sizes(f)))
    throw std::invalid_argument("local function: table length mismatch");
}

void check_capacity(const LocalFunction& f) {
  if (int(f.scope.size()) > kScopeCap)
    throw std::length_error("scope exceeds the exhaustive-computation cap");
}

// Sum out one axis of a dense row-major table with the given weights.
std::vector<double> fold_axis(const std::vector<double>& table, std::vector<int>& sizes,
                              int axis, const std::vector<double>& weights) {
  std::size_t inner = 1;
  for (std::size_t i = std::size_t(axis) + 1; i < sizes.size(); ++i) inner *= std::size_t(sizes[i]);
  std::size_t outer = table.size() / (inner * std::size_t(sizes[axis]));
  std::vector<double> folded(outer * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t a = 0; a < std::size_t(sizes[axis]); ++a) {
      double w = weights[a];
      const double* src = table.data() + (o * std::size_t(sizes[axis]) + a) * inner;
      double* dst = folded.data() + o * inner;
      for (std::size_t in = 0; in < inner; ++in) dst[in] += w * src[in];
    }
  sizes.erase(sizes.begin() + axis);
  return folded;
}

// Expectation of the table when axis i is averaged with weights[i].
double fold_all(std::vector<double> table, std::vector<int> sizes,
                const std::vector<std::vector<double>>& weights) {
  for (int axis = int(sizes.size()) - 1; axis >= 0; --axis)
    table = fold_axis(table, sizes, axis, weights[std::size_t(axis)]);
  return table.empty() ? 0.0 : table[0];
}

std::vector<std::vector<double>> scope_probs(const LocalFunction& f) {
  std::vector<std::vector<double>> probs;
  probs.reserve(f.scope.size());
  for (int v : f.scope) probs.push_back(f.model->variable(v).probs);
  return probs;
}

void require_standardized(const LocalFunction& f, const char* where) {
  if (std::abs(mean_of(f)) > kStandardizedTol || std::abs(variance_of(f) - 1.0) > kStandardizedTol)
    throw std::invalid_argument(std::string(where) + ": function must be standardized");
}

void require_same_model(const LocalFunction& f, const LocalFunction& h, const char* where) {
  if (f.model == h.model) return;
  if (!f.model || !h.model || f.model->variable_count() != h.model->variable_count())
    throw std::invalid_argument(std::string(where) + ": functions must share an input model");
  for (int v = 0; v < f.model->variable_count(); ++v) {
    const Variable& a = f.model->variable(v);
    const Variable& b = h.model->variable(v);
    if (a.support != b.support || a.probs != b.probs)
      throw std::invalid_argument(std::string(where) + ": functions must share an input model");
  }
}

}  // namespace

InputModel::InputModel(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (const Variable& v : vars_) {
    if (v.support.empty()) throw std::invalid_argument("input model: empty support");
    if (v.support.size() != v.probs.size())
      throw std::invalid_argument("input model: support/probability size mismatch");
    double sum = 0.0;
    for (double p : v.probs) {
      if (!(p > 0.0)) throw std::invalid_argument("input model: probabilities must be positive");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("input model: probabilities must sum to 1");
    std::vector<double> sorted = v.support;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("input model: support values must be distinct");
  }
}

bool InputModel::is_uniform_binary(int i) const {
  const Variable& v = variable(i);
  if (v.support.size() != 2) return false;
  double lo = std::min(v.support[0], v.support[1]);
  double hi = std::max(v.support[0], v.support[1]);
  return lo == -1.0 && hi == 1.0 && std::abs(v.probs[0] - 0.5) <= 1e-12 &&
         std::abs(v.probs[1] - 0.5) <= 1e-12;
}

double mean_of(const LocalFunction& f) {
  check_function(f);
  return fold_all(f.table, scope_sizes(f), scope_probs(f));
}

double variance_of(const LocalFunction& f) {
  check_function(f);
  double m = mean_of(f);
  std::vector<double> squared(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    double d = f.table[i] - m;
    squared[i] = d * d;
  }
  return fold_all(squared, scope_sizes(f), scope_probs(f));
}

LocalFunction normalize(const LocalFunction& f) {
  check_function(f);
  double m = mean_of(f);
  double var = variance_of(f);
  if (var <= 1e-12)
    throw std::domain_error("normalize: constant function has no influence distribution");
  double scale = 1.0 / std::sqrt(var);
  LocalFunction out = f;
  for (double& x : out.table) x = (x - m) * scale;
  return out;
}

CooperativeGame variance_game(const LocalFunction& f) {
  check_function(f);
  check_capacity(f);
  require_standardized(f, "variance_game");
  int k = int(f.scope.size());
  std::vector<int> sizes = scope_sizes(f);
  std::vector<std::vector<double>> probs = scope_probs(f);

  CooperativeGame game;
  game.players = f.scope;
  game.value.assign(std::size_t(1) << k, 0.0);
  for (std::size_t mask = 0; mask < game.value.size(); ++mask) {
    // Condition on the variables in the mask by folding out the rest, then
    // take the variance of the conditional mean over the kept variables.
    std::vector<double> cond = f.table;
    std::vector<int> cond_sizes = sizes;
    std::vector<std::vector<double>> kept;
    for (int axis = k - 1; axis >= 0; --axis)
      if (!(mask >> axis & 1)) cond = fold_axis(cond, cond_sizes, axis, probs[std::size_t(axis)]);
    for (int axis = 0; axis < k; ++axis)
      if (mask >> axis & 1) kept.push_back(probs[std::size_t(axis)]);
    double m1 = fold_all(cond, cond_sizes, kept);
    for (double& x : cond) x *= x;
    double m2 = fold_all(cond, cond_sizes, kept);
    game.value[mask] = m2 - m1 * m1;
  }
  game.value[0] = 0.0;
  return game;
}

SubsetValues harsanyi_dividends(const CooperativeGame& game) {
  int k = int(game.players.size());
  if (game.value.size() != (std::size_t(1) << k))
    throw std::invalid_argument("harsanyi_dividends: malformed game");
  SubsetValues d = game.value;
  for (int b = 0; b < k; ++b)
    for (std::size_t mask = 0; mask < d.size(); ++mask)
      if (mask >> b & 1) d[mask] -= d[mask ^ (std::size_t(1) << b)];
  return d;
}

InfluenceDistribution shapley_influence(const LocalFunction& f) {
  LocalFunction std_f = normalize(f);
  CooperativeGame game = variance_game(std_f);
  SubsetValues d = harsanyi_dividends(game);
  InfluenceDistribution mu(std::size_t(f.model->variable_count()), 0.0);
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    double share = d[mask] / double(std::popcount(mask));
    for (int b = 0; b < int(game.players.size()); ++b)
      if (mask >> b & 1) mu[std::size_t(game.players[b])] += share;
  }
  return mu;
}

SubsetValues fourier_weights(const LocalFunction& f) {
  check_function(f);
  check_capacity(f);
  for (int v : f.scope)
    if (!f.model->is_uniform_binary(v))
      throw std::domain_error("fourier_weights: inputs must be uniform on {-1,+1}");
  int k = int(f.scope.size());
  std::vector<int> sizes = scope_sizes(f);
  std::vector<std::vector<double>> plain = scope_probs(f);
  std::vector<std::vector<double>> signed_w;
  signed_w.reserve(f.scope.size());
  for (int v : f.scope) {
    const Variable& var = f.model->variable(v);
    signed_w.push_back({var.probs[0] * var.support[0], var.probs[1] * var.support[1]});
  }
  SubsetValues weights(std::size_t(1) << k, 0.0);
  for (std::size_t mask = 0; mask < weights.size(); ++mask) {
    std::vector<std::vector<double>> w;
    w.reserve(f.scope.size());
    for (int axis = 0; axis < k; ++axis)
      w.push_back((mask >> axis & 1) ? signed_w[std::size_t(axis)] : plain[std::size_t(axis)]);
    double coefficient = fold_all(f.table, sizes, w);
    weights[mask] = coefficient * coefficient;
  }
  return weights;
}

double total_variation(const InfluenceDistribution& a, const InfluenceDistribution& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("total_variation: distributions on different index ranges");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

double expected_square_difference(const LocalFunction& f, const LocalFunction& h) {
  check_function(f);
  check_function(h);
  require_same_model(f, h, "expected_square_difference");
  std::vector<int> joint;
  std::set_union(f.scope.begin(), f.scope.end(), h.scope.begin(), h.scope.end(),
                 std::back_inserter(joint));
  if (int(joint.size()) > kScopeCap)
    throw std::length_error("scope union exceeds the exhaustive-computation cap");

  int k = int(joint.size());
  std::vector<int> sizes;
  std::vector<const std::vector<double>*> probs;
  for (int v : joint) {
    sizes.push_back(int(f.model->variable(v).support.size()));
    probs.push_back(&f.model->variable(v).probs);
  }
  // Strides into each table per joint variable; zero when the variable is
  // outside a function's scope, which broadcasts it.
  auto strides_for = [&](const LocalFunction& fn) {
    std::vector<std::size_t> strides(joint.size(), 0);
    std::size_t stride = 1;
    for (int i = int(fn.scope.size()) - 1; i >= 0; --i) {
      int pos = int(std::lower_bound(joint.begin(), joint.end(), fn.scope[std::size_t(i)]) -
                    joint.begin());
      strides[std::size_t(pos)] = stride;
      stride *= std::size_t(fn.model->variable(fn.scope[std::size_t(i)]).support.size());
    }
    return strides;
  };
  std::vector<std::size_t> fs = strides_for(f);
  std::vector<std::size_t> hs = strides_for(h);

  std::size_t total = 1;
  for (int s : sizes) total *= std::size_t(s);
  std::vector<int> digits(joint.size(), 0);
  double acc = 0.0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t fi = 0, hi = 0;
    double weight = 1.0;
    for (int i = 0; i < k; ++i) {
      fi += std::size_t(digits[std::size_t(i)]) * fs[std::size_t(i)];
      hi += std::size_t(digits[std::size_t(i)]) * hs[std::size_t(i)];
      weight *= (*probs[std::size_t(i)])[std::size_t(digits[std::size_t(i)])];
    }
    double d = f.table[fi] - h.table[hi];
    acc += weight * d * d;
    for (int axis = k - 1; axis >= 0; --axis) {
      if (++digits[std::size_t(axis)] < sizes[std::size_t(axis)]) break;
      digits[std::size_t(axis)] = 0;
    }
  }
  return acc;
}

namespace {

// Re-express f over a larger scope by broadcasting; used to put a pair of
// functions on a common subset lattice.
LocalFunction extend_scope(const LocalFunction& f, const std::vector<int>& joint) {
  LocalFunction out;
  out.model = f.model;
  out.scope = joint;
  std::vector<int> sizes;
  for (int v : joint) sizes.push_back(int(f.model->variable(v).support.size()));
  out.table.assign(table_size(sizes), 0.0);
  std::vector<std::size_t> strides(joint.size(), 0);
  std::size_t stride = 1;
  for (int i = int(f.scope.size()) - 1; i >= 0; --i) {
    int pos = int(std::lower_bound(joint.begin(), joint.end(), f.scope[std::size_t(i)]) -
                  joint.begin());
    strides[std::size_t(pos)] = stride;
    stride *= std::size_t(f.model->variable(f.scope[std::size_t(i)]).support.size());
  }
  std::vector<int> digits(joint.size(), 0);
  for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
    std::size_t fi = 0;
    for (std::size_t i = 0; i < joint.size(); ++i) fi += std::size_t(digits[i]) * strides[i];
    out.table[idx] = f.table[fi];
    for (int axis = int(joint.size()) - 1; axis >= 0; --axis) {
      if (++digits[std::size_t(axis)] < sizes[std::size_t(axis)]) break;
      digits[std::size_t(axis)] = 0;
    }
  }
  return out;
}

}  // namespace

ContractionReport contraction_check(const LocalFunction& f, const LocalFunction& h) {
  require_same_model(f, h, "contraction_check");
  require_standardized(f, "contraction_check");
  require_standardized(h, "contraction_check");

  ContractionReport report;
  report.tv = total_variation(shapley_influence(f), shapley_influence(h));
  report.l2 = std::sqrt(expected_square_difference(f, h));
  report.holds = report.tv <= report.l2 + 1e-9;

  std::vector<int> joint;
  std::set_union(f.scope.begin(), f.scope.end(), h.scope.begin(), h.scope.end(),
                 std::back_inserter(joint));
  SubsetValues df = harsanyi_dividends(variance_game(extend_scope(f, joint)));
  SubsetValues dh = harsanyi_dividends(variance_game(extend_scope(h, joint)));
  double gap = 0.0;
  for (std::size_t mask = 0; mask < df.size(); ++mask) gap += std::abs(df[mask] - dh[mask]);
  report.dividend_gap = 0.5 * gap;
  report.intermediate_holds = report.tv <= report.dividend_gap + 1e-9;
  return report;
}

LocalFunction random_standardized_function(std::shared_ptr<const InputModel> model,
                                           const std::vector<int>& scope, Rng& rng) {
  LocalFunction f;
  f.model = std::move(model);
  f.scope = scope;
  std::vector<int> sizes = scope_sizes(f);
  f.table.assign(table_size(sizes), 0.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (double& x : f.table) x = 2.0 * rng.next_unit() - 1.0;
    if (variance_of(f) > 1e-9) return normalize(f);
  }
  throw std::runtime_error("random_standardized_function: could not draw a non-constant table");
}

std::shared_ptr<const InputModel> uniform_binary_model(int variables) {
  std::vector<Variable> vars(std::size_t(variables), Variable{{-1.0, 1.0}, {0.5, 0.5}});
  return std::make_shared<InputModel>(std::move(vars));
}

LocalFunction load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_function: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("load_function: " + path + ": " + e.what());
  }
  auto supports = j.at("supports").get<std::vector<std::vector<double>>>();
  auto probs = j.at("probs").get<std::vector<std::vector<double>>>();
  if (supports.size() != probs.size())
    throw std::invalid_argument("load_function: supports/probs length mismatch");
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < supports.size(); ++i)
    vars.push_back({supports[i], probs[i]});
  LocalFunction f;
  f.model = std::make_shared<InputModel>(std::move(vars));
  f.scope = j.at("scope").get<std::vector<int>>();
  f.table = j.at("table").get<std::vector<double>>();
  check_function(f);
  return f;
}

void save_function(const LocalFunction& f, const std::string& path) {
  check_function(f);
  nlohmann::json j;
  auto supports = nlohmann::json::array();
  auto probs = nlohmann::json::array();
  for (int v = 0; v < f.model->variable_count(); ++v) {
    supports.push_back(f.model->variable(v).support);
    probs.push_back(f.model->variable(v).probs);
  }
  j["supports"] = std::move(supports);
  j["probs"] = std::move(probs);
  j["scope"] = f.scope;
  j["table"] = f.table;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_function: cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace netcoord
