#pragma once

#include <memory>
#include <string>
#include <vector>

#include "netcoord/rng.hpp"

namespace netcoord {

// One independent finite-valued input: distinct support values and their
// probabilities (positive, summing to 1 within 1e-12).
struct Variable {
  std::vector<double> support;
  std::vector<double> probs;
};

class InputModel {
public:
  explicit InputModel(std::vector<Variable> vars);  // validates
  int variable_count() const { return int(vars_.size()); }
  const Variable& variable(int i) const { return vars_.at(std::size_t(i)); }
  bool is_uniform_binary(int i) const;  // support {-1,+1}, both probability 1/2
private:
  std::vector<Variable> vars_;
};

// A random variable given as a table over the joint assignments of the
// scoped inputs; assignments are enumerated row-major with the last scoped
// variable fastest. Standardized functions have mean 0 and variance 1 under
// the product measure.
struct LocalFunction {
  std::shared_ptr<const InputModel> model;
  std::vector<int> scope;  // sorted distinct indices into the model
  std::vector<double> table;
};

// Subset-indexed values over the players of a game, bitmask order.
using SubsetValues = std::vector<double>;

// Set function over the scoped variables; player bit k corresponds to
// players[k], an index into the input model.
struct CooperativeGame {
  std::vector<int> players;
  SubsetValues value;  // size 1 << players.size()
};

// One probability mass per model variable; zero outside the function scope.
using InfluenceDistribution = std::vector<double>;

// Hard cap for the dense subset representation; everything here is computed
// exhaustively, never sampled.
inline constexpr int kScopeCap = 20;

double mean_of(const LocalFunction& f);
double variance_of(const LocalFunction& f);

// Affine rescale to mean 0, variance 1; idempotent. Constant functions have
// no influence distribution and are rejected.
LocalFunction normalize(const LocalFunction& f);

// value(S) = variance of the conditional expectation of f given the
// variables in S, by exhaustive summation over the product measure.
// Requires a standardized function.
CooperativeGame variance_game(const LocalFunction& f);

// Moebius transform: d with value(S) = sum of d over subsets of S.
SubsetValues harsanyi_dividends(const CooperativeGame& game);

// Shapley values of the variance game, aggregated from the dividends:
// mu(k) = sum over S containing k of d(S)/|S|. Standardizes f first.
InfluenceDistribution shapley_influence(const LocalFunction& f);

// Squared coefficients of the parity (Walsh) expansion, one per subset of
// the scope. Requires every scoped input uniform on {-1,+1}; for
// standardized f these weights sum to 1 and coincide subset-by-subset with
// the dividends of the variance game.
SubsetValues fourier_weights(const LocalFunction& f);

double total_variation(const InfluenceDistribution& a, const InfluenceDistribution& b);

// E[(f - h)^2] under the shared model, by exhaustive enumeration over the
// union of the two scopes.
double expected_square_difference(const LocalFunction& f, const LocalFunction& h);

// Checks the influence-map contraction on a pair of standardized functions:
// the total variation distance between the two influence distributions never
// exceeds the L2 distance between the functions. dividend_gap is the
// intermediate half-sum of absolute dividend differences, which sits between
// the two sides.
struct ContractionReport {
  double tv = 0.0;
  double l2 = 0.0;
  bool holds = false;
  double dividend_gap = 0.0;
  bool intermediate_holds = false;
};
ContractionReport contraction_check(const LocalFunction& f, const LocalFunction& h);

// Random table over the given scope, standardized; for sweeps and tests.
LocalFunction random_standardized_function(std::shared_ptr<const InputModel> model,
                                           const std::vector<int>& scope, Rng& rng);

std::shared_ptr<const InputModel> uniform_binary_model(int variables);

// File format: {"supports": [[vals]...], "probs": [[p]...], "scope":
// [idx...], "table": [real...]}, row-major with the last scoped variable
// fastest.
LocalFunction load_function(const std::string& path);
void save_function(const LocalFunction& f, const std::string& path);

}  // namespace netcoord
