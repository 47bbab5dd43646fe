#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "polarcut/subset.hpp"

namespace polarcut {

/// Set function f : 2^N -> R given by one of four closed representations.
///
/// The power-sum and ratio families are kept slightly more general than the
/// benchmark objectives built on top of them, so that the submodular and
/// supermodular parts of a decomposition are again SetFunctions of the same
/// family (see decompose.hpp).
class SetFunction {
 public:
  /// Flat table of 2^n values indexed by mask.
  struct Tabular {
    std::vector<double> values;
  };

  /// sum_{i != j} Q[i][j] x_i x_j + c'x. Zero diagonal; both (i,j) and (j,i)
  /// contribute, i.e. the literal bilinear form.
  struct Quadratic {
    std::vector<std::vector<double>> q;
    std::vector<double> c;
  };

  /// m'x + w2*(b2'x)^(1/2) + w3*(b3'x)^(1/3) + w4*(b4'x)^(1/4), with b2, b3,
  /// b4 >= 0. Bases are stored already raised (sigma_i^2 etc.).
  struct PowerSum {
    std::vector<double> modular;
    double w2 = 0, w3 = 0, w4 = 0;
    std::vector<double> base2, base3, base4;
  };

  /// p'x / (1 + a'x) + m'x, with a >= 0.
  struct Ratio {
    std::vector<double> num;
    std::vector<double> den;
    std::vector<double> modular;
  };

  static SetFunction tabular(GroundSet ground, std::vector<double> values);
  static SetFunction quadratic(GroundSet ground, std::vector<std::vector<double>> q,
                               std::vector<double> c);
  static SetFunction power_sum(GroundSet ground, PowerSum ps);
  static SetFunction ratio(GroundSet ground, Ratio r);
  static SetFunction zero(GroundSet ground);

  /// -omega*mu'x + lambda*(sum sigma_i^2 x_i)^(1/2) - (1-lambda)*(sum gamma_i^3 x_i)^(1/3)
  /// + lambda*(sum kappa_i^4 x_i)^(1/4)
  static SetFunction moments_objective(GroundSet ground, const std::vector<double>& mu,
                                       const std::vector<double>& sigma,
                                       const std::vector<double>& gamma,
                                       const std::vector<double>& kappa, double lambda,
                                       double omega);

  /// c'x / (1 + a'x) - omega*s'x
  static SetFunction fractional_objective(GroundSet ground, const std::vector<double>& a,
                                          const std::vector<double>& c,
                                          const std::vector<double>& s, double omega);

  double operator()(SubsetMask s) const { return evaluate(s); }
  double evaluate(SubsetMask s) const;

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&family_);
  }

 private:
  SetFunction(GroundSet ground, std::variant<Tabular, Quadratic, PowerSum, Ratio> fam)
      : ground_(ground), family_(std::move(fam)) {}

  GroundSet ground_;
  std::variant<Tabular, Quadratic, PowerSum, Ratio> family_;
};

/// rho_i(S) = f(S u {i}) - f(S). Rejects i in S.
double marginal(const SetFunction& f, int i, SubsetMask s);

/// Returns (f', f(empty)) with f'(S) = f(S) - f(empty).
std::pair<SetFunction, double> normalize(const SetFunction& f);

struct SubmodularityWitness {
  SubsetMask base;  // S with i, j not in S
  int i = 0, j = 0;
  double slack = 0;  // f(S+i) + f(S+j) - f(S+ij) - f(S), negative on violation
};

/// Exhaustive local check, n <= 20. Empty result means submodular.
std::optional<SubmodularityWitness> find_submodularity_violation(const SetFunction& f);

inline bool is_submodular(const SetFunction& f) {
  return !find_submodularity_violation(f).has_value();
}

}  // namespace polarcut
