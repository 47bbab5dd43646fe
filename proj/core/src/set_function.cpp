#include "polarcut/set_function.hpp"

#include <cmath>
#include <stdexcept>

#include "polarcut/common.hpp"

namespace polarcut {

namespace {

void check_size(const GroundSet& ground, size_t got, const char* what) {
  if (got != static_cast<size_t>(ground.size())) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(ground.size()) + " entries, got " +
                                std::to_string(got));
  }
}

double masked_sum(const std::vector<double>& v, SubsetMask s) {
  double total = 0;
  for_each_element(s, [&](int i) { total += v[i]; });
  return total;
}

}  // namespace

SetFunction SetFunction::tabular(GroundSet ground, std::vector<double> values) {
  if (values.size() != ground.subset_count()) {
    throw std::invalid_argument("tabular: expected " + std::to_string(ground.subset_count()) +
                                " values, got " + std::to_string(values.size()));
  }
  return SetFunction(ground, Tabular{std::move(values)});
}

SetFunction SetFunction::quadratic(GroundSet ground, std::vector<std::vector<double>> q,
                                   std::vector<double> c) {
  check_size(ground, q.size(), "quadratic Q rows");
  for (const auto& row : q) check_size(ground, row.size(), "quadratic Q cols");
  check_size(ground, c.size(), "quadratic c");
  return SetFunction(ground, Quadratic{std::move(q), std::move(c)});
}

SetFunction SetFunction::power_sum(GroundSet ground, PowerSum ps) {
  check_size(ground, ps.modular.size(), "power_sum modular");
  check_size(ground, ps.base2.size(), "power_sum base2");
  check_size(ground, ps.base3.size(), "power_sum base3");
  check_size(ground, ps.base4.size(), "power_sum base4");
  return SetFunction(ground, std::move(ps));
}

SetFunction SetFunction::ratio(GroundSet ground, Ratio r) {
  check_size(ground, r.num.size(), "ratio num");
  check_size(ground, r.den.size(), "ratio den");
  check_size(ground, r.modular.size(), "ratio modular");
  for (double d : r.den) {
    if (d < 0) throw std::invalid_argument("ratio: denominator coefficients must be >= 0");
  }
  return SetFunction(ground, std::move(r));
}

SetFunction SetFunction::zero(GroundSet ground) {
  int n = ground.size();
  PowerSum ps;
  ps.modular.assign(n, 0.0);
  ps.base2.assign(n, 0.0);
  ps.base3.assign(n, 0.0);
  ps.base4.assign(n, 0.0);
  return SetFunction(ground, std::move(ps));
}

SetFunction SetFunction::moments_objective(GroundSet ground, const std::vector<double>& mu,
                                           const std::vector<double>& sigma,
                                           const std::vector<double>& gamma,
                                           const std::vector<double>& kappa, double lambda,
                                           double omega) {
  int n = ground.size();
  check_size(ground, mu.size(), "moments mu");
  check_size(ground, sigma.size(), "moments sigma");
  check_size(ground, gamma.size(), "moments gamma");
  check_size(ground, kappa.size(), "moments kappa");
  PowerSum ps;
  ps.modular.resize(n);
  ps.base2.resize(n);
  ps.base3.resize(n);
  ps.base4.resize(n);
  ps.w2 = lambda;
  ps.w3 = -(1.0 - lambda);
  ps.w4 = lambda;
  for (int i = 0; i < n; ++i) {
    ps.modular[i] = -omega * mu[i];
    ps.base2[i] = sigma[i] * sigma[i];
    ps.base3[i] = gamma[i] * gamma[i] * gamma[i];
    ps.base4[i] = kappa[i] * kappa[i] * kappa[i] * kappa[i];
  }
  return power_sum(ground, std::move(ps));
}

SetFunction SetFunction::fractional_objective(GroundSet ground, const std::vector<double>& a,
                                              const std::vector<double>& c,
                                              const std::vector<double>& s, double omega) {
  int n = ground.size();
  check_size(ground, a.size(), "fractional a");
  check_size(ground, c.size(), "fractional c");
  check_size(ground, s.size(), "fractional s");
  Ratio r;
  r.num = c;
  r.den = a;
  r.modular.resize(n);
  for (int i = 0; i < n; ++i) r.modular[i] = -omega * s[i];
  return ratio(ground, std::move(r));
}

double SetFunction::evaluate(SubsetMask s) const {
  if ((s.bits & ~ground_.full_bits()) != 0) {
    throw std::out_of_range("evaluate: mask has elements outside the ground set");
  }
  struct Visitor {
    SubsetMask s;
    const GroundSet& ground;

    double operator()(const Tabular& t) const { return t.values[s.bits]; }

    double operator()(const Quadratic& q) const {
      double total = masked_sum(q.c, s);
      for_each_element(s, [&](int i) {
        for_each_element(s, [&](int j) {
          if (i != j) total += q.q[i][j];
        });
      });
      return total;
    }

    double operator()(const PowerSum& p) const {
      double total = masked_sum(p.modular, s);
      if (p.w2 != 0) total += p.w2 * std::sqrt(masked_sum(p.base2, s));
      if (p.w3 != 0) total += p.w3 * std::cbrt(masked_sum(p.base3, s));
      if (p.w4 != 0) total += p.w4 * std::pow(masked_sum(p.base4, s), 0.25);
      return total;
    }

    double operator()(const Ratio& r) const {
      return masked_sum(r.num, s) / (1.0 + masked_sum(r.den, s)) + masked_sum(r.modular, s);
    }
  };
  return std::visit(Visitor{s, ground_}, family_);
}

double marginal(const SetFunction& f, int i, SubsetMask s) {
  if (i < 0 || i >= f.n()) throw std::out_of_range("marginal: element out of range");
  if (s.contains(i)) throw std::invalid_argument("marginal: element already in the set");
  return f(s.with(i)) - f(s);
}

std::pair<SetFunction, double> normalize(const SetFunction& f) {
  double offset = f(SubsetMask{});
  if (offset == 0.0) return {f, 0.0};
  // All four families vanish at the empty set except Tabular, so only the
  // table needs shifting; for the others a nonzero offset cannot occur.
  const auto* tab = f.as<SetFunction::Tabular>();
  if (tab == nullptr) return {f, 0.0};
  std::vector<double> shifted = tab->values;
  for (double& v : shifted) v -= offset;
  return {SetFunction::tabular(f.ground(), std::move(shifted)), offset};
}

std::optional<SubmodularityWitness> find_submodularity_violation(const SetFunction& f) {
  int n = f.n();
  if (n > 20) {
    throw std::invalid_argument("find_submodularity_violation: ground set too large (n > 20)");
  }
  uint64_t count = f.ground().subset_count();
  std::vector<double> value(count);
  for (uint64_t m = 0; m < count; ++m) value[m] = f(SubsetMask{m});

  // Local characterization: f(S+i) + f(S+j) >= f(S+ij) + f(S) for all S and
  // distinct i, j outside S. Scan in mask order so the first witness found is
  // deterministic.
  for (uint64_t m = 0; m < count; ++m) {
    SubsetMask s{m};
    for (int i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (s.contains(j)) continue;
        double slack = value[s.with(i).bits] + value[s.with(j).bits] -
                       value[s.with(i).with(j).bits] - value[m];
        if (slack < -kValueTol) {
          return SubmodularityWitness{s, i, j, slack};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace polarcut
