#include <cmath>
#include <limits>

#include "qbound/bounds.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

void require_rate(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(std::string(name) + " must lie in [0, 1]");
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

double ipow(double base, std::size_t e) { return std::pow(base, static_cast<double>(e)); }

/// Log of an odds ratio (1-a)/a split into an infinite direction (+1 for
/// a = 0, -1 for a = 1) and a finite value. Rates at the ends make the
/// comparison a limit, resolved by the infinite direction first.
struct LogOdds {
  int infinite = 0;
  double finite = 0;
};

LogOdds log_odds(double numerator, double denominator) {
  if (denominator == 0.0 && numerator == 0.0) return {};
  if (denominator == 0.0) return {+1, 0.0};
  if (numerator == 0.0) return {-1, 0.0};
  return {0, std::log(numerator / denominator)};
}

/// True iff k1*L1 + k2*L2 >= 0, counting ties (within rounding) as true.
bool region_holds(long k1, LogOdds l1, long k2, LogOdds l2) {
  const long infinite = k1 * l1.infinite + k2 * l2.infinite;
  if (infinite != 0) return infinite > 0;
  const double a = static_cast<double>(k1) * l1.finite;
  const double b = static_cast<double>(k2) * l2.finite;
  const double scale = std::abs(a) + std::abs(b);
  return a + b >= -1e-12 * scale;
}

}  // namespace

double exact_bad_probability_css(std::size_t m, double y, double p) {
  require_rate(y, "y");
  require_rate(p, "p");
  const LogOdds odds = log_odds(1.0 - p, p);
  CompensatedSum sum;
  for (std::size_t a = 0; a <= m; ++a) {
    for (std::size_t b = 0; a + b <= m; ++b) {
      const long k = 2 * static_cast<long>(b) + static_cast<long>(a) - static_cast<long>(m);
      if (!region_holds(k, odds, 0, {})) continue;
      sum.add(choose(m, a) * choose(m - a, b) * ipow(y, a) * ipow(1.0 - y, m - a) * ipow(p, b) *
              ipow(1.0 - p, m - a - b));
    }
  }
  return sum.value();
}

double exact_bad_probability_depol(std::size_t m, double y, double p) {
  require_rate(y, "y");
  require_rate(p, "p");
  // Odds between an identity term and the matching Pauli, (1-p)/(p/3).
  const LogOdds odds = log_odds(1.0 - p, p / 3.0);
  CompensatedSum sum;
  for (std::size_t a = 0; a <= m; ++a) {
    for (std::size_t match = 0; a + match <= m; ++match) {
      for (std::size_t differ = 0; a + match + differ <= m; ++differ) {
        const long k = 2 * static_cast<long>(match) + static_cast<long>(differ) + static_cast<long>(a) -
                       static_cast<long>(m);
        if (!region_holds(k, odds, 0, {})) continue;
        const std::size_t b = match + differ;
        sum.add(choose(m, a) * choose(m - a, b) * choose(b, match) * ipow(y, a) * ipow(1.0 - y, m - a) *
                ipow(p / 3.0, match) * ipow(2.0 * p / 3.0, differ) * ipow(1.0 - p, m - a - b));
      }
    }
  }
  return sum.value();
}

double exact_bad_probability_ft(std::size_t m, std::size_t m_q, double p, double q) {
  require_rate(p, "p");
  require_rate(q, "q");
  if (m_q > m) throw ValidationError("exact_bad_probability_ft: m_q exceeds m");
  const std::size_t m_s = m - m_q;
  const LogOdds odds_p = log_odds(1.0 - p, p);
  const LogOdds odds_q = log_odds(1.0 - q, q);
  CompensatedSum sum;
  for (std::size_t b = 0; b <= m_q; ++b) {
    for (std::size_t f = 0; f <= m_s; ++f) {
      const long kp = 2 * static_cast<long>(b) - static_cast<long>(m_q);
      const long kq = 2 * static_cast<long>(f) + static_cast<long>(m_q) - static_cast<long>(m);
      if (!region_holds(kp, odds_p, kq, odds_q)) continue;
      sum.add(choose(m_q, b) * choose(m_s, f) * ipow(p, b) * ipow(1.0 - p, m_q - b) * ipow(q, f) *
              ipow(1.0 - q, m_s - f));
    }
  }
  return sum.value();
}

double bad_bound_css(std::size_t m, double y, double p) { return ipow(upsilon_css(y, p), m); }

double bad_bound_depol(std::size_t m, double y, double p) { return ipow(upsilon(y, p), m); }

double bad_bound_ft(std::size_t m, std::size_t m_q, double p, double q) {
  require_rate(p, "p");
  require_rate(q, "q");
  if (m_q > m) throw ValidationError("bad_bound_ft: m_q exceeds m");
  return ipow(2.0, m) * std::pow(p * (1.0 - p), 0.5 * static_cast<double>(m_q)) *
         std::pow(q * (1.0 - q), 0.5 * static_cast<double>(m - m_q));
}

}  // namespace qbound
