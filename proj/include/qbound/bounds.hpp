#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>

namespace qbound {

/// Single-position error rates. Every field lies in [0, 1].
struct ChannelParams {
  double y = 0;    ///< erasure probability
  double p = 0;    ///< depolarizing probability
  double p_x = 0;  ///< independent X error probability
  double p_z = 0;  ///< independent Z error probability
  double q = 0;    ///< syndrome-bit flip probability
};

/// Constant D in d >= D ln n. Super-logarithmic distance growth is the
/// explicit infinite case, where the budget e^{-1/D} is exactly 1.
class DistanceScaling {
 public:
  static DistanceScaling infinite() { return DistanceScaling(std::numeric_limits<double>::infinity()); }
  /// D > 0.
  static DistanceScaling finite(double d);
  /// Accepts "inf" / "infinity" or a positive number.
  static DistanceScaling parse(const std::string& text);

  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  double value() const { return value_; }
  /// e^{-1/D}.
  double budget() const;

 private:
  explicit DistanceScaling(double v) : value_(v) {}
  double value_;
};

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t d = 0;
  std::size_t w = 0;    ///< generator weight cap for stabilizer codes
  std::size_t w_x = 0;  ///< X generator weight cap for CSS codes
  std::size_t w_z = 0;  ///< Z generator weight cap for CSS codes
  DistanceScaling scaling = DistanceScaling::infinite();
};

/// Effective erasure probability with depolarizing noise:
/// y + (1-y){2p/3 + 2[p(1-p)/3]^{1/2}}.
double upsilon(double y, double p);
/// Effective erasure probability with independent X/Z noise:
/// y + 2(1-y)[p(1-p)]^{1/2}.
double upsilon_css(double y, double p);

enum class Theorem {
  kStabilizer,    ///< 2(w-1) Upsilon(y,p) <= e^{-1/D}
  kCss,           ///< (w_X-1) Upsilon_CSS(y,p_Z) and (w_Z-1) Upsilon_CSS(y,p_X) <= e^{-1/D}
  kStabilizerFt,  ///< 4[q(1-q)]^{1/2} + 2w Upsilon(y,p) <= e^{-1/D}
  kCssFt,         ///< 4[q(1-q)]^{1/2} + w_X Upsilon_CSS(y,p_Z), same with w_Z, p_X
};

/// Parses "1", "2", "3s", "3c".
Theorem parse_theorem(const std::string& text);
std::string to_string(Theorem t);

/// Largest left-hand side over the theorem's conditions.
double theorem_lhs(Theorem t, const CodeParams& code, const ChannelParams& ch);
bool check_theorem(Theorem t, const CodeParams& code, const ChannelParams& ch);

bool check_theorem1(const CodeParams& code, const ChannelParams& ch);
bool check_theorem2(const CodeParams& code, const ChannelParams& ch);
enum class FtVariant { kStabilizer, kCss };
bool check_theorem3(const CodeParams& code, const ChannelParams& ch, FtVariant variant);

/// Which rate the threshold solver varies. kP drives p, and for the CSS
/// theorems it sets p_X = p_Z together.
enum class FreeParam { kY, kP, kPX, kPZ, kQ };
FreeParam parse_free_param(const std::string& text);
std::string to_string(FreeParam f);

/// Copy of `ch` with the free rate set to `value` (kP also sets p_X and p_Z
/// for the CSS theorems).
ChannelParams with_free_param(ChannelParams ch, FreeParam free, double value, Theorem theorem);

/// Bisection for the boundary of the theorem's condition in one rate. The
/// bracket is [0, 1] for y and [0, 1/2] for the others, on which every
/// left-hand side is increasing. Result is within 1e-12 of the boundary.
/// Throws ValidationError if the condition does not hold at 0 or still
/// holds at the upper end.
double solve_threshold(const CodeParams& code, FreeParam free, const ChannelParams& fixed, Theorem theorem);

/// Sum over m >= d of 3n[2(w-1)]^{m-1} y^m in closed form. Requires
/// 2y(w-1) < 1.
double q_sum(std::size_t n, std::size_t w, std::size_t d, double y);

/// Exact probability that an erasure + X-error pattern on the m support
/// positions of an X-type cluster is bad (the inverted pattern is at least
/// as likely). Ties count as bad.
double exact_bad_probability_css(std::size_t m, double y, double p);
/// Same for erasures plus depolarizing noise on a generic cluster.
double exact_bad_probability_depol(std::size_t m, double y, double p);
/// Space-time cluster with m_q qubit positions (rate p) and m - m_q
/// syndrome positions (rate q).
double exact_bad_probability_ft(std::size_t m, std::size_t m_q, double p, double q);

/// Closed-form dominating bounds for the three sums above.
double bad_bound_css(std::size_t m, double y, double p);
double bad_bound_depol(std::size_t m, double y, double p);
double bad_bound_ft(std::size_t m, std::size_t m_q, double p, double q);

/// n * sum_{m >= d} base^m with base = 4[q(1-q)]^{1/2} + 2w[p(1-p)]^{1/2};
/// requires base < 1.
double ft_total_bound(std::size_t n, std::size_t w, std::size_t d, double p, double q);

}  // namespace qbound
