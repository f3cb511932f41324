#include <algorithm>
#include <cmath>
#include <functional>

#include "qbound/bounds.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

void require_rate(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(std::string(name) + " must lie in [0, 1]");
}

double syndrome_term(double q) { return 4.0 * std::sqrt(q * (1.0 - q)); }

double weight_factor(std::size_t w) { return static_cast<double>(w); }

double weight_minus_one(std::size_t w) { return w == 0 ? 0.0 : static_cast<double>(w - 1); }

}  // namespace

DistanceScaling DistanceScaling::finite(double d) {
  if (!(d > 0.0)) throw ValidationError("distance-scaling constant D must be positive");
  return DistanceScaling(d);
}

DistanceScaling DistanceScaling::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinite();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("cannot parse D value '" + text + "'");
  }
  if (used != text.size()) throw ValidationError("cannot parse D value '" + text + "'");
  if (std::isinf(v)) return infinite();
  return finite(v);
}

double DistanceScaling::budget() const { return is_infinite() ? 1.0 : std::exp(-1.0 / value_); }

double upsilon(double y, double p) {
  require_rate(y, "y");
  require_rate(p, "p");
  return y + (1.0 - y) * (2.0 * p / 3.0 + 2.0 * std::sqrt(p * (1.0 - p) / 3.0));
}

double upsilon_css(double y, double p) {
  require_rate(y, "y");
  require_rate(p, "p");
  return y + 2.0 * (1.0 - y) * std::sqrt(p * (1.0 - p));
}

Theorem parse_theorem(const std::string& text) {
  if (text == "1") return Theorem::kStabilizer;
  if (text == "2") return Theorem::kCss;
  if (text == "3s" || text == "3a") return Theorem::kStabilizerFt;
  if (text == "3c" || text == "3b") return Theorem::kCssFt;
  throw ValidationError("unknown theorem '" + text + "' (expected 1, 2, 3s or 3c)");
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::kStabilizer:
      return "1";
    case Theorem::kCss:
      return "2";
    case Theorem::kStabilizerFt:
      return "3s";
    case Theorem::kCssFt:
      return "3c";
  }
  return "?";
}

double theorem_lhs(Theorem t, const CodeParams& code, const ChannelParams& ch) {
  require_rate(ch.q, "q");
  require_rate(ch.p_x, "p_X");
  require_rate(ch.p_z, "p_Z");
  switch (t) {
    case Theorem::kStabilizer:
      return 2.0 * weight_minus_one(code.w) * upsilon(ch.y, ch.p);
    case Theorem::kCss:
      return std::max(weight_minus_one(code.w_x) * upsilon_css(ch.y, ch.p_z),
                      weight_minus_one(code.w_z) * upsilon_css(ch.y, ch.p_x));
    case Theorem::kStabilizerFt:
      return syndrome_term(ch.q) + 2.0 * weight_factor(code.w) * upsilon(ch.y, ch.p);
    case Theorem::kCssFt:
      return syndrome_term(ch.q) + std::max(weight_factor(code.w_x) * upsilon_css(ch.y, ch.p_z),
                                            weight_factor(code.w_z) * upsilon_css(ch.y, ch.p_x));
  }
  return 0;
}

bool check_theorem(Theorem t, const CodeParams& code, const ChannelParams& ch) {
  return theorem_lhs(t, code, ch) <= code.scaling.budget();
}

bool check_theorem1(const CodeParams& code, const ChannelParams& ch) {
  return check_theorem(Theorem::kStabilizer, code, ch);
}

bool check_theorem2(const CodeParams& code, const ChannelParams& ch) { return check_theorem(Theorem::kCss, code, ch); }

bool check_theorem3(const CodeParams& code, const ChannelParams& ch, FtVariant variant) {
  return check_theorem(variant == FtVariant::kStabilizer ? Theorem::kStabilizerFt : Theorem::kCssFt, code, ch);
}

FreeParam parse_free_param(const std::string& text) {
  if (text == "y") return FreeParam::kY;
  if (text == "p") return FreeParam::kP;
  if (text == "pX" || text == "px" || text == "p_X") return FreeParam::kPX;
  if (text == "pZ" || text == "pz" || text == "p_Z") return FreeParam::kPZ;
  if (text == "q") return FreeParam::kQ;
  throw ValidationError("unknown rate '" + text + "' (expected y, p, pX, pZ or q)");
}

std::string to_string(FreeParam f) {
  switch (f) {
    case FreeParam::kY:
      return "y";
    case FreeParam::kP:
      return "p";
    case FreeParam::kPX:
      return "pX";
    case FreeParam::kPZ:
      return "pZ";
    case FreeParam::kQ:
      return "q";
  }
  return "?";
}

ChannelParams with_free_param(ChannelParams ch, FreeParam free, double value, Theorem theorem) {
  const bool css = theorem == Theorem::kCss || theorem == Theorem::kCssFt;
  switch (free) {
    case FreeParam::kY:
      ch.y = value;
      break;
    case FreeParam::kP:
      ch.p = value;
      if (css) ch.p_x = ch.p_z = value;
      break;
    case FreeParam::kPX:
      ch.p_x = value;
      break;
    case FreeParam::kPZ:
      ch.p_z = value;
      break;
    case FreeParam::kQ:
      ch.q = value;
      break;
  }
  return ch;
}

double solve_threshold(const CodeParams& code, FreeParam free, const ChannelParams& fixed, Theorem theorem) {
  auto with = [&](double v) { return with_free_param(fixed, free, v, theorem); };
  const double budget = code.scaling.budget();
  auto holds = [&](double v) { return theorem_lhs(theorem, code, with(v)) <= budget; };

  double lo = 0.0;
  double hi = free == FreeParam::kY ? 1.0 : 0.5;
  if (!holds(lo)) throw ValidationError("threshold condition already fails at " + to_string(free) + " = 0");
  if (holds(hi)) {
    throw ValidationError("threshold condition still holds at " + to_string(free) + " = " + std::to_string(hi) +
                          "; no sign change on the bracket");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double q_sum(std::size_t n, std::size_t w, std::size_t d, double y) {
  require_rate(y, "y");
  if (d < 1) throw ValidationError("q_sum: distance must be at least 1");
  const double ratio = 2.0 * y * weight_minus_one(w);
  if (!(ratio < 1.0)) throw ValidationError("q_sum diverges: 2y(w-1) must be below 1");
  return 3.0 * static_cast<double>(n) * y * std::pow(ratio, static_cast<double>(d - 1)) / (1.0 - ratio);
}

double ft_total_bound(std::size_t n, std::size_t w, std::size_t d, double p, double q) {
  require_rate(p, "p");
  require_rate(q, "q");
  const double base = syndrome_term(q) + 2.0 * static_cast<double>(w) * std::sqrt(p * (1.0 - p));
  if (!(base < 1.0)) throw ValidationError("ft_total_bound diverges: 4[q(1-q)]^1/2 + 2w[p(1-p)]^1/2 must be below 1");
  return static_cast<double>(n) * std::pow(base, static_cast<double>(d)) / (1.0 - base);
}

}  // namespace qbound
