#include <boost/multiprecision/cpp_int.hpp>

#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

BigCount power(std::size_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exponent));
}

BigCount choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigCount out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

void require_weight(std::size_t m) {
  if (m < 1) throw ValidationError("cluster weight must be at least 1");
}

}  // namespace

BigCount bound_Nm(std::size_t n, std::size_t w, std::size_t m) {
  require_weight(m);
  const std::size_t branch = w == 0 ? 0 : 2 * (w - 1);
  return 3 * BigCount(n) * power(branch, m - 1);
}

BigCount bound_Nm_css(std::size_t n, std::size_t w_opposite, std::size_t m) {
  require_weight(m);
  const std::size_t branch = w_opposite == 0 ? 0 : w_opposite - 1;
  return BigCount(n) * power(branch, m - 1);
}

BigCount bound_Nm_ft(std::size_t n, std::size_t r, std::size_t w, std::size_t m, std::size_t m_q) {
  require_weight(m);
  if (m_q > m) throw ValidationError("bound_Nm_ft: m_q exceeds m");
  if (m_q == m) return 0;
  return (3 * BigCount(n) + r) * choose(m - 1, m_q) * power(w, m_q) * power(2, m - m_q - 1);
}

}  // namespace qbound
