#include "gpavoid/numeric.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gpavoid {

namespace {
std::mutex g_pascal_mutex;
std::vector<std::vector<BigCount>> g_pascal;  // g_pascal[n][k]

void grow_pascal(int n) {
  while (static_cast<int>(g_pascal.size()) <= n) {
    const int row = static_cast<int>(g_pascal.size());
    std::vector<BigCount> r(row + 1, 1);
    for (int k = 1; k < row; ++k) r[k] = g_pascal[row - 1][k - 1] + g_pascal[row - 1][k];
    g_pascal.push_back(std::move(r));
  }
}
}  // namespace

BigCount binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  std::lock_guard lock(g_pascal_mutex);
  grow_pascal(n);
  return g_pascal[n][k];
}

BigCount factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: n must be non-negative");
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount double_factorial(int n) {
  if (n < -1) throw std::domain_error("double_factorial: n must be >= -1");
  BigCount r = 1;
  for (int i = n; i >= 2; i -= 2) r *= i;
  return r;
}

BigCount pow2(int n) {
  if (n < 0) throw std::domain_error("pow2: n must be non-negative");
  return BigCount(1) << n;
}

}  // namespace gpavoid
