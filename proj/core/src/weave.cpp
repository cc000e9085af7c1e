#include "turan/weave.hpp"

#include <set>

#include "turan/errors.hpp"

namespace turan {

std::vector<int> weave(const std::vector<int>& y, const std::vector<int>& z, int k) {
  if (k < 1) throw InputError("weave requires k >= 1");
  const size_t half = static_cast<size_t>(4 * k);
  if (y.size() != half || z.size() != half)
    throw InputError("weave requires two tuples of length 4k");
  std::vector<int> out(2 * half);
  for (int b = 0; b < k; ++b) {
    out[4 * b + 0] = y[4 * b + 0];
    out[4 * b + 1] = y[4 * b + 1];
    out[4 * b + 2] = z[4 * b + 2];
    out[4 * b + 3] = z[4 * b + 3];
    out[4 * k + 4 * b + 0] = y[4 * k - 4 * b - 1];
    out[4 * k + 4 * b + 1] = y[4 * k - 4 * b - 2];
    out[4 * k + 4 * b + 2] = z[4 * k - 4 * b - 3];
    out[4 * k + 4 * b + 3] = z[4 * k - 4 * b - 4];
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> unweave(const std::vector<int>& tuple, int k) {
  if (k < 1) throw InputError("unweave requires k >= 1");
  if (tuple.size() != static_cast<size_t>(8 * k))
    throw InputError("unweave requires a tuple of length 8k");
  std::vector<int> y(static_cast<size_t>(4 * k)), z(static_cast<size_t>(4 * k));
  for (int b = 0; b < k; ++b) {
    y[4 * b + 0] = tuple[4 * b + 0];
    y[4 * b + 1] = tuple[4 * b + 1];
    z[4 * b + 2] = tuple[4 * b + 2];
    z[4 * b + 3] = tuple[4 * b + 3];
    y[4 * k - 4 * b - 1] = tuple[4 * k + 4 * b + 0];
    y[4 * k - 4 * b - 2] = tuple[4 * k + 4 * b + 1];
    z[4 * k - 4 * b - 3] = tuple[4 * k + 4 * b + 2];
    z[4 * k - 4 * b - 4] = tuple[4 * k + 4 * b + 3];
  }
  return {std::move(y), std::move(z)};
}

bool has_repeats(const std::vector<int>& tuple) {
  std::set<int> seen(tuple.begin(), tuple.end());
  return seen.size() != tuple.size();
}

}  // namespace turan
