#include "mdteds/text_similarity.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mdteds/cell.hpp"
#include "unicode.hpp"

namespace mdteds {

namespace {

// Unit-cost Levenshtein over code points, two-row DP.
std::size_t edit_distance(const std::u32string& a, const std::u32string& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0) return n;
  if (n == 0) return m;
  std::vector<std::size_t> prev(n + 1);
  std::vector<std::size_t> cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

}  // namespace

double text_similarity(std::string_view a, std::string_view b) {
  const std::u32string fa = uni::fold(uni::decode_utf8(normalize_cell(a)));
  const std::u32string fb = uni::fold(uni::decode_utf8(normalize_cell(b)));
  if (fa.empty() && fb.empty()) return 1.0;
  const std::size_t longer = std::max(fa.size(), fb.size());
  return 1.0 - static_cast<double>(edit_distance(fa, fb)) / static_cast<double>(longer);
}

}  // namespace mdteds
