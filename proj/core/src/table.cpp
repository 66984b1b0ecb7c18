#include "mdteds/table.hpp"

namespace mdteds {

bool structurally_equal(const Table& a, const Table& b) {
  if (a.header.size() != b.header.size() || a.rows.size() != b.rows.size() ||
      a.section_rows != b.section_rows) {
    return false;
  }
  for (std::size_t i = 0; i < a.header.size(); ++i) {
    if (a.header[i].normalized != b.header[i].normalized) return false;
  }
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    if (a.rows[r].size() != b.rows[r].size()) return false;
    for (std::size_t c = 0; c < a.rows[r].size(); ++c) {
      if (a.rows[r][c].normalized != b.rows[r][c].normalized) return false;
    }
  }
  return true;
}

}  // namespace mdteds
