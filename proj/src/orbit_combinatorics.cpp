#include "flagorbits/orbit_combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flagorbits {

std::int64_t MarginPair::total() const {
  return std::accumulate(row_sums.begin(), row_sums.end(), std::int64_t(0));
}

MarginPair make_margin_pair(std::vector<std::int64_t> rows, std::vector<std::int64_t> cols) {
  if (rows.empty() || cols.empty())
    throw std::invalid_argument("margins must be nonempty");
  for (auto v : rows)
    if (v <= 0) throw std::invalid_argument("row sums must be positive");
  for (auto v : cols)
    if (v <= 0) throw std::invalid_argument("column sums must be positive");
  const auto sr = std::accumulate(rows.begin(), rows.end(), std::int64_t(0));
  const auto sc = std::accumulate(cols.begin(), cols.end(), std::int64_t(0));
  if (sr != sc) throw std::invalid_argument("row and column totals differ");
  return MarginPair{std::move(rows), std::move(cols)};
}

namespace {

using State = std::vector<std::int64_t>;  // remaining row sums, sorted descending
using Memo = std::map<State, mpz_class>;

// Ways to fill one column of sum `need` against the remaining row sums,
// recursing over rows. `state` is mutated in place and restored.
void fill_column(State& state, std::size_t row, std::int64_t need, Memo& next_states,
                 State& scratch) {
  if (need == 0) {
    scratch = state;
    std::sort(scratch.rbegin(), scratch.rend());
    next_states[scratch] += 1;
    return;
  }
  if (row == state.size()) return;
  // Remaining capacity cut-off.
  std::int64_t cap = 0;
  for (std::size_t r = row; r < state.size(); ++r) cap += state[r];
  if (cap < need) return;
  const std::int64_t here = std::min(state[row], need);
  for (std::int64_t take = 0; take <= here; ++take) {
    state[row] -= take;
    fill_column(state, row + 1, need - take, next_states, scratch);
    state[row] += take;
  }
}

}  // namespace

mpz_class count_double_orbits(const MarginPair& mp) {
  // Column-by-column DP. States are remaining row-sum multisets; sorting
  // collapses symmetric states, which keeps the table small even for
  // margins like 1^12 x 1^12.
  State start = mp.row_sums;
  std::sort(start.rbegin(), start.rend());
  Memo current;
  current[start] = 1;
  State scratch;
  for (auto col : mp.col_sums) {
    Memo next;
    for (auto& [state, ways] : current) {
      Memo reached;
      State s = state;
      fill_column(s, 0, col, reached, scratch);
      for (auto& [ns, cnt] : reached) next[ns] += ways * cnt;
    }
    current = std::move(next);
  }
  mpz_class total = 0;
  for (auto& [state, ways] : current) total += ways;  // only the zero state remains
  return total;
}

mpz_class qc_bound(const MarginPair& mp, std::size_t p0) {
  if (p0 < 1 || p0 > mp.row_sums.size())
    throw std::invalid_argument("p0 out of range");
  std::int64_t c = 0;
  for (std::size_t k = 0; k < mp.row_sums.size(); ++k)
    if (k + 1 != p0) c += mp.row_sums[k];
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(mp.col_sums.size()),
                static_cast<unsigned long>(c));
  return bound;
}

std::vector<mpz_class> orbit_growth_sequence(const ParabolicSignature& sig1,
                                             const ParabolicSignature& sig2,
                                             const std::vector<std::int64_t>& totals) {
  if (sig1.lie_type() != LieType::A || sig2.lie_type() != LieType::A)
    throw SignatureError("growth sequences are computed for type A only");
  std::vector<mpz_class> out;
  out.reserve(totals.size());
  for (auto n : totals) {
    const auto s1 = truncate(sig1, n);
    const auto s2 = truncate(sig2, n);
    out.push_back(count_double_orbits(make_margin_pair(s1.dims, s2.dims)));
  }
  return out;
}

bool detects_growth(const std::vector<mpz_class>& counts, std::size_t window) {
  if (counts.size() < window) return false;
  for (std::size_t i = counts.size() - window; i + 1 < counts.size(); ++i)
    if (counts[i] >= counts[i + 1]) return false;
  return true;
}

}  // namespace flagorbits
