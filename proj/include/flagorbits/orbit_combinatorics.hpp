#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <vector>

#include "flagorbits/signature.hpp"
#include "flagorbits/truncation.hpp"

namespace flagorbits {

// Row and column sums of a contingency table, with equal totals. The number
// of nonnegative integer matrices with these margins equals the number of
// GL_m orbits on Fl(row_sums) x Fl(col_sums), i.e. the cardinality of the
// corresponding double coset of the symmetric group.
struct MarginPair {
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> col_sums;

  std::int64_t total() const;
};

MarginPair make_margin_pair(std::vector<std::int64_t> rows, std::vector<std::int64_t> cols);

// Exact count of nonnegative integer matrices with the given margins,
// by dynamic programming over columns with sorted row-remainder states.
mpz_class count_double_orbits(const MarginPair& mp);

// q^C with q the number of column blocks and C the sum of all row blocks
// except the designated one (1-based p0). Upper-bounds count_double_orbits.
mpz_class qc_bound(const MarginPair& mp, std::size_t p0);

// Orbit counts of the truncated double flag varieties of a type-A pair of
// signatures over the given totals (balanced policy). Nondecreasing in N.
std::vector<mpz_class> orbit_growth_sequence(const ParabolicSignature& sig1,
                                             const ParabolicSignature& sig2,
                                             const std::vector<std::int64_t>& totals);

// True when the last `window` entries of the sequence are strictly
// increasing; used as the explicit unboundedness witness.
bool detects_growth(const std::vector<mpz_class>& counts, std::size_t window = 3);

}  // namespace flagorbits
