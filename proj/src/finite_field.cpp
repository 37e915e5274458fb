#include "flagorbits/finite_field.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace flagorbits {

using gfp::Mat;
using gfp::Vec;

bool SubspaceRREF::contains(const SubspaceRREF& other) const {
  Mat m = rows;
  m.insert(m.end(), other.rows.begin(), other.rows.end());
  return gfp::rank(std::move(m), p) == dim();
}

SubspaceRREF make_subspace(int p, int ambient, Mat spanning_rows) {
  gfp::rref(spanning_rows, p);
  return SubspaceRREF{p, ambient, std::move(spanning_rows)};
}

std::uint8_t StandardForm::bilinear(const Vec& u, const Vec& v) const {
  return gfp::dot(u, gfp::mat_vec(gram, v, p), p);
}

std::uint8_t StandardForm::quadratic(const Vec& v) const {
  unsigned acc = 0;
  for (std::size_t i = 0; i < quad.size(); ++i)
    for (std::size_t j = 0; j < quad.size(); ++j) acc += quad[i][j] * v[i] * v[j];
  return acc % p;
}

bool StandardForm::preserves(const gfp::Mat& g) const {
  if (!has_bilinear()) return true;
  // Check on basis vectors: B(g e_i, g e_j) = B(e_i, e_j), and for O also
  // Q(g e_i) = Q(e_i).
  Mat cols = gfp::transpose(g);  // cols[i] = g e_i
  for (int i = 0; i < n; ++i) {
    if (!quad.empty() && quadratic(cols[i]) != quad[i][i]) return false;
    for (int j = 0; j < n; ++j)
      if (bilinear(cols[i], cols[j]) != gram[i][j]) return false;
  }
  return true;
}

StandardForm standard_form(LieType t, int n, int p) {
  StandardForm f;
  f.lie_type = t;
  f.n = n;
  f.p = p;
  if (t == LieType::A) return f;
  if (t == LieType::C) {
    if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
    f.gram.assign(n, Vec(n, 0));
    for (int i = 0; i < n / 2; ++i) {
      f.gram[i][n - 1 - i] = 1;
      f.gram[n - 1 - i][i] = static_cast<std::uint8_t>(p - 1);
    }
    return f;
  }
  // O: split quadratic form, hyperbolic pairs around an optional middle +1.
  f.quad.assign(n, Vec(n, 0));
  for (int i = 0; i < n / 2; ++i) f.quad[i][n - 1 - i] = 1;
  if (n % 2 == 1) f.quad[n / 2][n / 2] = 1;
  // Polar form B(u, v) = Q(u + v) - Q(u) - Q(v).
  f.gram.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f.gram[i][j] = (f.quad[i][j] + f.quad[j][i]) % p;
  return f;
}

std::string FlagOverGF::key() const {
  std::string out;
  for (const auto& sub : chain) {
    for (const auto& row : sub.rows)
      out.append(reinterpret_cast<const char*>(row.data()), row.size());
    out.push_back('|');
  }
  return out;
}

SubspaceRREF perp(const StandardForm& form, const SubspaceRREF& u) {
  // Null space of (basis x gram).
  const int n = form.n;
  Mat m;
  for (const auto& row : u.rows) {
    Vec r(n, 0);
    for (int j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (int i = 0; i < n; ++i) acc += row[i] * form.gram[i][j];
      r[j] = acc % form.p;
    }
    m.push_back(std::move(r));
  }
  const std::size_t r = gfp::rref(m, form.p);
  // Pivot columns of m.
  std::vector<bool> is_pivot(n, false);
  std::vector<int> pivot_col(r);
  for (std::size_t i = 0; i < r; ++i) {
    int c = 0;
    while (m[i][c] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Mat basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < r; ++i)
      v[pivot_col[i]] = (form.p - m[i][c]) % form.p;
    basis.push_back(std::move(v));
  }
  return make_subspace(form.p, n, std::move(basis));
}

bool is_totally_isotropic(const StandardForm& form, const Mat& basis) {
  if (!form.has_bilinear()) return true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!form.quad.empty() && form.quadratic(basis[i]) != 0) return false;
    for (std::size_t j = i; j < basis.size(); ++j)
      if (form.bilinear(basis[i], basis[j]) != 0) return false;
  }
  return true;
}

std::vector<SubspaceRREF> enumerate_subspaces(int p, int n, int k) {
  std::vector<SubspaceRREF> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(SubspaceRREF{p, n, {}});
    return out;
  }
  // Iterate over pivot-column k-subsets, then over free entries.
  std::vector<int> pivots(k);
  std::iota(pivots.begin(), pivots.end(), 0);
  auto emit_for_pivots = [&]() {
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    for (int i = 0; i < k; ++i)
      for (int c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);
    Mat base(k, Vec(n, 0));
    for (int i = 0; i < k; ++i) base[i][pivots[i]] = 1;
    std::vector<std::uint8_t> vals(free_pos.size(), 0);
    while (true) {
      Mat m = base;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        m[free_pos[t].first][free_pos[t].second] = vals[t];
      out.push_back(SubspaceRREF{p, n, std::move(m)});
      std::size_t t = 0;
      while (t < vals.size() && vals[t] == p - 1) vals[t++] = 0;
      if (t == vals.size()) break;
      ++vals[t];
    }
  };
  while (true) {
    emit_for_pivots();
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

namespace {

// Subspaces of dimension `add` containing U, via subspaces of the quotient
// lifted through the non-pivot coordinates of U.
std::vector<SubspaceRREF> extensions(const SubspaceRREF& u, int add) {
  const int n = u.ambient;
  const int p = u.p;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : u.rows) {
    int c = 0;
    while (row[c] == 0) ++c;
    is_pivot[c] = true;
  }
  std::vector<int> co;  // non-pivot coordinates
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) co.push_back(c);
  std::vector<SubspaceRREF> out;
  for (const auto& q : enumerate_subspaces(p, static_cast<int>(co.size()), add)) {
    Mat m = u.rows;
    for (const auto& qrow : q.rows) {
      Vec v(n, 0);
      for (std::size_t j = 0; j < co.size(); ++j) v[co[j]] = qrow[j];
      m.push_back(std::move(v));
    }
    out.push_back(make_subspace(p, n, std::move(m)));
  }
  return out;
}

}  // namespace

std::vector<FlagOverGF> enumerate_flags(const TruncatedFlagShape& shape, int p,
                                        std::size_t budget) {
  const int n = static_cast<int>(shape.total);
  const auto form = standard_form(shape.lie_type, n, p);
  const auto cum = shape.cumulative();
  const std::size_t m = shape.block_count();
  const bool isotropic = has_form(shape.lie_type);
  // For B/C/D only the lower half of the chain is free; the rest are perps.
  const std::size_t free_members = isotropic ? m / 2 : m - 1;

  std::vector<std::vector<SubspaceRREF>> partial;  // chains of free members
  partial.push_back({});
  for (std::size_t j = 0; j < free_members; ++j) {
    const int target_dim = static_cast<int>(cum[j]);
    std::vector<std::vector<SubspaceRREF>> next;
    for (const auto& chain : partial) {
      const SubspaceRREF base =
          chain.empty() ? SubspaceRREF{p, n, {}} : chain.back();
      for (auto& ext : extensions(base, target_dim - static_cast<int>(base.dim()))) {
        if (isotropic && !is_totally_isotropic(form, ext.rows)) continue;
        auto c = chain;
        c.push_back(std::move(ext));
        next.push_back(std::move(c));
        if (next.size() > budget) throw BudgetError("flag enumeration budget exceeded");
      }
    }
    partial = std::move(next);
  }

  std::vector<FlagOverGF> out;
  out.reserve(partial.size());
  for (auto& chain : partial) {
    FlagOverGF f;
    f.shape = shape;
    f.p = p;
    f.chain = std::move(chain);
    if (isotropic)
      for (std::size_t j = free_members; j + 1 < m; ++j)
        f.chain.push_back(perp(form, f.chain[m - 2 - j]));
    out.push_back(std::move(f));
  }
  if (!isotropic) {
    const mpz_class expect = flag_count_formula(shape, p);
    if (mpz_class(static_cast<unsigned long>(out.size())) != expect)
      throw std::logic_error("flag count disagrees with Gaussian-binomial formula");
  }
  return out;
}

std::vector<Mat> group_generators(const StandardForm& form) {
  const int n = form.n;
  const int p = form.p;
  std::vector<Mat> gens;
  if (form.lie_type == LieType::A) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Mat g = gfp::identity(n);
        g[i][j] = 1;
        gens.push_back(std::move(g));
      }
    if (p > 2) {
      // Any single scaling extends SL to GL; primitive-root scalings at
      // position 0 suffice together with conjugation by permutations
      // already generated.
      for (int a = 2; a < p; ++a) {
        Mat g = gfp::identity(n);
        g[0][0] = static_cast<std::uint8_t>(a);
        gens.push_back(std::move(g));
      }
    }
    return gens;
  }

  // Projective representatives of nonzero vectors.
  std::vector<Vec> reps;
  Vec v(n, 0);
  while (true) {
    std::size_t t = 0;
    while (t < v.size() && v[t] == p - 1) v[t++] = 0;
    if (t == v.size()) break;
    ++v[t];
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) reps.push_back(v);  // first nonzero entry 1
  }

  if (form.lie_type == LieType::C) {
    // Symplectic transvections x -> x + lambda B(x, v) v.
    for (const auto& w : reps) {
      for (int lam = 1; lam < p; ++lam) {
        Mat g = gfp::identity(n);
        for (int j = 0; j < n; ++j) {
          Vec e(n, 0);
          e[j] = 1;
          const std::uint8_t b = form.bilinear(e, w);
          if (!b) continue;
          for (int i = 0; i < n; ++i)
            g[i][j] = (g[i][j] + lam * b % p * w[i]) % p;
        }
        gens.push_back(std::move(g));
      }
    }
  } else {
    if (p == 2) {
      // Orthogonal transvections x -> x + B(x, v) v with Q(v) = 1.
      for (const auto& w : reps) {
        if (form.quadratic(w) != 1) continue;
        Mat g = gfp::identity(n);
        for (int j = 0; j < n; ++j) {
          Vec e(n, 0);
          e[j] = 1;
          if (!form.bilinear(e, w)) continue;
          for (int i = 0; i < n; ++i) g[i][j] = (g[i][j] + w[i]) % 2;
        }
        gens.push_back(std::move(g));
      }
      // Transvections alone miss the hyperbolic n = 4 group over F_2
      // (they generate an index-2 subgroup there); swapping the two outer
      // hyperbolic pairs fills the gap and is harmless in general.
      if (n >= 4) {
        Mat g(n, Vec(n, 0));
        for (int i = 2; i < n - 2; ++i) g[i][i] = 1;
        g[0][1] = g[1][0] = 1;
        g[n - 1][n - 2] = g[n - 2][n - 1] = 1;
        gens.push_back(std::move(g));
      }
    } else {
      // Reflections x -> x - (B(x, v) / Q(v)) v for anisotropic v.
      for (const auto& w : reps) {
        const std::uint8_t q = form.quadratic(w);
        if (q == 0) continue;
        const std::uint8_t qi = gfp::inv(q, p);
        Mat g = gfp::identity(n);
        for (int j = 0; j < n; ++j) {
          Vec e(n, 0);
          e[j] = 1;
          const std::uint8_t b = form.bilinear(e, w);
          if (!b) continue;
          for (int i = 0; i < n; ++i)
            g[i][j] = (g[i][j] + (p - 1) * qi % p * b % p * w[i]) % p;
        }
        gens.push_back(std::move(g));
      }
    }
  }
  for (const auto& g : gens)
    if (!form.preserves(g)) throw std::logic_error("generator does not preserve the form");
  return gens;
}

namespace {

std::string mat_key(const Mat& m) {
  std::string out;
  for (const auto& row : m)
    out.append(reinterpret_cast<const char*>(row.data()), row.size());
  return out;
}

}  // namespace

std::size_t closure_order(const std::vector<Mat>& gens, int p, std::size_t limit) {
  if (gens.empty()) return 1;
  const std::size_t n = gens[0].size();
  std::unordered_map<std::string, Mat> seen;
  std::deque<Mat> queue;
  Mat id = gfp::identity(n);
  seen.emplace(mat_key(id), id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Mat cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Mat next = gfp::mat_mul(g, cur, p);
      auto key = mat_key(next);
      if (seen.count(key)) continue;
      if (seen.size() >= limit) throw BudgetError("group closure budget exceeded");
      seen.emplace(std::move(key), next);
      queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

FlagOverGF transform_flag(const Mat& g, const FlagOverGF& f) {
  FlagOverGF out;
  out.shape = f.shape;
  out.p = f.p;
  out.chain.reserve(f.chain.size());
  for (const auto& sub : f.chain) {
    Mat m;
    m.reserve(sub.rows.size());
    for (const auto& row : sub.rows) m.push_back(gfp::mat_vec(g, row, f.p));
    out.chain.push_back(make_subspace(f.p, sub.ambient, std::move(m)));
  }
  return out;
}

std::string tuple_key(const std::vector<FlagOverGF>& tuple) {
  std::string out;
  for (const auto& f : tuple) {
    out += f.key();
    out.push_back(';');
  }
  return out;
}

OrbitResult enumerate_orbits(const std::vector<TruncatedFlagShape>& shapes,
                             const StandardForm& form, int p, std::size_t budget) {
  if (shapes.empty()) throw std::invalid_argument("no shapes");
  for (const auto& s : shapes)
    if (s.total != shapes[0].total || s.lie_type != shapes[0].lie_type)
      throw std::invalid_argument("shapes must share total and lie type");

  std::vector<std::vector<FlagOverGF>> lists;
  std::size_t points = 1;
  for (const auto& s : shapes) {
    lists.push_back(enumerate_flags(s, p, budget));
    points *= lists.back().size();
    if (points > budget) throw BudgetError("orbit enumeration budget exceeded");
  }

  const auto gens = group_generators(form);
  OrbitResult res;
  res.point_count = points;

  // Walk the product space tuple by tuple; BFS from each unvisited tuple.
  std::vector<std::size_t> idx(shapes.size(), 0);
  std::vector<std::vector<FlagOverGF>> all_tuples;
  all_tuples.reserve(points);
  while (true) {
    std::vector<FlagOverGF> tuple;
    for (std::size_t i = 0; i < shapes.size(); ++i) tuple.push_back(lists[i][idx[i]]);
    all_tuples.push_back(std::move(tuple));
    std::size_t i = 0;
    while (i < idx.size() && idx[i] + 1 == lists[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }

  for (auto& start : all_tuples) {
    const auto start_key = tuple_key(start);
    if (res.orbit_of.count(start_key)) continue;
    const std::size_t orbit_id = res.orbit_count++;
    res.representatives.push_back(start);
    std::deque<std::vector<FlagOverGF>> queue;
    res.orbit_of.emplace(start_key, orbit_id);
    queue.push_back(start);
    while (!queue.empty()) {
      auto cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        std::vector<FlagOverGF> next;
        next.reserve(cur.size());
        for (const auto& f : cur) next.push_back(transform_flag(g, f));
        auto key = tuple_key(next);
        if (res.orbit_of.count(key)) continue;
        res.orbit_of.emplace(std::move(key), orbit_id);
        queue.push_back(std::move(next));
      }
    }
  }
  return res;
}

std::size_t pair_orbit_count_parabolic(const TruncatedFlagShape& first,
                                       const TruncatedFlagShape& second, int p,
                                       std::size_t budget) {
  if (first.lie_type != LieType::A || second.lie_type != LieType::A)
    throw std::invalid_argument("parabolic strategy is for type A");
  if (first.total != second.total)
    throw std::invalid_argument("shapes must share total");
  const int n = static_cast<int>(first.total);
  // Block index of each coordinate for the standard flag of `first`.
  std::vector<int> block(n);
  {
    int b = 0;
    std::int64_t used = 0;
    for (int i = 0; i < n; ++i) {
      if (used == first.dims[b]) {
        ++b;
        used = 0;
      }
      block[i] = b;
      ++used;
    }
  }
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || block[i] > block[j]) continue;
      Mat g = gfp::identity(n);
      g[i][j] = 1;
      gens.push_back(std::move(g));
    }
  if (p > 2) {
    for (int i = 0; i < n; ++i)
      for (int a = 2; a < p; ++a) {
        Mat g = gfp::identity(n);
        g[i][i] = static_cast<std::uint8_t>(a);
        gens.push_back(std::move(g));
      }
  }

  auto flags = enumerate_flags(second, p, budget);
  std::unordered_map<std::string, std::size_t> orbit_of;
  std::size_t orbits = 0;
  for (const auto& start : flags) {
    const auto start_key = start.key();
    if (orbit_of.count(start_key)) continue;
    const std::size_t id = orbits++;
    std::deque<FlagOverGF> queue;
    orbit_of.emplace(start_key, id);
    queue.push_back(start);
    while (!queue.empty()) {
      auto cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        auto next = transform_flag(g, cur);
        auto key = next.key();
        if (orbit_of.count(key)) continue;
        orbit_of.emplace(std::move(key), id);
        queue.push_back(std::move(next));
      }
    }
  }
  return orbits;
}

std::vector<std::vector<std::size_t>> rank_matrix(const FlagOverGF& f1, const FlagOverGF& f2) {
  std::vector<std::vector<std::size_t>> r(f1.chain.size(),
                                          std::vector<std::size_t>(f2.chain.size(), 0));
  for (std::size_t i = 0; i < f1.chain.size(); ++i)
    for (std::size_t j = 0; j < f2.chain.size(); ++j) {
      Mat m = f1.chain[i].rows;
      m.insert(m.end(), f2.chain[j].rows.begin(), f2.chain[j].rows.end());
      const std::size_t rk = gfp::rank(std::move(m), f1.p);
      r[i][j] = f1.chain[i].dim() + f2.chain[j].dim() - rk;
    }
  return r;
}

FlagOverGF embed_flag(const FlagOverGF& f, const EmbeddingPlan& plan) {
  const int n = static_cast<int>(plan.source.total);
  const std::int64_t delta = plan.delta();
  const int np = n + static_cast<int>(delta);
  const bool centered = has_form(f.shape.lie_type);
  const int offset = centered ? static_cast<int>(delta / 2) : 0;
  const std::size_t m = f.shape.block_count();

  // Coordinate position and absorbing block of each new direction.
  std::vector<std::pair<int, std::size_t>> newdirs;  // (coordinate, block)
  if (!centered) {
    for (std::size_t d = 0; d < plan.absorb.size(); ++d)
      newdirs.emplace_back(n + static_cast<int>(d), plan.absorb[d]);
  } else {
    // Mirror pairs: lower coordinate j pairs with upper coordinate np-1-j.
    std::vector<std::int64_t> inc(m, 0);
    for (auto b : plan.absorb) ++inc[b];
    int lower = 0;
    for (std::size_t k = 0; 2 * k + 1 < m; ++k) {
      for (std::int64_t t = 0; t < inc[k]; ++t) {
        newdirs.emplace_back(lower, k);
        newdirs.emplace_back(np - 1 - lower, m - 1 - k);
        ++lower;
      }
    }
    if (m % 2 == 1) {
      const std::size_t mid = m / 2;
      for (std::int64_t t = 0; t < inc[mid] / 2; ++t) {
        newdirs.emplace_back(lower, mid);
        newdirs.emplace_back(np - 1 - lower, mid);
        ++lower;
      }
    }
  }

  FlagOverGF out;
  out.shape = plan.target;
  out.p = f.p;
  for (std::size_t j = 0; j < f.chain.size(); ++j) {
    Mat rows;
    for (const auto& row : f.chain[j].rows) {
      Vec v(np, 0);
      for (int c = 0; c < n; ++c) v[c + offset] = row[c];
      rows.push_back(std::move(v));
    }
    for (const auto& [pos, blk] : newdirs) {
      if (blk > j) continue;
      Vec v(np, 0);
      v[pos] = 1;
      rows.push_back(std::move(v));
    }
    out.chain.push_back(make_subspace(f.p, np, std::move(rows)));
  }
  // Shape consistency.
  const auto cum = plan.target.cumulative();
  for (std::size_t j = 0; j < out.chain.size(); ++j)
    if (static_cast<std::int64_t>(out.chain[j].dim()) != cum[j])
      throw std::logic_error("embedded flag has wrong dimensions");
  return out;
}

LemmaKeyReport lemma_key_check(const std::vector<EmbeddingPlan>& plans, int p,
                               std::size_t budget) {
  if (plans.empty()) throw std::invalid_argument("no plans");
  for (const auto& pl : plans)
    if (pl.source.total != plans[0].source.total || pl.delta() != plans[0].delta() ||
        pl.source.lie_type != plans[0].source.lie_type)
      throw std::invalid_argument("plans must share source total and delta");

  std::vector<TruncatedFlagShape> source_shapes, target_shapes;
  for (const auto& pl : plans) {
    source_shapes.push_back(pl.source);
    target_shapes.push_back(pl.target);
  }
  const auto src_form =
      standard_form(plans[0].source.lie_type, static_cast<int>(plans[0].source.total), p);
  const auto tgt_form =
      standard_form(plans[0].target.lie_type, static_cast<int>(plans[0].target.total), p);

  auto src = enumerate_orbits(source_shapes, src_form, p, budget);
  const auto tgt_gens = group_generators(tgt_form);

  LemmaKeyReport report;
  report.source_orbits = src.orbit_count;

  // Target orbit labels are discovered lazily by BFS from embedded tuples.
  std::unordered_map<std::string, std::size_t> tgt_orbit_of;
  std::size_t tgt_orbits = 0;
  // target orbit id -> (source orbit id, witness tuple)
  std::unordered_map<std::size_t, std::pair<std::size_t, std::vector<FlagOverGF>>> seen_from;

  // Embed every source tuple, not just one per orbit: this also witnesses
  // that a source orbit cannot split across target orbits.
  std::vector<std::vector<FlagOverGF>> lists;
  for (const auto& s : source_shapes) lists.push_back(enumerate_flags(s, p, budget));
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<std::vector<FlagOverGF>> all_tuples;
  while (true) {
    std::vector<FlagOverGF> t;
    for (std::size_t i = 0; i < lists.size(); ++i) t.push_back(lists[i][idx[i]]);
    all_tuples.push_back(std::move(t));
    std::size_t i = 0;
    while (i < idx.size() && idx[i] + 1 == lists[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }

  for (const auto& tuple : all_tuples) {
    const std::size_t sid = src.orbit_of.at(tuple_key(tuple));
    std::vector<FlagOverGF> embedded;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      embedded.push_back(embed_flag(tuple[i], plans[i]));
    const auto ekey = tuple_key(embedded);
    std::size_t tid;
    if (auto it = tgt_orbit_of.find(ekey); it != tgt_orbit_of.end()) {
      tid = it->second;
    } else {
      tid = tgt_orbits++;
      std::deque<std::vector<FlagOverGF>> queue;
      tgt_orbit_of.emplace(ekey, tid);
      queue.push_back(embedded);
      while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : tgt_gens) {
          std::vector<FlagOverGF> next;
          for (const auto& fl : cur) next.push_back(transform_flag(g, fl));
          auto key = tuple_key(next);
          if (tgt_orbit_of.count(key)) continue;
          if (tgt_orbit_of.size() > budget) throw BudgetError("target BFS budget exceeded");
          tgt_orbit_of.emplace(std::move(key), tid);
          queue.push_back(std::move(next));
        }
      }
    }
    if (auto it = seen_from.find(tid); it != seen_from.end()) {
      if (it->second.first != sid) {
        report.holds = false;
        report.counterexample = {it->second.second, tuple};
        return report;
      }
    } else {
      seen_from.emplace(tid, std::make_pair(sid, tuple));
    }
  }
  report.embedded_target_orbits = tgt_orbits;
  return report;
}

mpz_class gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1, q = p;
  for (int i = 0; i < k; ++i) {
    mpz_class qa, qb;
    mpz_pow_ui(qa.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qb.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= qa - 1;
    den *= qb - 1;
  }
  return num / den;
}

mpz_class flag_count_formula(const TruncatedFlagShape& shape, int p) {
  mpz_class out = 1;
  std::int64_t remaining = shape.total;
  for (auto a : shape.dims) {
    out *= gaussian_binomial(static_cast<int>(remaining), static_cast<int>(a), p);
    remaining -= a;
  }
  return out;
}

}  // namespace flagorbits
