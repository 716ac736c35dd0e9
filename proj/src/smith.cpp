#include "finsub/smith.hpp"

#include "elimination.hpp"

#include <optional>
#include <queue>
#include <stdexcept>

namespace finsub {

namespace {

// rows (a, b) <- (p*a + q*b, r*a + s*b), determinant one
void mix_rows(DenseIntMatrix& m, std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r,
              const Integer& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer x = m(a, c);
    Integer y = m(b, c);
    if (x == 0 && y == 0) continue;
    m(a, c) = p * x + q * y;
    m(b, c) = r * x + s * y;
  }
}

// cols (a, b) <- (p*a + q*b, r*a + s*b), determinant one
void mix_cols(DenseIntMatrix& m, std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r,
              const Integer& s) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = m(i, a);
    Integer y = m(i, b);
    if (x == 0 && y == 0) continue;
    m(i, a) = p * x + q * y;
    m(i, b) = r * x + s * y;
  }
}

struct Bezout {
  Integer g, s, t;
};

// s*a + t*b = g = gcd(a, b) with g > 0, a and b not both zero
Bezout bezout(const Integer& a, const Integer& b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

struct RankMinor {
  std::size_t rank = 0;
  Integer minor = 1;
};

// fraction-free elimination with complete pivoting; `minor` is |det| of the pivot block
RankMinor bareiss(DenseIntMatrix a) {
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  RankMinor out;
  Integer prev = 1;
  for (std::size_t k = 0; k < std::min(nr, nc); ++k) {
    std::size_t pi = nr;
    std::size_t pj = nc;
    for (std::size_t i = k; i < nr && pi == nr; ++i) {
      for (std::size_t j = k; j < nc; ++j) {
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == nr) break;
    a.swap_rows(k, pi);
    a.swap_cols(k, pj);
    for (std::size_t i = k + 1; i < nr; ++i) {
      for (std::size_t j = k + 1; j < nc; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = x / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
    ++out.rank;
  }
  out.minor = abs_value(prev);
  return out;
}

Integer mod_floor(const Integer& x, const Integer& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

// Diagonalizes `a` and returns its invariant factors. With `big` non-zero the
// work happens in the lattice a*Z^n + big*Z^m, where big must be a proper
// multiple of every invariant factor. With `big` zero the arithmetic is exact
// and gives up once an entry exceeds `bit_limit` bits.
std::optional<std::vector<Integer>> eliminate_factors(DenseIntMatrix a, const Integer& big, std::size_t bit_limit) {
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  const bool modular = big != 0;
  bool overflow = false;
  auto settle = [&](Integer& x) {
    if (modular) {
      x = mod_floor(x, big);
    } else if (x != 0 && boost::multiprecision::msb(abs_value(x)) >= bit_limit) {
      overflow = true;
    }
  };
  if (modular) {
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) settle(a(i, j));
    }
  }
  auto rows = [&](std::size_t x, std::size_t y, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    mix_rows(a, x, y, p, q, r, s);
    for (std::size_t c = 0; c < nc; ++c) {
      settle(a(x, c));
      settle(a(y, c));
    }
  };
  auto cols = [&](std::size_t x, std::size_t y, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    mix_cols(a, x, y, p, q, r, s);
    for (std::size_t i = 0; i < nr; ++i) {
      settle(a(i, x));
      settle(a(i, y));
    }
  };
  auto smaller = [](const Integer& x, const Integer& y) { return abs_value(x) < abs_value(y); };
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    std::size_t pi = nr;
    std::size_t pj = nc;
    for (std::size_t i = t; i < nr; ++i) {
      for (std::size_t j = t; j < nc; ++j) {
        if (a(i, j) != 0 && (pi == nr || smaller(a(i, j), a(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == nr) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);
    for (bool clean = false; !clean;) {
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        const Integer x = a(t, t);
        const Integer y = a(i, t);
        if (y % x == 0) {
          rows(t, i, 1, 0, Integer(-(y / x)), 1);
        } else {
          const Bezout z = bezout(x, y);
          rows(t, i, z.s, z.t, Integer(-(y / z.g)), Integer(x / z.g));
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        const Integer x = a(t, t);
        const Integer y = a(t, j);
        if (y % x == 0) {
          cols(t, j, 1, 0, Integer(-(y / x)), 1);
        } else {
          const Bezout z = bezout(x, y);
          cols(t, j, z.s, z.t, Integer(-(y / z.g)), Integer(x / z.g));
        }
      }
      if (overflow) return std::nullopt;
      clean = true;
      for (std::size_t i = t + 1; i < nr && clean; ++i) clean = a(i, t) == 0;
    }
    diag.push_back(modular ? gcd(a(t, t), big) : abs_value(a(t, t)));
  }
  if (modular) {
    while (diag.size() < nr) diag.push_back(big);
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Integer g = gcd(diag[i], diag[j]);
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  }
  if (!modular) return diag;
  std::vector<Integer> factors;
  for (auto& d : diag) {
    if (d < big) factors.push_back(std::move(d));
  }
  return factors;
}

std::vector<Integer> dense_factors(const DenseIntMatrix& a) {
  if (auto f = eliminate_factors(a, 0, 256)) return std::move(*f);
  const RankMinor rm = bareiss(a);
  if (rm.rank == 0) return {};
  auto f = eliminate_factors(a, Integer(2 * rm.minor), 0);
  if (f->size() != rm.rank) throw std::logic_error("modular Smith form lost a factor");
  return std::move(*f);
}

struct Tracker {
  bool on;
  DenseIntMatrix u, uinv, v, vinv;

  Tracker(std::size_t rows, std::size_t cols, bool track) : on(track) {
    if (on) {
      u = uinv = DenseIntMatrix::identity(rows);
      v = vinv = DenseIntMatrix::identity(cols);
    }
  }

  void rows(std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    if (!on) return;
    mix_rows(u, a, b, p, q, r, s);
    mix_cols(uinv, a, b, s, -r, -q, p);
  }
  void cols(std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    if (!on) return;
    mix_cols(v, a, b, p, q, r, s);
    mix_rows(vinv, a, b, s, -r, -q, p);
  }
  void row_swap(std::size_t a, std::size_t b) {
    if (!on) return;
    u.swap_rows(a, b);
    uinv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (!on) return;
    v.swap_cols(a, b);
    vinv.swap_rows(a, b);
  }
  void row_negate(std::size_t t) {
    if (!on) return;
    u.negate_row(t);
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, t) = -uinv(r, t);
  }
};

}  // namespace

DenseSmith dense_smith(DenseIntMatrix m, bool track) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  Tracker tr(nr, nc, track);

  // every operation is written for rows; `flip` applies it to columns instead
  bool flip = false;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return flip ? m(j, i) : m(i, j); };
  auto lines = [&] { return flip ? nc : nr; };
  auto width = [&] { return flip ? nr : nc; };
  auto mix = [&](std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    if (flip) {
      mix_cols(m, a, b, p, q, r, s);
      tr.cols(a, b, p, q, r, s);
    } else {
      mix_rows(m, a, b, p, q, r, s);
      tr.rows(a, b, p, q, r, s);
    }
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    if (flip) {
      m.swap_cols(a, b);
      tr.col_swap(a, b);
    } else {
      m.swap_rows(a, b);
      tr.row_swap(a, b);
    }
  };
  auto negate_line = [&](std::size_t a) {
    if (!flip) {
      m.negate_row(a);
      tr.row_negate(a);
      return;
    }
    for (std::size_t i = 0; i < nr; ++i) m(i, a) = -m(i, a);
    if (tr.on) {
      for (std::size_t i = 0; i < nc; ++i) tr.v(i, a) = -tr.v(i, a);
      for (std::size_t j = 0; j < nc; ++j) tr.vinv(a, j) = -tr.vinv(a, j);
    }
  };

  // Hermite echelon form along the current orientation, entries above each pivot reduced
  auto echelon = [&] {
    std::size_t p = 0;
    for (std::size_t c = 0; c < width() && p < lines(); ++c) {
      std::size_t best = lines();
      for (std::size_t i = p; i < lines(); ++i) {
        if (at(i, c) != 0 && (best == lines() || abs_value(at(i, c)) < abs_value(at(best, c)))) best = i;
      }
      if (best == lines()) continue;
      swap(p, best);
      for (std::size_t i = p + 1; i < lines(); ++i) {
        if (at(i, c) == 0) continue;
        const Integer a = at(p, c);
        const Integer b = at(i, c);
        if (b % a == 0) {
          mix(p, i, 1, 0, Integer(-(b / a)), 1);
        } else {
          const Bezout z = bezout(a, b);
          mix(p, i, z.s, z.t, Integer(-(b / z.g)), Integer(a / z.g));
        }
      }
      if (at(p, c) < 0) negate_line(p);
      const Integer piv = at(p, c);
      for (std::size_t k = 0; k < p; ++k) {
        if (at(k, c) == 0) continue;
        Integer q = at(k, c) / piv;
        if (at(k, c) - q * piv < 0) --q;
        if (q != 0) mix(k, p, 1, Integer(-q), 0, 1);
      }
      ++p;
    }
  };
  auto diagonal = [&] {
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        if (i != j && m(i, j) != 0) return false;
      }
    }
    return true;
  };

  while (!diagonal()) {
    flip = false;
    echelon();
    if (diagonal()) break;
    flip = true;
    echelon();
  }
  flip = false;

  const std::size_t len = std::min(nr, nc);
  std::size_t rank = 0;
  while (rank < len && m(rank, rank) != 0) ++rank;
  for (std::size_t i = 0; i < rank; ++i) {
    if (m(i, i) < 0) negate_line(i);
  }
  // enforce d_i | d_j on the diagonal
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const Integer a = m(i, i);
      const Integer b = m(j, j);
      if (b % a == 0) continue;
      const Bezout z = bezout(a, b);
      // rows: row_i += row_j, so row i reads (a, b)
      mix(i, j, 1, 1, 0, 1);
      // cols: turn (a, b) into (g, 0)
      flip = true;
      mix(i, j, z.s, z.t, Integer(-(b / z.g)), Integer(a / z.g));
      flip = false;
      // rows: clear the entry below g, leaving lcm on the diagonal
      const Integer f = m(j, i) / z.g;
      mix(i, j, 1, 0, Integer(-f), 1);
      if (m(j, j) < 0) negate_line(j);
    }
  }

  DenseSmith out;
  for (std::size_t i = 0; i < rank; ++i) out.factors.push_back(m(i, i));
  out.diagonal = std::move(m);
  if (track) {
    out.left = std::move(tr.u);
    out.left_inverse = std::move(tr.uinv);
    out.right = std::move(tr.v);
    out.right_inverse = std::move(tr.vinv);
  }
  return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms) {
  SmithForm out;
  if (with_transforms) {
    auto d = dense_smith(DenseIntMatrix::from_sparse(m), true);
    out.factors = std::move(d.factors);
    out.left = std::move(d.left);
    out.right = std::move(d.right);
    return out;
  }
  detail::EliminationMatrix e(m);
  const std::size_t units = detail::eliminate_units(e);
  const SparseIntMatrix rest = e.residual();
  out.factors.assign(units, Integer(1));
  if (!rest.is_zero()) {
    auto d = dense_factors(DenseIntMatrix::from_sparse(rest));
    out.factors.insert(out.factors.end(), d.begin(), d.end());
  }
  return out;
}

std::vector<Integer> invariant_factors(const SparseIntMatrix& m) { return smith_normal_form(m).factors; }

std::size_t rational_rank(const SparseIntMatrix& m) {
  detail::EliminationMatrix e(m);
  using Item = std::pair<std::size_t, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Index c = 0; c < e.cols(); ++c) {
    if (!e.column(c).empty()) heap.emplace(e.column(c).size(), c);
  }
  std::size_t rank = 0;
  std::vector<Index> touched;
  while (!heap.empty()) {
    const auto [count, c] = heap.top();
    heap.pop();
    if (!e.col_alive(c) || e.column(c).empty()) continue;
    if (e.column(c).size() != count) {
      heap.emplace(e.column(c).size(), c);
      continue;
    }
    Index best = kNoIndex;
    bool best_unit = false;
    std::size_t best_weight = 0;
    Integer best_abs;
    for (const auto& [r, v] : e.column(c)) {
      const bool unit = is_unit(v);
      const std::size_t w = e.row(r).size();
      Integer a = abs_value(v);
      bool better = best == kNoIndex;
      if (!better) {
        if (unit != best_unit) {
          better = unit;
        } else if (w != best_weight) {
          better = w < best_weight;
        } else {
          better = a < best_abs;
        }
      }
      if (better) {
        best = r;
        best_unit = unit;
        best_weight = w;
        best_abs = std::move(a);
      }
    }
    touched.clear();
    e.fraction_free_pivot(best, c, &touched);
    ++rank;
    for (Index x : touched) {
      if (e.col_alive(x) && !e.column(x).empty()) heap.emplace(e.column(x).size(), x);
    }
  }
  return rank;
}

}  // namespace finsub
