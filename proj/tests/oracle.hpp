#pragma once

// Test-side reference evaluations.  Nothing here calls compose, tensor,
// whisker or the checkers under test: every value is an explicit index sum
// over raw matrix entries.

#include <random>
#include <string>
#include <vector>

#include "wreathkit/bundle.hpp"

namespace oracle {

  using namespace wreathkit;

  using Vec = std::vector<Scalar>;

  inline std::string corpus(std::string const& file) {
    return std::string(WREATHKIT_CORPUS_DIR) + "/" + file;
  }

  inline Vec zeros(Field const& f, std::size_t n) {
    return Vec(n, Scalar::zero(f));
  }

  inline Vec basis(Field const& f, std::size_t n, std::size_t i) {
    auto v = zeros(f, n);
    v[i]   = Scalar::one(f);
    return v;
  }

  //! m applied to a coordinate vector.
  inline Vec apply(Mor const& m, Vec const& v) {
    auto out = zeros(m.field(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out[r] += m.at(r, c) * v[c];
      }
    }
    return out;
  }

  //! Column c of m.
  inline Vec column(Mor const& m, std::size_t c) {
    Vec out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.push_back(m.at(r, c));
    }
    return out;
  }

  inline Vec kron(Vec const& a, Vec const& b) {
    Vec out;
    for (auto const& x : a) {
      for (auto const& y : b) {
        out.push_back(x * y);
      }
    }
    return out;
  }

  //! Product of two vectors in a monoid object, Σ u_i v_j mul(e_i⊗e_j).
  inline Vec mul(MonoidObj const& m, Vec const& u, Vec const& v) {
    std::size_t const n   = m.carrier.dim();
    auto              out = zeros(m.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j].is_zero()) {
          continue;
        }
        auto const s = u[i] * v[j];
        for (std::size_t r = 0; r < n; ++r) {
          out[r] += s * m.mul.at(r, i * n + j);
        }
      }
    }
    return out;
  }

  inline Mor from_columns(Field const& f, ObjWord const& dom, ObjWord const& cod,
                          std::vector<Vec> const& cols) {
    Mor m(f, dom, cod);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t r = 0; r < cols[c].size(); ++r) {
        m.at(r, c) = cols[c][r];
      }
    }
    return m;
  }

  //! Wreath convolution (f then g) evaluated element by element: for each
  //! basis input (c, x), expand d(c) = Σ a1⊗c1⊗c2, apply f to (c2, x),
  //! move c1 past each f-output with z, apply g, then multiply the three A
  //! values bracketed as a1·(a3·a4), the opposite of the library's μ∘(μ⊗1).
  inline Mor kleisli(MixedOpwreathData const& mo,
                     Mor const& f, ObjWord const& x, ObjWord const& y,
                     Mor const& g, ObjWord const& zw) {
    auto const& F  = mo.field();
    std::size_t const nA = mo.monoid.carrier.dim();
    std::size_t const nC = mo.c.dim();
    std::size_t const nX = x.dim(), nY = y.dim(), nZ = zw.dim();
    // prod[(a1*nA + a3)*nA + a4] = a1·(a3·a4)
    std::vector<Vec> prod;
    for (std::size_t a1 = 0; a1 < nA; ++a1) {
      for (std::size_t a3 = 0; a3 < nA; ++a3) {
        for (std::size_t a4 = 0; a4 < nA; ++a4) {
          auto const inner = mul(mo.monoid, basis(F, nA, a3), basis(F, nA, a4));
          prod.push_back(mul(mo.monoid, basis(F, nA, a1), inner));
        }
      }
    }
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < nC; ++c) {
      for (std::size_t xi = 0; xi < nX; ++xi) {
        auto out = zeros(F, nA * nZ);
        for (std::size_t a1 = 0; a1 < nA; ++a1) {
          for (std::size_t c1 = 0; c1 < nC; ++c1) {
            for (std::size_t c2 = 0; c2 < nC; ++c2) {
              auto const& dv = mo.d.at((a1 * nC + c1) * nC + c2, c);
              if (dv.is_zero()) {
                continue;
              }
              for (std::size_t a2 = 0; a2 < nA; ++a2) {
                for (std::size_t yi = 0; yi < nY; ++yi) {
                  auto const& fv = f.at(a2 * nY + yi, c2 * nX + xi);
                  if (fv.is_zero()) {
                    continue;
                  }
                  for (std::size_t a3 = 0; a3 < nA; ++a3) {
                    for (std::size_t c3 = 0; c3 < nC; ++c3) {
                      auto const& zv = mo.z.at(a3 * nC + c3, c1 * nA + a2);
                      if (zv.is_zero()) {
                        continue;
                      }
                      for (std::size_t a4 = 0; a4 < nA; ++a4) {
                        for (std::size_t zi = 0; zi < nZ; ++zi) {
                          auto const& gv = g.at(a4 * nZ + zi, c3 * nY + yi);
                          if (gv.is_zero()) {
                            continue;
                          }
                          auto const  coeff = dv * fv * zv * gv;
                          auto const& p = prod[(a1 * nA + a3) * nA + a4];
                          for (std::size_t r = 0; r < nA; ++r) {
                            out[r * nZ + zi] += coeff * p[r];
                          }
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        }
        cols.push_back(std::move(out));
      }
    }
    return from_columns(F, mo.c * x, mo.monoid.carrier * zw, cols);
  }

  //! Classical convolution u(c₁)v(c₂) by index sums.
  inline Mor classical(Mor const& u, Mor const& v, ComonoidObj const& c,
                       MonoidObj const& a) {
    auto const& F  = a.field();
    std::size_t const nC = c.carrier.dim();
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < nC; ++k) {
      auto out = zeros(F, a.carrier.dim());
      for (std::size_t i = 0; i < nC; ++i) {
        for (std::size_t j = 0; j < nC; ++j) {
          auto const& dv = c.comul.at(i * nC + j, k);
          if (dv.is_zero()) {
            continue;
          }
          auto const p = mul(a, column(u, i), column(v, j));
          for (std::size_t r = 0; r < p.size(); ++r) {
            out[r] += dv * p[r];
          }
        }
      }
      cols.push_back(std::move(out));
    }
    return from_columns(F, c.carrier, a.carrier, cols);
  }

  //! Small random scalar: integers in [-3, 3] and, over Q, halves and thirds.
  inline Scalar random_scalar(std::mt19937_64& rng, Field const& f) {
    std::uniform_int_distribution<int> num(-3, 3);
    if (f.is_rational()) {
      std::uniform_int_distribution<int> den(1, 3);
      return Scalar::from_rational(mpq_class(num(rng), den(rng)));
    }
    return Scalar::from_int(f, num(rng));
  }

  inline Mor random_mor(std::mt19937_64& rng, Field const& f,
                        ObjWord const& dom, ObjWord const& cod) {
    Mor m(f, dom, cod);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = random_scalar(rng, f);
      }
    }
    return m;
  }

  //! The extension product (x,a)(y,b) = (xy, ρ(x,y)(a·y)b) straight from
  //! the tables, index x*|A| + a.
  inline std::vector<std::vector<std::size_t>> extension_table(
      ExtensionData const& ed) {
    std::size_t const na = ed.a.size();
    std::size_t const n  = ed.m.size() * na;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t const x = i / na, a = i % na, y = k / na, b = k % na;
        std::size_t const r = ed.rho[x][y];
        std::size_t const ay = ed.alpha[a][y];
        t[i][k] = ed.m.table[x][y] * na + ed.a.table[ed.a.table[r][ay]][b];
      }
    }
    return t;
  }

  //! Matrix of a finite monoid's multiplication as e_x⊗e_y ↦ e_{xy}.
  inline Mor table_matrix(Field const& f, ObjWord const& w,
                          std::vector<std::vector<std::size_t>> const& t) {
    Mor m(f, w * w, w);
    std::size_t const n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        m.at(t[x][y], x * n + y) = Scalar::one(f);
      }
    }
    return m;
  }

  //! A group of order 6: permutations of {0,1,2}, composed right to left.
  inline FinMonoid s3() {
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                           {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    FinMonoid g;
    g.name = "S3";
    for (auto const& p : perms) {
      g.labels.push_back(std::to_string(p[0]) + std::to_string(p[1])
                         + std::to_string(p[2]));
    }
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        std::vector<int> q(3);
        for (int t = 0; t < 3; ++t) {
          q[t] = perms[i][perms[j][t]];
        }
        for (std::size_t k = 0; k < 6; ++k) {
          if (perms[k] == q) {
            g.table[i][j] = k;
          }
        }
      }
    }
    g.unit = 0;
    return g;
  }

}  // namespace oracle
