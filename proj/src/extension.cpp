#include "wreathkit/extension.hpp"

#include <string>

#include "wreathkit/error.hpp"
#include "wreathkit/parallel.hpp"

namespace wreathkit {

  namespace {
    std::string lbl(FinMonoid const& m, std::size_t i) {
      return i < m.size() ? m.labels[i] : "#" + std::to_string(i);
    }

    void require_map(ElementMap const&  f,
                     FinMonoid const&   from,
                     FinMonoid const&   to,
                     std::string const& name) {
      if (f.size() != from.size()) {
        throw InputError("map " + name + " has " + std::to_string(f.size())
                         + " entries, expected " + std::to_string(from.size()));
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= to.size()) {
          throw InputError("map " + name + " sends " + lbl(from, i)
                           + " outside " + to.name);
        }
      }
    }

    void require_table(Table const&       t,
                       std::size_t        rows,
                       std::size_t        cols,
                       std::size_t        bound,
                       std::string const& name) {
      if (t.size() != rows) {
        throw InputError(name + " needs " + std::to_string(rows) + " rows");
      }
      for (auto const& row : t) {
        if (row.size() != cols) {
          throw InputError(name + " needs " + std::to_string(cols)
                           + " columns");
        }
        for (auto v : row) {
          if (v >= bound) {
            throw InputError(name + " entry " + std::to_string(v)
                             + " out of range");
          }
        }
      }
    }

    AxiomEntry ok(std::string id, std::string desc) {
      return AxiomEntry{std::move(id), std::move(desc), true, std::nullopt};
    }

    AxiomEntry bad(std::string              id,
                   std::string              desc,
                   std::vector<std::size_t> idx,
                   std::string              l,
                   std::string              r) {
      return AxiomEntry{std::move(id), std::move(desc), false,
                        Witness{std::move(idx), std::move(l), std::move(r)}};
    }

    // α entries: each −·x a monoid endomorphism, and a·1 = a.
    void alpha_entries(ExtensionData const& ed, AxiomReport& r) {
      auto const& A  = ed.a;
      auto const& M  = ed.m;
      auto const& al = ed.alpha;
      auto endo = ok("alpha-is-endomorphism", "(ab)·x = (a·x)(b·x), 1·x = 1");
      for (std::size_t x = 0; x < M.size() && endo.passed; ++x) {
        if (al[A.unit][x] != A.unit) {
          endo = bad(endo.id, endo.description, {A.unit, x},
                     lbl(A, al[A.unit][x]), lbl(A, A.unit));
          break;
        }
        for (std::size_t a = 0; a < A.size() && endo.passed; ++a) {
          for (std::size_t b = 0; b < A.size() && endo.passed; ++b) {
            auto const l  = al[A.mul(a, b)][x];
            auto const rr = A.mul(al[a][x], al[b][x]);
            if (l != rr) {
              endo = bad(endo.id, endo.description, {a, b, x}, lbl(A, l),
                         lbl(A, rr));
            }
          }
        }
      }
      r.add(endo);
      auto unital = ok("alpha-unital", "a·1 = a");
      for (std::size_t a = 0; a < A.size(); ++a) {
        if (al[a][M.unit] != a) {
          unital = bad(unital.id, unital.description, {a},
                       lbl(A, al[a][M.unit]), lbl(A, a));
          break;
        }
      }
      r.add(unital);
    }

    // The ρ conditions; returns false at the first failure when \p r is null.
    bool rho_entries(ExtensionData const& ed, AxiomReport* r) {
      auto const& A   = ed.a;
      auto const& M   = ed.m;
      auto const& al  = ed.alpha;
      auto const& rho = ed.rho;

      auto norm = ok("rho-normalized", "ρ(1,x) = 1 = ρ(x,1)");
      for (std::size_t x = 0; x < M.size(); ++x) {
        if (rho[M.unit][x] != A.unit) {
          norm = bad(norm.id, norm.description, {M.unit, x},
                     lbl(A, rho[M.unit][x]), lbl(A, A.unit));
          break;
        }
        if (rho[x][M.unit] != A.unit) {
          norm = bad(norm.id, norm.description, {x, M.unit},
                     lbl(A, rho[x][M.unit]), lbl(A, A.unit));
          break;
        }
      }
      if (r == nullptr && !norm.passed) {
        return false;
      }

      auto action = ok("rho-action", "(a·(xy))ρ(x,y) = ρ(x,y)((a·x)·y)");
      for (std::size_t x = 0; x < M.size() && action.passed; ++x) {
        for (std::size_t y = 0; y < M.size() && action.passed; ++y) {
          auto const xy = M.mul(x, y);
          auto const p  = rho[x][y];
          for (std::size_t a = 0; a < A.size(); ++a) {
            auto const l  = A.mul(al[a][xy], p);
            auto const rr = A.mul(p, al[al[a][x]][y]);
            if (l != rr) {
              action = bad(action.id, action.description, {a, x, y},
                           lbl(A, l), lbl(A, rr));
              break;
            }
          }
        }
      }
      if (r == nullptr && !action.passed) {
        return false;
      }

      auto fs = ok("factorset", "ρ(xy,z)(ρ(x,y)·z) = ρ(x,yz)ρ(y,z)");
      for (std::size_t x = 0; x < M.size() && fs.passed; ++x) {
        for (std::size_t y = 0; y < M.size() && fs.passed; ++y) {
          auto const xy = M.mul(x, y);
          for (std::size_t z = 0; z < M.size(); ++z) {
            auto const l  = A.mul(rho[xy][z], al[rho[x][y]][z]);
            auto const rr = A.mul(rho[x][M.mul(y, z)], rho[y][z]);
            if (l != rr) {
              fs = bad(fs.id, fs.description, {x, y, z}, lbl(A, l),
                       lbl(A, rr));
              break;
            }
          }
        }
      }
      if (r == nullptr) {
        return fs.passed;
      }
      r->add(action);
      r->add(fs);
      r->add(norm);
      return action.passed && fs.passed && norm.passed;
    }

    void require_extension_shapes(ExtensionData const& ed) {
      require_finmonoid(ed.m);
      require_finmonoid(ed.a);
      require_table(ed.alpha, ed.a.size(), ed.m.size(), ed.a.size(), "alpha");
      require_table(ed.rho, ed.m.size(), ed.m.size(), ed.a.size(), "rho");
    }

    void require_valid(ExtensionData const& ed, std::string const& op) {
      auto rep = verify_extension_data(ed);
      if (!rep.passed()) {
        throw ValidationError("extension data fails verification; refusing to "
                                  + op,
                              std::move(rep));
      }
    }
  }  // namespace

  FibrationAnalysis analyze_fibration(FibrationData const& fd) {
    auto const& E = fd.e;
    auto const& M = fd.m;
    require_finmonoid(E);
    require_finmonoid(M);
    require_map(fd.p, E, M, "p");
    require_map(fd.j, M, E, "j");
    auto const& p = fd.p;
    auto const& j = fd.j;

    for (std::size_t e1 = 0; e1 < E.size(); ++e1) {
      for (std::size_t e2 = 0; e2 < E.size(); ++e2) {
        if (p[E.mul(e1, e2)] != M.mul(p[e1], p[e2])) {
          throw InputError("p is not a monoid morphism: p(" + lbl(E, e1) + "·"
                           + lbl(E, e2) + ") = " + lbl(M, p[E.mul(e1, e2)])
                           + " but p(" + lbl(E, e1) + ")p(" + lbl(E, e2)
                           + ") = " + lbl(M, M.mul(p[e1], p[e2])));
        }
      }
    }
    if (p[E.unit] != M.unit) {
      throw InputError("p is not a monoid morphism: p(1) = " + lbl(M, p[E.unit]));
    }
    for (std::size_t x = 0; x < M.size(); ++x) {
      if (p[j[x]] != x) {
        throw InputError("p∘j ≠ id: p(j(" + lbl(M, x) + ")) = "
                         + lbl(M, p[j[x]]));
      }
    }
    if (j[M.unit] != E.unit) {
      throw InputError("j(1) = " + lbl(E, j[M.unit]) + " is not the unit");
    }

    FibrationAnalysis out;
    ElementMap        to_kernel(E.size(), E.size());
    for (std::size_t e = 0; e < E.size(); ++e) {
      if (p[e] == M.unit) {
        to_kernel[e] = out.kernel.size();
        out.kernel.push_back(e);
      }
    }
    std::size_t const na = out.kernel.size();
    FinMonoid         A;
    A.name = "ker(" + E.name + ")";
    A.unit = to_kernel[E.unit];
    for (auto e : out.kernel) {
      A.labels.push_back(E.labels[e]);
    }
    A.table.assign(na, std::vector<std::size_t>(na));
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < na; ++b) {
        A.table[a][b] = to_kernel[E.mul(out.kernel[a], out.kernel[b])];
      }
    }

    // h(x, a) = j(x)·a must be a bijection M×A -> E
    out.h.resize(M.size() * na);
    ElementMap h_inv(E.size(), out.h.size());
    for (std::size_t x = 0; x < M.size(); ++x) {
      for (std::size_t a = 0; a < na; ++a) {
        auto const e = E.mul(j[x], out.kernel[a]);
        auto const k = x * na + a;
        if (h_inv[e] != out.h.size()) {
          auto const prev = h_inv[e];
          throw InputError("h is not injective: h(" + lbl(M, prev / na) + ","
                           + lbl(A, prev % na) + ") = h(" + lbl(M, x) + ","
                           + lbl(A, a) + ") = " + lbl(E, e));
        }
        h_inv[e]  = k;
        out.h[k] = e;
      }
    }
    for (std::size_t e = 0; e < E.size(); ++e) {
      if (h_inv[e] == out.h.size()) {
        throw InputError("h is not surjective: " + lbl(E, e)
                         + " is not of the form j(x)·a");
      }
    }

    auto& ed = out.ext;
    ed.m     = M;
    ed.a     = std::move(A);
    ed.alpha.assign(na, std::vector<std::size_t>(M.size()));
    ed.rho.assign(M.size(), std::vector<std::size_t>(M.size()));
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t x = 0; x < M.size(); ++x) {
        // j(x)(a·x) = a j(x)
        ed.alpha[a][x] = h_inv[E.mul(out.kernel[a], j[x])] % na;
      }
    }
    for (std::size_t x = 0; x < M.size(); ++x) {
      for (std::size_t y = 0; y < M.size(); ++y) {
        // j(xy)ρ(x,y) = j(x)j(y)
        ed.rho[x][y] = h_inv[E.mul(j[x], j[y])] % na;
      }
    }
    return out;
  }

  AxiomReport verify_extension_data(ExtensionData const& ed) {
    require_extension_shapes(ed);
    AxiomReport r("extension of " + ed.m.name + " by " + ed.a.name);
    alpha_entries(ed, r);
    rho_entries(ed, &r);
    return r;
  }

  FinMonoid reconstruct(ExtensionData const& ed) {
    require_valid(ed, "reconstruct");
    auto const&       M  = ed.m;
    auto const&       A  = ed.a;
    std::size_t const na = A.size();
    FinMonoid         out;
    out.name = M.name + "⋉" + A.name;
    for (std::size_t x = 0; x < M.size(); ++x) {
      for (std::size_t a = 0; a < na; ++a) {
        out.labels.push_back("(" + M.labels[x] + "," + A.labels[a] + ")");
      }
    }
    std::size_t const n = out.labels.size();
    out.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const x = i / na, a = i % na, y = k / na, b = k % na;
        // (x,a)(y,b) = (xy, ρ(x,y)(a·y)b)
        auto const c = A.mul(A.mul(ed.rho[x][y], ed.alpha[a][y]), b);
        out.table[i][k] = M.mul(x, y) * na + c;
      }
    }
    out.unit = M.unit * na + A.unit;
    return out;
  }

  WreathData extension_to_wreath(ExtensionData const& ed,
                                 Field const&         field,
                                 std::string const&   s_name,
                                 std::string const&   a_name) {
    require_valid(ed, "build the wreath");
    auto const&       M  = ed.m;
    auto const&       A  = ed.a;
    std::size_t const na = A.size();
    std::size_t const nm = M.size();
    auto const        s  = ObjWord::generator(s_name, nm);
    auto              lin = linearize(A, field, a_name);
    auto const&       a  = lin.monoid.carrier;

    ElementMap nu(nm * nm), lam(na * nm);
    for (std::size_t x = 0; x < nm; ++x) {
      for (std::size_t y = 0; y < nm; ++y) {
        nu[x * nm + y] = M.mul(x, y) * na + ed.rho[x][y];
      }
    }
    for (std::size_t k = 0; k < na; ++k) {
      for (std::size_t x = 0; x < nm; ++x) {
        lam[k * nm + x] = x * na + ed.alpha[k][x];
      }
    }
    return WreathData{
        lin.monoid, s, function_matrix(field, s * s, s * a, nu),
        function_matrix(field, ObjWord::unit(), s * a, {M.unit * na + A.unit}),
        function_matrix(field, a * s, s * a, lam)};
  }

  std::vector<Table> enumerate_cocycles(FinMonoid const& m,
                                        FinMonoid const& a,
                                        Table const&     alpha,
                                        std::uint64_t    max_candidates) {
    require_finmonoid(m);
    require_finmonoid(a);
    require_table(alpha, a.size(), m.size(), a.size(), "alpha");
    {
      AxiomReport rep;
      ExtensionData probe{m, a, alpha, {}};
      alpha_entries(probe, rep);
      if (!rep.passed()) {
        throw ValidationError("alpha is not a unital family of endomorphisms",
                              rep);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < m.size(); ++y) {
        if (x != m.unit && y != m.unit) {
          free.emplace_back(x, y);
        }
      }
    }
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (count > max_candidates / a.size() + 1) {
        count = max_candidates + 1;
        break;
      }
      count *= a.size();
    }
    if (count > max_candidates) {
      throw InputError("cocycle search space " + std::to_string(a.size()) + "^"
                       + std::to_string(free.size())
                       + " exceeds the candidate bound "
                       + std::to_string(max_candidates));
    }

    std::vector<std::vector<Table>> found(thread_count());
    parallel_chunks(count, [&](std::size_t chunk, std::size_t b, std::size_t e) {
      ExtensionData ed{m, a, alpha,
                       Table(m.size(), std::vector<std::size_t>(m.size(), a.unit))};
      for (std::size_t c = b; c < e; ++c) {
        // most significant digit = first free position
        std::uint64_t v = c;
        for (std::size_t k = free.size(); k-- > 0;) {
          ed.rho[free[k].first][free[k].second] = v % a.size();
          v /= a.size();
        }
        if (rho_entries(ed, nullptr)) {
          found[chunk].push_back(ed.rho);
        }
      }
    });
    std::vector<Table> out;
    for (auto& part : found) {
      for (auto& t : part) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

}  // namespace wreathkit
