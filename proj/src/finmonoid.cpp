#include "wreathkit/finmonoid.hpp"

namespace wreathkit {

  namespace {
    AxiomEntry pass(std::string id, std::string desc) {
      return AxiomEntry{std::move(id), std::move(desc), true, std::nullopt};
    }

    AxiomEntry fail(std::string              id,
                    std::string              desc,
                    std::vector<std::size_t> index,
                    std::string              left,
                    std::string              right) {
      return AxiomEntry{std::move(id),
                        std::move(desc),
                        false,
                        Witness{std::move(index), std::move(left), std::move(right)}};
    }

    std::string label(FinMonoid const& m, std::size_t i) {
      return i < m.size() ? m.labels[i] : "#" + std::to_string(i);
    }
  }  // namespace

  AxiomReport check_finmonoid(FinMonoid const& m) {
    AxiomReport r("finite monoid " + m.name);
    std::size_t const n = m.size();
    if (n == 0) {
      r.add(fail("shape", "at least one element", {}, "0 elements", ">= 1"));
      return r;
    }
    if (m.table.size() != n) {
      r.add(fail("shape", "n x n table of element indices", {},
                 std::to_string(m.table.size()) + " rows", std::to_string(n)));
      return r;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (m.table[x].size() != n) {
        r.add(fail("shape", "n x n table of element indices", {x},
                   std::to_string(m.table[x].size()) + " columns",
                   std::to_string(n)));
        return r;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (m.table[x][y] >= n) {
          r.add(fail("shape", "n x n table of element indices", {x, y},
                     std::to_string(m.table[x][y]), "< " + std::to_string(n)));
          return r;
        }
      }
    }
    r.add(pass("shape", "n x n table of element indices"));
    auto assoc = pass("assoc", "(xy)z = x(yz)");
    for (std::size_t x = 0; x < n && assoc.passed; ++x) {
      for (std::size_t y = 0; y < n && assoc.passed; ++y) {
        for (std::size_t z = 0; z < n && assoc.passed; ++z) {
          auto const l = m.mul(m.mul(x, y), z);
          auto const rr = m.mul(x, m.mul(y, z));
          if (l != rr) {
            assoc = fail("assoc", "(xy)z = x(yz)", {x, y, z}, label(m, l),
                         label(m, rr));
          }
        }
      }
    }
    r.add(assoc);
    if (m.unit >= n) {
      r.add(fail("unit", "1x = x = x1", {m.unit}, "unit index out of range",
                 "< " + std::to_string(n)));
      return r;
    }
    auto unit = pass("unit", "1x = x = x1");
    for (std::size_t x = 0; x < n; ++x) {
      if (m.mul(m.unit, x) != x) {
        unit = fail("unit", "1x = x = x1", {x}, label(m, m.mul(m.unit, x)),
                    label(m, x));
        break;
      }
      if (m.mul(x, m.unit) != x) {
        unit = fail("unit", "1x = x = x1", {x}, label(m, m.mul(x, m.unit)),
                    label(m, x));
        break;
      }
    }
    r.add(unit);
    return r;
  }

  void require_finmonoid(FinMonoid const& m) {
    auto const rep = check_finmonoid(m);
    for (auto const& e : rep.entries()) {
      if (!e.passed) {
        std::string where;
        if (e.witness) {
          for (auto i : e.witness->index) {
            where += (where.empty() ? "" : ",") + label(m, i);
          }
        }
        throw InputError("'" + m.name + "' is not a monoid: " + e.id
                         + " fails at (" + where + "): " + e.witness->left
                         + " vs " + e.witness->right);
      }
    }
  }

  FinMonoid cyclic_group(std::size_t n) {
    FinMonoid m;
    m.name = "Z" + std::to_string(n);
    m.unit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m.labels.push_back(std::to_string(i));
      m.table.emplace_back();
      for (std::size_t j = 0; j < n; ++j) {
        m.table.back().push_back((i + j) % n);
      }
    }
    return m;
  }

  FinMonoid direct_product(FinMonoid const& a, FinMonoid const& b) {
    FinMonoid m;
    m.name = a.name + "x" + b.name;
    std::size_t const nb = b.size();
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < nb; ++y) {
        m.labels.push_back("(" + a.labels[x] + "," + b.labels[y] + ")");
      }
    }
    m.table.assign(m.labels.size(), std::vector<std::size_t>(m.labels.size()));
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
      for (std::size_t j = 0; j < m.labels.size(); ++j) {
        m.table[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
      }
    }
    m.unit = a.unit * nb + b.unit;
    return m;
  }

  AxiomReport check_isomorphism(FinMonoid const&                from,
                                FinMonoid const&                to,
                                std::vector<std::size_t> const& map) {
    AxiomReport r("isomorphism " + from.name + " -> " + to.name);
    if (map.size() != from.size() || from.size() != to.size()) {
      r.add(fail("bijective", "map is a bijection", {},
                 std::to_string(map.size()) + " images",
                 std::to_string(to.size()) + " elements"));
      return r;
    }
    std::vector<std::size_t> hit(to.size(), from.size());
    auto bij = pass("bijective", "map is a bijection");
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] >= to.size()) {
        bij = fail("bijective", "map is a bijection", {i}, "out of range", "");
        break;
      }
      if (hit[map[i]] != from.size()) {
        bij = fail("bijective", "map is a bijection", {hit[map[i]], i},
                   label(to, map[i]), "collision");
        break;
      }
      hit[map[i]] = i;
    }
    r.add(bij);
    if (!bij.passed) {
      return r;
    }
    auto hom = pass("homomorphism", "f(xy) = f(x)f(y)");
    for (std::size_t x = 0; x < from.size() && hom.passed; ++x) {
      for (std::size_t y = 0; y < from.size() && hom.passed; ++y) {
        auto const l  = map[from.mul(x, y)];
        auto const rr = to.mul(map[x], map[y]);
        if (l != rr) {
          hom = fail("homomorphism", "f(xy) = f(x)f(y)", {x, y}, label(to, l),
                     label(to, rr));
        }
      }
    }
    r.add(hom);
    if (map[from.unit] == to.unit) {
      r.add(pass("unit", "f(1) = 1"));
    } else {
      r.add(fail("unit", "f(1) = 1", {from.unit}, label(to, map[from.unit]),
                 label(to, to.unit)));
    }
    return r;
  }

  bool is_commutative(FinMonoid const& m) {
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < x; ++y) {
        if (m.mul(x, y) != m.mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace wreathkit
