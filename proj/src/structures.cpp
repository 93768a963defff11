#include "wreathkit/structures.hpp"

#include "wreathkit/error.hpp"

namespace wreathkit {

  namespace {
    void require_type(Mor const&         f,
                      ObjWord const&     dom,
                      ObjWord const&     cod,
                      std::string const& what) {
      if (!(f.dom() == dom) || !(f.cod() == cod)) {
        throw ShapeError(what + " must be " + dom.to_string() + " -> "
                         + cod.to_string() + ", got " + f.dom().to_string()
                         + " -> " + f.cod().to_string());
      }
    }
  }  // namespace

  MonoidObj trivial_monoid(Field const& field) {
    auto const i = identity(field, ObjWord::unit());
    return MonoidObj{ObjWord::unit(), i, i};
  }

  ComonoidObj trivial_comonoid(Field const& field) {
    auto const i = identity(field, ObjWord::unit());
    return ComonoidObj{ObjWord::unit(), i, i};
  }

  BimonoidObj trivial_bimonoid(Field const& field) {
    return BimonoidObj{trivial_monoid(field), trivial_comonoid(field)};
  }

  void require_shapes(MonoidObj const& m) {
    auto const& a = m.carrier;
    require_type(m.mul, a * a, a, "monoid multiplication");
    require_type(m.unit, ObjWord::unit(), a, "monoid unit");
    if (!(m.unit.field() == m.mul.field())) {
      throw ShapeError("monoid structure maps over different fields");
    }
  }

  void require_shapes(ComonoidObj const& c) {
    auto const& x = c.carrier;
    require_type(c.comul, x, x * x, "comultiplication");
    require_type(c.counit, x, ObjWord::unit(), "counit");
    if (!(c.comul.field() == c.counit.field())) {
      throw ShapeError("comonoid structure maps over different fields");
    }
  }

  Mor ternary_mul(MonoidObj const& m) {
    return compose(m.mul, tensor(m.mul, identity(m.field(), m.carrier)));
  }

  AxiomReport check_monoid(MonoidObj const& m) {
    require_shapes(m);
    auto const  id = identity(m.field(), m.carrier);
    AxiomReport r("monoid on " + m.carrier.to_string());
    r.add(equation("assoc", "mul∘(mul⊗id) = mul∘(id⊗mul)",
                   compose(m.mul, tensor(m.mul, id)),
                   compose(m.mul, tensor(id, m.mul))));
    r.add(equation("unit-left", "mul∘(unit⊗id) = id",
                   compose(m.mul, tensor(m.unit, id)), id));
    r.add(equation("unit-right", "mul∘(id⊗unit) = id",
                   compose(m.mul, tensor(id, m.unit)), id));
    return r;
  }

  AxiomReport check_comonoid(ComonoidObj const& c) {
    require_shapes(c);
    auto const  id = identity(c.field(), c.carrier);
    AxiomReport r("comonoid on " + c.carrier.to_string());
    r.add(equation("coassoc", "(comul⊗id)∘comul = (id⊗comul)∘comul",
                   compose(tensor(c.comul, id), c.comul),
                   compose(tensor(id, c.comul), c.comul)));
    r.add(equation("counit-left", "(counit⊗id)∘comul = id",
                   compose(tensor(c.counit, id), c.comul), id));
    r.add(equation("counit-right", "(id⊗counit)∘comul = id",
                   compose(tensor(id, c.counit), c.comul), id));
    return r;
  }

  AxiomReport check_bimonoid(BimonoidObj const& b) {
    if (!(b.monoid.carrier == b.comonoid.carrier)) {
      throw ShapeError("bimonoid monoid carrier " + b.monoid.carrier.to_string()
                       + " differs from comonoid carrier "
                       + b.comonoid.carrier.to_string());
    }
    AxiomReport r("bimonoid on " + b.carrier().to_string());
    r.append(check_monoid(b.monoid), "monoid.");
    r.append(check_comonoid(b.comonoid), "comonoid.");
    auto const& f     = b.field();
    auto const& a     = b.carrier();
    auto const& m     = b.monoid;
    auto const& c     = b.comonoid;
    auto const  id    = identity(f, a);
    auto const  middle = tensor({id, braid(f, a, a), id});
    r.add(equation("comul-mul",
                   "comul∘mul = (mul⊗mul)∘(id⊗braid⊗id)∘(comul⊗comul)",
                   compose(c.comul, m.mul),
                   then({tensor(c.comul, c.comul), middle, tensor(m.mul, m.mul)})));
    r.add(equation("counit-mul", "counit∘mul = counit⊗counit",
                   compose(c.counit, m.mul), tensor(c.counit, c.counit)));
    r.add(equation("comul-unit", "comul∘unit = unit⊗unit",
                   compose(c.comul, m.unit), tensor(m.unit, m.unit)));
    r.add(equation("counit-unit", "counit∘unit = id_I",
                   compose(c.counit, m.unit),
                   identity(f, ObjWord::unit())));
    return r;
  }

  AxiomEntry check_commutative(MonoidObj const& m) {
    require_shapes(m);
    return equation("commutative", "mul∘braid = mul",
                    compose(m.mul, braid(m.field(), m.carrier, m.carrier)),
                    m.mul);
  }

  ComonoidObj grouplike_comonoid(Field const& field, ObjWord const& carrier) {
    std::size_t const        n = carrier.dim();
    std::vector<std::size_t> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
      diag[i] = i * n + i;
    }
    return ComonoidObj{carrier,
                       function_matrix(field, carrier, carrier * carrier, diag),
                       discard(field, carrier)};
  }

  BimonoidObj linearize(FinMonoid const&   fm,
                        Field const&       field,
                        std::string const& object) {
    require_finmonoid(fm);
    std::size_t const        n = fm.size();
    auto const               a = ObjWord::generator(object, n);
    std::vector<std::size_t> prod(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        prod[x * n + y] = fm.mul(x, y);
      }
    }
    MonoidObj m{a,
                function_matrix(field, a * a, a, prod),
                function_matrix(field, ObjWord::unit(), a, {fm.unit})};
    return BimonoidObj{std::move(m), grouplike_comonoid(field, a)};
  }

  BimonoidObj linearize(FinMonoid const& fm, Field const& field) {
    return linearize(fm, field, "k[" + fm.name + "]");
  }

  MonoidObj tensor_monoid(MonoidObj const& a, MonoidObj const& b) {
    require_shapes(a);
    require_shapes(b);
    auto const& f   = a.field();
    auto const  mid = tensor({identity(f, a.carrier),
                              braid(f, b.carrier, a.carrier),
                              identity(f, b.carrier)});
    return MonoidObj{a.carrier * b.carrier,
                     compose(tensor(a.mul, b.mul), mid),
                     tensor(a.unit, b.unit)};
  }

  MonoidObj tensor_monoid(std::initializer_list<MonoidObj> ms) {
    if (ms.size() == 0) {
      throw ShapeError("empty tensor product of monoids");
    }
    auto      it  = ms.begin();
    MonoidObj acc = *it++;
    for (; it != ms.end(); ++it) {
      acc = tensor_monoid(acc, *it);
    }
    return acc;
  }

  Mor bullet(Mor const& u, Mor const& v, MonoidObj const& m) {
    if (!(u.cod() == m.carrier) || !(v.cod() == m.carrier)) {
      throw ShapeError("bullet product needs both maps into "
                       + m.carrier.to_string() + ", got "
                       + u.cod().to_string() + " and " + v.cod().to_string());
    }
    return compose(m.mul, tensor(u, v));
  }

  Mor bullet(Mor const& u, Mor const& v, std::vector<MonoidObj> const& factors) {
    ObjWord w;
    for (auto const& m : factors) {
      w = w * m.carrier;
    }
    if (!(u.cod() == w) || !(v.cod() == w)) {
      throw ShapeError("bullet product needs both maps into " + w.to_string()
                       + ", got " + u.cod().to_string() + " and "
                       + v.cod().to_string());
    }
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
    auto const sparse_col = [](Mor const& m, std::size_t c) {
      Sparse out;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.at(r, c).is_zero()) {
          out.emplace_back(r, m.at(r, c));
        }
      }
      return out;
    };
    // products[t][i * d + j] = e_i·e_j in factor t
    std::vector<std::vector<Sparse>> products;
    std::vector<std::size_t>         dims;
    for (auto const& m : factors) {
      std::size_t const d = m.carrier.dim();
      dims.push_back(d);
      products.emplace_back();
      for (std::size_t c = 0; c < d * d; ++c) {
        products.back().push_back(sparse_col(m.mul, c));
      }
    }
    auto const& field = u.field();
    Mor         out(field, u.dom() * v.dom(), w);
    std::size_t const nv = v.cols();
    std::vector<Sparse> vcols;
    for (std::size_t c = 0; c < nv; ++c) {
      vcols.push_back(sparse_col(v, c));
    }
    std::vector<std::size_t> di(dims.size()), dj(dims.size());
    for (std::size_t cu = 0; cu < u.cols(); ++cu) {
      auto const ucol = sparse_col(u, cu);
      for (std::size_t cv = 0; cv < nv; ++cv) {
        for (auto const& [i, ui] : ucol) {
          for (auto const& [j, vj] : vcols[cv]) {
            auto ri = i, rj = j;
            for (std::size_t t = dims.size(); t-- > 0;) {
              di[t] = ri % dims[t];
              dj[t] = rj % dims[t];
              ri /= dims[t];
              rj /= dims[t];
            }
            Sparse acc{{0, ui * vj}};
            for (std::size_t t = 0; t < dims.size() && !acc.empty(); ++t) {
              Sparse next;
              for (auto const& [idx, c] : acc) {
                for (auto const& [k, m] : products[t][di[t] * dims[t] + dj[t]]) {
                  next.emplace_back(idx * dims[t] + k, c * m);
                }
              }
              acc = std::move(next);
            }
            for (auto const& [idx, c] : acc) {
              out.at(idx, cu * nv + cv) += c;
            }
          }
        }
      }
    }
    return out;
  }

  Mor classical_convolution(Mor const&         u,
                            Mor const&         v,
                            ComonoidObj const& c,
                            MonoidObj const&   m) {
    for (auto const* x : {&u, &v}) {
      if (!(x->dom() == c.carrier) || !(x->cod() == m.carrier)) {
        throw ShapeError("convolution operands must be " + c.carrier.to_string()
                         + " -> " + m.carrier.to_string() + ", got "
                         + x->dom().to_string() + " -> " + x->cod().to_string());
      }
    }
    return then({c.comul, tensor(u, v), m.mul});
  }

}  // namespace wreathkit
