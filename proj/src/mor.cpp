#include "wreathkit/mor.hpp"

#include <algorithm>
#include <functional>

#include "wreathkit/error.hpp"

namespace wreathkit {

  namespace {
    std::string shape_text(ObjWord const& dom, ObjWord const& cod) {
      return dom.to_string() + " -> " + cod.to_string();
    }
  }  // namespace

  Mor::Mor(Field field, ObjWord dom, ObjWord cod)
      : _field(field),
        _dom(std::move(dom)),
        _cod(std::move(cod)),
        _rows(_cod.dim()),
        _cols(_dom.dim()),
        _entries(_rows * _cols, Scalar::zero(field)) {}

  Mor::Mor(Field field, ObjWord dom, ObjWord cod, std::vector<Scalar> entries)
      : _field(field),
        _dom(std::move(dom)),
        _cod(std::move(cod)),
        _rows(_cod.dim()),
        _cols(_dom.dim()),
        _entries(std::move(entries)) {
    if (_entries.size() != _rows * _cols) {
      throw ShapeError("morphism " + shape_text(_dom, _cod) + " needs "
                       + std::to_string(_rows) + "x" + std::to_string(_cols)
                       + " entries, got " + std::to_string(_entries.size()));
    }
    for (auto const& e : _entries) {
      if (!(e.field() == _field)) {
        throw ShapeError("entry of field " + e.field().to_string()
                         + " in a morphism over " + _field.to_string());
      }
    }
  }

  Mor Mor::from_rows(Field                                         field,
                     ObjWord                                       dom,
                     ObjWord                                       cod,
                     std::vector<std::vector<std::int64_t>> const& rows) {
    std::vector<Scalar> entries;
    for (auto const& row : rows) {
      if (row.size() != dom.dim()) {
        throw ShapeError("row of length " + std::to_string(row.size())
                         + " for domain " + dom.to_string());
      }
      for (auto v : row) {
        entries.push_back(Scalar::from_int(field, v));
      }
    }
    return Mor(field, std::move(dom), std::move(cod), std::move(entries));
  }

  Mor Mor::retyped(ObjWord dom, ObjWord cod) const {
    if (dom.dim() != _cols || cod.dim() != _rows) {
      throw ShapeError("cannot retype " + shape_text(_dom, _cod) + " as "
                       + shape_text(dom, cod));
    }
    return Mor(_field, std::move(dom), std::move(cod), _entries);
  }

  bool Mor::is_zero() const {
    for (auto const& e : _entries) {
      if (!e.is_zero()) {
        return false;
      }
    }
    return true;
  }

  Mor Mor::operator+(Mor const& o) const {
    if (!(_dom == o._dom) || !(_cod == o._cod)) {
      throw ShapeError("sum of " + shape_text(_dom, _cod) + " and "
                       + shape_text(o._dom, o._cod));
    }
    Mor r = *this;
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      r._entries[i] += o._entries[i];
    }
    return r;
  }

  Mor Mor::operator-(Mor const& o) const {
    return *this + o.scaled(-Scalar::one(_field));
  }

  Mor Mor::scaled(Scalar const& s) const {
    Mor r = *this;
    for (auto& e : r._entries) {
      e = e * s;
    }
    return r;
  }

  Mor identity(Field const& field, ObjWord const& x) {
    Mor r(field, x, x);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      r.at(i, i) = Scalar::one(field);
    }
    return r;
  }

  Mor compose(Mor const& g, Mor const& f) {
    if (!(g.dom() == f.cod())) {
      throw ShapeError("cannot compose g: " + shape_text(g.dom(), g.cod())
                       + " after f: " + shape_text(f.dom(), f.cod()) + " ("
                       + g.dom().to_string() + " != " + f.cod().to_string()
                       + ")");
    }
    if (!(g.field() == f.field())) {
      throw ShapeError("cannot compose morphisms over different fields");
    }
    Mor r(g.field(), f.dom(), g.cod());
    std::size_t const n = g.cols();
    std::size_t const m = f.cols();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar const& gik = g.at(i, k);
        if (gik.is_zero()) {
          continue;
        }
        bool const unit = gik.is_one();
        for (std::size_t j = 0; j < m; ++j) {
          Scalar const& fkj = f.at(k, j);
          if (fkj.is_zero()) {
            continue;
          }
          r.at(i, j) += unit ? fkj : gik * fkj;
        }
      }
    }
    return r;
  }

  Mor then(std::initializer_list<Mor> chain) {
    if (chain.size() == 0) {
      throw ShapeError("empty composite");
    }
    auto it = chain.begin();
    Mor  acc = *it++;
    for (; it != chain.end(); ++it) {
      acc = compose(*it, acc);
    }
    return acc;
  }

  Mor tensor(Mor const& f, Mor const& g) {
    if (!(g.field() == f.field())) {
      throw ShapeError("cannot tensor morphisms over different fields");
    }
    Mor r(f.field(), f.dom() * g.dom(), f.cod() * g.cod());
    std::size_t const gr = g.rows();
    std::size_t const gc = g.cols();
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) {
        Scalar const& fij = f.at(i, j);
        if (fij.is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < gr; ++k) {
          for (std::size_t l = 0; l < gc; ++l) {
            Scalar const& gkl = g.at(k, l);
            if (!gkl.is_zero()) {
              r.at(i * gr + k, j * gc + l) = fij * gkl;
            }
          }
        }
      }
    }
    return r;
  }

  Mor tensor(std::initializer_list<Mor> fs) {
    if (fs.size() == 0) {
      throw ShapeError("empty tensor product has no field");
    }
    auto it  = fs.begin();
    Mor  acc = *it++;
    for (; it != fs.end(); ++it) {
      acc = tensor(acc, *it);
    }
    return acc;
  }

  Mor whisker_compose(ObjWord const& left,
                      Mor const&     f,
                      ObjWord const& right,
                      Mor const&     m) {
    ObjWord const expected = left * f.dom() * right;
    if (!(m.cod() == expected)) {
      throw ShapeError("cannot compose id_" + left.to_string() + "⊗f⊗id_"
                       + right.to_string() + " (domain " + expected.to_string()
                       + ") after a morphism into " + m.cod().to_string());
    }
    Mor               r(f.field(), m.dom(), left * f.cod() * right);
    std::size_t const L  = left.dim();
    std::size_t const R  = right.dim();
    std::size_t const fr = f.rows();
    std::size_t const fc = f.cols();
    std::size_t const mc = m.cols();
    // output row (l, i, t) = sum_k f(i, k) * m((l, k, t), j)
    for (std::size_t l = 0; l < L; ++l) {
      for (std::size_t i = 0; i < fr; ++i) {
        for (std::size_t k = 0; k < fc; ++k) {
          Scalar const& fik = f.at(i, k);
          if (fik.is_zero()) {
            continue;
          }
          bool const unit = fik.is_one();
          for (std::size_t t = 0; t < R; ++t) {
            std::size_t const out = (l * fr + i) * R + t;
            std::size_t const in  = (l * fc + k) * R + t;
            for (std::size_t j = 0; j < mc; ++j) {
              Scalar const& mij = m.at(in, j);
              if (mij.is_zero()) {
                continue;
              }
              r.at(out, j) += unit ? mij : fik * mij;
            }
          }
        }
      }
    }
    return r;
  }

  Mor whisker(ObjWord const& left, Mor const& f, ObjWord const& right) {
    ObjWord const dom = left * f.dom() * right;
    return whisker_compose(left, f, right, identity(f.field(), dom));
  }

  namespace {
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

    struct PreparedLayer {
      std::size_t         left;   // dim of the prefix
      std::size_t         right;  // dim of the untouched suffix
      std::size_t         fr;
      std::size_t         fc;
      std::vector<Sparse> cols;   // sparse columns of f
    };

    Sparse sparse_column(Mor const& m, std::size_t c) {
      Sparse out;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.at(r, c).is_zero()) {
          out.emplace_back(r, m.at(r, c));
        }
      }
      return out;
    }

    // Sorts by index and sums duplicates, dropping zeros.
    void normalize(Sparse& v) {
      std::sort(v.begin(), v.end(),
                [](auto const& a, auto const& b) { return a.first < b.first; });
      std::size_t k = 0;
      for (std::size_t i = 0; i < v.size();) {
        auto idx = v[i].first;
        auto sum = std::move(v[i].second);
        for (++i; i < v.size() && v[i].first == idx; ++i) {
          sum += v[i].second;
        }
        if (!sum.is_zero()) {
          v[k++] = {idx, std::move(sum)};
        }
      }
      v.resize(k);
    }

    Mor run_sparse(Field const&                        field,
                   ObjWord const&                      dom,
                   ObjWord const&                      start_cod,
                   std::function<Sparse(std::size_t)> const& column,
                   std::vector<Layer> const&           layers) {
      ObjWord                    cur = start_cod;
      std::vector<PreparedLayer> prep;
      for (auto const& l : layers) {
        ObjWord const head = l.left * l.f.dom();
        if (!cur.starts_with(head)) {
          throw ShapeError("cannot apply " + l.f.dom().to_string() + " -> "
                           + l.f.cod().to_string() + " after the prefix "
                           + l.left.to_string() + " of " + cur.to_string());
        }
        ObjWord const rest = cur.drop_front(head.length());
        PreparedLayer p{l.left.dim(), rest.dim(), l.f.rows(), l.f.cols(), {}};
        for (std::size_t c = 0; c < p.fc; ++c) {
          p.cols.push_back(sparse_column(l.f, c));
        }
        prep.push_back(std::move(p));
        cur = l.left * l.f.cod() * rest;
      }
      Mor out(field, dom, cur);
      for (std::size_t j = 0; j < dom.dim(); ++j) {
        Sparse v = column(j);
        for (auto const& p : prep) {
          Sparse next;
          for (auto const& [idx, val] : v) {
            std::size_t const t  = idx % p.right;
            std::size_t const k  = (idx / p.right) % p.fc;
            std::size_t const lo = idx / p.right / p.fc;
            for (auto const& [i, fik] : p.cols[k]) {
              next.emplace_back((lo * p.fr + i) * p.right + t,
                                fik.is_one() ? val : fik * val);
            }
          }
          normalize(next);
          v = std::move(next);
        }
        for (auto& [idx, val] : v) {
          out.at(idx, j) = std::move(val);
        }
      }
      return out;
    }
  }  // namespace

  Mor apply_sparse(Mor const& start, std::vector<Layer> const& layers) {
    return run_sparse(start.field(), start.dom(), start.cod(),
                      [&](std::size_t j) { return sparse_column(start, j); },
                      layers);
  }

  Mor apply_sparse(Field const&              field,
                   ObjWord const&            dom,
                   std::vector<Layer> const& layers) {
    return run_sparse(field, dom, dom,
                      [&](std::size_t j) { return Sparse{{j, Scalar::one(field)}}; },
                      layers);
  }

  Chain::Chain(Mor start)
      : _field(start.field()),
        _dom(start.dom()),
        _cod(start.cod()),
        _start(std::move(start)) {}

  Chain::Chain(Field const& field, ObjWord const& dom)
      : _field(field), _dom(dom), _cod(dom) {}

  Chain& Chain::at(ObjWord const& left, Mor const& f) {
    ObjWord const head = left * f.dom();
    if (!_cod.starts_with(head)) {
      throw ShapeError("cannot apply " + f.dom().to_string() + " -> "
                       + f.cod().to_string() + " after the prefix "
                       + left.to_string() + " of " + _cod.to_string());
    }
    _cod = left * f.cod() * _cod.drop_front(head.length());
    _layers.push_back({left, f});
    _result.reset();
    return *this;
  }

  Mor const& Chain::mor() const& {
    if (!_result) {
      _result = _start ? apply_sparse(*_start, _layers)
                       : apply_sparse(_field, _dom, _layers);
    }
    return *_result;
  }

  Mor Chain::mor() && {
    return static_cast<Chain const&>(*this).mor();
  }

  Mor braid(Field const& field, ObjWord const& x, ObjWord const& y) {
    Mor               r(field, x * y, y * x);
    std::size_t const dx = x.dim();
    std::size_t const dy = y.dim();
    for (std::size_t i = 0; i < dx; ++i) {
      for (std::size_t j = 0; j < dy; ++j) {
        r.at(j * dx + i, i * dy + j) = Scalar::one(field);
      }
    }
    return r;
  }

  Mor discard(Field const& field, ObjWord const& x) {
    Mor r(field, x, ObjWord::unit());
    for (std::size_t j = 0; j < r.cols(); ++j) {
      r.at(0, j) = Scalar::one(field);
    }
    return r;
  }

  Mor matrix_unit(Field const&   field,
                  ObjWord const& dom,
                  ObjWord const& cod,
                  std::size_t    r,
                  std::size_t    c) {
    Mor m(field, dom, cod);
    m.at(r, c) = Scalar::one(field);
    return m;
  }

  std::vector<Mor> matrix_units(Field const&   field,
                                ObjWord const& dom,
                                ObjWord const& cod) {
    std::vector<Mor> out;
    for (std::size_t r = 0; r < cod.dim(); ++r) {
      for (std::size_t c = 0; c < dom.dim(); ++c) {
        out.push_back(matrix_unit(field, dom, cod, r, c));
      }
    }
    return out;
  }

  Mor function_matrix(Field const&                    field,
                      ObjWord const&                  dom,
                      ObjWord const&                  cod,
                      std::vector<std::size_t> const& fn) {
    if (fn.size() != dom.dim()) {
      throw ShapeError("function on " + std::to_string(fn.size())
                       + " points for domain " + dom.to_string());
    }
    Mor r(field, dom, cod);
    for (std::size_t c = 0; c < fn.size(); ++c) {
      if (fn[c] >= r.rows()) {
        throw ShapeError("function value out of range for codomain "
                         + cod.to_string());
      }
      r.at(fn[c], c) = Scalar::one(field);
    }
    return r;
  }

}  // namespace wreathkit
