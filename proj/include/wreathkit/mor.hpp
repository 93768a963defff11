#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "wreathkit/object.hpp"
#include "wreathkit/scalar.hpp"

namespace wreathkit {

  //! A morphism of the symmetric monoidal category of finite-dimensional
  //! vector spaces: an exact dim(cod) x dim(dom) matrix typed by words.
  class Mor {
   public:
    //! The zero morphism dom -> cod.
    Mor(Field field, ObjWord dom, ObjWord cod);
    //! Row-major entries; throws ShapeError on a size mismatch.
    Mor(Field field, ObjWord dom, ObjWord cod, std::vector<Scalar> entries);

    //! Convenience for tests and fixtures: integer rows (row = codomain index).
    static Mor from_rows(Field field,
                         ObjWord dom,
                         ObjWord cod,
                         std::vector<std::vector<std::int64_t>> const& rows);

    Field const& field() const noexcept { return _field; }
    ObjWord const& dom() const noexcept { return _dom; }
    ObjWord const& cod() const noexcept { return _cod; }
    std::size_t rows() const noexcept { return _rows; }
    std::size_t cols() const noexcept { return _cols; }

    Scalar const& at(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }
    Scalar& at(std::size_t r, std::size_t c) { return _entries[r * _cols + c]; }
    std::vector<Scalar> const& entries() const noexcept { return _entries; }

    //! Same matrix retyped along words of equal dimension.
    Mor retyped(ObjWord dom, ObjWord cod) const;

    bool is_zero() const;
    //! Exact equality of words, field and every entry.
    bool operator==(Mor const&) const = default;

    Mor operator+(Mor const& o) const;
    Mor operator-(Mor const& o) const;
    Mor scaled(Scalar const& s) const;

   private:
    Field               _field;
    ObjWord             _dom;
    ObjWord             _cod;
    std::size_t         _rows;
    std::size_t         _cols;
    std::vector<Scalar> _entries;
  };

  Mor identity(Field const& field, ObjWord const& x);

  //! g∘f.  Throws ShapeError naming both words unless dom(g) = cod(f).
  Mor compose(Mor const& g, Mor const& f);

  //! Composite of a chain listed in application order: last∘...∘first.
  Mor then(std::initializer_list<Mor> chain);

  //! Kronecker product, leftmost factor most significant.
  Mor tensor(Mor const& f, Mor const& g);
  Mor tensor(std::initializer_list<Mor> fs);

  //! (id_left ⊗ f ⊗ id_right) ∘ m, computed without forming the padded
  //! Kronecker product.
  Mor whisker_compose(ObjWord const& left,
                      Mor const&     f,
                      ObjWord const& right,
                      Mor const&     m);

  //! One layer of a string diagram: \p f applied after the prefix \p left.
  struct Layer {
    ObjWord left;
    Mor     f;
  };

  //! The composite start, then id_left₁⊗f₁⊗id, then id_left₂⊗f₂⊗id, ...,
  //! evaluated one column at a time on sparse vectors.  Intermediate
  //! matrices are never stored, so wide but sparse diagrams stay cheap.
  Mor apply_sparse(Mor const& start, std::vector<Layer> const& layers);
  //! Starts from the identity on \p dom.
  Mor apply_sparse(Field const&              field,
                   ObjWord const&            dom,
                   std::vector<Layer> const& layers);

  //! A string diagram built layer by layer.  Each layer applies a morphism
  //! to a contiguous run of strings and leaves the others alone.  Shapes are
  //! checked as layers are added; the composite is computed by apply_sparse
  //! on first use, so padded identities are never materialized.
  class Chain {
   public:
    explicit Chain(Mor start);
    //! Starts from the identity on \p dom.
    Chain(Field const& field, ObjWord const& dom);

    //! Applies \p f to the strings after the prefix \p left; ShapeError
    //! unless the current codomain reads left⊗dom(f)⊗rest.
    Chain& at(ObjWord const& left, Mor const& f);

    ObjWord const& cod() const noexcept { return _cod; }
    Mor const&     mor() const&;
    Mor            mor() &&;

   private:
    Field               _field;
    ObjWord             _dom;
    ObjWord             _cod;
    std::optional<Mor>  _start;
    std::vector<Layer>  _layers;
    mutable std::optional<Mor> _result;
  };

  //! id_left ⊗ f ⊗ id_right.
  Mor whisker(ObjWord const& left, Mor const& f, ObjWord const& right);

  //! The symmetry X⊗Y -> Y⊗X sending basis (i, j) to (j, i).
  Mor braid(Field const& field, ObjWord const& x, ObjWord const& y);

  //! The unique map X -> I sending every basis vector to 1; used to
  //! discard strings in bullet-product unit laws.
  Mor discard(Field const& field, ObjWord const& x);

  //! Matrix unit e_{r,c} as a morphism dom -> cod.
  Mor matrix_unit(Field const& field,
                  ObjWord const& dom,
                  ObjWord const& cod,
                  std::size_t    r,
                  std::size_t    c);

  //! All matrix units dom -> cod in row-major order.
  std::vector<Mor> matrix_units(Field const&   field,
                                ObjWord const& dom,
                                ObjWord const& cod);

  //! 0/1 matrix of a function on basis indices: column i has a single 1
  //! in row fn[i].
  Mor function_matrix(Field const&                    field,
                      ObjWord const&                  dom,
                      ObjWord const&                  cod,
                      std::vector<std::size_t> const& fn);

}  // namespace wreathkit
