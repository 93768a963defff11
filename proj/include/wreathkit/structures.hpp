#pragma once

#include "wreathkit/finmonoid.hpp"
#include "wreathkit/mor.hpp"
#include "wreathkit/report.hpp"

namespace wreathkit {

  //! A monoid object (A, mul, unit).  The laws are checked by
  //! check_monoid, never assumed at construction.
  struct MonoidObj {
    ObjWord carrier;
    Mor     mul;   // A⊗A -> A
    Mor     unit;  // I -> A

    Field const& field() const noexcept { return mul.field(); }
  };

  //! A comonoid object (C, comul, counit).
  struct ComonoidObj {
    ObjWord carrier;
    Mor     comul;   // C -> C⊗C
    Mor     counit;  // C -> I

    Field const& field() const noexcept { return comul.field(); }
  };

  //! A monoid and a comonoid on the same carrier.
  struct BimonoidObj {
    MonoidObj   monoid;
    ComonoidObj comonoid;

    ObjWord const& carrier() const noexcept { return monoid.carrier; }
    Field const&   field() const noexcept { return monoid.field(); }
  };

  //! The monoid on the unit object I with all structure maps [1].
  MonoidObj trivial_monoid(Field const& field);
  ComonoidObj trivial_comonoid(Field const& field);
  BimonoidObj trivial_bimonoid(Field const& field);

  //! Throws ShapeError when a stored morphism has the wrong type.
  void require_shapes(MonoidObj const& m);
  void require_shapes(ComonoidObj const& c);

  //! Entries assoc, unit-left, unit-right.
  AxiomReport check_monoid(MonoidObj const& m);
  //! Entries coassoc, counit-left, counit-right.
  AxiomReport check_comonoid(ComonoidObj const& c);
  //! Monoid and comonoid entries (prefixed) plus comul-mul, counit-mul,
  //! comul-unit and counit-unit.
  AxiomReport check_bimonoid(BimonoidObj const& b);

  //! mul∘braid = mul.
  AxiomEntry check_commutative(MonoidObj const& m);

  //! Linearization on a generator named \p object of dimension |fm|:
  //! mul is the 0/1 table matrix, unit picks the unit element, comul is
  //! grouplike (e_i ↦ e_i⊗e_i) and counit is constantly 1.
  //! Throws InputError when \p fm is not a monoid.
  BimonoidObj linearize(FinMonoid const&   fm,
                        Field const&       field,
                        std::string const& object);
  BimonoidObj linearize(FinMonoid const& fm, Field const& field);

  //! The grouplike comonoid e_i ↦ e_i⊗e_i, counit ≡ 1, on any carrier.
  ComonoidObj grouplike_comonoid(Field const& field, ObjWord const& carrier);

  //! Monoid on A⊗B with mul (mul_A⊗mul_B)∘(id_A⊗braid(B,A)⊗id_B).
  MonoidObj tensor_monoid(MonoidObj const& a, MonoidObj const& b);

  //! Iterated tensor_monoid, left to right.
  MonoidObj tensor_monoid(std::initializer_list<MonoidObj> ms);

  //! u•v = mul∘(u⊗v).  Throws ShapeError unless both land in the carrier.
  Mor bullet(Mor const& u, Mor const& v, MonoidObj const& m);

  //! u•v in tensor_monoid(factors), evaluated factor by factor on sparse
  //! columns so the product's multiplication matrix is never formed.
  Mor bullet(Mor const& u, Mor const& v, std::vector<MonoidObj> const& factors);

  //! mul∘(u⊗v)∘comul.
  Mor classical_convolution(Mor const&         u,
                            Mor const&         v,
                            ComonoidObj const& c,
                            MonoidObj const&   m);

  //! mul∘(mul⊗id), the ternary multiplication.
  Mor ternary_mul(MonoidObj const& m);

}  // namespace wreathkit
