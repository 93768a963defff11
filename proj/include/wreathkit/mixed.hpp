#pragma once

#include <memory>

#include "wreathkit/structures.hpp"

namespace wreathkit {

  //! A mixed opwreath around the monad A⊗− : an object C with
  //!   d: C   -> A⊗C⊗C   (comultiplication up to A)
  //!   w: C   -> A       (counit up to A)
  //!   z: C⊗A -> A⊗C     (the mixed law)
  struct MixedOpwreathData {
    MonoidObj monoid;
    ObjWord   c;
    Mor       d;
    Mor       w;
    Mor       z;

    Field const& field() const noexcept { return monoid.field(); }
  };

  void require_shapes(MixedOpwreathData const& mo);

  //! Seven entries "1".."7": z vs μ, z vs η, w vs z, d vs z,
  //! d coassoc, w counit left, w counit right.
  AxiomReport check_mixed_opwreath(MixedOpwreathData const& mo);

  //! C = I, d = w = η_A, z = id_A.
  MixedOpwreathData trivial_opwreath(MonoidObj const& a);

  //! The canonical opwreath of a bimonoid B on C = B:
  //!   z = (1⊗μ)∘braid(B⊗B, B)∘(1⊗δ),  d = η⊗δ,  w = η∘ε.
  //! On grouplikes z(g⊗h) = h⊗gh.  Throws ValidationError when \p b fails
  //! check_bimonoid.
  MixedOpwreathData heisenberg_data(BimonoidObj const& b);

  //! d = η⊗δ, w = η∘ε, z = braid(C, A) for a comonoid C.  Convolution in
  //! this context is μ∘(u⊗v)∘braid∘δ, the classical convolution when C is
  //! cocommutative.
  MixedOpwreathData classical_opwreath(MonoidObj const& a, ComonoidObj const& c);

  using Context = std::shared_ptr<MixedOpwreathData const>;

  //! A morphism X -> Y of the mixed Kleisli category: mat: C⊗X -> A⊗Y.
  struct KleisliMor {
    ObjWord dom;
    ObjWord cod;
    Mor     mat;
    Context context;
  };

  //! Checks the matrix type against the context; throws ShapeError.
  KleisliMor make_kleisli(Context const& ctx,
                          ObjWord const& dom,
                          ObjWord const& cod,
                          Mor            mat);

  //! mat = w⊗id_X.
  KleisliMor kleisli_identity(ObjWord const& x, Context const& ctx);

  //! The composite "f then g" (g∘f), by wreath convolution:
  //!   (μ₃⊗1_Z)∘(1_A⊗1_A⊗g)∘(1_A⊗z⊗1_Y)∘(1_A⊗1_C⊗f)∘(d⊗1_X).
  //! Throws Error on differing contexts and ShapeError on cod(f) ≠ dom(g).
  KleisliMor kleisli_compose(KleisliMor const& f, KleisliMor const& g);

  //! kleisli_compose at X = Y = Z = I; u is applied first.
  Mor convolve(Mor const& u, Mor const& v, MixedOpwreathData const& mo);

  //! convolve(f, g, heisenberg_data(b)).
  Mor heisenberg_product(Mor const& f, Mor const& g, BimonoidObj const& b);

}  // namespace wreathkit
