#pragma once

#include <vector>

#include "wreathkit/mixed.hpp"

namespace wreathkit {

  //! A twisted coaction of the bimonoid B on the monoid A:
  //!   gamma: A -> A⊗B,   tau: I -> A⊗B⊗B.
  struct TwistedCoactionData {
    MonoidObj   a;
    BimonoidObj b;
    Mor         gamma;
    Mor         tau;

    Field const& field() const noexcept { return a.field(); }
  };

  //! A twisted coaction with dd: B -> A⊗B⊗B making the generated opwreath
  //! opmonoidal.
  struct MonoidalTwistedCoactionData {
    TwistedCoactionData base;
    Mor                 dd;
  };

  void require_shapes(TwistedCoactionData const& tc);
  void require_shapes(MonoidalTwistedCoactionData const& mtc);

  //! gamma = id_A⊗η_B, tau = η_A⊗η_B⊗η_B.
  TwistedCoactionData trivial_coaction(MonoidObj const& a, BimonoidObj const& b);

  //! Entries gamma-mult, gamma-unit, counitality, tau-coassoc,
  //! 2-cocyclicity, normality-right, normality-middle.
  AxiomReport check_twisted_coaction(TwistedCoactionData const& tc);

  //! z = (η_A⊗1_B)•γ, d = (η_A⊗δ_B)•τ, w = η_A∘ε_B; C = B.
  //! Throws ValidationError when the coaction check fails.
  MixedOpwreathData generated_opwreath(TwistedCoactionData const& tc,
                                       bool validate = true);

  //! Entries lemma-i, lemma-ii, lemma-iii:
  //!   δ•δ = δ∘μ_B,
  //!   (1_A⊗δ)•τ = (1_A⊗η_B⊗η_B)•d,
  //!   (η_A⊗δ)•((1_A⊗δ)∘γ) = (1_A⊗δ)∘z.
  AxiomReport verify_convolution_lemma(TwistedCoactionData const& tc);

  //! Entries A-commutative, montwcoact1, montwcoact2, montwcoact3-left,
  //! montwcoact3-right, montwcoact4.  These are the opmonoidality diagrams
  //! with the generic objects disconnected (X = X′ = I and f, f′ moved out).
  AxiomReport check_monoidal_twisted_coaction(
      MonoidalTwistedCoactionData const& mtc);

  //! ψ and φ for a monoidal twisted coaction.
  class OpmonoidalStructure {
   public:
    OpmonoidalStructure(Context context, Mor dd);

    Context const& context() const noexcept { return _context; }
    MonoidObj const& monoid() const noexcept { return _context->monoid; }
    ObjWord const& a() const noexcept { return _context->monoid.carrier; }
    ObjWord const& b() const noexcept { return _context->c; }
    Mor const& dd() const noexcept { return _dd; }
    Field const& field() const noexcept { return _context->field(); }

    //! (1_A⊗1_B⊗braid(B,X)⊗1_X′)∘(dd⊗1_X⊗1_X′):
    //! B⊗X⊗X′ -> A⊗B⊗X⊗B⊗X′.
    Mor psi(ObjWord const& x, ObjWord const& x2) const;
    //! The nullary piece, w.
    Mor const& psi0() const noexcept { return _context->w; }
    //! (μ⊗1_X⊗1_X′)∘(1_A⊗braid(X,A)⊗1_X′): A⊗X⊗A⊗X′ -> A⊗X⊗X′.
    Mor phi(ObjWord const& x, ObjWord const& x2) const;
    Mor const& phi0() const noexcept { return _context->monoid.unit; }

   private:
    Context _context;
    Mor     _dd;
  };

  //! Throws ValidationError unless check_monoidal_twisted_coaction passes.
  OpmonoidalStructure build_opmonoidal(MonoidalTwistedCoactionData const& mtc,
                                       bool validate = true);

  //! I together with B.
  std::vector<ObjWord> default_generators(OpmonoidalStructure const& os);

  //! Entries Gpsi1..Gpsi6 and GRedundant, each instantiated at every pair
  //! (triple for Gpsi2) of objects in \p gens.  Gpsi1 ranges over all
  //! matrix units f: X -> A⊗Y and f′: X′ -> A⊗Y′, which is complete since
  //! both sides are bilinear in (f, f′).
  AxiomReport check_opmonoidal(OpmonoidalStructure const&  os,
                               std::vector<ObjWord> const& gens);

  //! (μ⊗1_Y⊗1_Y′)∘(1_A⊗φ(Y,Y′))∘(1_A⊗f⊗f′)∘ψ(X,X′).  Throws Error on
  //! a context other than that of \p os.
  KleisliMor kleisli_tensor(KleisliMor const&          f,
                            KleisliMor const&          f2,
                            OpmonoidalStructure const& os);

  //! Single entry eckmann-hilton: convolve(u,v) = convolve(v,u) over all
  //! pairs of matrix units B -> A.
  AxiomReport check_eckmann_hilton(OpmonoidalStructure const& os);

}  // namespace wreathkit
