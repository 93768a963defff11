#pragma once

#include "wreathkit/structures.hpp"

namespace wreathkit {

  //! A wreath around the monad A⊗− : an object S with
  //!   nu:     S⊗S -> S⊗A
  //!   sigma0: I   -> S⊗A
  //!   lambda: A⊗S -> S⊗A
  //! The seven axioms are checked by check_wreath.
  struct WreathData {
    MonoidObj monoid;
    ObjWord   s;
    Mor       nu;
    Mor       sigma0;
    Mor       lambda;

    Field const& field() const noexcept { return monoid.field(); }
  };

  void require_shapes(WreathData const& wd);

  //! Seven entries, numbered as the boxed wreath axioms:
  //!   1 "λ vs μ", 2 "λ vs η", 3 "σ vs λ", 4 "ν vs λ",
  //!   5 "ν coassoc-like", 6 "σ unit left", 7 "σ unit right".
  AxiomReport check_wreath(WreathData const& wd);

  //! The monoid on S⊗A with multiplication
  //! (id_S⊗μ₃)∘(ν⊗id_A⊗id_A)∘(id_S⊗λ⊗id_A) and unit sigma0.
  //! Throws ValidationError carrying the report when the axioms fail,
  //! unless \p validate is false.
  MonoidObj wreath_product(WreathData const& wd, bool validate = true);

  //! nu = (id_S⊗η_A)∘μ_S, sigma0 = η_S⊗η_A, lambda = \p lam.
  WreathData from_distributive_law(MonoidObj const& s,
                                   MonoidObj const& a,
                                   Mor const&       lam);

  //! S = I, nu = sigma0 = η_A, lambda = id_A.
  WreathData identity_wreath(MonoidObj const& a);

}  // namespace wreathkit
