#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wreathkit/finmonoid.hpp"
#include "wreathkit/wreath.hpp"

namespace wreathkit {

  using ElementMap = std::vector<std::size_t>;
  using Table      = std::vector<std::vector<std::size_t>>;

  //! A monoid surjection p: E -> M with a unit-preserving section j such
  //! that h(x, a) = j(x)·a is a bijection M×A -> E, A = p⁻¹(1).
  struct FibrationData {
    FinMonoid  e;
    FinMonoid  m;
    ElementMap p;  // E -> M
    ElementMap j;  // M -> E
  };

  //! Kernel A, the twisting α (alpha[a][x] = a·x) and the factor set
  //! ρ (rho[x][y]).
  struct ExtensionData {
    FinMonoid m;
    FinMonoid a;
    Table     alpha;  // |A| x |M|
    Table     rho;    // |M| x |M|, entries in A
  };

  //! The result of analyze_fibration together with the kernel embedding
  //! and the translation map h, which identifies M×A with E.
  struct FibrationAnalysis {
    ExtensionData ext;
    ElementMap    kernel;  // index in A -> element of E
    ElementMap    h;       // (x, a) at x*|A| + a -> element of E
  };

  //! Throws InputError naming offending elements when \p fd is not a
  //! normal cloven lax fibration.
  FibrationAnalysis analyze_fibration(FibrationData const& fd);

  //! Entries alpha-is-endomorphism, alpha-unital, rho-action, factorset,
  //! rho-normalized; exhaustive over element tuples.
  AxiomReport verify_extension_data(ExtensionData const& ed);

  //! M×A with (x,a)(y,b) = (xy, ρ(x,y)(a·y)b), unit (1,1), element index
  //! x*|A| + a.  Throws ValidationError on failing verification.
  FinMonoid reconstruct(ExtensionData const& ed);

  //! The wreath on S (|M|-dimensional, named \p s_name) around linearize(A)
  //! (named \p a_name): nu (x,y) ↦ (xy, ρ(x,y)), lambda (a,x) ↦ (x, a·x),
  //! sigma0 = (1,1).
  WreathData extension_to_wreath(ExtensionData const& ed,
                                 Field const&         field,
                                 std::string const&   s_name = "S",
                                 std::string const&   a_name = "A");

  //! All normalized ρ satisfying factorset and rho-action for fixed α, in
  //! lexicographic order of the table entries (row-major over non-unit
  //! pairs).  Throws InputError when |A|^((|M|-1)²) exceeds
  //! \p max_candidates, ValidationError when α is not valid.
  std::vector<Table> enumerate_cocycles(FinMonoid const& m,
                                        FinMonoid const& a,
                                        Table const&     alpha,
                                        std::uint64_t    max_candidates
                                        = 10'000'000);

}  // namespace wreathkit
