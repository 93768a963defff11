#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wreathkit/report.hpp"

namespace wreathkit {

  //! A finite monoid given by its multiplication table.  Element i is the
  //! i-th basis vector of the linearization, so the label order is the
  //! basis order.
  struct FinMonoid {
    std::string                           name;
    std::vector<std::string>              labels;
    std::vector<std::vector<std::size_t>> table;  // table[x][y] = x*y
    std::size_t                           unit = 0;

    std::size_t size() const noexcept { return labels.size(); }
    std::size_t mul(std::size_t x, std::size_t y) const { return table[x][y]; }

    bool operator==(FinMonoid const&) const = default;
  };

  //! Shape, closure, associativity and two-sided unit, as a report.
  AxiomReport check_finmonoid(FinMonoid const& m);

  //! Throws InputError naming the offending elements unless \p m is a monoid.
  void require_finmonoid(FinMonoid const& m);

  //! Z/n written additively with labels "0".."n-1".
  FinMonoid cyclic_group(std::size_t n);

  //! The product monoid on pairs (x, y), index x*|b| + y, labels "(x,y)".
  FinMonoid direct_product(FinMonoid const& a, FinMonoid const& b);

  //! Exhaustive check that \p map (element of \p from -> element of \p to)
  //! is a bijective unit-preserving homomorphism.
  AxiomReport check_isomorphism(FinMonoid const&                from,
                                FinMonoid const&                to,
                                std::vector<std::size_t> const& map);

  //! True when every product commutes.
  bool is_commutative(FinMonoid const& m);

}  // namespace wreathkit
