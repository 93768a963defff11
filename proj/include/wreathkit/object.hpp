#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreathkit {

  //! A named generator object of a finite dimension >= 1.
  struct Generator {
    std::string name;
    std::size_t dim = 1;

    bool operator==(Generator const&) const = default;
  };

  //! A tensor word of generators.  The empty word is the unit object I.
  //!
  //! Tensor product is concatenation; associativity and unit constraints
  //! are identities.  A basis vector of a word is indexed mixed-radix with
  //! the leftmost factor most significant.
  class ObjWord {
   public:
    ObjWord() = default;
    ObjWord(std::initializer_list<Generator> gens) : _gens(gens) {}
    explicit ObjWord(std::vector<Generator> gens) : _gens(std::move(gens)) {}

    //! A one-letter word.  Throws InputError when \p dim is 0.
    static ObjWord generator(std::string name, std::size_t dim);
    static ObjWord unit() { return {}; }

    std::size_t dim() const noexcept;
    bool is_unit() const noexcept { return _gens.empty(); }
    std::size_t length() const noexcept { return _gens.size(); }
    std::vector<Generator> const& letters() const noexcept { return _gens; }

    //! True when this word starts with \p prefix.
    bool starts_with(ObjWord const& prefix) const;
    //! The word with the first prefix.length() letters removed.
    ObjWord drop_front(std::size_t n) const;

    bool operator==(ObjWord const&) const = default;

    //! "I" for the unit, otherwise letters joined by "⊗".
    std::string to_string() const;

   private:
    std::vector<Generator> _gens;
  };

  ObjWord operator*(ObjWord const& a, ObjWord const& b);

  std::ostream& operator<<(std::ostream& os, ObjWord const& w);

}  // namespace wreathkit
