#pragma once

#include <stdexcept>
#include <string>

namespace wreathkit {

  // Base of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Morphisms whose domain/codomain words or matrix shapes do not fit.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  // Malformed user input: bad tables, dangling names, non-prime moduli.
  class InputError : public Error {
   public:
    using Error::Error;
  };

}  // namespace wreathkit
