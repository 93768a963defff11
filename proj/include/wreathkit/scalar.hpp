#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <variant>

namespace wreathkit {

  //! The ground field: the rationals, or the prime field F_p.
  class Field {
   public:
    static Field rational() noexcept { return Field(0); }
    //! Throws InputError unless \p p is prime.
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return _p == 0; }
    std::uint64_t modulus() const noexcept { return _p; }

    bool operator==(Field const&) const = default;

    std::string to_string() const;

   private:
    friend class Scalar;
    explicit Field(std::uint64_t p) noexcept : _p(p) {}
    std::uint64_t _p;
  };

  bool is_prime(std::uint64_t n) noexcept;

  //! An exact field element in canonical form.
  //!
  //! Rationals are kept reduced with positive denominator (GMP does this);
  //! residues live in [0, p).  Arithmetic between scalars of different
  //! fields throws.
  class Scalar {
    struct Residue {
      std::uint64_t value;
      std::uint64_t p;
      bool operator==(Residue const&) const = default;
    };

   public:
    Scalar() : _v(mpq_class(0)) {}

    static Scalar zero(Field const& f);
    static Scalar one(Field const& f);
    static Scalar from_int(Field const& f, std::int64_t n);
    static Scalar from_rational(mpq_class q);
    static Scalar from_residue(std::uint64_t v, std::uint64_t p);
    //! Parses "3", "-3/4" (rational) or an integer literal reduced mod p.
    static Scalar parse(Field const& f, std::string const& text);

    Field field() const;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar operator+(Scalar const& o) const;
    Scalar operator-(Scalar const& o) const;
    Scalar operator*(Scalar const& o) const;
    Scalar operator-() const;
    Scalar& operator+=(Scalar const& o);

    bool operator==(Scalar const& o) const;

    //! Canonical literal: "p/q" or "n" for rationals, "k" for residues.
    std::string to_string() const;

    bool is_residue() const noexcept {
      return std::holds_alternative<Residue>(_v);
    }
    std::uint64_t residue() const { return std::get<Residue>(_v).value; }
    mpq_class const& rational() const { return std::get<mpq_class>(_v); }

   private:
    template <typename T>
    explicit Scalar(T v) : _v(std::move(v)) {}
    void check_same(Scalar const& o) const;

    std::variant<mpq_class, Residue> _v;
  };

  std::ostream& operator<<(std::ostream& os, Scalar const& s);

}  // namespace wreathkit
