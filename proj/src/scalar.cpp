#include "wreathkit/scalar.hpp"

#include <ostream>

#include "wreathkit/error.hpp"

namespace wreathkit {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) {
      throw InputError("modulus " + std::to_string(p) + " is not prime");
    }
    return Field(p);
  }

  std::string Field::to_string() const {
    return is_rational() ? "rational" : "F_" + std::to_string(_p);
  }

  Scalar Scalar::zero(Field const& f) {
    return from_int(f, 0);
  }

  Scalar Scalar::one(Field const& f) {
    return from_int(f, 1);
  }

  Scalar Scalar::from_int(Field const& f, std::int64_t n) {
    if (f.is_rational()) {
      return Scalar(mpq_class(static_cast<long>(n)));
    }
    auto const p = static_cast<std::int64_t>(f.modulus());
    std::int64_t r = n % p;
    if (r < 0) {
      r += p;
    }
    return Scalar(Residue{static_cast<std::uint64_t>(r), f.modulus()});
  }

  Scalar Scalar::from_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }

  Scalar Scalar::from_residue(std::uint64_t v, std::uint64_t p) {
    return Scalar(Residue{v % p, p});
  }

  Scalar Scalar::parse(Field const& f, std::string const& text) {
    if (text.empty()) {
      throw InputError("empty scalar literal");
    }
    if (f.is_rational()) {
      mpq_class q;
      // mpq_set_str accepts "n" and "n/d" in base 10
      if (q.set_str(text, 10) != 0) {
        throw InputError("malformed rational literal '" + text + "'");
      }
      if (q.get_den() == 0) {
        throw InputError("zero denominator in '" + text + "'");
      }
      return from_rational(std::move(q));
    }
    mpz_class z;
    if (text.find('/') != std::string::npos || z.set_str(text, 10) != 0) {
      throw InputError("malformed residue literal '" + text + "'");
    }
    mpz_class m(static_cast<unsigned long>(f.modulus()));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return Scalar(Residue{r.get_ui(), f.modulus()});
  }

  Field Scalar::field() const {
    if (auto const* r = std::get_if<Residue>(&_v)) {
      return Field(r->p);
    }
    return Field::rational();
  }

  bool Scalar::is_zero() const noexcept {
    if (auto const* r = std::get_if<Residue>(&_v)) {
      return r->value == 0;
    }
    return sgn(std::get<mpq_class>(_v)) == 0;
  }

  bool Scalar::is_one() const noexcept {
    if (auto const* r = std::get_if<Residue>(&_v)) {
      return r->value == 1;
    }
    return std::get<mpq_class>(_v) == 1;
  }

  void Scalar::check_same(Scalar const& o) const {
    auto const* a = std::get_if<Residue>(&_v);
    auto const* b = std::get_if<Residue>(&o._v);
    if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
      throw Error("arithmetic between scalars of different fields");
    }
  }

  Scalar Scalar::operator+(Scalar const& o) const {
    Scalar r = *this;
    r += o;
    return r;
  }

  Scalar& Scalar::operator+=(Scalar const& o) {
    check_same(o);
    if (auto* a = std::get_if<Residue>(&_v)) {
      auto const& b = std::get<Residue>(o._v);
      a->value += b.value;
      if (a->value >= a->p) {
        a->value -= a->p;
      }
    } else {
      std::get<mpq_class>(_v) += std::get<mpq_class>(o._v);
    }
    return *this;
  }

  Scalar Scalar::operator-() const {
    if (auto const* a = std::get_if<Residue>(&_v)) {
      return Scalar(Residue{a->value == 0 ? 0 : a->p - a->value, a->p});
    }
    return Scalar(mpq_class(-std::get<mpq_class>(_v)));
  }

  Scalar Scalar::operator-(Scalar const& o) const {
    return *this + (-o);
  }

  Scalar Scalar::operator*(Scalar const& o) const {
    check_same(o);
    if (auto const* a = std::get_if<Residue>(&_v)) {
      auto const& b = std::get<Residue>(o._v);
      auto const prod = static_cast<unsigned __int128>(a->value) * b.value;
      return Scalar(Residue{static_cast<std::uint64_t>(prod % a->p), a->p});
    }
    return Scalar(mpq_class(std::get<mpq_class>(_v) * std::get<mpq_class>(o._v)));
  }

  bool Scalar::operator==(Scalar const& o) const {
    return _v == o._v;
  }

  std::string Scalar::to_string() const {
    if (auto const* a = std::get_if<Residue>(&_v)) {
      return std::to_string(a->value);
    }
    return std::get<mpq_class>(_v).get_str();
  }

  std::ostream& operator<<(std::ostream& os, Scalar const& s) {
    return os << s.to_string();
  }

}  // namespace wreathkit
