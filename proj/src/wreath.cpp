#include "wreathkit/wreath.hpp"

#include "wreathkit/error.hpp"

namespace wreathkit {

  namespace {
    void require_type(Mor const&         f,
                      ObjWord const&     dom,
                      ObjWord const&     cod,
                      std::string const& what) {
      if (!(f.dom() == dom) || !(f.cod() == cod)) {
        throw ShapeError("wreath " + what + " must be " + dom.to_string()
                         + " -> " + cod.to_string() + ", got "
                         + f.dom().to_string() + " -> " + f.cod().to_string());
      }
    }
  }  // namespace

  void require_shapes(WreathData const& wd) {
    require_shapes(wd.monoid);
    auto const& a = wd.monoid.carrier;
    auto const& s = wd.s;
    require_type(wd.nu, s * s, s * a, "nu");
    require_type(wd.sigma0, ObjWord::unit(), s * a, "sigma0");
    require_type(wd.lambda, a * s, s * a, "lambda");
  }

  AxiomReport check_wreath(WreathData const& wd) {
    require_shapes(wd);
    auto const& f   = wd.field();
    auto const& a   = wd.monoid.carrier;
    auto const& s   = wd.s;
    auto const& mu  = wd.monoid.mul;
    auto const& eta = wd.monoid.unit;
    auto const& nu  = wd.nu;
    auto const& sig = wd.sigma0;
    auto const& lam = wd.lambda;
    auto const  I   = ObjWord::unit();
    auto const  idS = identity(f, s);
    auto const  idA = identity(f, a);
    // (id_S⊗μ), the multiplication of the two A strings leaving a composite
    auto const  merge = whisker(s, mu, I);

    AxiomReport r("wreath around " + a.to_string() + " on " + s.to_string());
    r.add(equation("1", "λ vs μ", compose(lam, tensor(mu, idS)),
                   then({tensor(idA, lam), tensor(lam, idA), merge})));
    r.add(equation("2", "λ vs η", compose(lam, tensor(eta, idS)),
                   tensor(idS, eta)));
    r.add(equation("3", "σ vs λ", compose(merge, tensor(sig, idA)),
                   then({tensor(idA, sig), tensor(lam, idA), merge})));
    r.add(equation("4", "ν vs λ",
                   then({tensor(lam, idS), tensor(idS, lam), tensor(nu, idA),
                         merge}),
                   then({tensor(idA, nu), tensor(lam, idA), merge})));
    r.add(equation("5", "ν coassoc-like",
                   then({tensor(idS, nu), tensor(nu, idA), merge}),
                   then({tensor(nu, idS), tensor(idS, lam), tensor(nu, idA),
                         merge})));
    r.add(equation("6", "σ unit left",
                   then({tensor(idS, sig), tensor(nu, idA), merge}),
                   tensor(idS, eta)));
    r.add(equation("7", "σ unit right",
                   then({tensor(sig, idS), tensor(idS, lam), tensor(nu, idA),
                         merge}),
                   tensor(idS, eta)));
    return r;
  }

  MonoidObj wreath_product(WreathData const& wd, bool validate) {
    if (validate) {
      auto rep = check_wreath(wd);
      if (!rep.passed()) {
        throw ValidationError("wreath axioms fail; refusing to form the product",
                              std::move(rep));
      }
    } else {
      require_shapes(wd);
    }
    auto const& f   = wd.field();
    auto const& a   = wd.monoid.carrier;
    auto const& s   = wd.s;
    auto const  I   = ObjWord::unit();
    auto const  mu3 = ternary_mul(wd.monoid);
    auto const  mul = then({whisker(s, wd.lambda, a),
                            tensor(wd.nu, identity(f, a * a)),
                            whisker(s, mu3, I)});
    return MonoidObj{s * a, mul, wd.sigma0};
  }

  WreathData from_distributive_law(MonoidObj const& s,
                                   MonoidObj const& a,
                                   Mor const&       lam) {
    require_shapes(s);
    require_shapes(a);
    auto const& f = a.field();
    return WreathData{a,
                      s.carrier,
                      compose(tensor(identity(f, s.carrier), a.unit), s.mul),
                      tensor(s.unit, a.unit),
                      lam};
  }

  WreathData identity_wreath(MonoidObj const& a) {
    require_shapes(a);
    return WreathData{a, ObjWord::unit(), a.unit, a.unit,
                      identity(a.field(), a.carrier)};
  }

}  // namespace wreathkit
