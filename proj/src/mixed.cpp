#include "wreathkit/mixed.hpp"

#include "wreathkit/error.hpp"

namespace wreathkit {

  namespace {
    void require_type(Mor const&         f,
                      ObjWord const&     dom,
                      ObjWord const&     cod,
                      std::string const& what) {
      if (!(f.dom() == dom) || !(f.cod() == cod)) {
        throw ShapeError("opwreath " + what + " must be " + dom.to_string()
                         + " -> " + cod.to_string() + ", got "
                         + f.dom().to_string() + " -> " + f.cod().to_string());
      }
    }

    bool same_context(MixedOpwreathData const& a, MixedOpwreathData const& b) {
      return a.monoid.carrier == b.monoid.carrier && a.monoid.mul == b.monoid.mul
             && a.monoid.unit == b.monoid.unit && a.c == b.c && a.d == b.d
             && a.w == b.w && a.z == b.z;
    }

    Mor compose_mats(MixedOpwreathData const& mo,
                     Mor const&               f,
                     ObjWord const&           x,
                     Mor const&               g) {
      auto const& a   = mo.monoid.carrier;
      auto const& c   = mo.c;
      auto const  I   = ObjWord::unit();
      auto const  mu3 = ternary_mul(mo.monoid);
      return apply_sparse(mo.field(), c * x,
                          {{I, mo.d}, {a * c, f}, {a, mo.z}, {a * a, g}, {I, mu3}});
    }
  }  // namespace

  void require_shapes(MixedOpwreathData const& mo) {
    require_shapes(mo.monoid);
    auto const& a = mo.monoid.carrier;
    auto const& c = mo.c;
    require_type(mo.d, c, a * c * c, "d");
    require_type(mo.w, c, a, "w");
    require_type(mo.z, c * a, a * c, "z");
  }

  AxiomReport check_mixed_opwreath(MixedOpwreathData const& mo) {
    require_shapes(mo);
    auto const& f   = mo.field();
    auto const& a   = mo.monoid.carrier;
    auto const& c   = mo.c;
    auto const& mu  = mo.monoid.mul;
    auto const& eta = mo.monoid.unit;
    auto const& d   = mo.d;
    auto const& w   = mo.w;
    auto const& z   = mo.z;
    auto const  I   = ObjWord::unit();
    auto const  etaC = tensor(eta, identity(f, c));
    auto const  on  = [&](ObjWord const& dom) { return Chain(f, dom); };

    AxiomReport r("mixed opwreath around " + a.to_string() + " on "
                  + c.to_string());
    r.add(equation("1", "z vs μ", on(c * a * a).at(c, mu).at(I, z).mor(),
                   on(c * a * a).at(I, z).at(a, z).at(I, mu).mor()));
    r.add(equation("2", "z vs η", on(c).at(c, eta).at(I, z).mor(), etaC));
    r.add(equation("3", "w vs z", on(c * a).at(I, z).at(a, w).at(I, mu).mor(),
                   on(c * a).at(I, w).at(I, mu).mor()));
    r.add(equation("4", "d vs z", on(c * a).at(I, z).at(a, d).at(I, mu).mor(),
                   on(c * a).at(I, d).at(a * c, z).at(a, z).at(I, mu).mor()));
    r.add(equation("5", "d coassoc", on(c).at(I, d).at(a, d).at(I, mu).mor(),
                   on(c).at(I, d).at(a * c, d).at(a, z).at(I, mu).mor()));
    r.add(equation("6", "w counit left",
                   on(c).at(I, d).at(a, w).at(I, mu).mor(), etaC));
    r.add(equation("7", "w counit right",
                   on(c).at(I, d).at(a * c, w).at(a, z).at(I, mu).mor(), etaC));
    return r;
  }

  MixedOpwreathData trivial_opwreath(MonoidObj const& a) {
    require_shapes(a);
    return MixedOpwreathData{a, ObjWord::unit(), a.unit, a.unit,
                             identity(a.field(), a.carrier)};
  }

  MixedOpwreathData heisenberg_data(BimonoidObj const& b) {
    auto rep = check_bimonoid(b);
    if (!rep.passed()) {
      throw ValidationError("not a bimonoid; no Heisenberg opwreath",
                            std::move(rep));
    }
    auto const& f   = b.field();
    auto const& x   = b.carrier();
    auto const  idX = identity(f, x);
    auto const& m   = b.monoid;
    auto const& c   = b.comonoid;
    auto const  z   = then({tensor(idX, c.comul), braid(f, x * x, x),
                            tensor(idX, m.mul)});
    return MixedOpwreathData{m, x, tensor(m.unit, c.comul),
                             compose(m.unit, c.counit), z};
  }

  MixedOpwreathData classical_opwreath(MonoidObj const& a, ComonoidObj const& c) {
    require_shapes(a);
    require_shapes(c);
    if (!(a.field() == c.field())) {
      throw ShapeError("monoid and comonoid live over different fields");
    }
    return MixedOpwreathData{a, c.carrier, tensor(a.unit, c.comul),
                             compose(a.unit, c.counit),
                             braid(a.field(), c.carrier, a.carrier)};
  }

  KleisliMor make_kleisli(Context const& ctx,
                          ObjWord const& dom,
                          ObjWord const& cod,
                          Mor            mat) {
    if (!ctx) {
      throw Error("Kleisli morphism without a context");
    }
    require_type(mat, ctx->c * dom, ctx->monoid.carrier * cod,
                 "Kleisli morphism " + dom.to_string() + " -> "
                     + cod.to_string());
    return KleisliMor{dom, cod, std::move(mat), ctx};
  }

  KleisliMor kleisli_identity(ObjWord const& x, Context const& ctx) {
    if (!ctx) {
      throw Error("Kleisli identity without a context");
    }
    return KleisliMor{x, x, tensor(ctx->w, identity(ctx->field(), x)), ctx};
  }

  KleisliMor kleisli_compose(KleisliMor const& f, KleisliMor const& g) {
    if (!f.context || !g.context) {
      throw Error("Kleisli morphism without a context");
    }
    if (f.context != g.context && !same_context(*f.context, *g.context)) {
      throw Error("Kleisli morphisms live in different contexts");
    }
    if (!(f.cod == g.dom)) {
      throw ShapeError("cannot compose Kleisli morphisms: codomain "
                       + f.cod.to_string() + " vs domain " + g.dom.to_string());
    }
    auto const& mo = *f.context;
    require_type(f.mat, mo.c * f.dom, mo.monoid.carrier * f.cod, "f");
    require_type(g.mat, mo.c * g.dom, mo.monoid.carrier * g.cod, "g");
    return KleisliMor{f.dom, g.cod, compose_mats(mo, f.mat, f.dom, g.mat),
                      f.context};
  }

  Mor convolve(Mor const& u, Mor const& v, MixedOpwreathData const& mo) {
    require_shapes(mo);
    require_type(u, mo.c, mo.monoid.carrier, "convolution argument u");
    require_type(v, mo.c, mo.monoid.carrier, "convolution argument v");
    auto const I = ObjWord::unit();
    return compose_mats(mo, u, I, v);
  }

  Mor heisenberg_product(Mor const& f, Mor const& g, BimonoidObj const& b) {
    return convolve(f, g, heisenberg_data(b));
  }

}  // namespace wreathkit
