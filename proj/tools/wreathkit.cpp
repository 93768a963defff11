// Command-line driver: checks and computations on bundle files.
//
// Exit codes: 0 all checks pass, 1 a check ran and failed (or a
// precondition check refused an operation), 2 input or usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wreathkit/bundle.hpp"
#include "wreathkit/error.hpp"

using namespace wreathkit;

namespace {

  struct Options {
    std::string              what;
    std::string              bundle;
    std::string              structure;
    std::string              out;
    std::string              report = "text";
    std::vector<std::string> gens;
    std::string              u, v, f, g;
    bool                     skip_validate  = false;
    std::uint64_t            max_candidates = 10'000'000;
  };

  int emit_report(AxiomReport const& r, Options const& o) {
    if (o.report == "json") {
      std::cout << canonical_json(to_json(r));
    } else {
      std::cout << r.to_text();
    }
    return r.passed() ? 0 : 1;
  }

  void emit_bundle(Bundle const& b, Options const& o) {
    auto const text = serialize_bundle(b);
    if (o.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out || !(out << text)) {
      throw InputError("cannot write " + o.out);
    }
    std::cerr << "wrote " << o.out << '\n';
  }

  std::string matrix_text(Mor const& m) {
    std::ostringstream os;
    os << m.dom() << " -> " << m.cod() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << "  [";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        os << (c ? " " : "") << m.at(r, c);
      }
      os << "]\n";
    }
    return os.str();
  }

  Mor const& named_morphism(Bundle const& b, std::string const& name,
                            char const* flag) {
    if (name.empty()) {
      throw InputError(std::string("missing ") + flag + " <morphism>");
    }
    auto it = b.morphisms.find(name);
    if (it == b.morphisms.end()) {
      throw InputError("unknown morphism '" + name + "'");
    }
    return it->second;
  }

  ObjWord parse_word(Bundle const& b, std::string const& text) {
    if (text == "I" || text.empty()) {
      return ObjWord::unit();
    }
    std::vector<std::string> names;
    std::stringstream        ss(text);
    std::string              part;
    while (std::getline(ss, part, '*')) {
      names.push_back(part);
    }
    return b.word(names);
  }

  std::vector<ObjWord> generators(Bundle const& b, Options const& o) {
    std::vector<ObjWord> gens;
    if (!o.gens.empty()) {
      for (auto const& w : o.gens) {
        gens.push_back(parse_word(b, w));
      }
      return gens;
    }
    auto const& rec = b.structures.at(o.structure);
    if (rec.contains("generators")) {
      for (auto const& w : rec["generators"]) {
        gens.push_back(b.word(w.get<std::vector<std::string>>()));
      }
      return gens;
    }
    gens.push_back(ObjWord::unit());
    for (auto const& [name, dim] : b.objects) {
      gens.push_back(ObjWord({Generator{name, dim}}));
    }
    return gens;
  }

  int run_check(Options const& o) {
    auto const b = parse_bundle(o.bundle);
    auto const& k = o.what;
    auto const& s = o.structure;
    if (k == "monoid") {
      return emit_report(check_monoid(resolve_monoid(b, s)), o);
    }
    if (k == "comonoid") {
      return emit_report(check_comonoid(resolve_comonoid(b, s)), o);
    }
    if (k == "bimonoid") {
      return emit_report(check_bimonoid(resolve_bimonoid(b, s)), o);
    }
    if (k == "wreath") {
      return emit_report(check_wreath(resolve_wreath(b, s)), o);
    }
    if (k == "opwreath") {
      return emit_report(check_mixed_opwreath(resolve_opwreath(b, s)), o);
    }
    if (k == "coaction") {
      return emit_report(check_twisted_coaction(resolve_coaction(b, s)), o);
    }
    if (k == "lemma") {
      return emit_report(verify_convolution_lemma(resolve_coaction(b, s)), o);
    }
    if (k == "monoidal-coaction") {
      return emit_report(
          check_monoidal_twisted_coaction(resolve_monoidal_coaction(b, s)), o);
    }
    if (k == "opmonoidal") {
      auto const os = build_opmonoidal(resolve_monoidal_coaction(b, s), false);
      return emit_report(check_opmonoidal(os, generators(b, o)), o);
    }
    throw InputError("unknown check kind '" + k + "'");
  }

  int run_extension(std::string const& action, Options const& o) {
    auto const b = parse_bundle(o.bundle);
    Bundle     out;
    out.field = b.field;
    auto const& s = o.structure;
    if (action == "analyze") {
      auto const fa = analyze_fibration(resolve_fibration(b, s));
      auto const& ed = fa.ext;
      std::cout << "kernel " << ed.a.name << " = {";
      for (std::size_t i = 0; i < fa.kernel.size(); ++i) {
        std::cout << (i ? ", " : "") << b.finmonoids.at(
                         b.structures.at(s)["e"].get<std::string>())
                                             .labels[fa.kernel[i]];
      }
      std::cout << "}\nrho:\n";
      for (std::size_t x = 0; x < ed.m.size(); ++x) {
        for (std::size_t y = 0; y < ed.m.size(); ++y) {
          std::cout << "  rho(" << ed.m.labels[x] << "," << ed.m.labels[y]
                    << ") = " << ed.a.labels[ed.rho[x][y]] << '\n';
        }
      }
      std::cout << "alpha:\n";
      for (std::size_t a = 0; a < ed.a.size(); ++a) {
        for (std::size_t x = 0; x < ed.m.size(); ++x) {
          std::cout << "  " << ed.a.labels[a] << "·" << ed.m.labels[x] << " = "
                    << ed.a.labels[ed.alpha[a][x]] << '\n';
        }
      }
      store_extension(out, s + ".extension", ed);
      if (!o.out.empty()) {
        emit_bundle(out, o);
      }
      return 0;
    }
    if (action == "verify") {
      return emit_report(verify_extension_data(resolve_extension(b, s)), o);
    }
    if (action == "reconstruct") {
      auto const fm = reconstruct(resolve_extension(b, s));
      out.add_finmonoid(s + ".reconstructed", fm);
      emit_bundle(out, o);
      return 0;
    }
    if (action == "enumerate") {
      auto const ed   = resolve_extension(b, s);
      auto const list = enumerate_cocycles(ed.m, ed.a, ed.alpha, o.max_candidates);
      std::cerr << list.size() << " normalized cocycle(s)\n";
      for (std::size_t k = 0; k < list.size(); ++k) {
        auto copy = ed;
        copy.rho  = list[k];
        store_extension(out, s + ".cocycle" + std::to_string(k), copy);
      }
      emit_bundle(out, o);
      return 0;
    }
    if (action == "to-wreath") {
      store_wreath(out, s + ".wreath", extension_to_wreath(resolve_extension(b, s), b.field));
      emit_bundle(out, o);
      return 0;
    }
    throw InputError("unknown extension action '" + action + "'");
  }

  int run_compute(Options const& o) {
    auto const& t = o.what;
    if (t == "reconstruct") {
      return run_extension("reconstruct", o);
    }
    if (t == "enumerate-cocycles") {
      return run_extension("enumerate", o);
    }
    auto const b = parse_bundle(o.bundle);
    Bundle     out;
    out.field = b.field;
    auto const& s = o.structure;
    if (t == "product-wreath") {
      auto const wd = resolve_wreath(b, s);
      store_monoid(out, s + ".product", wreath_product(wd, !o.skip_validate));
      emit_bundle(out, o);
      return 0;
    }
    if (t == "convolve") {
      auto const mo = resolve_opwreath(b, s);
      if (!o.skip_validate) {
        auto rep = check_mixed_opwreath(mo);
        if (!rep.passed()) {
          throw ValidationError("opwreath axioms fail", std::move(rep));
        }
      }
      auto const r = convolve(named_morphism(b, o.u, "-u"),
                              named_morphism(b, o.v, "-v"), mo);
      std::cerr << "convolve(u, v): u applied first\n" << matrix_text(r);
      out.add_morphism("convolution", r);
      emit_bundle(out, o);
      return 0;
    }
    if (t == "heisenberg") {
      auto const r = heisenberg_product(named_morphism(b, o.f, "-f"),
                                        named_morphism(b, o.g, "-g"),
                                        resolve_bimonoid(b, s));
      std::cerr << "Heisenberg product (f applied first)\n" << matrix_text(r);
      out.add_morphism("heisenberg", r);
      emit_bundle(out, o);
      return 0;
    }
    if (t == "kleisli-compose") {
      auto const ctx = std::make_shared<MixedOpwreathData const>(
          resolve_opwreath(b, s));
      if (!o.skip_validate) {
        auto rep = check_mixed_opwreath(*ctx);
        if (!rep.passed()) {
          throw ValidationError("opwreath axioms fail", std::move(rep));
        }
      }
      auto const kl = [&](Mor const& m, char const* flag) {
        auto const& c = ctx->c;
        auto const& a = ctx->monoid.carrier;
        if (!m.dom().starts_with(c) || !m.cod().starts_with(a)) {
          throw ShapeError(std::string(flag) + " must have type " + c.to_string()
                           + "⊗X -> " + a.to_string() + "⊗Y");
        }
        return make_kleisli(ctx, m.dom().drop_front(c.length()),
                            m.cod().drop_front(a.length()), m);
      };
      auto const fk = kl(named_morphism(b, o.f, "-f"), "-f");
      auto const gk = kl(named_morphism(b, o.g, "-g"), "-g");
      auto const r  = kleisli_compose(fk, gk);
      std::cerr << "composite " << fk.dom << " -> " << gk.cod
                << ": f then g, i.e. g∘f in applicative order, f;g diagrammatically\n"
                << matrix_text(r.mat);
      out.add_morphism("composite", r.mat);
      emit_bundle(out, o);
      return 0;
    }
    if (t == "eckmann-hilton") {
      auto const os = build_opmonoidal(resolve_monoidal_coaction(b, s),
                                       !o.skip_validate);
      return emit_report(check_eckmann_hilton(os), o);
    }
    throw InputError("unknown compute task '" + t + "'");
  }

  int run_fmt(Options const& o) {
    emit_bundle(parse_bundle(o.bundle), o);
    return 0;
  }

  void common(CLI::App* app, Options& o, bool needs_structure = true) {
    app->add_option("bundle", o.bundle, "bundle file")->required();
    if (needs_structure) {
      app->add_option("--structure,-s", o.structure, "structure name")->required();
    }
    app->add_option("--out,-o", o.out, "output bundle path (default stdout)");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wreathkit: exact checks for wreaths, opwreaths and coactions"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run a law checker");
  check->add_option("kind", o.what, "structure kind")
      ->required()
      ->check(CLI::IsMember({"monoid", "comonoid", "bimonoid", "wreath",
                             "opwreath", "coaction", "lemma",
                             "monoidal-coaction", "opmonoidal"}));
  common(check, o);
  check->add_option("--report", o.report, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--gens", o.gens,
                    "generator words for opmonoidal checks (A*B, I)");

  auto* compute = app.add_subcommand("compute", "compute a derived object");
  compute->add_option("task", o.what, "task")
      ->required()
      ->check(CLI::IsMember({"product-wreath", "reconstruct",
                             "enumerate-cocycles", "convolve", "heisenberg",
                             "kleisli-compose", "eckmann-hilton"}));
  common(compute, o);
  compute->add_option("-u", o.u, "first convolution argument");
  compute->add_option("-v", o.v, "second convolution argument");
  compute->add_option("-f", o.f, "first morphism (applied first)");
  compute->add_option("-g", o.g, "second morphism");
  compute->add_flag("--skip-validate", o.skip_validate,
                    "skip the precondition checks");
  compute->add_option("--max-candidates", o.max_candidates,
                      "cocycle search bound");
  compute->add_option("--report", o.report, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string action;
  auto* ext = app.add_subcommand("extension", "monoid extension tools");
  ext->add_option("action", action, "action")
      ->required()
      ->check(CLI::IsMember({"analyze", "verify", "reconstruct", "enumerate",
                             "to-wreath"}));
  common(ext, o);
  ext->add_option("--report", o.report, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ext->add_option("--max-candidates", o.max_candidates, "cocycle search bound");

  auto* fmt = app.add_subcommand("fmt", "print a bundle in canonical form");
  common(fmt, o, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      return run_check(o);
    }
    if (compute->parsed()) {
      return run_compute(o);
    }
    if (ext->parsed()) {
      return run_extension(action, o);
    }
    return run_fmt(o);
  } catch (ValidationError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    emit_report(e.report(), o);
    return 1;
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (ShapeError const& e) {
    std::cerr << "shape error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
