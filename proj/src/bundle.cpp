#include "wreathkit/bundle.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "wreathkit/error.hpp"

namespace wreathkit {

  namespace {
    std::string quote(std::string const& s) { return "'" + s + "'"; }

    Json const& member(Json const& rec, std::string const& key,
                       std::string const& ctx) {
      auto it = rec.find(key);
      if (it == rec.end()) {
        throw InputError(ctx + ": missing field " + quote(key));
      }
      return *it;
    }

    std::string get_string(Json const& rec, std::string const& key,
                           std::string const& ctx) {
      auto const& v = member(rec, key, ctx);
      if (!v.is_string()) {
        throw InputError(ctx + ": field " + quote(key) + " must be a string");
      }
      return v.get<std::string>();
    }

    std::size_t get_index(Json const& v, std::string const& ctx) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw InputError(ctx + ": expected a non-negative integer, got "
                         + v.dump());
      }
      return v.get<std::size_t>();
    }

    std::vector<std::string> get_names(Json const& v, std::string const& ctx) {
      if (!v.is_array()) {
        throw InputError(ctx + ": expected an array of object names");
      }
      std::vector<std::string> out;
      for (auto const& e : v) {
        if (!e.is_string()) {
          throw InputError(ctx + ": object names must be strings");
        }
        out.push_back(e.get<std::string>());
      }
      return out;
    }

    ElementMap get_map(Json const& v, std::string const& ctx) {
      if (!v.is_array()) {
        throw InputError(ctx + ": expected an array of element indices");
      }
      ElementMap out;
      for (auto const& e : v) {
        out.push_back(get_index(e, ctx));
      }
      return out;
    }

    Table get_table(Json const& v, std::string const& ctx) {
      if (!v.is_array()) {
        throw InputError(ctx + ": expected an array of rows");
      }
      Table out;
      for (auto const& row : v) {
        out.push_back(get_map(row, ctx));
      }
      return out;
    }

    void check_keys(Json const& rec, std::set<std::string> const& allowed,
                    std::string const& ctx) {
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (!allowed.count(it.key())) {
          throw InputError(ctx + ": unknown field " + quote(it.key()));
        }
      }
    }

    Scalar parse_scalar(Field const& f, Json const& v, std::string const& ctx) {
      try {
        if (v.is_string()) {
          return Scalar::parse(f, v.get<std::string>());
        }
        if (v.is_number_integer()) {
          if (v.is_number_unsigned()) {
            return Scalar::parse(f, std::to_string(v.get<std::uint64_t>()));
          }
          return Scalar::from_int(f, v.get<std::int64_t>());
        }
      } catch (InputError const& e) {
        throw InputError(ctx + ": " + e.what());
      }
      throw InputError(ctx + ": scalar must be an integer or a string like "
                       "\"-3/4\", got " + v.dump());
    }

    Json scalar_json(Scalar const& s) {
      if (s.is_residue()) {
        return s.residue();
      }
      return s.to_string();
    }

    Json names_json(ObjWord const& w) {
      Json out = Json::array();
      for (auto const& g : w.letters()) {
        out.push_back(g.name);
      }
      return out;
    }

    Json const& record(Bundle const& b, std::string const& name,
                       std::string const& type) {
      auto it = b.structures.find(name);
      if (it == b.structures.end()) {
        throw InputError("unknown structure " + quote(name));
      }
      auto const t = get_string(it->second, "type", "structure " + quote(name));
      if (t != type) {
        throw InputError("structure " + quote(name) + " has type " + quote(t)
                         + ", expected " + quote(type));
      }
      return it->second;
    }

    Mor const& morphism(Bundle const& b, Json const& rec, std::string const& key,
                        std::string const& ctx) {
      auto const name = get_string(rec, key, ctx);
      auto       it   = b.morphisms.find(name);
      if (it == b.morphisms.end()) {
        throw InputError(ctx + ": unknown morphism " + quote(name));
      }
      return it->second;
    }

    FinMonoid const& finmonoid(Bundle const& b, Json const& rec,
                               std::string const& key, std::string const& ctx) {
      auto const name = get_string(rec, key, ctx);
      auto       it   = b.finmonoids.find(name);
      if (it == b.finmonoids.end()) {
        throw InputError(ctx + ": unknown finite monoid " + quote(name));
      }
      return it->second;
    }

    // linearization of a finite monoid on a declared object of matching dim
    BimonoidObj linearized(Bundle const& b, Json const& rec, std::string const& ctx) {
      auto const& fm  = finmonoid(b, rec, "finmonoid", ctx);
      auto const  obj = get_string(rec, "object", ctx);
      auto const  w   = b.word({obj});
      if (w.dim() != fm.size()) {
        throw ShapeError(ctx + ": object " + quote(obj) + " has dimension "
                         + std::to_string(w.dim()) + " but " + quote(fm.name)
                         + " has " + std::to_string(fm.size()) + " elements");
      }
      return linearize(fm, b.field, obj);
    }

    Json const& structure_ref(Bundle const& b, Json const& rec,
                              std::string const& key, std::string const& ctx,
                              std::string& name) {
      name = get_string(rec, key, ctx);
      if (!b.structures.count(name)) {
        throw InputError(ctx + ": unknown structure " + quote(name));
      }
      return b.structures.at(name);
    }

    FinMonoid parse_finmonoid(std::string const& name, Json const& v) {
      std::string const ctx = "finmonoid " + quote(name);
      if (!v.is_object()) {
        throw InputError(ctx + ": expected an object");
      }
      check_keys(v, {"elements", "table", "unit"}, ctx);
      FinMonoid fm;
      fm.name   = name;
      fm.labels = get_names(member(v, "elements", ctx), ctx + " elements");
      fm.table  = get_table(member(v, "table", ctx), ctx + " table");
      fm.unit   = get_index(member(v, "unit", ctx), ctx + " unit");
      auto rep  = check_finmonoid(fm);
      if (!rep.passed()) {
        std::string why;
        for (auto const& e : rep.entries()) {
          if (!e.passed) {
            why += " " + e.id;
          }
        }
        throw InputError(ctx + " is not a monoid (fails" + why + ")");
      }
      return fm;
    }

    void validate_structure(Bundle const& b, std::string const& name) {
      auto const type = structure_type(b, name);
      if (type == "monoid") {
        resolve_monoid(b, name);
      } else if (type == "comonoid") {
        resolve_comonoid(b, name);
      } else if (type == "bimonoid") {
        resolve_bimonoid(b, name);
      } else if (type == "wreath") {
        resolve_wreath(b, name);
      } else if (type == "opwreath") {
        auto const& rec = b.structures.at(name);
        std::string ref;
        std::string const ctx = "structure " + quote(name);
        if (rec.contains("heisenberg")) {
          check_keys(rec, {"type", "heisenberg"}, ctx);
          structure_ref(b, rec, "heisenberg", ctx, ref);
          resolve_bimonoid(b, ref);
        } else if (rec.contains("coaction")) {
          check_keys(rec, {"type", "coaction"}, ctx);
          structure_ref(b, rec, "coaction", ctx, ref);
          resolve_coaction(b, ref);
        } else {
          resolve_opwreath(b, name);
        }
      } else if (type == "coaction") {
        resolve_coaction(b, name);
      } else if (type == "monoidal-coaction") {
        resolve_monoidal_coaction(b, name);
      } else if (type == "fibration") {
        resolve_fibration(b, name);
      } else if (type == "extension") {
        resolve_extension(b, name);
      } else {
        throw InputError("structure " + quote(name) + " has unknown type "
                         + quote(type));
      }
    }

    void dump(Json const& j, std::size_t indent, std::ostringstream& os) {
      auto const pad = [&](std::size_t n) { os << std::string(n, ' '); };
      if (j.is_object()) {
        if (j.empty()) {
          os << "{}";
          return;
        }
        os << "{\n";
        std::size_t k = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++k) {
          pad(indent + 2);
          os << Json(it.key()).dump() << ": ";
          dump(it.value(), indent + 2, os);
          os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        pad(indent);
        os << "}";
      } else if (j.is_array()) {
        bool flat = true;
        for (auto const& e : j) {
          flat = flat && !e.is_structured();
        }
        if (flat) {
          os << "[";
          for (std::size_t k = 0; k < j.size(); ++k) {
            os << (k ? ", " : "") << j[k].dump();
          }
          os << "]";
          return;
        }
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
          pad(indent + 2);
          dump(j[k], indent + 2, os);
          os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        pad(indent);
        os << "]";
      } else {
        os << j.dump();
      }
    }
  }  // namespace

  ObjWord Bundle::word(std::vector<std::string> const& names) const {
    std::vector<Generator> gens;
    for (auto const& n : names) {
      auto it = objects.find(n);
      if (it == objects.end()) {
        throw InputError("unknown object " + quote(n));
      }
      gens.push_back(Generator{n, it->second});
    }
    return ObjWord(std::move(gens));
  }

  void Bundle::add_word(ObjWord const& w) {
    for (auto const& g : w.letters()) {
      auto [it, fresh] = objects.emplace(g.name, g.dim);
      if (!fresh && it->second != g.dim) {
        throw InputError("object " + quote(g.name) + " declared with dimension "
                         + std::to_string(it->second) + " and "
                         + std::to_string(g.dim));
      }
    }
  }

  void Bundle::add_morphism(std::string const& name, Mor const& m) {
    if (!(m.field() == field)) {
      throw InputError("morphism " + quote(name) + " lives over "
                       + m.field().to_string() + ", bundle over "
                       + field.to_string());
    }
    add_word(m.dom());
    add_word(m.cod());
    morphisms.insert_or_assign(name, m);
  }

  void Bundle::add_finmonoid(std::string const& name, FinMonoid const& fm) {
    auto copy = fm;
    copy.name = name;
    finmonoids.insert_or_assign(name, std::move(copy));
  }

  Bundle parse_bundle_text(std::string const& text) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (Json::exception const& e) {
      throw InputError(std::string("malformed bundle: ") + e.what());
    }
    if (!doc.is_object()) {
      throw InputError("malformed bundle: top level must be an object");
    }
    check_keys(doc, {"field", "objects", "morphisms", "finmonoids", "structures"},
               "bundle");
    Bundle b;
    if (doc.contains("field")) {
      auto const& f = doc["field"];
      if (f.is_string() && f.get<std::string>() == "rational") {
        b.field = Field::rational();
      } else if (f.is_object() && f.size() == 1 && f.contains("prime")) {
        b.field = Field::prime(get_index(f["prime"], "field prime"));
      } else {
        throw InputError("field must be \"rational\" or {\"prime\": p}, got "
                         + f.dump());
      }
    }
    auto const section = [&](char const* key) -> Json {
      if (!doc.contains(key)) {
        return Json::object();
      }
      auto const& s = doc[key];
      if (s.is_array() && s.empty()) {
        return Json::object();
      }
      if (!s.is_object()) {
        throw InputError(std::string("bundle section '") + key
                         + "' must be an object");
      }
      return s;
    };

    auto const objects_sec = section("objects");
    for (auto const& [name, dim] : objects_sec.items()) {
      auto const d = get_index(dim, "object " + quote(name));
      if (d == 0) {
        throw InputError("object " + quote(name) + " has dimension 0");
      }
      b.objects[name] = d;
    }
    auto const finmonoids_sec = section("finmonoids");
    for (auto const& [name, v] : finmonoids_sec.items()) {
      b.finmonoids.emplace(name, parse_finmonoid(name, v));
    }
    auto const morphisms_sec = section("morphisms");
    for (auto const& [name, v] : morphisms_sec.items()) {
      std::string const ctx = "morphism " + quote(name);
      if (!v.is_object()) {
        throw InputError(ctx + ": expected an object");
      }
      check_keys(v, {"dom", "cod", "entries"}, ctx);
      auto const dom  = b.word(get_names(member(v, "dom", ctx), ctx + " dom"));
      auto const cod  = b.word(get_names(member(v, "cod", ctx), ctx + " cod"));
      auto const& ent = member(v, "entries", ctx);
      std::size_t const rows = cod.dim(), cols = dom.dim();
      std::size_t       got_cols = 0;
      bool              ragged   = !ent.is_array();
      if (!ragged) {
        for (auto const& row : ent) {
          if (!row.is_array()) {
            ragged = true;
            break;
          }
          got_cols = std::max(got_cols, row.size());
          ragged   = ragged || row.size() != cols;
        }
      }
      if (ragged || ent.size() != rows) {
        throw ShapeError(ctx + ": declared " + dom.to_string() + " -> "
                         + cod.to_string() + " needs a " + std::to_string(rows)
                         + "x" + std::to_string(cols) + " matrix, got "
                         + (ent.is_array() ? std::to_string(ent.size()) : "?")
                         + "x" + std::to_string(got_cols));
      }
      std::vector<Scalar> entries;
      entries.reserve(rows * cols);
      for (auto const& row : ent) {
        for (auto const& x : row) {
          entries.push_back(parse_scalar(b.field, x, ctx));
        }
      }
      b.morphisms.emplace(name, Mor(b.field, dom, cod, std::move(entries)));
    }
    auto const structures_sec = section("structures");
    for (auto const& [name, v] : structures_sec.items()) {
      if (!v.is_object()) {
        throw InputError("structure " + quote(name) + ": expected an object");
      }
      b.structures.emplace(name, v);
    }
    for (auto const& [name, v] : b.structures) {
      validate_structure(b, name);
    }
    return b;
  }

  Bundle parse_bundle(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read bundle " + quote(path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bundle_text(ss.str());
  }

  Json to_json(Mor const& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(scalar_json(m.at(r, c)));
      }
      rows.push_back(std::move(row));
    }
    return Json{{"dom", names_json(m.dom())},
                {"cod", names_json(m.cod())},
                {"entries", std::move(rows)}};
  }

  Json to_json(FinMonoid const& fm) {
    return Json{{"elements", fm.labels}, {"table", fm.table}, {"unit", fm.unit}};
  }

  Json to_json(AxiomReport const& r) {
    Json entries = Json::array();
    for (auto const& e : r.entries()) {
      Json j{{"id", e.id}, {"description", e.description}, {"passed", e.passed}};
      if (e.witness) {
        j["witness"] = Json{{"index", e.witness->index},
                            {"left", e.witness->left},
                            {"right", e.witness->right}};
      }
      entries.push_back(std::move(j));
    }
    return Json{{"subject", r.subject()},
                {"passed", r.passed()},
                {"entries", std::move(entries)}};
  }

  std::string canonical_json(Json const& j) {
    std::ostringstream os;
    dump(j, 0, os);
    os << '\n';
    return os.str();
  }

  std::string serialize_bundle(Bundle const& b) {
    Json doc;
    doc["field"] = b.field.is_rational() ? Json("rational")
                                         : Json{{"prime", b.field.modulus()}};
    doc["objects"] = Json::object();
    for (auto const& [n, d] : b.objects) {
      doc["objects"][n] = d;
    }
    doc["morphisms"] = Json::object();
    for (auto const& [n, m] : b.morphisms) {
      doc["morphisms"][n] = to_json(m);
    }
    doc["finmonoids"] = Json::object();
    for (auto const& [n, fm] : b.finmonoids) {
      doc["finmonoids"][n] = to_json(fm);
    }
    doc["structures"] = Json::object();
    for (auto const& [n, s] : b.structures) {
      doc["structures"][n] = s;
    }
    return canonical_json(doc);
  }

  std::string structure_type(Bundle const& b, std::string const& name) {
    auto it = b.structures.find(name);
    if (it == b.structures.end()) {
      throw InputError("unknown structure " + quote(name));
    }
    return get_string(it->second, "type", "structure " + quote(name));
  }

  MonoidObj resolve_monoid(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    if (structure_type(b, name) == "bimonoid") {
      return resolve_bimonoid(b, name).monoid;
    }
    auto const& rec = record(b, name, "monoid");
    if (rec.contains("finmonoid")) {
      check_keys(rec, {"type", "finmonoid", "object"}, ctx);
      return linearized(b, rec, ctx).monoid;
    }
    check_keys(rec, {"type", "carrier", "mul", "unit"}, ctx);
    MonoidObj m{b.word(get_names(member(rec, "carrier", ctx), ctx)),
                morphism(b, rec, "mul", ctx), morphism(b, rec, "unit", ctx)};
    require_shapes(m);
    return m;
  }

  ComonoidObj resolve_comonoid(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    if (structure_type(b, name) == "bimonoid") {
      return resolve_bimonoid(b, name).comonoid;
    }
    auto const& rec = record(b, name, "comonoid");
    if (rec.contains("finmonoid")) {
      check_keys(rec, {"type", "finmonoid", "object"}, ctx);
      return linearized(b, rec, ctx).comonoid;
    }
    check_keys(rec, {"type", "carrier", "comul", "counit"}, ctx);
    ComonoidObj c{b.word(get_names(member(rec, "carrier", ctx), ctx)),
                  morphism(b, rec, "comul", ctx), morphism(b, rec, "counit", ctx)};
    require_shapes(c);
    return c;
  }

  BimonoidObj resolve_bimonoid(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "bimonoid");
    if (rec.contains("finmonoid")) {
      check_keys(rec, {"type", "finmonoid", "object"}, ctx);
      return linearized(b, rec, ctx);
    }
    check_keys(rec, {"type", "monoid", "comonoid"}, ctx);
    std::string mref, cref;
    structure_ref(b, rec, "monoid", ctx, mref);
    structure_ref(b, rec, "comonoid", ctx, cref);
    BimonoidObj out{resolve_monoid(b, mref), resolve_comonoid(b, cref)};
    if (!(out.monoid.carrier == out.comonoid.carrier)) {
      throw ShapeError(ctx + ": monoid and comonoid carriers differ");
    }
    return out;
  }

  WreathData resolve_wreath(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "wreath");
    check_keys(rec, {"type", "monoid", "s", "nu", "sigma0", "lambda"}, ctx);
    std::string mref;
    structure_ref(b, rec, "monoid", ctx, mref);
    WreathData wd{resolve_monoid(b, mref),
                  b.word(get_names(member(rec, "s", ctx), ctx)),
                  morphism(b, rec, "nu", ctx), morphism(b, rec, "sigma0", ctx),
                  morphism(b, rec, "lambda", ctx)};
    require_shapes(wd);
    return wd;
  }

  MixedOpwreathData resolve_opwreath(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "opwreath");
    std::string ref;
    if (rec.contains("heisenberg")) {
      check_keys(rec, {"type", "heisenberg"}, ctx);
      structure_ref(b, rec, "heisenberg", ctx, ref);
      return heisenberg_data(resolve_bimonoid(b, ref));
    }
    if (rec.contains("coaction")) {
      check_keys(rec, {"type", "coaction"}, ctx);
      structure_ref(b, rec, "coaction", ctx, ref);
      return generated_opwreath(resolve_coaction(b, ref));
    }
    if (rec.contains("comonoid")) {
      check_keys(rec, {"type", "monoid", "comonoid"}, ctx);
      std::string cref;
      structure_ref(b, rec, "monoid", ctx, ref);
      structure_ref(b, rec, "comonoid", ctx, cref);
      return classical_opwreath(resolve_monoid(b, ref), resolve_comonoid(b, cref));
    }
    check_keys(rec, {"type", "monoid", "c", "d", "w", "z"}, ctx);
    structure_ref(b, rec, "monoid", ctx, ref);
    MixedOpwreathData mo{resolve_monoid(b, ref),
                         b.word(get_names(member(rec, "c", ctx), ctx)),
                         morphism(b, rec, "d", ctx), morphism(b, rec, "w", ctx),
                         morphism(b, rec, "z", ctx)};
    require_shapes(mo);
    return mo;
  }

  TwistedCoactionData resolve_coaction(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "coaction");
    check_keys(rec, {"type", "monoid", "bimonoid", "gamma", "tau"}, ctx);
    std::string mref, bref;
    structure_ref(b, rec, "monoid", ctx, mref);
    structure_ref(b, rec, "bimonoid", ctx, bref);
    TwistedCoactionData tc{resolve_monoid(b, mref), resolve_bimonoid(b, bref),
                           morphism(b, rec, "gamma", ctx),
                           morphism(b, rec, "tau", ctx)};
    require_shapes(tc);
    return tc;
  }

  MonoidalTwistedCoactionData resolve_monoidal_coaction(Bundle const&      b,
                                                        std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "monoidal-coaction");
    check_keys(rec, {"type", "coaction", "dd", "generators"}, ctx);
    std::string ref;
    structure_ref(b, rec, "coaction", ctx, ref);
    MonoidalTwistedCoactionData mtc{resolve_coaction(b, ref),
                                    morphism(b, rec, "dd", ctx)};
    if (rec.contains("generators")) {
      auto const& g = rec["generators"];
      if (!g.is_array()) {
        throw InputError(ctx + ": generators must be an array of words");
      }
      for (auto const& w : g) {
        b.word(get_names(w, ctx + " generators"));
      }
    }
    require_shapes(mtc);
    return mtc;
  }

  FibrationData resolve_fibration(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "fibration");
    check_keys(rec, {"type", "e", "m", "p", "j"}, ctx);
    FibrationData fd{finmonoid(b, rec, "e", ctx), finmonoid(b, rec, "m", ctx),
                     get_map(member(rec, "p", ctx), ctx + " p"),
                     get_map(member(rec, "j", ctx), ctx + " j")};
    if (fd.p.size() != fd.e.size() || fd.j.size() != fd.m.size()) {
      throw ShapeError(ctx + ": p must have " + std::to_string(fd.e.size())
                       + " entries and j " + std::to_string(fd.m.size()));
    }
    return fd;
  }

  ExtensionData resolve_extension(Bundle const& b, std::string const& name) {
    std::string const ctx = "structure " + quote(name);
    auto const& rec = record(b, name, "extension");
    check_keys(rec, {"type", "m", "a", "alpha", "rho"}, ctx);
    ExtensionData ed{finmonoid(b, rec, "m", ctx), finmonoid(b, rec, "a", ctx),
                     get_table(member(rec, "alpha", ctx), ctx + " alpha"), {}};
    if (rec.contains("rho")) {
      ed.rho = get_table(rec["rho"], ctx + " rho");
    } else {
      ed.rho.assign(ed.m.size(), ElementMap(ed.m.size(), ed.a.unit));
    }
    auto const fits = [](Table const& t, std::size_t r, std::size_t c,
                         std::size_t bound) {
      if (t.size() != r) {
        return false;
      }
      for (auto const& row : t) {
        if (row.size() != c) {
          return false;
        }
        for (auto v : row) {
          if (v >= bound) {
            return false;
          }
        }
      }
      return true;
    };
    if (!fits(ed.alpha, ed.a.size(), ed.m.size(), ed.a.size())) {
      throw ShapeError(ctx + ": alpha must be a " + std::to_string(ed.a.size())
                       + "x" + std::to_string(ed.m.size())
                       + " table of elements of " + quote(ed.a.name));
    }
    if (!fits(ed.rho, ed.m.size(), ed.m.size(), ed.a.size())) {
      throw ShapeError(ctx + ": rho must be a " + std::to_string(ed.m.size())
                       + "x" + std::to_string(ed.m.size())
                       + " table of elements of " + quote(ed.a.name));
    }
    return ed;
  }

  void store_monoid(Bundle& b, std::string const& name, MonoidObj const& m) {
    b.add_morphism(name + ".mul", m.mul);
    b.add_morphism(name + ".unit", m.unit);
    b.structures[name] = Json{{"type", "monoid"},
                              {"carrier", names_json(m.carrier)},
                              {"mul", name + ".mul"},
                              {"unit", name + ".unit"}};
  }

  void store_wreath(Bundle& b, std::string const& name, WreathData const& wd) {
    store_monoid(b, name + ".monoid", wd.monoid);
    b.add_word(wd.s);
    b.add_morphism(name + ".nu", wd.nu);
    b.add_morphism(name + ".sigma0", wd.sigma0);
    b.add_morphism(name + ".lambda", wd.lambda);
    b.structures[name] = Json{{"type", "wreath"},
                              {"monoid", name + ".monoid"},
                              {"s", names_json(wd.s)},
                              {"nu", name + ".nu"},
                              {"sigma0", name + ".sigma0"},
                              {"lambda", name + ".lambda"}};
  }

  void store_opwreath(Bundle& b, std::string const& name,
                      MixedOpwreathData const& mo) {
    store_monoid(b, name + ".monoid", mo.monoid);
    b.add_word(mo.c);
    b.add_morphism(name + ".d", mo.d);
    b.add_morphism(name + ".w", mo.w);
    b.add_morphism(name + ".z", mo.z);
    b.structures[name] = Json{{"type", "opwreath"},
                              {"monoid", name + ".monoid"},
                              {"c", names_json(mo.c)},
                              {"d", name + ".d"},
                              {"w", name + ".w"},
                              {"z", name + ".z"}};
  }

  void store_extension(Bundle& b, std::string const& name,
                       ExtensionData const& ed) {
    auto const place = [&](FinMonoid const& fm, std::string const& fallback) {
      auto it = b.finmonoids.find(fm.name);
      if (it == b.finmonoids.end() || it->second == fm) {
        b.add_finmonoid(fm.name, fm);
        return fm.name;
      }
      b.add_finmonoid(fallback, fm);
      return fallback;
    };
    auto const m = place(ed.m, name + ".m");
    auto const a = place(ed.a, name + ".a");
    b.structures[name] = Json{{"type", "extension"},
                              {"m", m},
                              {"a", a},
                              {"alpha", ed.alpha},
                              {"rho", ed.rho}};
  }

}  // namespace wreathkit
