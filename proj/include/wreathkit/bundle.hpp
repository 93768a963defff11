#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreathkit/coaction.hpp"
#include "wreathkit/extension.hpp"

namespace wreathkit {

  using Json = nlohmann::json;

  //! A named collection of generator objects, morphisms, finite monoids and
  //! typed structure records over one field.
  //!
  //! The on-disk form is JSON.  Structure records reference morphisms,
  //! finite monoids and other structures by name; every reference is
  //! resolved when the bundle is parsed.
  struct Bundle {
    Field                              field = Field::rational();
    std::map<std::string, std::size_t> objects;
    std::map<std::string, Mor>         morphisms;
    std::map<std::string, FinMonoid>   finmonoids;
    std::map<std::string, Json>        structures;

    //! The word spelled by object names; InputError on unknown names.
    ObjWord word(std::vector<std::string> const& names) const;

    //! Declares the generators of \p w; InputError on a dimension clash.
    void add_word(ObjWord const& w);
    void add_morphism(std::string const& name, Mor const& m);
    void add_finmonoid(std::string const& name, FinMonoid const& fm);
  };

  //! Throws InputError on malformed documents and dangling references and
  //! ShapeError when a matrix does not fit its declared type.
  Bundle parse_bundle_text(std::string const& text);
  Bundle parse_bundle(std::string const& path);

  //! Canonical text: sorted keys, two-space indent, arrays of scalars on one
  //! line, trailing newline.  Rationals are strings, residues integers.
  std::string serialize_bundle(Bundle const& b);

  //! The canonical pretty-printer used by serialize_bundle.
  std::string canonical_json(Json const& j);

  Json to_json(AxiomReport const& r);
  Json to_json(Mor const& m);
  Json to_json(FinMonoid const& fm);

  //! The "type" field of a structure record; InputError when absent.
  std::string structure_type(Bundle const& b, std::string const& name);

  // Resolvers.  Each throws InputError for an unknown name or a record of
  // the wrong type, and ShapeError for ill-typed morphisms.  No axioms are
  // checked here.
  MonoidObj                   resolve_monoid(Bundle const& b, std::string const& name);
  ComonoidObj                 resolve_comonoid(Bundle const& b, std::string const& name);
  BimonoidObj                 resolve_bimonoid(Bundle const& b, std::string const& name);
  WreathData                  resolve_wreath(Bundle const& b, std::string const& name);
  //! Builds derived opwreaths (Heisenberg, generated) with validation.
  MixedOpwreathData           resolve_opwreath(Bundle const& b, std::string const& name);
  TwistedCoactionData         resolve_coaction(Bundle const& b, std::string const& name);
  MonoidalTwistedCoactionData resolve_monoidal_coaction(Bundle const&      b,
                                                        std::string const& name);
  FibrationData               resolve_fibration(Bundle const& b, std::string const& name);
  //! A missing rho defaults to the trivial factor set.
  ExtensionData               resolve_extension(Bundle const& b, std::string const& name);

  //! Records that reproduce the given data inside \p b under \p name,
  //! adding morphisms named "<name>.<field>".
  void store_monoid(Bundle& b, std::string const& name, MonoidObj const& m);
  void store_wreath(Bundle& b, std::string const& name, WreathData const& wd);
  void store_opwreath(Bundle& b, std::string const& name, MixedOpwreathData const& mo);
  void store_extension(Bundle& b, std::string const& name, ExtensionData const& ed);

}  // namespace wreathkit
