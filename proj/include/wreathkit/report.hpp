#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wreathkit/error.hpp"

namespace wreathkit {

  class Mor;

  //! Where an equation fails: an index tuple plus both sides' values.
  struct Witness {
    std::vector<std::size_t> index;
    std::string              left;
    std::string              right;
  };

  struct AxiomEntry {
    std::string            id;
    std::string            description;
    bool                   passed = true;
    std::optional<Witness> witness;
  };

  //! The outcome of a law checker.  Every axiom is reported, not just the
  //! first failure; a failing entry always carries a witness.
  class AxiomReport {
   public:
    AxiomReport() = default;
    explicit AxiomReport(std::string subject) : _subject(std::move(subject)) {}

    void add(AxiomEntry e) { _entries.push_back(std::move(e)); }
    //! Appends all entries of \p other, prefixing their ids.
    void append(AxiomReport const& other, std::string const& prefix = "");

    bool passed() const noexcept;
    std::vector<AxiomEntry> const& entries() const noexcept { return _entries; }
    AxiomEntry const* find(std::string const& id) const;
    std::string const& subject() const noexcept { return _subject; }

    std::string to_text() const;

   private:
    std::string             _subject;
    std::vector<AxiomEntry> _entries;
  };

  //! Exact equality of two morphisms as a report entry.  The witness is the
  //! lexicographically first differing (row, column) entry.  Differing
  //! dom/cod words produce a ShapeError.
  AxiomEntry equation(std::string id,
                      std::string description,
                      Mor const&  lhs,
                      Mor const&  rhs);

  //! Thrown by operations whose precondition is a passing checker.
  class ValidationError : public Error {
   public:
    ValidationError(std::string const& what, AxiomReport report)
        : Error(what), _report(std::move(report)) {}
    AxiomReport const& report() const noexcept { return _report; }

   private:
    AxiomReport _report;
  };

}  // namespace wreathkit
