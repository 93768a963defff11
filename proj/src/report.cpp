#include "wreathkit/report.hpp"

#include <sstream>

#include "wreathkit/mor.hpp"

namespace wreathkit {

  void AxiomReport::append(AxiomReport const& other, std::string const& prefix) {
    for (auto e : other._entries) {
      e.id = prefix + e.id;
      _entries.push_back(std::move(e));
    }
  }

  bool AxiomReport::passed() const noexcept {
    for (auto const& e : _entries) {
      if (!e.passed) {
        return false;
      }
    }
    return true;
  }

  AxiomEntry const* AxiomReport::find(std::string const& id) const {
    for (auto const& e : _entries) {
      if (e.id == id) {
        return &e;
      }
    }
    return nullptr;
  }

  std::string AxiomReport::to_text() const {
    std::ostringstream os;
    if (!_subject.empty()) {
      os << _subject << '\n';
    }
    for (auto const& e : _entries) {
      os << "  [" << (e.passed ? "pass" : "FAIL") << "] " << e.id;
      if (!e.description.empty()) {
        os << " (" << e.description << ")";
      }
      if (e.witness) {
        os << "  witness (";
        for (std::size_t i = 0; i < e.witness->index.size(); ++i) {
          os << (i ? "," : "") << e.witness->index[i];
        }
        os << "): left " << e.witness->left << " != right "
           << e.witness->right;
      }
      os << '\n';
    }
    os << (passed() ? "all axioms hold" : "some axioms FAIL") << '\n';
    return os.str();
  }

  AxiomEntry equation(std::string id,
                      std::string description,
                      Mor const&  lhs,
                      Mor const&  rhs) {
    if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod())) {
      throw ShapeError("equation '" + id + "' compares " + lhs.dom().to_string()
                       + " -> " + lhs.cod().to_string() + " with "
                       + rhs.dom().to_string() + " -> "
                       + rhs.cod().to_string());
    }
    AxiomEntry e{std::move(id), std::move(description), true, std::nullopt};
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      for (std::size_t c = 0; c < lhs.cols(); ++c) {
        if (!(lhs.at(r, c) == rhs.at(r, c))) {
          e.passed  = false;
          e.witness = Witness{{r, c},
                              lhs.at(r, c).to_string(),
                              rhs.at(r, c).to_string()};
          return e;
        }
      }
    }
    return e;
  }

}  // namespace wreathkit
