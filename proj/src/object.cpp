#include "wreathkit/object.hpp"

#include <ostream>

#include "wreathkit/error.hpp"

namespace wreathkit {

  ObjWord ObjWord::generator(std::string name, std::size_t dim) {
    if (dim == 0) {
      throw InputError("generator '" + name + "' has dimension 0");
    }
    return ObjWord({Generator{std::move(name), dim}});
  }

  std::size_t ObjWord::dim() const noexcept {
    std::size_t d = 1;
    for (auto const& g : _gens) {
      d *= g.dim;
    }
    return d;
  }

  bool ObjWord::starts_with(ObjWord const& prefix) const {
    if (prefix._gens.size() > _gens.size()) {
      return false;
    }
    for (std::size_t i = 0; i < prefix._gens.size(); ++i) {
      if (!(prefix._gens[i] == _gens[i])) {
        return false;
      }
    }
    return true;
  }

  ObjWord ObjWord::drop_front(std::size_t n) const {
    if (n > _gens.size()) {
      n = _gens.size();
    }
    return ObjWord(std::vector<Generator>(_gens.begin() + n, _gens.end()));
  }

  std::string ObjWord::to_string() const {
    if (_gens.empty()) {
      return "I";
    }
    std::string out;
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      if (i > 0) {
        out += "⊗";
      }
      out += _gens[i].name;
    }
    return out;
  }

  ObjWord operator*(ObjWord const& a, ObjWord const& b) {
    std::vector<Generator> gens = a.letters();
    gens.insert(gens.end(), b.letters().begin(), b.letters().end());
    return ObjWord(std::move(gens));
  }

  std::ostream& operator<<(std::ostream& os, ObjWord const& w) {
    return os << w.to_string();
  }

}  // namespace wreathkit
