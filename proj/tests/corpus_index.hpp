#pragma once

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace oracle {

  //! Every well-formed bundle in the corpus, by path, sorted.
  inline std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (auto const& e : std::filesystem::directory_iterator(WREATHKIT_CORPUS_DIR)) {
      if (e.path().extension() == ".json" && e.path().filename() != "bad_shape.json") {
        out.push_back(e.path().string());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<std::string> names_of_type(Bundle const&                b,
                                                std::set<std::string> const& types) {
    std::vector<std::string> out;
    for (auto const& [name, rec] : b.structures) {
      if (types.count(rec.at("type").get<std::string>())) {
        out.push_back(name);
      }
    }
    return out;
  }

}  // namespace oracle
