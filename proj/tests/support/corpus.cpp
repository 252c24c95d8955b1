#include "support/corpus.hpp"

#include <map>

#include "gira/enumerate.hpp"

namespace gira::testing {

const std::vector<FiniteAlgebra>& corpus(Profile p, int max_size) {
  static std::map<std::pair<int, int>, std::vector<FiniteAlgebra>> cache;
  auto key = std::make_pair((int)p, max_size);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SearchSpec spec;
  spec.profile = p;
  spec.max_size = max_size;
  return cache.emplace(key, enumerate_models(spec).models).first->second;
}

}  // namespace gira::testing
