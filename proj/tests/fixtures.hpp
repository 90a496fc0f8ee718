#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "noble/filters.hpp"
#include "noble/semigroup.hpp"

namespace fixtures {

// element ids: 0 = empty map, 1 = partial identity on point 0,
// 2 = partial identity on point 1, 3 = [0 -> 1], 4 = [1 -> 0],
// 5 = identity, 6 = swap
inline noble::SemigroupTable i2() {
  return noble::validate_inverse_semigroup({{0, 0, 0, 0, 0, 0, 0},
                                            {0, 1, 0, 3, 0, 1, 3},
                                            {0, 0, 2, 0, 4, 2, 4},
                                            {0, 0, 3, 0, 1, 3, 1},
                                            {0, 4, 0, 2, 0, 4, 2},
                                            {0, 1, 2, 3, 4, 5, 6},
                                            {0, 4, 3, 2, 1, 6, 5}});
}

// the five matrix units with zero, ids as the first five of i2()
inline noble::SemigroupTable b2() {
  return noble::validate_inverse_semigroup({{0, 0, 0, 0, 0},
                                            {0, 1, 0, 3, 0},
                                            {0, 0, 2, 0, 4},
                                            {0, 0, 3, 0, 1},
                                            {0, 4, 0, 2, 0}});
}

inline noble::SemigroupTable e3() {
  return noble::validate_inverse_semigroup({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
}

inline noble::SemigroupTable c2() {
  return noble::validate_inverse_semigroup({{0, 1}, {1, 0}});
}

inline noble::ElementSet set_of(int n, std::initializer_list<int> ids) {
  noble::ElementSet s(n);
  for (int i : ids) s.insert(i);
  return s;
}

inline noble::Filter filter_of(int n, std::initializer_list<int> ids) {
  return noble::Filter{set_of(n, ids), std::nullopt};
}

inline std::vector<std::vector<int>> carriers(const std::vector<noble::Filter>& fs) {
  std::vector<std::vector<int>> out;
  for (const auto& f : fs) out.push_back(f.carrier.to_vector());
  return out;
}

}  // namespace fixtures

#endif
