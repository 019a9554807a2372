#pragma once

#include <vector>

#include "examhh/instance.hpp"

namespace examhh::fixtures {

// Seven exams whose conflict matrix is
//   3 1 2 1 2 1 1
//   1 3 0 1 2 2 1
//   2 0 2 1 1 0 1
//   1 1 1 2 1 0 1
//   2 2 1 1 3 1 0
//   1 2 0 0 1 2 1
//   1 1 1 1 0 1 2
// Five students is the smallest population that realises it (a search over
// all populations of six finds none).
inline std::vector<std::vector<int>> figure1_students() {
  return {{0, 2, 4}, {1, 3, 4}, {1, 5, 6}, {0, 1, 4, 5}, {0, 2, 3, 6}};
}

inline std::vector<std::vector<int>> figure1_matrix() {
  return {{3, 1, 2, 1, 2, 1, 1}, {1, 3, 0, 1, 2, 2, 1}, {2, 0, 2, 1, 1, 0, 1}, {1, 1, 1, 2, 1, 0, 1},
          {2, 2, 1, 1, 3, 1, 0}, {1, 2, 0, 0, 1, 2, 1}, {1, 1, 1, 1, 0, 1, 2}};
}

inline ProblemInstance figure1_instance(std::size_t k = 7) {
  return make_instance("figure1", 7, figure1_students(), k);
}

// Six exams, three slots, nine of the fifteen pairs in conflict. Twelve
// conflict-free assignments exist, spread over five cost levels; the best
// weighted sum is 200.
inline ProblemInstance small_dense_instance() {
  return make_instance("dense6", 6,
                       {{2, 5}, {1, 4}, {4, 5}, {3, 5}, {2, 3}, {0, 5}, {2, 5}, {0, 5}, {1, 3}, {3, 5}, {1, 3},
                        {2, 3}, {0, 5}, {1, 3}, {1, 2, 4}, {1, 2}},
                       3);
}

inline ProblemInstance random_instance(std::size_t n, std::size_t m, std::size_t lo, std::size_t hi, std::size_t k,
                                       std::uint64_t seed) {
  GeneratorParams p;
  p.num_exams = n;
  p.num_students = m;
  p.min_exams_per_student = lo;
  p.max_exams_per_student = hi;
  p.num_timeslots = k;
  p.seed = seed;
  return generate_instance(p);
}

}  // namespace examhh::fixtures
