#include "doctest.h"
#include "langlands/smith.hpp"

using namespace langlands;

TEST_CASE("known smith forms") {
  CHECK(smith_invariant_factors({{2, 4}, {4, 8}}) == std::vector<std::int64_t>{2, 0});
  CHECK(smith_invariant_factors({{1, 0}, {0, 1}}) == std::vector<std::int64_t>{1, 1});
  CHECK(smith_invariant_factors({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
  CHECK(smith_invariant_factors({{0, 0}, {0, 0}}) == std::vector<std::int64_t>{0, 0});
  // divisibility chain on a dense example
  CHECK(smith_invariant_factors({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) ==
        std::vector<std::int64_t>{2, 2, 156});
}

TEST_CASE("cokernel torsion detection") {
  CHECK(cokernel_torsion_free({{1, 0}, {0, 1}}));
  CHECK_FALSE(cokernel_torsion_free({{2, 0}, {0, 1}}));
  CHECK(cokernel_torsion_free({{1, 0}, {0, 0}}));
}

TEST_CASE("packet size is 1 for every prime ell up to 7") {
  for (int ell : {2, 3, 5, 7}) {
    const auto factors = smith_invariant_factors(one_minus_cycle(ell));
    // cokernel is Z: ell-1 units and a single zero
    int ones = 0, zeros = 0;
    for (auto d : factors) {
      if (d == 1) ++ones;
      if (d == 0) ++zeros;
    }
    CHECK(ones == ell - 1);
    CHECK(zeros == 1);
    CHECK(packet_size(ell) == 1);
  }
}
