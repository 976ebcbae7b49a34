#pragma once

// Integer Smith normal form for the packet-size invariant: the cokernel of
// (1 - w) on the cocharacter lattice Z^ell must be torsion free.

#include <cstdint>
#include <vector>

namespace langlands {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// invariant factors d_1 | d_2 | ... (nonnegative, zeros last)
std::vector<std::int64_t> smith_invariant_factors(IntMatrix m);

// Z^n / im(m) has no torsion iff every nonzero invariant factor is 1
bool cokernel_torsion_free(const IntMatrix& m);

// 1 - P_w for the standard n-cycle w acting on Z^n
IntMatrix one_minus_cycle(int n);

// packet size for GL(ell): asserts the torsion-free cokernel and returns 1
int packet_size(int ell);

}  // namespace langlands
