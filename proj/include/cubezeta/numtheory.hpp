#pragma once

#include <cstdint>
#include <vector>

// Elementary number-theoretic primitives: totients, Moebius function,
// the index sets J_d and unit groups of Z/NZ.

namespace cubezeta {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Representatives of (Z/dZ)^x modulo negation:
// {j < d/2 : gcd(j,d)=1} for d >= 3, and {1} for d in {1,2}.
struct JSet {
    u64 d = 1;
    std::vector<u64> members;  // strictly increasing
};

struct UnitGroup {
    u64 modulus = 1;
    std::vector<u64> elements;  // residues in [1,N] coprime to N, increasing
};

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

// prime factorization by trial division, (prime, exponent) pairs
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 n);
u64 phi_tilde(u64 d);  // phi(d)/2 for d >= 3, 1 for d in {1,2}
JSet j_set(u64 d);
int mobius(u64 d);
UnitGroup unit_group(u64 n);

// fold residue k mod d into J_d: min(k mod d, d - k mod d); 1 for d <= 2
u64 fold_into_j(u64 k, u64 d);

}  // namespace cubezeta
