// SPDX-License-Identifier: Apache-2.0
//
// Simply-laced Cartan data: Cartan matrices of types A/D/E, the root system
// spanned by the simple roots, and the Weyl dimension formula.
//
// Conventions: nodes are numbered 1..n. Type A is the chain 1-2-...-n.
// Type D forks at node 2 (node 2 is adjacent to 1, 3 and 4; nodes 4-5-...-n
// continue as a chain), so D4 has node 2 adjacent to all others. Type E uses
// the standard numbering: chain 1-3-4-5-6(-7-8) with node 2 attached to 4.

#ifndef STRINGCONE_CARTAN_HPP
#define STRINGCONE_CARTAN_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stringcone/errors.hpp"

namespace stringcone {

using BigInt = boost::multiprecision::cpp_int;

// A root (or any root-lattice vector) in simple-root coordinates.
using RootVec = std::vector<int>;

// A dominant-weight coordinate vector (fundamental-weight coefficients).
using WeightVec = std::vector<long long>;

struct CartanMatrix {
    std::string label;                 // e.g. "A3", "D4"
    int n = 0;                         // rank
    std::vector<std::vector<int>> c;   // n x n, c[a][b] = c_{a+1,b+1}

    int at(int a, int b) const { return c[a - 1][b - 1]; }
    bool adjacent(int a, int b) const { return a != b && at(a, b) < 0; }
};

// Parses labels like "A2", "D4", "E6" (simply laced only) and builds the
// Cartan matrix. Throws DomainError for anything else.
CartanMatrix build_cartan(const std::string& label);

// All positive roots, in a deterministic order (closure of the simple roots
// under simple reflections, sorted by height then lexicographically).
std::vector<RootVec> positive_roots(const CartanMatrix& cartan);

// Number of positive roots == length of the longest Weyl element.
int longest_length(const CartanMatrix& cartan);

// s_a(beta) for a root-lattice vector beta.
RootVec simple_reflection(const CartanMatrix& cartan, int a, const RootVec& beta);

// dim V(lambda) by the Weyl dimension formula,
//   prod_{beta>0} <lambda+rho, beta^vee> / <rho, beta^vee>,
// exact over the integers. lambda is given in fundamental-weight coordinates
// and must be dominant (all entries >= 0).
BigInt weyl_dim(const CartanMatrix& cartan, const WeightVec& lambda);

} // namespace stringcone

#endif
