// SPDX-License-Identifier: Apache-2.0
//
// The four monomial chart maps tying the graded Lusztig / graded string
// charts to the two cluster tori of a word, the weight rescaling D, and
// the glueing map phi between the cluster tori:
//
//   gr_iota_star : graded Lusztig chart -> X-torus,
//     coordinate k in M:  1/x_{k+}          if k < 0,
//                         x_k / x_{k+}      if k+ <= N,
//                         x_k / l_{i_k*}    if k+ = N+1;
//   gr_CA        : A-torus -> graded Lusztig chart,
//     weight a: 1/x_{a*, m_{a*}};  position k: prod_{l in M} x_l^{{l,k}};
//   gr_CA_star   : graded string chart -> X-torus,
//     k < 0:  (1/l_{-k}) prod_{l in [N]} x_l^{c_{i_l, i_k} + {k,l}},
//     k > 0:  prod_{l in [N]} x_l^{{k,l}};
//   gr_iota      : A-torus -> graded string chart,
//     weight a: 1/x_{a, m_a};  position k: x_{k-} / x_k.
//
// D rescales the weight block by the Cartan matrix (l_a -> prod_b
// l_b^{c_{a,b}}) and fixes the x-block. phi := gr_iota_star o D o gr_CA
// and phi_alt := gr_CA_star o D o gr_iota are maps from the A-torus to
// the X-torus; they agree, and W o phi = f^B.

#ifndef STRINGCONE_CHARTMAPS_HPP
#define STRINGCONE_CHARTMAPS_HPP

#include "stringcone/transitions.hpp"

namespace stringcone {

enum class ChartMapKind { GrIotaStar, GrCA, GrCAStar, GrIota };

// All four maps are monomial with unit coefficients; linear_matrix applies.
RationalMap chart_map(const CartanMatrix& cartan, const Word& i, ChartMapKind kind);

// On graded_space(n, N): l_a -> prod_b l_b^{c_{a,b}}, x fixed.
RationalMap d_map(const CartanMatrix& cartan, int N);

// phi via the graded Lusztig chart (gr_iota_star o D o gr_CA) and via the
// graded string chart (gr_CA_star o D o gr_iota); both A-torus -> X-torus.
RationalMap phi_chart(const CartanMatrix& cartan, const Word& i);
RationalMap phi_chart_alt(const CartanMatrix& cartan, const Word& i);

} // namespace stringcone

#endif
