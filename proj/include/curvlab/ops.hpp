#pragma once

#include "curvlab/tensor.hpp"

namespace curvlab {

// Kulkarni-Nomizu product of two symmetric (0,2)-tensors:
//   (E ^ F)_{hijk} = E_{hk}F_{ij} + E_{ij}F_{hk} - E_{hj}F_{ik} - E_{ik}F_{hj}
CurvTensor4 kn_product(const SymTensor2& e, const SymTensor2& f);

// Kulkarni-Nomizu product of a symmetric (0,2)-tensor with a generalized
// curvature (0,4)-tensor:
//   (E ^ T)_{abcdef} = E_{ad}T_{bcef} + E_{bc}T_{adef} - E_{ac}T_{bdef} - E_{bd}T_{acef}
Tensor6 kn_wedge4(const SymTensor2& e, const CurvTensor4& t);

// Tachibana operators Q(A, T) = A-excitation of T:
//   Q(A,T)_{ij;xy}   = A_{xi}T_{yj} - A_{yi}T_{xj} + A_{xj}T_{iy} - A_{yj}T_{ix}
//   Q(A,T)_{abcd;xy} = A_{xa}T_{ybcd} - A_{ya}T_{xbcd} + A_{xb}T_{aycd} - A_{yb}T_{axcd}
//                    + A_{xc}T_{abyd} - A_{yc}T_{abxd} + A_{xd}T_{abcy} - A_{yd}T_{abcx}
CurvTensor4 tachibana2(const SymTensor2& a, const SymTensor2& t);
Tensor6 tachibana4(const SymTensor2& a, const CurvTensor4& t);

// Derivation action B . T of a generalized curvature tensor B on T.
// With B^r_{xyz} = g^{rs} B_{xyzs}:
//   (B.T)_{ij;xy}   = -sum_r (B^r_{xyi} T_{rj} + B^r_{xyj} T_{ir})
//   (B.T)_{abcd;xy} = -sum_r (B^r_{xya} T_{rbcd} + B^r_{xyb} T_{arcd}
//                             + B^r_{xyc} T_{abrd} + B^r_{xyd} T_{abcr})
CurvTensor4 derivation_action(const CurvTensor4& b, const SymTensor2& t, const Frame& f);
Tensor6 derivation_action(const CurvTensor4& b, const CurvTensor4& t, const Frame& f);

// Ricci contraction of a generalized curvature tensor on slots 1 and 4:
//   ric(B)_{jk} = g^{ih} B_{ijkh}
SymTensor2 ricci(const CurvTensor4& b, const Frame& f);

// Metric trace of a symmetric tensor: g^{ij} T_{ij}.
double trace_g(const SymTensor2& t, const Frame& f);

// Matrix power through the metric: (T^2)_{ij} = g^{rs} T_{ir} T_{sj},
// iterated p times from T^1 = T. p >= 1.
SymTensor2 mat_power(const SymTensor2& t, int p, const Frame& f);

// Weyl conformal curvature tensor of a generalized curvature tensor B with
// Ricci tensor S = ric(B) and scalar kappa = tr_g S (n >= 4):
//   C = B - 1/(n-2) g ^ (S - kappa/(2(n-1)) g)  written with G = (1/2) g^g as
//   C = B - 1/(n-2) (g ^ S) + kappa/((n-2)(n-1)) G
CurvTensor4 weyl(const CurvTensor4& b, const Frame& f);

// Scaled metric square G = (1/2) g ^ g, the curvature tensor of the unit
// constant-curvature model.
CurvTensor4 metric_square(const Frame& f);

// Max deviation from the generalized-curvature symmetries of B:
// antisymmetry in (1,2) and (3,4), pair symmetry, first Bianchi sum.
double curvature_symmetry_residual(const CurvTensor4& b);

} // namespace curvlab
