#pragma once

#include <vector>

#include "contactred/point.hpp"

namespace contactred {

// ---------------------------------------------------------------------------
// Structural tensors in Darboux coordinates.
//
// Symplectic charts carry omega = dq^i ^ dp_i. Contact charts carry the
// contact form eta = dz - p_i dq^i with d(eta) = dq^i ^ dp_i and Reeb field
// d/dz. All evaluations below are pointwise and pure.
// ---------------------------------------------------------------------------

/// eta(v) = v_z - sum_i p_i v_{q_i} on a contact chart.
double eta(const Point& pt, const TangentVector& v);

/// d(eta)(u, v) = sum_i (u_{q_i} v_{p_i} - u_{p_i} v_{q_i}) on a contact chart.
double d_eta(const Point& pt, const TangentVector& u, const TangentVector& v);

/// omega(u, v): the same q-p pairing on a symplectic chart.
double omega_symplectic(const Point& pt, const TangentVector& u, const TangentVector& v);

/// Reeb vector field, d/dz in Darboux coordinates.
TangentVector reeb(const Point& pt);

/// eta at pt as a covector: components (-p, 0, 1).
Covector eta_covector(const Point& pt);

/// Liouville form p_i dq^i as a covector (symplectic charts, modeled as T*R^n).
Covector liouville_covector(const Point& pt);

// Musical maps. flat_contact(v) = i_v d(eta) + eta(v) eta; its inverse
// sharp_contact solves the (2n+1)x(2n+1) system and reports failure when the
// solve residual exceeds 1e-8. The symplectic pair uses the closed Darboux
// table sharp(dq^i) = -d/dp_i, sharp(dp_i) = d/dq^i.
Covector flat_contact(const Point& pt, const TangentVector& v);
TangentVector sharp_contact(const Point& pt, const Covector& a);
Covector flat_symplectic(const Point& pt, const TangentVector& v);
TangentVector sharp_symplectic(const Point& pt, const Covector& a);

/// The matrix of flat_contact at pt (columns are flat of coordinate basis vectors).
Eigen::MatrixXd flat_contact_matrix(const Point& pt);

/// Jacobi morphism: sharp_lambda(a) = sharp(a) - a(Reeb) Reeb. Kernel <eta>,
/// image the horizontal distribution ker eta.
TangentVector sharp_lambda(const Point& pt, const Covector& a);

/// Orthonormal covectors spanning the annihilator of span(B), via SVD.
std::vector<Covector> annihilator(const SubspaceBasis& B);

/// omega-orthocomplement sharp(annihilator(B)) on symplectic charts.
SubspaceBasis complement_omega(const SubspaceBasis& B);

/// Contact complement sharp_lambda(annihilator(B)); sharp_lambda has kernel
/// <eta>, so an independent spanning set is re-extracted by SVD (singular
/// values below 1e-10 dropped).
SubspaceBasis complement_lambda(const SubspaceBasis& B);

/// d(eta)-complement {v | d(eta)(v, B) = 0}, the null space of the pairing
/// matrix against B.
SubspaceBasis complement_deta(const SubspaceBasis& B);

/// Complement {v | Omega(v, B) = 0} with respect to the lifted symplectic
/// form on a symplectified chart, via the Omega Gram pairing.
SubspaceBasis complement_lifted_omega(const SubspaceBasis& B);

/// Subspace position relative to the horizontal distribution ker eta and the
/// Reeb direction. Tolerance for the projection residuals is 1e-9; the
/// source theory works with exact linear algebra, so the cutoff is a choice.
enum class PointPosition { Horizontal, Vertical, Oblique };
PointPosition classify_point(const SubspaceBasis& B);

enum class SubmanifoldClass {
    Isotropic,
    Coisotropic,
    Legendrian,
    Lagrangian,
    SymplecticSub,
    None,
};
std::string to_string(SubmanifoldClass c);
std::string to_string(PointPosition p);

/// Classify one tangent-space sample by containment (projection residual
/// < 1e-8) between span(B) and its complement: omega-complement on
/// symplectic charts, Lambda-complement on contact charts, and the lifted
/// symplectic form on symplectified charts.
SubmanifoldClass classify_subspace(const SubspaceBasis& B);

struct ClassificationReport {
    std::vector<SubmanifoldClass> per_sample;
    SubmanifoldClass verdict;   // common class, or None if samples disagree
};
ClassificationReport classify_submanifold(const std::vector<SubspaceBasis>& samples);

} // namespace contactred
