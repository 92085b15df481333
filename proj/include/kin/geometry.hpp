#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kin/algebra.hpp"
#include "kin/tensor.hpp"

namespace kin {

// Polynomial/rational inequality carving the chart region: sign = +1 means
// fn > 0, sign = -1 means fn < 0.
struct DomainIneq {
    RationalFn fn;
    int sign = 1;
};

struct SignatureDescriptor {
    int g_plus = 0, g_minus = 0, h_plus = 0, h_minus = 0;
    std::string str() const;
    friend bool operator==(const SignatureDescriptor& a, const SignatureDescriptor& b) {
        return a.g_plus == b.g_plus && a.g_minus == b.g_minus && a.h_plus == b.h_plus &&
               a.h_minus == b.h_minus;
    }
    friend bool operator!=(const SignatureDescriptor& a, const SignatureDescriptor& b) {
        return !(a == b);
    }
};

// Time/space split of a degenerate geometry into a Beltrami block and a
// conformally flat block.
enum class ContrastClass { None, TimeBeltrami, SpaceBeltrami, FlatTime, FlatSpace };

enum class KinematicsClass { None, Relativistic, AbsoluteTime, AbsoluteSpace };

struct Geometry {
    std::string name;
    TensorField g = TensorField::metric();
    TensorField h = TensorField::inverse_metric();
    Connection conn;
    std::vector<DomainIneq> domain;
    std::string algebra;

    bool degenerate = false;  // rank < 4: (g, h, conn) are independent inputs
    int rank_g = 4, rank_h = 4;
    SignatureDescriptor sig;
    RationalFn curvature_k;  // R^s_{mrn} = k (d^s_n g_mr - d^s_r g_mn)

    // Squared free parameters (the printed ones involve square roots; their
    // squares are rational and have the same level sets).
    std::vector<RationalFn> free_parameters_sq;
    std::vector<std::string> free_parameter_display;
    std::vector<VectorField> g_kernel;

    Point witness{};  // a rational point inside the domain

    ContrastClass contrast = ContrastClass::None;
    RationalFn contrast_factor;

    KinematicsClass genuine = KinematicsClass::None;
    int genuine_curvature_sign = 0;  // curvature column of the genuine-kinematics grid
};

// Levi-Civita connection of a nondegenerate metric; DegenerateMetric when
// det g = 0 identically.
Connection christoffel_from_metric(const TensorField& g);
TensorField invert_metric(const TensorField& g);

TensorField riemann(const Connection& conn);             // (1,3): R^s_{m r n}
TensorField ricci(const TensorField& riem);              // (0,2): R_mn = R^s_{m n s}
TensorField weyl_projective(const TensorField& riem, const TensorField& ric);

TensorField covariant_deriv_metric(const TensorField& g, const Connection& conn);   // (0,3): l;m,n
TensorField covariant_deriv_inverse(const TensorField& h, const Connection& conn);  // (2,1)

bool compat_check(const Geometry& geo);

TensorField lie_derivative(const VectorField& xi, const TensorField& t);
Connection lie_derivative(const VectorField& xi, const Connection& conn);

bool constant_curvature_check(const TensorField& riem, const TensorField& g,
                              const RationalFn& k);

// Exact inertia of g and h at the given domain points; throws
// PointOutsideDomain / InconsistentSignature. Ranks are cross-checked
// against the symbolic rank over the fraction field.
std::pair<std::pair<int, int>, SignatureDescriptor> signature_rank(
    const Geometry& geo, const std::vector<Point>& points);

bool point_in_domain(const Geometry& geo, const Point& p);

// Deterministic rational sample points satisfying the domain and avoiding
// all denominator zeros of the stored tensors.
std::vector<Point> sample_domain_points(const Geometry& geo, int n, SampleStream& rng);

// Rational coordinate change with an explicit inverse.
struct RationalMap {
    std::array<RationalFn, 4> fwd, inv;
};

// Checks inv o fwd = id; throws NonInvertibleMap otherwise.
void validate_map(const RationalMap& map);

// Pullback of (g, h, conn, domain) along map.fwd.
Geometry pullback(const RationalMap& map, const Geometry& geo);

// Fractional linear map x' = S x / (1 + bt x / l) with bt the transpose
// with respect to `form` (delta for the Euclidean family, eta for the
// Lorentzian one); S must be form-orthogonal.
RationalMap fractional_linear_map(const std::array<std::array<Rational, 4>, 4>& s,
                                  const std::array<Rational, 4>& b,
                                  const std::array<int, 4>& form_diag);

}  // namespace kin
