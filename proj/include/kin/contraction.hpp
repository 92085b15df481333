#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kin/geometry.hpp"

namespace kin {

// eps-substitution schemes: c_r = c eps^a, l_r = l eps^b, chosen so that the
// invariant combination named by each rule stays exactly fixed.
enum class RuleKind {
    LInf,         // l_r -> inf
    LZero,        // l_r -> 0
    CInf,         // c_r -> inf
    CZero,        // c_r -> 0
    NuFixedInf,   // c_r, l_r -> inf, nu fixed
    NuFixedZero,  // c_r, l_r -> 0, nu fixed
    CCOverLInf,   // c_r, l_r -> inf, c_r^2/l_r fixed (nu_r -> 0)
    CCOverLZero,  // c_r, l_r -> 0, c_r^2/l_r fixed (nu_r -> inf)
    COverLLInf,   // c_r, l_r -> inf, c_r/l_r^2 fixed (nu_r -> inf)
    COverLLZero,  // c_r, l_r -> 0, c_r/l_r^2 fixed (nu_r -> 0)
    LInfCZero,    // l_r -> inf, c_r -> 0 (nu_r -> 0)
    LZeroCInf,    // l_r -> 0, c_r -> inf (nu_r -> inf)
};

struct RuleInfo {
    int a, b;  // eps-orders of c_r/c and l_r/l
    const char* name;
};
RuleInfo rule_info(RuleKind k);
std::optional<RuleKind> rule_from(const std::string& name);

// coeff * eps^order applied to a generator slot before the limit.
struct SlotScale {
    Rational coeff = Rational(1);
    int order = 0;
};

struct AlgebraRecipe {
    std::string source, target;
    RuleKind rule;
    InvolutionKind pre = InvolutionKind::Identity;
    SlotScale t, p, k;  // rotation slots are never rescaled
};

struct TensorScale {
    int sign = 1;
    int order = 0;
};

struct GeometryRecipe {
    std::string source, target;  // for a blocked edge, the candidate family
    RuleKind rule;
    TensorScale g, h, gamma;
    bool expect_contract = true;
};

struct DomainSurvival {
    RationalFn source_fn;
    int required_sign = 1;
    bool survives = true;
};

// Scales the running field and takes eps -> 0 componentwise.
VectorField contract_generator(const VectorField& running, const SlotScale& scale);

struct AlgebraContraction {
    std::array<VectorField, kAlgebraDim> basis;
};

// Running source basis for a rule (the catalog definitions with c, l
// replaced by the running parameters), with the recipe's pre-involution
// applied as slot signs.
std::array<VectorField, kAlgebraDim> running_basis(const AlgebraPresentation& alg,
                                                   RuleKind rule, InvolutionKind pre);

AlgebraContraction contract_algebra_basis(const AlgebraPresentation& source,
                                          const AlgebraRecipe& recipe);

// Full edge verification: contracts the source basis, demands slot-by-slot
// equality with the target presentation (TargetMismatch otherwise), recloses
// the result, and returns it as a presentation on the target's slots.
AlgebraPresentation contract_algebra(const AlgebraPresentation& source,
                                     const AlgebraRecipe& recipe,
                                     const AlgebraPresentation& target);

// Tensor transported to the fixed chart with running parameters: component
// substitution plus the diagonal chart factor (c_r/c) on each 0 index.
TensorField run_tensor(const TensorField& t, RuleKind rule);
Connection run_connection(const Connection& c, RuleKind rule);
RationalFn run_scalar(const RationalFn& f, RuleKind rule);

// Sign of the eps-leading part of the substituted inequality at the given
// points decides survival; a vanishing or point-dependent leading sign is a
// catalog error.
DomainSurvival domain_survival(const DomainIneq& ineq, RuleKind rule,
                               const std::vector<Point>& points);

struct GeometryContraction {
    bool blocked = false;
    std::vector<DomainSurvival> survival;
    TensorField g = TensorField::metric();
    TensorField h = TensorField::inverse_metric();
    Connection conn;
};

// Applies the recipe: domain survival first, then prefactor bookkeeping and
// the componentwise Laurent limit. Throws DivergentTensor when a component
// blows up under a surviving domain.
GeometryContraction contract_geometry(const Geometry& source, const GeometryRecipe& recipe,
                                      const std::vector<Point>& survival_points);

// Full edge verification against the expectation: a contracting edge must
// land exactly on the target triple (TargetMismatch names the component) and
// a blocked edge must die by domain survival (UnexpectedContractibility
// otherwise). Returns the assembled geometry for contracting edges.
std::optional<Geometry> contract_geometry_checked(const Geometry& source,
                                                  const GeometryRecipe& recipe,
                                                  const Geometry* target,
                                                  const std::vector<Point>& survival_points);

}  // namespace kin
