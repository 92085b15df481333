#include "kin/contraction.hpp"

namespace kin {

RuleInfo rule_info(RuleKind k) {
    switch (k) {
        case RuleKind::LInf: return {0, -1, "l_to_inf"};
        case RuleKind::LZero: return {0, 1, "l_to_zero"};
        case RuleKind::CInf: return {-1, 0, "c_to_inf"};
        case RuleKind::CZero: return {1, 0, "c_to_zero"};
        case RuleKind::NuFixedInf: return {-1, -1, "nu_fixed_inf"};
        case RuleKind::NuFixedZero: return {1, 1, "nu_fixed_zero"};
        case RuleKind::CCOverLInf: return {-1, -2, "cc_over_l_fixed_inf"};
        case RuleKind::CCOverLZero: return {1, 2, "cc_over_l_fixed_zero"};
        case RuleKind::COverLLInf: return {-2, -1, "c_over_ll_fixed_inf"};
        case RuleKind::COverLLZero: return {2, 1, "c_over_ll_fixed_zero"};
        case RuleKind::LInfCZero: return {1, -1, "nu_zero_l_inf"};
        case RuleKind::LZeroCInf: return {-1, 1, "nu_inf_l_zero"};
    }
    return {0, 0, "?"};
}

std::optional<RuleKind> rule_from(const std::string& name) {
    for (RuleKind k : {RuleKind::LInf, RuleKind::LZero, RuleKind::CInf, RuleKind::CZero,
                       RuleKind::NuFixedInf, RuleKind::NuFixedZero, RuleKind::CCOverLInf,
                       RuleKind::CCOverLZero, RuleKind::COverLLInf, RuleKind::COverLLZero,
                       RuleKind::LInfCZero, RuleKind::LZeroCInf}) {
        if (name == rule_info(k).name) return k;
    }
    return std::nullopt;
}

VectorField contract_generator(const VectorField& running, const SlotScale& scale) {
    Monomial m;
    m.e[VEPS] = scale.order;
    VectorField scaled = MultiPoly::monomial(scale.coeff, m) * running;
    auto lim = field_limit(scaled);
    if (!lim) throw DivergentGenerator("generator diverges in the eps -> 0 limit");
    return *lim;
}

std::array<VectorField, kAlgebraDim> running_basis(const AlgebraPresentation& alg,
                                                   RuleKind rule, InvolutionKind pre) {
    RuleInfo info = rule_info(rule);
    Involution inv = Involution::identity();
    switch (pre) {
        case InvolutionKind::Identity: break;
        case InvolutionKind::Parity: inv = Involution::parity(); break;
        case InvolutionKind::TimeReversal: inv = Involution::time_reversal(); break;
        case InvolutionKind::Composite: inv = Involution::composite(); break;
    }
    std::array<VectorField, kAlgebraDim> out;
    for (int slot = 0; slot < kAlgebraDim; ++slot) {
        int blk = slot == 0 ? 0 : (slot - 1) / 3 + 1;
        int idx = slot == 0 ? 0 : (slot - 1) % 3 + 1;
        const SlotSpec& spec = alg.slots[blk];
        VectorField f = build_generator(spec.sym, idx, info.a, info.b);
        int sign = spec.sign * inv.signs[slot];
        out[slot] = sign < 0 ? -f : f;
    }
    return out;
}

AlgebraContraction contract_algebra_basis(const AlgebraPresentation& source,
                                          const AlgebraRecipe& recipe) {
    auto running = running_basis(source, recipe.rule, recipe.pre);
    AlgebraContraction out;
    for (int slot = 0; slot < kAlgebraDim; ++slot) {
        SlotScale scale;
        if (slot == 0) scale = recipe.t;
        else if (slot <= 3) scale = recipe.p;
        else if (slot <= 6) scale = recipe.k;
        try {
            out.basis[slot] = contract_generator(running[slot], scale);
        } catch (const DivergentGenerator&) {
            throw DivergentGenerator("slot " + source.slot_name(slot) + " of '" + source.name +
                                     "' diverges under rule " + rule_info(recipe.rule).name);
        }
    }
    return out;
}

AlgebraPresentation contract_algebra(const AlgebraPresentation& source,
                                     const AlgebraRecipe& recipe,
                                     const AlgebraPresentation& target) {
    AlgebraContraction out = contract_algebra_basis(source, recipe);
    for (int k = 0; k < kAlgebraDim; ++k) {
        if (out.basis[k] != target.basis[k])
            throw TargetMismatch("slot " + target.slot_name(k) + " of the " + source.name +
                                 " -> " + target.name + " limit differs from the catalog target");
    }
    AlgebraPresentation contracted = target;
    contracted.basis = out.basis;
    closure(contracted);  // must re-close; throws otherwise
    return contracted;
}

namespace {

RationalFn eps_power(int order) {
    Monomial m;
    m.e[VEPS] = order;
    return RationalFn(MultiPoly::monomial(Rational(1), m));
}

}  // namespace

RationalFn run_scalar(const RationalFn& f, RuleKind rule) {
    RuleInfo info = rule_info(rule);
    return f.subst_running(info.a, info.b);
}

TensorField run_tensor(const TensorField& t, RuleKind rule) {
    RuleInfo info = rule_info(rule);
    TensorField out = t;
    const int chart_sign = t.q() > 0 ? +1 : -1;  // covariant picks eps^{+a} per 0 index
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            int zeros = (m == 0 ? 1 : 0) + (n == 0 ? 1 : 0);
            RationalFn v = t.at({m, n}).subst_running(info.a, info.b);
            if (zeros != 0) v *= eps_power(chart_sign * info.a * zeros);
            out.at({m, n}) = v;
        }
    return out;
}

Connection run_connection(const Connection& c, RuleKind rule) {
    RuleInfo info = rule_info(rule);
    Connection out;
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                int order = ((m == 0 ? 1 : 0) + (n == 0 ? 1 : 0) - (l == 0 ? 1 : 0)) * info.a;
                RationalFn v = c.gamma[l][m][n].subst_running(info.a, info.b);
                if (order != 0) v *= eps_power(order);
                out.gamma[l][m][n] = v;
            }
    return out;
}

DomainSurvival domain_survival(const DomainIneq& ineq, RuleKind rule,
                               const std::vector<Point>& points) {
    DomainSurvival out;
    out.source_fn = ineq.fn;
    out.required_sign = ineq.sign;
    RationalFn sub = run_scalar(ineq.fn, rule);
    LaurentLimit lim = laurent_limit(sub, 0);
    int seen = 0, usable = 0;
    for (const auto& p : points) {
        Rational v;
        try {
            v = lim.leading.eval(p);
        } catch (const PoleAtPoint&) {
            continue;
        }
        if (v.sign() == 0) continue;
        ++usable;
        if (seen == 0) seen = v.sign();
        else if (seen != v.sign())
            throw Error("ambiguous leading sign of a substituted domain inequality");
    }
    if (usable < 2) throw Error("too few usable sample points for a domain-survival check");
    out.survives = (seen == ineq.sign);
    return out;
}

GeometryContraction contract_geometry(const Geometry& source, const GeometryRecipe& recipe,
                                      const std::vector<Point>& survival_points) {
    GeometryContraction out;
    for (const auto& ineq : source.domain) {
        DomainSurvival s = domain_survival(ineq, recipe.rule, survival_points);
        out.survival.push_back(s);
        if (!s.survives) out.blocked = true;
    }
    if (out.blocked) return out;

    auto take_limit = [&](const RationalFn& f, const TensorScale& scale,
                          const char* what) -> RationalFn {
        LaurentLimit lim = laurent_limit(f, scale.order);
        if (lim.verdict == LimitVerdict::Divergent)
            throw DivergentTensor(std::string(what) + " component of '" + source.name +
                                  "' diverges under rule " + rule_info(recipe.rule).name);
        RationalFn v = lim.value();
        return scale.sign < 0 ? -v : v;
    };

    TensorField gr = run_tensor(source.g, recipe.rule);
    TensorField hr = run_tensor(source.h, recipe.rule);
    Connection cr = run_connection(source.conn, recipe.rule);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            out.g.at({m, n}) = take_limit(gr.at({m, n}), recipe.g, "metric");
            out.h.at({m, n}) = take_limit(hr.at({m, n}), recipe.h, "inverse-metric");
        }
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                out.conn.gamma[l][m][n] = take_limit(cr.gamma[l][m][n], recipe.gamma, "connection");
    return out;
}

std::optional<Geometry> contract_geometry_checked(const Geometry& source,
                                                  const GeometryRecipe& recipe,
                                                  const Geometry* target,
                                                  const std::vector<Point>& survival_points) {
    GeometryContraction out = contract_geometry(source, recipe, survival_points);
    if (!recipe.expect_contract) {
        if (!out.blocked)
            throw UnexpectedContractibility(
                "every domain inequality of '" + source.name + "' survives rule " +
                rule_info(recipe.rule).name + " although the edge is marked not contractible");
        return std::nullopt;
    }
    if (out.blocked)
        throw UnexpectedContractibility("a domain inequality of '" + source.name +
                                        "' dies under rule " + rule_info(recipe.rule).name +
                                        " although the edge should contract");
    if (!target) throw Error("contracting edge without a target");
    auto idx = [](int a, int b, int c = -1) {
        std::string s = "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
        if (c >= 0) s += "[" + std::to_string(c) + "]";
        return s;
    };
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            if (out.g.at({m, n}) != target->g.at({m, n}))
                throw TargetMismatch("g" + idx(m, n) + " differs from " + target->name);
            if (out.h.at({m, n}) != target->h.at({m, n}))
                throw TargetMismatch("h" + idx(m, n) + " differs from " + target->name);
        }
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                if (out.conn.gamma[l][m][n] != target->conn.gamma[l][m][n])
                    throw TargetMismatch("gamma" + idx(l, m, n) + " differs from " +
                                         target->name);
    Geometry assembled = *target;
    assembled.g = std::move(out.g);
    assembled.h = std::move(out.h);
    assembled.conn = std::move(out.conn);
    return assembled;
}

}  // namespace kin
