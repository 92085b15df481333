#include "kin/algebra.hpp"

#include <map>

namespace kin {

std::string AlgebraPresentation::slot_name(int k) const {
    const char* base[4] = {"T", "P", "B", "J"};
    if (k == 0) return base[0];
    int blk = (k - 1) / 3 + 1, idx = (k - 1) % 3 + 1;
    return std::string(base[blk]) + std::to_string(idx);
}

Involution Involution::identity() { return {}; }

Involution Involution::parity() {
    Involution v;
    v.kind = InvolutionKind::Parity;
    v.signs = {1, -1, -1, -1, -1, -1, -1, 1, 1, 1};
    return v;
}

Involution Involution::time_reversal() {
    Involution v;
    v.kind = InvolutionKind::TimeReversal;
    v.signs = {-1, 1, 1, 1, -1, -1, -1, 1, 1, 1};
    return v;
}

Involution Involution::composite() {
    Involution v;
    v.kind = InvolutionKind::Composite;
    for (int k = 0; k < kAlgebraDim; ++k)
        v.signs[k] = parity().signs[k] * time_reversal().signs[k];
    return v;
}

namespace {

// Splits a component into x-monomial -> parameter-Laurent coefficient.
using XMono = std::array<int32_t, 4>;
using CoeffMap = std::map<XMono, MultiPoly>;

CoeffMap split_component(const MultiPoly& p) {
    CoeffMap out;
    for (const auto& [m, r] : p.terms()) {
        XMono x{m.e[0], m.e[1], m.e[2], m.e[3]};
        Monomial params;
        for (int i = 4; i < kNumVars; ++i) params.e[i] = m.e[i];
        out[x] += MultiPoly::monomial(r, params);
    }
    return out;
}

}  // namespace

StructureConstants closure(const AlgebraPresentation& alg) {
    // Collect the x-monomial support of the basis across all components.
    std::map<std::pair<int, XMono>, int> row_of;
    std::vector<CoeffMap> basis_split(kAlgebraDim * 4);
    for (int k = 0; k < kAlgebraDim; ++k) {
        for (int mu = 0; mu < 4; ++mu) {
            basis_split[k * 4 + mu] = split_component(alg.basis[k].comp[mu]);
            for (const auto& [x, coeff] : basis_split[k * 4 + mu])
                row_of.emplace(std::make_pair(mu, x), 0);
        }
    }

    auto build_matrix = [&](const std::map<std::pair<int, XMono>, int>& rows) {
        FnMatrix a(int(rows.size()), kAlgebraDim);
        int r = 0;
        for (const auto& [key, unused] : rows) {
            for (int k = 0; k < kAlgebraDim; ++k) {
                const auto& cm = basis_split[k * 4 + key.first];
                auto it = cm.find(key.second);
                if (it != cm.end()) a.at(r, k) = RationalFn(it->second);
            }
            ++r;
        }
        return a;
    };

    {
        FnMatrix a = build_matrix(row_of);
        if (fn_rank(a) < kAlgebraDim) throw DependentBasis();
    }

    StructureConstants sc;
    for (int a_idx = 0; a_idx < kAlgebraDim; ++a_idx) {
        for (int b_idx = a_idx + 1; b_idx < kAlgebraDim; ++b_idx) {
            VectorField br = lie_bracket(alg.basis[a_idx], alg.basis[b_idx]);
            // The bracket may use monomials outside the basis support; any
            // such term is immediately un-expandable.
            auto rows = row_of;
            bool escapes = false;
            std::array<CoeffMap, 4> target;
            for (int mu = 0; mu < 4 && !escapes; ++mu) {
                target[mu] = split_component(br.comp[mu]);
                for (const auto& [x, coeff] : target[mu])
                    if (!rows.count({mu, x})) escapes = true;
            }
            if (escapes) {
                throw NotClosed("bracket [" + alg.slot_name(a_idx) + ", " +
                                alg.slot_name(b_idx) + "] of algebra '" + alg.name +
                                "' leaves the basis span");
            }
            FnMatrix a = build_matrix(rows);
            std::vector<RationalFn> rhs(rows.size());
            int r = 0;
            for (const auto& [key, unused] : rows) {
                auto it = target[key.first].find(key.second);
                if (it != target[key.first].end()) rhs[r] = RationalFn(it->second);
                ++r;
            }
            LinearSolve sol = solve_linear(std::move(a), std::move(rhs));
            if (!sol.consistent) {
                throw NotClosed("bracket [" + alg.slot_name(a_idx) + ", " +
                                alg.slot_name(b_idx) + "] of algebra '" + alg.name +
                                "' leaves the basis span");
            }
            for (int k = 0; k < kAlgebraDim; ++k) {
                sc.c[a_idx][b_idx][k] = sol.x[k];
                sc.c[b_idx][a_idx][k] = -sol.x[k];
            }
        }
    }
    return sc;
}

bool jacobi_check(const StructureConstants& sc) {
    const int n = kAlgebraDim;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int d = b + 1; d < n; ++d) {
                for (int k = 0; k < n; ++k) {
                    RationalFn sum(0);
                    for (int m = 0; m < n; ++m) {
                        sum += sc.c[a][b][m] * sc.c[m][d][k];
                        sum += sc.c[b][d][m] * sc.c[m][a][k];
                        sum += sc.c[d][a][m] * sc.c[m][b][k];
                    }
                    if (!sum.is_zero()) return false;
                }
            }
        }
    }
    return true;
}

AlgebraPresentation apply_involution(const AlgebraPresentation& alg, const Involution& inv) {
    AlgebraPresentation out = alg;
    for (int k = 0; k < kAlgebraDim; ++k)
        if (inv.signs[k] < 0) out.basis[k] = -out.basis[k];
    return out;
}

bool is_automorphism(const AlgebraPresentation& alg, const Involution& inv) {
    StructureConstants sc = closure(alg);
    for (int a = 0; a < kAlgebraDim; ++a)
        for (int b = 0; b < kAlgebraDim; ++b)
            for (int k = 0; k < kAlgebraDim; ++k) {
                if (inv.signs[a] * inv.signs[b] * inv.signs[k] == 1) continue;
                if (!sc.c[a][b][k].is_zero()) return false;
            }
    return true;
}

bool constants_equal(const StructureConstants& a, const StructureConstants& b) {
    for (int i = 0; i < kAlgebraDim; ++i)
        for (int j = 0; j < kAlgebraDim; ++j)
            for (int k = 0; k < kAlgebraDim; ++k)
                if (a.c[i][j][k] != b.c[i][j][k]) return false;
    return true;
}

StructureConstants bll_contract(const StructureConstants& sc,
                                const std::array<int, kAlgebraDim>& w) {
    StructureConstants out;
    for (int a = 0; a < kAlgebraDim; ++a)
        for (int b = 0; b < kAlgebraDim; ++b)
            for (int k = 0; k < kAlgebraDim; ++k) {
                int order = w[a] + w[b] - w[k];
                if (order == 0) {
                    out.c[a][b][k] = sc.c[a][b][k];
                } else if (order > 0) {
                    out.c[a][b][k] = RationalFn(0);
                } else if (!sc.c[a][b][k].is_zero()) {
                    throw DivergentLimit("structure constant diverges under the generator rescaling");
                }
            }
    return out;
}

std::array<int, kAlgebraDim> block_weights(int t, int p, int b, int j) {
    return {t, p, p, p, b, b, b, j, j, j};
}

}  // namespace kin
