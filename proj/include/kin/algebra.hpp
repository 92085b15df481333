#pragma once

#include <array>
#include <string>
#include <vector>

#include "kin/linalg.hpp"
#include "kin/vectorfield.hpp"

namespace kin {

// Slot layout of every presentation: (time translation, three space
// translations, three boosts, three rotations), in the order of the
// catalog's generator-set column.
constexpr int kAlgebraDim = 10;

struct SlotSpec {
    GenSym sym;
    int sign;  // +1 or -1; catalog rows such as (-H', P', N, J) carry a -1
};

struct AlgebraPresentation {
    std::string name;                         // catalog key, e.g. "p", "n+2", "e'"
    std::string display;                      // human label, e.g. "Poincare"
    std::array<SlotSpec, 4> slots;            // T, P, B, J families with signs
    std::array<VectorField, kAlgebraDim> basis;
    bool bll = false;            // one of the Bacry--Levy-Leblond kinematical algebras
    bool geometrical = false;    // one of the four purely geometrical algebras
    bool second_version = false;

    std::string slot_name(int k) const;
};

struct StructureConstants {
    // c[a][b][k], antisymmetric in (a, b).
    std::array<std::array<std::array<RationalFn, kAlgebraDim>, kAlgebraDim>, kAlgebraDim> c;
};

// Signed permutation on the basis slots; the catalog involutions act
// diagonally (parity fixes T and J and flips P and boosts, time reversal
// flips T and boosts).
struct Involution {
    InvolutionKind kind = InvolutionKind::Identity;
    std::array<int, kAlgebraDim> signs{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

    static Involution identity();
    static Involution parity();
    static Involution time_reversal();
    static Involution composite();  // parity followed by time reversal
};

// Expands every pairwise bracket in the basis over the field Q(c, l).
// Throws NotClosed when a bracket escapes the span and DependentBasis when
// the ten fields are linearly dependent.
StructureConstants closure(const AlgebraPresentation& alg);

bool jacobi_check(const StructureConstants& sc);

AlgebraPresentation apply_involution(const AlgebraPresentation& alg, const Involution& inv);
bool is_automorphism(const AlgebraPresentation& alg, const Involution& inv);

bool constants_equal(const StructureConstants& a, const StructureConstants& b);

// Bacry--Levy-Leblond contraction on the level of structure constants:
// rescale slot k by eps^{w_k} and take eps -> 0. Throws DivergentLimit
// when a constant blows up.
StructureConstants bll_contract(const StructureConstants& sc,
                                const std::array<int, kAlgebraDim>& weights);

// Slot weights from per-block weights (T, P, B, J).
std::array<int, kAlgebraDim> block_weights(int t, int p, int b, int j);

}  // namespace kin
