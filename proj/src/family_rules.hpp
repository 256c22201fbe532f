// Shared dispatch for the six supported Ext families.
//
// The strict polynomial and stable calculators use the same table: for an
// ordered kind pair and a flag telling which side carries the smaller twist,
// it yields the algebra family, the generator degree shape, and the token
// layout of the generator words.  Internal to the library.
#pragma once

#include "extcalc/functors.hpp"
#include "extcalc/presentation.hpp"

namespace extcalc::detail {

inline FunctorKind normalize_kind(FunctorKind kind, QuerySide side) {
    if (kind != FunctorKind::Id) return kind;
    return side == QuerySide::Source ? FunctorKind::Gamma : FunctorKind::Sym;
}

/// The three cohomological degree progressions generators can follow, as
/// functions of the slot index m and the twist gap ph = p^h.
enum class DegreeShape { A, B, C };

inline Dim shape_degree(DegreeShape shape, Dim ph, Dim m) {
    switch (shape) {
        case DegreeShape::A: return checked_mul(2, checked_mul(ph, m));
        case DegreeShape::B:
            return checked_add(checked_mul(2, checked_mul(ph, m)), ph - 1);
        case DegreeShape::C:
            return checked_add(checked_mul(2, checked_mul(ph, m)), 2 * (ph - 1));
    }
    throw InvalidParams("shape_degree: unknown shape");
}

/// Token layouts generator words can take (sharp variants are the duals).
enum class WordShape {
    EPhiSharp,
    PhiE,
    KzPhiE,
    EPhiSharpKzSharp,
    KzSharpKzPhiE,
    EPhiSharpKzSharpKz,
};

struct FamilyRule {
    AlgebraFamily family;
    DegreeShape shape;
    WordShape word;
};

/// Dispatch row for an ordered supported kind pair.  `low_source` tells
/// whether the source carries the smaller (or equal) twist.  Throws
/// UnsupportedPair otherwise.
inline FamilyRule family_rule(FunctorKind src, FunctorKind tgt, bool low_source) {
    using WS = WordShape;
    using AF = AlgebraFamily;
    using DS = DegreeShape;
    if (src == FunctorKind::Gamma && tgt == FunctorKind::Sym)
        return low_source ? FamilyRule{AF::Polynomial, DS::A, WS::EPhiSharp}
                          : FamilyRule{AF::Polynomial, DS::A, WS::PhiE};
    if (src == FunctorKind::Gamma && tgt == FunctorKind::Lambda)
        return low_source ? FamilyRule{AF::Exterior, DS::A, WS::EPhiSharp}
                          : FamilyRule{AF::Exterior, DS::B, WS::KzPhiE};
    if (src == FunctorKind::Lambda && tgt == FunctorKind::Sym)
        return low_source ? FamilyRule{AF::Exterior, DS::B, WS::EPhiSharpKzSharp}
                          : FamilyRule{AF::Exterior, DS::A, WS::PhiE};
    if (src == FunctorKind::Gamma && tgt == FunctorKind::Gamma)
        return low_source ? FamilyRule{AF::DividedPower, DS::A, WS::EPhiSharp}
                          : FamilyRule{AF::DividedPower, DS::C, WS::KzSharpKzPhiE};
    if (src == FunctorKind::Sym && tgt == FunctorKind::Sym)
        return low_source ? FamilyRule{AF::DividedPower, DS::C, WS::EPhiSharpKzSharpKz}
                          : FamilyRule{AF::DividedPower, DS::A, WS::PhiE};
    if (src == FunctorKind::Lambda && tgt == FunctorKind::Lambda)
        return low_source ? FamilyRule{AF::DividedPower, DS::B, WS::EPhiSharpKzSharp}
                          : FamilyRule{AF::DividedPower, DS::B, WS::KzPhiE};
    throw UnsupportedPair(std::string("no presentation for the ordered pair (") +
                          kind_letter(src) + ", " + kind_letter(tgt) + ")");
}

/// Builds one generator word.  m_ph is the e-argument (slot index times
/// p^h), e_sub the e subscript (0 for the stable, subscript-free form), h
/// the phi/kz subscript, annot the twist annotation (0 to omit).
inline std::vector<GeneratorToken> make_word(WordShape shape, Dim m_ph,
                                             int e_sub, int h, int annot) {
    using WS = WordShape;
    GeneratorToken e{TokenKind::EWord, m_ph, e_sub, 0};
    GeneratorToken phi{TokenKind::Phi, 0, h, annot};
    GeneratorToken phis{TokenKind::PhiSharp, 0, h, annot};
    GeneratorToken kz{TokenKind::Kz, 0, h, annot};
    GeneratorToken kzs{TokenKind::KzSharp, 0, h, annot};
    switch (shape) {
        case WS::EPhiSharp: return {e, phis};
        case WS::PhiE: return {phi, e};
        case WS::KzPhiE: return {kz, phi, e};
        case WS::EPhiSharpKzSharp: return {e, phis, kzs};
        case WS::KzSharpKzPhiE: return {kzs, kz, phi, e};
        case WS::EPhiSharpKzSharpKz: return {e, phis, kzs, kz};
    }
    throw InvalidParams("make_word: unknown word shape");
}

} // namespace extcalc::detail
