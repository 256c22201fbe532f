#include "extcalc/functors.hpp"

#include <algorithm>

namespace extcalc {

char kind_letter(FunctorKind kind) {
    switch (kind) {
        case FunctorKind::Gamma: return 'G';
        case FunctorKind::Lambda: return 'L';
        case FunctorKind::Sym: return 'S';
        case FunctorKind::Id: return 'I';
    }
    throw InvalidParams("kind_letter: unknown kind");
}

std::string kind_latex(FunctorKind kind) {
    switch (kind) {
        case FunctorKind::Gamma: return "\\Gamma";
        case FunctorKind::Lambda: return "\\Lambda";
        case FunctorKind::Sym: return "S";
        case FunctorKind::Id: return "I";
    }
    throw InvalidParams("kind_latex: unknown kind");
}

Dim atom_poly_degree(const FunctorAtom& atom, Dim p) {
    return checked_mul(atom.star, checked_pow(p, atom.twist));
}

Dim word_poly_degree(const FunctorWord& word, Dim p) {
    Dim total = 0;
    for (const auto& atom : word) total = checked_add(total, atom_poly_degree(atom, p));
    return total;
}

FunctorKind dual_kind(FunctorKind kind) {
    switch (kind) {
        case FunctorKind::Gamma: return FunctorKind::Sym;
        case FunctorKind::Sym: return FunctorKind::Gamma;
        case FunctorKind::Lambda: return FunctorKind::Lambda;
        case FunctorKind::Id: return FunctorKind::Id;
    }
    throw InvalidParams("dual_kind: unknown kind");
}

FunctorWord normalize_word(const FunctorWord& word, QuerySide side) {
    FunctorWord out;
    for (FunctorAtom atom : word) {
        if (atom.star < 0) throw InvalidParams("atom power must be >= 0");
        if (atom.twist < 0) throw InvalidParams("atom twist must be >= 0");
        if (atom.star == 0) continue;
        if (atom.kind == FunctorKind::Id) {
            if (atom.star > 1) throw InvalidParams("Id has no higher powers");
            atom.kind = side == QuerySide::Source ? FunctorKind::Gamma : FunctorKind::Sym;
        }
        out.push_back(atom);
    }
    return out;
}

PExtQuery dualize(const PExtQuery& query) {
    PExtQuery out;
    auto flip = [](FunctorWord word) {
        std::reverse(word.begin(), word.end());
        for (auto& atom : word) atom.kind = dual_kind(atom.kind);
        return word;
    };
    out.source = flip(query.target);
    out.target = flip(query.source);
    return out;
}

std::string render_atom(const FunctorAtom& atom) {
    std::string out(1, kind_letter(atom.kind));
    if (atom.star != 1) out += "^" + std::to_string(atom.star);
    if (atom.twist != 0) out += "(" + std::to_string(atom.twist) + ")";
    return out;
}

std::string render_functor_word(const FunctorWord& word) {
    if (word.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k > 0) out += "*";
        out += render_atom(word[k]);
    }
    return out;
}

std::string render_atom_latex(const FunctorAtom& atom) {
    std::string out = kind_latex(atom.kind);
    std::string sup;
    if (atom.star != 1) sup += std::to_string(atom.star);
    if (atom.twist != 0) sup += "(" + std::to_string(atom.twist) + ")";
    if (!sup.empty()) out += "^{" + sup + "}";
    return out;
}

std::string render_functor_word_latex(const FunctorWord& word) {
    if (word.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k > 0) out += " \\otimes ";
        out += render_atom_latex(word[k]);
    }
    return out;
}

} // namespace extcalc
