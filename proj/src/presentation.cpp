#include "extcalc/presentation.hpp"

#include <algorithm>

namespace extcalc {

std::string family_name(AlgebraFamily family) {
    switch (family) {
        case AlgebraFamily::Polynomial: return "polynomial";
        case AlgebraFamily::Exterior: return "exterior";
        case AlgebraFamily::DividedPower: return "divided_power";
    }
    throw InvalidParams("family_name: unknown family");
}

namespace {

struct TokenText {
    const char* base;
    bool sharp;
};

TokenText token_text(TokenKind kind, bool latex) {
    switch (kind) {
        case TokenKind::EWord: return {"e", false};
        case TokenKind::Phi: return {latex ? "\\varphi" : "phi", false};
        case TokenKind::PhiSharp: return {latex ? "\\varphi" : "phi", true};
        case TokenKind::Kz: return {latex ? "\\mathrm{kz}" : "kz", false};
        case TokenKind::KzSharp: return {latex ? "\\mathrm{kz}" : "kz", true};
    }
    throw InvalidParams("token_text: unknown token kind");
}

std::string render_token(const GeneratorToken& tok, bool latex) {
    TokenText text = token_text(tok.kind, latex);
    std::string out = text.base;
    if (tok.kind == TokenKind::EWord) {
        if (tok.sub > 0) out += "_" + (latex ? "{" + std::to_string(tok.sub) + "}" : std::to_string(tok.sub));
        out += "(" + std::to_string(tok.arg) + ")";
    } else {
        out += "_" + (latex ? "{" + std::to_string(tok.sub) + "}" : std::to_string(tok.sub));
    }
    std::string sup;
    if (text.sharp) sup += latex ? "\\#" : "#";
    if (tok.twist > 0) sup += "(" + std::to_string(tok.twist) + ")";
    if (!sup.empty()) out += "^{" + sup + "}";
    return out;
}

std::string render_impl(const std::vector<GeneratorToken>& word, bool latex) {
    if (word.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k > 0) out += latex ? " " : "*";
        out += render_token(word[k], latex);
    }
    return out;
}

} // namespace

std::string render_word(const std::vector<GeneratorToken>& word) {
    return render_impl(word, false);
}

std::string render_word_latex(const std::vector<GeneratorToken>& word) {
    return render_impl(word, true);
}

void sort_generators(std::vector<GeneratorSpec>& generators) {
    std::sort(generators.begin(), generators.end(),
              [](const GeneratorSpec& a, const GeneratorSpec& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  return render_word(a.word) < render_word(b.word);
              });
}

Dim presentation_coefficient(const HopfPresentation& pres, const TriDegree& t) {
    if (t.coh < 0 || t.src < 0 || t.tgt < 0) return 0;
    return coefficients_by_coh(pres, t.coh, t.src, t.tgt).back();
}

namespace {

/// Flat [coh][src][tgt] monomial-count block, the shared dynamic program.
std::vector<Dim> coefficient_block(const HopfPresentation& pres, Dim max_coh,
                                   Dim max_src, Dim max_tgt) {
    if (max_coh < 0 || max_src < 0 || max_tgt < 0)
        throw InvalidParams("coefficient extraction: negative budget");
    const size_t C = static_cast<size_t>(max_coh) + 1;
    const size_t I = static_cast<size_t>(max_src) + 1;
    const size_t L = static_cast<size_t>(max_tgt) + 1;
    auto idx = [&](size_t c, size_t i, size_t l) { return (c * I + i) * L + l; };
    std::vector<Dim> dp(C * I * L, 0);
    dp[0] = 1;
    const bool squarefree = pres.family == AlgebraFamily::Exterior;
    for (const auto& gen : pres.generators) {
        const TriDegree& g = gen.degree;
        if (g.src < 1 || g.tgt < 1 || g.coh < 0)
            throw InvalidParams("presentation generator with invalid tri-degree");
        if (g.coh > max_coh || g.src > max_src || g.tgt > max_tgt) continue;
        const size_t gc = static_cast<size_t>(g.coh);
        const size_t gi = static_cast<size_t>(g.src);
        const size_t gl = static_cast<size_t>(g.tgt);
        if (squarefree) {
            // Each generator used at most once: sweep budgets downward.
            for (size_t c = C; c-- > gc;)
                for (size_t i = I; i-- > gi;)
                    for (size_t l = L; l-- > gl;)
                        dp[idx(c, i, l)] = checked_add(
                            dp[idx(c, i, l)], dp[idx(c - gc, i - gi, l - gl)]);
        } else {
            // Unbounded exponent: sweep budgets upward.
            for (size_t c = gc; c < C; ++c)
                for (size_t i = gi; i < I; ++i)
                    for (size_t l = gl; l < L; ++l)
                        dp[idx(c, i, l)] = checked_add(
                            dp[idx(c, i, l)], dp[idx(c - gc, i - gi, l - gl)]);
        }
    }
    return dp;
}

} // namespace

std::vector<Dim> coefficients_by_coh(const HopfPresentation& pres, Dim max_coh,
                                     Dim src, Dim tgt) {
    std::vector<Dim> dp = coefficient_block(pres, max_coh, src, tgt);
    const size_t I = static_cast<size_t>(src) + 1;
    const size_t L = static_cast<size_t>(tgt) + 1;
    std::vector<Dim> out(static_cast<size_t>(max_coh) + 1, 0);
    for (size_t c = 0; c < out.size(); ++c)
        out[c] = dp[(c * I + (I - 1)) * L + (L - 1)];
    return out;
}

std::vector<std::vector<std::vector<Dim>>> coefficient_table(
    const HopfPresentation& pres, Dim max_coh, Dim max_src, Dim max_tgt) {
    std::vector<Dim> dp = coefficient_block(pres, max_coh, max_src, max_tgt);
    const size_t C = static_cast<size_t>(max_coh) + 1;
    const size_t I = static_cast<size_t>(max_src) + 1;
    const size_t L = static_cast<size_t>(max_tgt) + 1;
    std::vector<std::vector<std::vector<Dim>>> out(
        C, std::vector<std::vector<Dim>>(I, std::vector<Dim>(L, 0)));
    for (size_t c = 0; c < C; ++c)
        for (size_t i = 0; i < I; ++i)
            for (size_t l = 0; l < L; ++l)
                out[c][i][l] = dp[(c * I + i) * L + l];
    return out;
}

} // namespace extcalc
