#include "extcalc/parse.hpp"

#include <cctype>
#include <charconv>

#include "extcalc/errors.hpp"

namespace extcalc {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_spaces();
        return pos >= text.size();
    }

    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidParams("cannot parse \"" + text + "\": " + what +
                            " at position " + std::to_string(pos));
    }

    Dim number() {
        skip_spaces();
        size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected a number");
        Dim value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc() || ptr != text.data() + pos)
            fail("number out of range");
        return value;
    }

    FunctorAtom atom() {
        skip_spaces();
        if (pos >= text.size()) fail("expected a functor letter");
        FunctorAtom out;
        switch (text[pos]) {
            case 'G': out.kind = FunctorKind::Gamma; break;
            case 'L': out.kind = FunctorKind::Lambda; break;
            case 'S': out.kind = FunctorKind::Sym; break;
            case 'I': out.kind = FunctorKind::Id; break;
            default: fail("expected one of G, L, S, I");
        }
        ++pos;
        skip_spaces();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            out.star = number();
        }
        skip_spaces();
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            out.twist = number();
            skip_spaces();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
        }
        return out;
    }
};

} // namespace

FunctorAtom parse_atom(const std::string& text) {
    Cursor cur{text};
    FunctorAtom out = cur.atom();
    if (!cur.done()) cur.fail("trailing input after atom");
    return out;
}

FunctorWord parse_word(const std::string& text) {
    Cursor cur{text};
    FunctorWord word;
    word.push_back(cur.atom());
    while (!cur.done()) {
        if (cur.peek() != '*') cur.fail("expected '*' between atoms");
        ++cur.pos;
        word.push_back(cur.atom());
    }
    return word;
}

} // namespace extcalc
