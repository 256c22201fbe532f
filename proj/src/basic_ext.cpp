#include "extcalc/basic_ext.hpp"

namespace extcalc {

BasicSpace parse_basic_space(const std::string& name) {
    if (name == "V") return BasicSpace::V;
    if (name == "W") return BasicSpace::W;
    if (name == "U") return BasicSpace::U;
    if (name == "Vtilde") return BasicSpace::Vtilde;
    if (name == "K") return BasicSpace::K;
    if (name == "C") return BasicSpace::C;
    throw InvalidParams("unknown basic space: " + name);
}

namespace {

/// Slots of V at twists (r, j): degrees 2*p^(r-j)*m, 0 <= m < p^j.
GradedDims v_table(Dim p, int r, int j) {
    GradedDims out;
    Dim step = checked_mul(2, checked_pow(p, r - j));
    Dim count = checked_pow(p, j);
    for (Dim m = 0; m < count; ++m)
        out.add(static_cast<int>(checked_mul(step, m)), 1);
    return out;
}

void check_twists(Dim p, int r, int j) {
    require_prime(p);
    if (j < 0 || r < j) throw InvalidParams("basic_table: need 0 <= j <= r");
}

} // namespace

GradedDims basic_table(BasicSpace space, Dim p, int r, int j) {
    check_twists(p, r, j);
    const int shift = static_cast<int>(checked_pow(p, r - j)) - 1;
    switch (space) {
        case BasicSpace::V:
        case BasicSpace::U:
            return v_table(p, r, j);
        case BasicSpace::W:
            return v_table(p, r, j).shifted(shift);
        case BasicSpace::Vtilde:
            return v_table(p, r, j).shifted(2 * shift);
        case BasicSpace::K: {
            if (j < 1) throw InvalidParams("basic_table: K requires j >= 1");
            const int low = static_cast<int>(checked_pow(p, r - j));
            const int high = static_cast<int>(checked_pow(p, r - j + 1));
            return v_table(p, r, j - 1).shifted(high - 1).shifted(high - low);
        }
        case BasicSpace::C:
            if (j < 1) throw InvalidParams("basic_table: C requires j >= 1");
            return v_table(p, r, j - 1);
    }
    throw InvalidParams("basic_table: unknown space");
}

ENameResult e_name(Dim p, int r, Dim m) {
    require_prime(p);
    if (r < 0) throw InvalidParams("e_name: r must be >= 0");
    if (m < 0 || m >= checked_pow(p, r)) throw InvalidParams("e_name: need 0 <= m < p^r");
    ENameResult out;
    out.coh_degree = checked_mul(2, m);
    std::string name;
    Dim rest = m;
    for (int i = 0; i < r && rest > 0; ++i) {
        Dim digit = rest % p;
        rest /= p;
        if (digit == 0) continue;
        if (!name.empty()) name += "*";
        name += "e_" + std::to_string(i + 1) + "^{" + std::to_string(digit);
        if (r - 1 - i > 0) name += "(" + std::to_string(r - 1 - i) + ")";
        name += "}";
    }
    out.name = name.empty() ? "1" : name;
    return out;
}

} // namespace extcalc
