#include "ratint/pairmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratint {

Ordering cmp_mono_graded(const Monomial& a, const Monomial& b, const OrderXi& ord) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? Ordering::Less : Ordering::Greater;
    for (auto it = ord.varorder.rbegin(); it != ord.varorder.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

Ordering cmp_modterm(const ModTerm& s, const ModTerm& t, const OrderXi& ord) {
    if (s.comp == t.comp) return cmp_mono_graded(s.mono, t.mono, ord);
    const int da = static_cast<int>(s.mono.deg());
    const int db = static_cast<int>(t.mono.deg());
    if (s.comp == Component::First)  // s in e1, t in e2
        return da <= db + ord.xi ? Ordering::Less : Ordering::Greater;
    return db <= da + ord.xi ? Ordering::Greater : Ordering::Less;
}

bool modterm_divides(const ModTerm& s, const ModTerm& t) {
    return s.comp == t.comp && s.mono.divides(t.mono);
}

std::pair<ModTerm, Scalar> leading(const PairElement& e, const OrderXi& ord) {
    if (e.is_zero()) throw std::invalid_argument("leading term of the zero element");
    bool have = false;
    ModTerm best{Monomial(e.a.arity()), Component::First};
    auto consider = [&](const Poly& p, Component comp) {
        for (const auto& [m, c] : p.terms()) {
            ModTerm t{m, comp};
            if (!have || cmp_modterm(best, t, ord) == Ordering::Less) {
                best = t;
                have = true;
            }
        }
    };
    consider(e.a, Component::First);
    consider(e.b, Component::Second);
    const Poly& host = best.comp == Component::First ? e.a : e.b;
    return {best, host.coeff(best.mono)};
}

std::vector<PairElement> minimalize(std::vector<PairElement> basis, const OrderXi& ord) {
    struct Entry {
        ModTerm lt;
        PairElement elem;
    };
    std::vector<Entry> entries;
    entries.reserve(basis.size());
    for (auto& e : basis) entries.push_back({leading(e, ord).first, std::move(e)});
    std::stable_sort(entries.begin(), entries.end(), [&](const Entry& x, const Entry& y) {
        return modterm_less(x.lt, y.lt, ord);
    });
    std::vector<Entry> kept;
    for (auto& e : entries) {
        bool redundant = false;
        for (const auto& k : kept)
            if (modterm_divides(k.lt, e.lt)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(e));
    }
    std::vector<PairElement> out;
    out.reserve(kept.size());
    for (auto& e : kept) out.push_back(std::move(e.elem));
    return out;
}

std::string modterm_str(const ModTerm& t, const std::vector<std::string>& varnames) {
    std::string mono;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += varnames[i];
        if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) mono = "1";
    return mono + (t.comp == Component::First ? "*e1" : "*e2");
}

}  // namespace ratint
