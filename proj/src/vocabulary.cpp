#include "pse/vocabulary.hpp"

#include "pse/errors.hpp"

namespace pse {

Vocabulary Vocabulary::make(std::map<std::string, int> symbols) {
    long atom_count = 1; // equality
    for (const auto& [name, arity] : symbols) {
        if (name.empty())
            throw ValidationError("vocabulary: empty symbol name");
        if (arity < 1)
            throw ValidationError("vocabulary: arity of '" + name + "' must be >= 1");
        if (arity > 16)
            throw ValidationError("vocabulary: arity of '" + name + "' too large");
        atom_count += 1L << arity;
    }
    if (atom_count > 64)
        throw ValidationError("vocabulary: more than 64 two-variable atoms");
    Vocabulary v;
    v.symbols_ = std::move(symbols);
    return v;
}

int Vocabulary::arity(const std::string& symbol) const {
    auto it = symbols_.find(symbol);
    if (it == symbols_.end())
        throw ValidationError("vocabulary: unknown symbol '" + symbol + "'");
    return it->second;
}

std::string Atom::name() const {
    if (is_eq) return "x1=x2";
    std::string out = symbol + "(";
    for (size_t i = 0; i < pattern.size(); ++i) {
        if (i) out += ",";
        out += "x" + std::to_string(pattern[i]);
    }
    return out + ")";
}

AtomSpace::AtomSpace(const Vocabulary& vocab) {
    for (const auto& [name, arity] : vocab.symbols()) {
        for (long code = 0; code < (1L << arity); ++code) {
            Atom a;
            a.symbol = name;
            a.pattern.resize(static_cast<size_t>(arity));
            for (int j = 0; j < arity; ++j)
                a.pattern[static_cast<size_t>(j)] = 1 + static_cast<int>((code >> (arity - 1 - j)) & 1);
            atoms_.push_back(std::move(a));
        }
    }
    Atom eq;
    eq.is_eq = true;
    atoms_.push_back(std::move(eq));

    // permutation induced by exchanging x1 and x2
    swap_perm_.resize(atoms_.size());
    for (size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].is_eq) {
            swap_perm_[i] = static_cast<int>(i);
            continue;
        }
        Atom flipped = atoms_[i];
        for (int& v : flipped.pattern) v = 3 - v;
        // locate flipped within the same symbol's block
        size_t j = i;
        while (j > 0 && atoms_[j - 1].symbol == atoms_[i].symbol) --j;
        for (;; ++j) {
            if (atoms_[j].pattern == flipped.pattern) {
                swap_perm_[i] = static_cast<int>(j);
                break;
            }
        }
    }
}

AtomicType AtomSpace::swapped(AtomicType t) const {
    AtomicType out;
    for (int i = 0; i < count(); ++i)
        if (t.contains(i)) out.bits |= 1ULL << swapped_index(i);
    return out;
}

std::vector<std::string> AtomSpace::names(AtomicType t) const {
    std::vector<std::string> out;
    for (int i = 0; i < count(); ++i)
        if (t.contains(i)) out.push_back(atoms_[static_cast<size_t>(i)].name());
    return out;
}

AtomicType swap_type(const AtomSpace& space, AtomicType t) { return space.swapped(t); }

} // namespace pse
