#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pse {

inline const std::string kRootSymbol = "root";

/// A finite relational vocabulary: relation symbol -> arity.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Validates arities (>= 1) and, because atomic types are stored as
    /// 64-bit masks, rejects vocabularies with more than 64 two-variable
    /// atoms. Symbol names come deduplicated by the map already.
    static Vocabulary make(std::map<std::string, int> symbols);

    bool has(const std::string& symbol) const { return symbols_.count(symbol) != 0; }
    int arity(const std::string& symbol) const;
    const std::map<std::string, int>& symbols() const { return symbols_; }
    bool operator==(const Vocabulary& other) const { return symbols_ == other.symbols_; }

private:
    std::map<std::string, int> symbols_;
};

/// One atomic two-variable formula: either R(x_{p1},...,x_{pr}) for a
/// pattern p over {1,2}, or the equality x1=x2.
struct Atom {
    std::string symbol;       // empty for the equality atom
    std::vector<int> pattern; // entries in {1,2}
    bool is_eq = false;

    std::string name() const;
};

/// The set of atomic types a pair can satisfy is a subset of this space.
struct AtomicType {
    std::uint64_t bits = 0;

    bool subset_of(AtomicType other) const { return (bits & ~other.bits) == 0; }
    bool contains(int atom_index) const { return (bits >> atom_index) & 1; }

    friend bool operator==(AtomicType a, AtomicType b) { return a.bits == b.bits; }
    friend bool operator!=(AtomicType a, AtomicType b) { return a.bits != b.bits; }
};

/// Canonical enumeration of all two-variable atomic formulas of a
/// vocabulary: per symbol (in name order) the patterns {1,2}^arity in
/// lexicographic order, then the equality atom last. On path structures
/// every tuple has at most two distinct components, so these atoms are a
/// complete description of any pair.
class AtomSpace {
public:
    explicit AtomSpace(const Vocabulary& vocab);

    int count() const { return static_cast<int>(atoms_.size()); }
    const Atom& atom(int i) const { return atoms_[static_cast<size_t>(i)]; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int eq_index() const { return count() - 1; }

    /// Index of the atom obtained by exchanging x1 and x2.
    int swapped_index(int i) const { return swap_perm_[static_cast<size_t>(i)]; }

    AtomicType swapped(AtomicType t) const;

    std::vector<std::string> names(AtomicType t) const;

private:
    std::vector<Atom> atoms_;
    std::vector<int> swap_perm_;
};

/// Atomic type of the pair with components exchanged. An involution.
AtomicType swap_type(const AtomSpace& space, AtomicType t);

/// e^{-l}: the pair unchanged for even l, reversed for odd l.
template <typename T>
std::pair<T, T> edge_power(const std::pair<T, T>& e, long l) {
    return (l % 2 == 0) ? e : std::pair<T, T>(e.second, e.first);
}

} // namespace pse
