#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pse/graph.hpp"
#include "pse/vocabulary.hpp"

namespace pse {

using Tuple = std::vector<std::string>;
using RelationMap = std::map<std::string, std::set<Tuple>>;

/// A finite relational structure. Immutable after validation; the cut and
/// reroot helpers below return fresh structures, so shared reads are safe.
class Structure {
public:
    /// Checks all invariants: non-empty universe of distinct elements,
    /// every relation symbol known, tuple lengths matching arities, tuple
    /// components drawn from the universe. Reports the first violation.
    static Structure validate(Vocabulary vocab, std::vector<std::string> universe,
                              RelationMap relations);

    const Vocabulary& vocabulary() const { return vocab_; }
    const std::vector<std::string>& universe() const { return universe_; }
    int size() const { return static_cast<int>(universe_.size()); }
    const RelationMap& relations() const { return relations_; }
    const std::set<Tuple>& relation(const std::string& symbol) const;
    bool has_tuple(const std::string& symbol, const Tuple& tuple) const;

    /// Universe position of an element, or -1.
    int index_of(const std::string& element) const;
    bool has_element(const std::string& element) const { return index_of(element) >= 0; }

    const AtomSpace& atom_space() const { return *space_; }

    /// atyp((a,b)): the set of atomic two-variable formulas the ordered
    /// pair satisfies. Throws if either element is unknown.
    AtomicType atomic_type(const std::string& a, const std::string& b) const;
    AtomicType atomic_type_idx(int a, int b) const;

private:
    Structure() = default;

    Vocabulary vocab_;
    std::vector<std::string> universe_;
    RelationMap relations_;
    std::map<std::string, int> index_;
    std::shared_ptr<const AtomSpace> space_;
};

/// Gaifman graph: vertices are the universe, an edge joins two distinct
/// elements appearing together in some tuple.
Graph gaifman(const Structure& s);

/// Substructure induced on `keep` (kept in universe order).
Structure induced_substructure(const Structure& s, const std::set<std::string>& keep);

/// Same structure with root reinterpreted as the given singleton.
/// Requires the vocabulary to contain `root` (arity 1).
Structure with_root(const Structure& s, const std::string& new_root);

/// All pair types of a structure, indexed by universe positions. The
/// solvers' inner loops test mask inclusions against this table.
class PairTypeTable {
public:
    explicit PairTypeTable(const Structure& s);
    AtomicType at(int a, int b) const {
        return {bits_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)]};
    }
    int size() const { return n_; }

private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

} // namespace pse
