#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pse/structure.hpp"

namespace pse {

/// A structure whose Gaifman graph is a path, rooted at one endpoint:
/// root^P is a singleton holding p_1. Carries the unique enumeration
/// p_1..p_k starting at the root; the edges are e_i = (p_i, p_{i+1}).
class RootedPathStructure {
public:
    const Structure& base() const { return base_; }
    const std::vector<std::string>& enumeration() const { return enumeration_; }
    int size() const { return static_cast<int>(enumeration_.size()); }

    /// Point p_i, 1-based.
    const std::string& point(int i) const { return enumeration_[static_cast<size_t>(i - 1)]; }

    /// Edge e_i = (p_i, p_{i+1}), 1-based with i in [k-1].
    std::pair<std::string, std::string> edge(int i) const;

    /// atyp(e_i).
    AtomicType edge_type(int i) const;
    /// atyp(e_i^{-l}).
    AtomicType edge_power_type(int i, long l) const;

    friend RootedPathStructure as_rooted_path(const Structure& s);

private:
    RootedPathStructure(Structure base, std::vector<std::string> enumeration)
        : base_(std::move(base)), enumeration_(std::move(enumeration)) {}

    Structure base_;
    std::vector<std::string> enumeration_;
};

/// Validates that the Gaifman graph is a path with the root relation
/// holding exactly one endpoint, and derives the enumeration.
/// Throws ValidationError "not a path" / "bad root" otherwise.
RootedPathStructure as_rooted_path(const Structure& s);

/// P|i: substructure induced on {p_1..p_i}; the root stays p_1.
RootedPathStructure cut_down(const RootedPathStructure& p, int i);

/// P^|i: substructure induced on {p_i..p_k} with p_i declared the root.
RootedPathStructure cut_up(const RootedPathStructure& p, int i);

} // namespace pse
