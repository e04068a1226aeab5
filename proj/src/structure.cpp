#include "pse/structure.hpp"

#include <algorithm>

#include "pse/errors.hpp"

namespace pse {

Structure Structure::validate(Vocabulary vocab, std::vector<std::string> universe,
                              RelationMap relations) {
    if (universe.empty())
        throw ValidationError("structure: empty universe");

    Structure s;
    for (size_t i = 0; i < universe.size(); ++i) {
        if (!s.index_.emplace(universe[i], static_cast<int>(i)).second)
            throw ValidationError("structure: duplicate element '" + universe[i] + "'");
    }

    for (const auto& [symbol, tuples] : relations) {
        if (!vocab.has(symbol))
            throw ValidationError("structure: unknown relation symbol '" + symbol + "'");
        size_t arity = static_cast<size_t>(vocab.arity(symbol));
        for (const Tuple& t : tuples) {
            if (t.size() != arity)
                throw ValidationError("structure: arity mismatch in relation '" + symbol + "'");
            for (const std::string& e : t)
                if (!s.index_.count(e))
                    throw ValidationError("structure: unknown element '" + e + "' in relation '" +
                                          symbol + "'");
        }
    }

    s.vocab_ = std::move(vocab);
    s.universe_ = std::move(universe);
    s.relations_ = std::move(relations);
    // make all symbols present so relation() lookups are total
    for (const auto& [symbol, arity] : s.vocab_.symbols()) s.relations_[symbol];
    s.space_ = std::make_shared<AtomSpace>(s.vocab_);
    return s;
}

const std::set<Tuple>& Structure::relation(const std::string& symbol) const {
    auto it = relations_.find(symbol);
    if (it == relations_.end())
        throw ValidationError("structure: unknown relation symbol '" + symbol + "'");
    return it->second;
}

bool Structure::has_tuple(const std::string& symbol, const Tuple& tuple) const {
    return relation(symbol).count(tuple) != 0;
}

int Structure::index_of(const std::string& element) const {
    auto it = index_.find(element);
    return it == index_.end() ? -1 : it->second;
}

AtomicType Structure::atomic_type(const std::string& a, const std::string& b) const {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0) throw ValidationError("structure: unknown element '" + a + "'");
    if (ib < 0) throw ValidationError("structure: unknown element '" + b + "'");
    return atomic_type_idx(ia, ib);
}

AtomicType Structure::atomic_type_idx(int a, int b) const {
    const std::string& ea = universe_[static_cast<size_t>(a)];
    const std::string& eb = universe_[static_cast<size_t>(b)];
    AtomicType out;
    Tuple probe;
    for (int i = 0; i < space_->count(); ++i) {
        const Atom& atom = space_->atom(i);
        if (atom.is_eq) {
            if (a == b) out.bits |= 1ULL << i;
            continue;
        }
        probe.clear();
        for (int v : atom.pattern) probe.push_back(v == 1 ? ea : eb);
        if (relations_.at(atom.symbol).count(probe)) out.bits |= 1ULL << i;
    }
    return out;
}

Graph gaifman(const Structure& s) {
    Graph g(s.universe());
    for (const auto& [symbol, tuples] : s.relations()) {
        for (const Tuple& t : tuples) {
            for (size_t i = 0; i < t.size(); ++i)
                for (size_t j = i + 1; j < t.size(); ++j)
                    if (t[i] != t[j]) g.insert_edge(s.index_of(t[i]), s.index_of(t[j]));
        }
    }
    return g;
}

Structure induced_substructure(const Structure& s, const std::set<std::string>& keep) {
    std::vector<std::string> universe;
    for (const std::string& e : s.universe())
        if (keep.count(e)) universe.push_back(e);
    RelationMap relations;
    for (const auto& [symbol, tuples] : s.relations()) {
        auto& out = relations[symbol];
        for (const Tuple& t : tuples) {
            bool inside = std::all_of(t.begin(), t.end(),
                                      [&](const std::string& e) { return keep.count(e) != 0; });
            if (inside) out.insert(t);
        }
    }
    return Structure::validate(s.vocabulary(), std::move(universe), std::move(relations));
}

Structure with_root(const Structure& s, const std::string& new_root) {
    if (!s.vocabulary().has(kRootSymbol) || s.vocabulary().arity(kRootSymbol) != 1)
        throw ValidationError("structure: vocabulary lacks unary 'root'");
    if (!s.has_element(new_root))
        throw ValidationError("structure: unknown element '" + new_root + "'");
    RelationMap relations = s.relations();
    relations[kRootSymbol] = {{new_root}};
    return Structure::validate(s.vocabulary(), s.universe(), std::move(relations));
}

PairTypeTable::PairTypeTable(const Structure& s) : n_(s.size()) {
    bits_.resize(static_cast<size_t>(n_) * static_cast<size_t>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            bits_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)] =
                s.atomic_type_idx(a, b).bits;
}

} // namespace pse
