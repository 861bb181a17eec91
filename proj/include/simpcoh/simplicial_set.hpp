#pragma once

/**
 * Finite simplicial sets and Delta-sets truncated at a dimension cap.
 *
 * Simplices of dimension q are the integers 0 .. size(q)-1. Face tables exist
 * for 1 <= q <= cap, degeneracy tables for 0 <= q < cap. A Delta-set carries
 * no degeneracy tables. Construction checks every simplicial identity that the
 * cap allows and throws LawViolation naming the first one that fails.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monotone.hpp"

namespace simpcoh {

using Index = std::uint32_t;
using Table = std::vector<Index>;

enum class Kind { simplicial, delta };

struct Simplex {
    int dim = 0;
    Index index = 0;
    auto operator<=>(const Simplex&) const = default;
};

class SimplicialSet {
public:
    /// faces[q][i] for q in 0..cap (faces[0] empty); degeneracies[q][i] for q < cap.
    using Faces = std::vector<std::vector<Table>>;
    using Degeneracies = std::vector<std::vector<Table>>;
    using Labels = std::vector<std::vector<std::string>>;

    SimplicialSet() = default;

    SimplicialSet(Kind kind, int cap, std::vector<std::size_t> cardinalities, Faces faces,
                  Degeneracies degeneracies = {}, Labels labels = {})
        : kind_(kind),
          cap_(cap),
          card_(std::move(cardinalities)),
          faces_(std::move(faces)),
          degens_(std::move(degeneracies)),
          labels_(std::move(labels)) {
        check_shapes();
        check_identities();
    }

    Kind kind() const { return kind_; }
    bool is_delta() const { return kind_ == Kind::delta; }
    int dim_cap() const { return cap_; }

    std::size_t size(int q) const {
        if (q < 0 || q > cap_) throw CapExceeded("dimension " + std::to_string(q) + " above cap " + std::to_string(cap_));
        return card_[static_cast<std::size_t>(q)];
    }
    const std::vector<std::size_t>& cardinalities() const { return card_; }

    Index face(int q, int i, Index s) const { return faces_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)][s]; }
    Index degeneracy(int q, int i, Index s) const {
        return degens_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)][s];
    }
    const Faces& face_tables() const { return faces_; }
    const Degeneracies& degeneracy_tables() const { return degens_; }
    const Labels& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

    std::string label(int q, Index s) const {
        if (has_labels()) return labels_[static_cast<std::size_t>(q)][s];
        return std::to_string(q) + ":" + std::to_string(s);
    }

    bool operator==(const SimplicialSet& o) const {
        return kind_ == o.kind_ && cap_ == o.cap_ && card_ == o.card_ && faces_ == o.faces_ && degens_ == o.degens_;
    }

private:
    void check_shapes() const {
        if (cap_ < 0) throw ArityMismatch("dimension cap must be nonnegative");
        if (card_.size() != static_cast<std::size_t>(cap_) + 1)
            throw ArityMismatch("cardinalities must have cap + 1 entries");
        if (faces_.size() != static_cast<std::size_t>(cap_) + 1)
            throw ArityMismatch("faces must have cap + 1 levels");
        if (!faces_[0].empty()) throw ArityMismatch("dimension 0 has no faces");
        for (int q = 1; q <= cap_; ++q) {
            const auto& lvl = faces_[static_cast<std::size_t>(q)];
            if (lvl.size() != static_cast<std::size_t>(q) + 1)
                throw ArityMismatch("dimension " + std::to_string(q) + " needs " + std::to_string(q + 1) + " face tables");
            for (const auto& t : lvl) {
                if (t.size() != card_[static_cast<std::size_t>(q)])
                    throw ArityMismatch("face table length differs from cardinality in dimension " + std::to_string(q));
                for (Index x : t)
                    if (x >= card_[static_cast<std::size_t>(q) - 1])
                        throw ArityMismatch("face value out of range in dimension " + std::to_string(q));
            }
        }
        if (kind_ == Kind::delta) {
            if (!degens_.empty()) throw ArityMismatch("a Delta-set has no degeneracies");
        } else {
            if (degens_.size() != static_cast<std::size_t>(cap_))
                throw ArityMismatch("degeneracies must have cap levels");
            for (int q = 0; q < cap_; ++q) {
                const auto& lvl = degens_[static_cast<std::size_t>(q)];
                if (lvl.size() != static_cast<std::size_t>(q) + 1)
                    throw ArityMismatch("dimension " + std::to_string(q) + " needs " + std::to_string(q + 1) +
                                        " degeneracy tables");
                for (const auto& t : lvl) {
                    if (t.size() != card_[static_cast<std::size_t>(q)])
                        throw ArityMismatch("degeneracy table length differs from cardinality in dimension " +
                                            std::to_string(q));
                    for (Index x : t)
                        if (x >= card_[static_cast<std::size_t>(q) + 1])
                            throw ArityMismatch("degeneracy value out of range in dimension " + std::to_string(q));
                }
            }
        }
        if (!labels_.empty()) {
            if (labels_.size() != card_.size()) throw ArityMismatch("labels must have cap + 1 levels");
            for (std::size_t q = 0; q < card_.size(); ++q)
                if (labels_[q].size() != card_[q]) throw ArityMismatch("label count differs from cardinality");
        }
    }

    static std::string where(int q, Index s) { return " at dimension " + std::to_string(q) + " simplex " + std::to_string(s); }

    void check_identities() const {
        for (int q = 2; q <= cap_; ++q)
            for (Index s = 0; s < card_[static_cast<std::size_t>(q)]; ++s)
                for (int j = 1; j <= q; ++j)
                    for (int i = 0; i < j; ++i)
                        if (face(q - 1, i, face(q, j, s)) != face(q - 1, j - 1, face(q, i, s)))
                            throw LawViolation("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                                               std::to_string(j - 1) + " d" + std::to_string(i) + " fails" + where(q, s));
        if (kind_ == Kind::delta) return;
        for (int q = 0; q < cap_; ++q)
            for (Index s = 0; s < card_[static_cast<std::size_t>(q)]; ++s)
                for (int j = 0; j <= q; ++j) {
                    Index t = degeneracy(q, j, s);
                    for (int i = 0; i <= q + 1; ++i) {
                        Index lhs = face(q + 1, i, t);
                        std::optional<Index> rhs;
                        std::string rule;
                        if (i == j || i == j + 1) {
                            rhs = s;
                            rule = "d" + std::to_string(i) + " s" + std::to_string(j) + " = id";
                        } else if (i < j) {
                            rhs = degeneracy(q - 1, j - 1, face(q, i, s));
                            rule = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j - 1) +
                                   " d" + std::to_string(i);
                        } else {
                            rhs = degeneracy(q - 1, j, face(q, i - 1, s));
                            rule = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j) + " d" +
                                   std::to_string(i - 1);
                        }
                        if (lhs != *rhs) throw LawViolation(rule + " fails" + where(q, s));
                    }
                    if (q + 1 < cap_)
                        for (int i = 0; i <= j; ++i)
                            if (degeneracy(q + 1, i, t) != degeneracy(q + 1, j + 1, degeneracy(q, i, s)))
                                throw LawViolation("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                                                   std::to_string(j + 1) + " s" + std::to_string(i) + " fails" + where(q, s));
                }
    }

    Kind kind_ = Kind::simplicial;
    int cap_ = 0;
    std::vector<std::size_t> card_{0};
    Faces faces_{{}};
    Degeneracies degens_;
    Labels labels_;
};

/// theta*(s) for s of dimension theta.target().
inline Index structure_map(const SimplicialSet& K, const MonotoneMap& theta, Index s) {
    if (theta.source() > K.dim_cap()) throw CapExceeded("structure map needs dimension " + std::to_string(theta.source()));
    if (K.is_delta() && !theta.is_injective()) throw InvalidArgument("a Delta-set only admits injective structure maps");
    if (s >= K.size(theta.target())) throw InvalidArgument("simplex index out of range");
    GeneratorWord w = generator_word(theta);
    int q = theta.target();
    for (int i : w.deleted) s = K.face(q--, i, s);
    for (int j : w.repeated) s = K.degeneracy(q++, j, s);
    return s;
}

/// The vertex list of a simplex.
inline std::vector<Index> vertices(const SimplicialSet& K, int q, Index s) {
    std::vector<Index> v;
    for (int k = 0; k <= q; ++k) v.push_back(structure_map(K, MonotoneMap(q, {k}), s));
    return v;
}

inline bool is_degenerate(const SimplicialSet& K, int q, Index s) {
    if (K.is_delta() || q == 0) return false;
    for (int i = 0; i < q; ++i)
        if (K.degeneracy(q - 1, i, K.face(q, i, s)) == s) return true;
    return false;
}

/// Eilenberg-Zilber data: s = epi*(base) with base nondegenerate.
struct EZDecomposition {
    MonotoneMap epi;
    int base_dim = 0;
    Index base = 0;
};

inline EZDecomposition ez_decompose(const SimplicialSet& K, int q, Index s) {
    if (K.is_delta()) return {MonotoneMap::identity(q), q, s};
    for (int i = 0; i < q; ++i) {
        Index t = K.face(q, i, s);
        if (K.degeneracy(q - 1, i, t) == s) {
            EZDecomposition inner = ez_decompose(K, q - 1, t);
            return {compose(inner.epi, MonotoneMap::degeneracy(q - 1, i)), inner.base_dim, inner.base};
        }
    }
    return {MonotoneMap::identity(q), q, s};
}

inline std::vector<Index> nondegenerate(const SimplicialSet& K, int q) {
    std::vector<Index> out;
    for (Index s = 0; s < K.size(q); ++s)
        if (!is_degenerate(K, q, s)) out.push_back(s);
    return out;
}

/// Per-dimension index maps between two truncated sets.
class SimplicialMap {
public:
    using Maps = std::vector<Table>;

    SimplicialMap() = default;

    /// Validates against source and target up to the smaller cap.
    SimplicialMap(const SimplicialSet& source, const SimplicialSet& target, Maps maps) : maps_(std::move(maps)) {
        int cap = std::min(source.dim_cap(), target.dim_cap());
        if (maps_.size() != static_cast<std::size_t>(cap) + 1)
            throw ArityMismatch("map needs min(cap) + 1 levels, got " + std::to_string(maps_.size()));
        for (int q = 0; q <= cap; ++q) {
            const auto& m = maps_[static_cast<std::size_t>(q)];
            if (m.size() != source.size(q)) throw ArityMismatch("map level " + std::to_string(q) + " has wrong length");
            for (Index x : m)
                if (x >= target.size(q)) throw ArityMismatch("map value out of range in dimension " + std::to_string(q));
        }
        for (int q = 1; q <= cap; ++q)
            for (Index s = 0; s < source.size(q); ++s)
                for (int i = 0; i <= q; ++i)
                    if (at(q - 1, source.face(q, i, s)) != target.face(q, i, at(q, s)))
                        throw LawViolation("map does not commute with d" + std::to_string(i) + " at dimension " +
                                           std::to_string(q) + " simplex " + std::to_string(s));
        if (!source.is_delta() && !target.is_delta())
            for (int q = 0; q < cap; ++q)
                for (Index s = 0; s < source.size(q); ++s)
                    for (int i = 0; i <= q; ++i)
                        if (at(q + 1, source.degeneracy(q, i, s)) != target.degeneracy(q, i, at(q, s)))
                            throw LawViolation("map does not commute with s" + std::to_string(i) + " at dimension " +
                                               std::to_string(q) + " simplex " + std::to_string(s));
    }

    static SimplicialMap identity(const SimplicialSet& K) {
        Maps m;
        for (int q = 0; q <= K.dim_cap(); ++q) {
            Table t(K.size(q));
            for (Index s = 0; s < t.size(); ++s) t[s] = s;
            m.push_back(std::move(t));
        }
        SimplicialMap f;
        f.maps_ = std::move(m);
        return f;
    }

    int dim_cap() const { return static_cast<int>(maps_.size()) - 1; }
    Index at(int q, Index s) const { return maps_[static_cast<std::size_t>(q)][s]; }
    const Maps& maps() const { return maps_; }

    bool is_injective() const {
        for (const auto& m : maps_) {
            std::vector<char> seen;
            for (Index x : m) {
                if (x >= seen.size()) seen.resize(x + 1, 0);
                if (seen[x]) return false;
                seen[x] = 1;
            }
        }
        return true;
    }

    bool is_bijective(const SimplicialSet& target) const {
        for (int q = 0; q <= dim_cap(); ++q)
            if (maps_[static_cast<std::size_t>(q)].size() != target.size(q)) return false;
        return is_injective();
    }

    bool operator==(const SimplicialMap&) const = default;

private:
    Maps maps_;
};

/// g o f, truncated to the smaller cap.
inline SimplicialMap compose(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& g,
                             const SimplicialMap& f) {
    int cap = std::min(f.dim_cap(), g.dim_cap());
    cap = std::min({cap, source.dim_cap(), target.dim_cap()});
    SimplicialMap::Maps m;
    for (int q = 0; q <= cap; ++q) {
        Table t(f.maps()[static_cast<std::size_t>(q)].size());
        for (Index s = 0; s < t.size(); ++s) t[s] = g.at(q, f.at(q, s));
        m.push_back(std::move(t));
    }
    return SimplicialMap(source, target, std::move(m));
}

/// Inverse of a bijective map (validated as a map target -> source).
inline SimplicialMap inverse(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
    if (!f.is_bijective(target)) throw InvalidArgument("map is not bijective");
    SimplicialMap::Maps m;
    for (int q = 0; q <= f.dim_cap(); ++q) {
        Table t(target.size(q));
        for (Index s = 0; s < source.size(q); ++s) t[f.at(q, s)] = s;
        m.push_back(std::move(t));
    }
    return SimplicialMap(target, source, std::move(m));
}

/// A set whose simplices are the keys listed per level, together with key lookup.
template <class Key>
struct Tabulated {
    SimplicialSet set;
    std::vector<std::vector<Key>> keys;
    std::vector<std::map<Key, Index>> index;

    Index find(int q, const Key& k) const {
        auto it = index[static_cast<std::size_t>(q)].find(k);
        if (it == index[static_cast<std::size_t>(q)].end()) throw InvalidArgument("no simplex with this key");
        return it->second;
    }
    bool contains(int q, const Key& k) const { return index[static_cast<std::size_t>(q)].count(k) > 0; }
};

/**
 * Builds a set from explicit keys. face(q, i, key) gives the key of the i-th
 * face of a q-simplex; degen(q, i, key) the key of its i-th degeneracy (only
 * called for simplicial kinds). label(q, key) may return an empty string to
 * skip labels.
 */
template <class Key, class FaceFn, class DegenFn, class LabelFn>
Tabulated<Key> tabulate(Kind kind, int cap, std::vector<std::vector<Key>> levels, FaceFn face, DegenFn degen,
                        LabelFn label) {
    if (levels.size() != static_cast<std::size_t>(cap) + 1) throw ArityMismatch("tabulate needs cap + 1 levels");
    Tabulated<Key> out;
    out.index.resize(levels.size());
    std::vector<std::size_t> card;
    for (std::size_t q = 0; q < levels.size(); ++q) {
        for (Index s = 0; s < levels[q].size(); ++s)
            if (!out.index[q].emplace(levels[q][s], s).second) throw InvalidArgument("duplicate simplex key");
        card.push_back(levels[q].size());
    }
    auto lookup = [&](int q, const Key& k, const char* what) {
        auto it = out.index[static_cast<std::size_t>(q)].find(k);
        if (it == out.index[static_cast<std::size_t>(q)].end())
            throw LawViolation(std::string(what) + " leaves the listed simplices in dimension " + std::to_string(q));
        return it->second;
    };
    SimplicialSet::Faces faces(levels.size());
    for (int q = 1; q <= cap; ++q)
        for (int i = 0; i <= q; ++i) {
            Table t(card[static_cast<std::size_t>(q)]);
            for (Index s = 0; s < t.size(); ++s) t[s] = lookup(q - 1, face(q, i, levels[static_cast<std::size_t>(q)][s]), "face");
            faces[static_cast<std::size_t>(q)].push_back(std::move(t));
        }
    SimplicialSet::Degeneracies degens;
    if (kind == Kind::simplicial) {
        degens.resize(static_cast<std::size_t>(cap));
        for (int q = 0; q < cap; ++q)
            for (int i = 0; i <= q; ++i) {
                Table t(card[static_cast<std::size_t>(q)]);
                for (Index s = 0; s < t.size(); ++s)
                    t[s] = lookup(q + 1, degen(q, i, levels[static_cast<std::size_t>(q)][s]), "degeneracy");
                degens[static_cast<std::size_t>(q)].push_back(std::move(t));
            }
    }
    SimplicialSet::Labels labels(levels.size());
    bool any = false;
    for (std::size_t q = 0; q < levels.size(); ++q)
        for (const auto& k : levels[q]) {
            labels[q].push_back(label(static_cast<int>(q), k));
            if (!labels[q].back().empty()) any = true;
        }
    if (!any) labels.clear();
    out.set = SimplicialSet(kind, cap, std::move(card), std::move(faces), std::move(degens), std::move(labels));
    out.keys = std::move(levels);
    return out;
}

template <class Key, class FaceFn, class DegenFn>
Tabulated<Key> tabulate(Kind kind, int cap, std::vector<std::vector<Key>> levels, FaceFn face, DegenFn degen) {
    return tabulate(kind, cap, std::move(levels), face, degen, [](int, const Key&) { return std::string(); });
}

}  // namespace simpcoh
