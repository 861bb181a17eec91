#pragma once

/**
 * Order-preserving maps between the finite ordinals [m] = {0 < 1 < ... < m}.
 *
 * These are the morphisms of the simplex category. A map [m] -> [n] is stored
 * as its value list of length m + 1.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace simpcoh {

class MonotoneMap {
public:
    MonotoneMap() = default;

    /// Values v[0] <= ... <= v[m], each in [0, target].
    MonotoneMap(int target, std::vector<int> values) : target_(target), values_(std::move(values)) {
        if (target_ < 0) throw InvalidArgument("monotone map target must be nonnegative");
        if (values_.empty()) throw InvalidArgument("monotone map needs a nonempty source");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] < 0 || values_[i] > target_)
                throw InvalidArgument("monotone map value out of range");
            if (i > 0 && values_[i] < values_[i - 1])
                throw InvalidArgument("monotone map is not nondecreasing");
        }
    }

    static MonotoneMap identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
        return MonotoneMap(n, std::move(v));
    }

    /// Coface d(i): [n-1] -> [n], skipping i.
    static MonotoneMap face(int n, int i) {
        if (n < 1 || i < 0 || i > n) throw InvalidArgument("face index out of range");
        std::vector<int> v;
        for (int j = 0; j <= n; ++j)
            if (j != i) v.push_back(j);
        return MonotoneMap(n, std::move(v));
    }

    /// Codegeneracy s(i): [n+1] -> [n], hitting i twice.
    static MonotoneMap degeneracy(int n, int i) {
        if (n < 0 || i < 0 || i > n) throw InvalidArgument("degeneracy index out of range");
        std::vector<int> v;
        for (int j = 0; j <= n; ++j) {
            v.push_back(j);
            if (j == i) v.push_back(j);
        }
        return MonotoneMap(n, std::move(v));
    }

    /// The constant map [m] -> [n] with value k.
    static MonotoneMap constant(int m, int n, int k) {
        return MonotoneMap(n, std::vector<int>(static_cast<std::size_t>(m) + 1, k));
    }

    int source() const { return static_cast<int>(values_.size()) - 1; }
    int target() const { return target_; }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& values() const { return values_; }

    bool is_injective() const {
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] == values_[i - 1]) return false;
        return true;
    }

    bool is_surjective() const {
        return values_.front() == 0 && values_.back() == target_ && image_size() == target_ + 1;
    }

    bool is_identity() const { return target_ == source() && is_injective(); }

    int image_size() const {
        int count = 1;
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] != values_[i - 1]) ++count;
        return count;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(values_[i]);
        }
        return s + "]->" + std::to_string(target_);
    }

    auto operator<=>(const MonotoneMap&) const = default;
    bool operator==(const MonotoneMap&) const = default;

private:
    int target_ = 0;
    std::vector<int> values_{0};
};

/// theta o eta; requires target(eta) == source(theta).
inline MonotoneMap compose(const MonotoneMap& theta, const MonotoneMap& eta) {
    if (eta.target() != theta.source())
        throw InvalidArgument("compose: " + eta.str() + " does not land in the source of " + theta.str());
    std::vector<int> v;
    v.reserve(eta.values().size());
    for (int x : eta.values()) v.push_back(theta(x));
    return MonotoneMap(theta.target(), std::move(v));
}

/// theta = mono o epi with epi surjective and mono injective.
struct EpiMono {
    MonotoneMap epi;
    MonotoneMap mono;
};

inline EpiMono epi_mono_factor(const MonotoneMap& theta) {
    std::vector<int> image;
    std::vector<int> epi_values;
    for (int x : theta.values()) {
        if (image.empty() || image.back() != x) image.push_back(x);
        epi_values.push_back(static_cast<int>(image.size()) - 1);
    }
    int k = static_cast<int>(image.size()) - 1;
    return {MonotoneMap(k, std::move(epi_values)), MonotoneMap(theta.target(), std::move(image))};
}

/// Indices of the generator word: theta* = (degeneracies) o (faces), where the
/// faces delete the vertices listed in `deleted` (applied in decreasing order)
/// and the degeneracies repeat the vertices listed in `repeated` (applied in
/// increasing order).
struct GeneratorWord {
    std::vector<int> deleted;
    std::vector<int> repeated;
};

inline GeneratorWord generator_word(const MonotoneMap& theta) {
    auto [epi, mono] = epi_mono_factor(theta);
    GeneratorWord w;
    std::size_t pos = 0;
    for (int j = 0; j <= mono.target(); ++j) {
        if (pos < mono.values().size() && mono.values()[pos] == j)
            ++pos;
        else
            w.deleted.push_back(j);
    }
    std::reverse(w.deleted.begin(), w.deleted.end());
    for (int j = 0; j < epi.source(); ++j)
        if (epi(j) == epi(j + 1)) w.repeated.push_back(j);
    return w;
}

/// All monotone maps [m] -> [n], lexicographic in their value lists.
inline std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
    std::vector<MonotoneMap> out;
    if (m < 0 || n < 0) return out;
    std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
    while (true) {
        out.emplace_back(n, v);
        int i = m;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        int next = v[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j <= m; ++j) v[static_cast<std::size_t>(j)] = next;
    }
    return out;
}

inline std::vector<MonotoneMap> enumerate_injective(int m, int n) {
    std::vector<MonotoneMap> out;
    for (auto& f : enumerate_monotone(m, n))
        if (f.is_injective()) out.push_back(f);
    return out;
}

inline std::vector<MonotoneMap> enumerate_surjective(int m, int n) {
    std::vector<MonotoneMap> out;
    for (auto& f : enumerate_monotone(m, n))
        if (f.is_surjective()) out.push_back(f);
    return out;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace simpcoh
