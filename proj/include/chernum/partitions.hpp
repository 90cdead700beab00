#pragma once

// Integer partitions: the index set of the Chern monomial basis of C_n and of
// the products of projective spaces of complex dimension n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chernum {

/// Weakly decreasing sequence of positive parts, largest first.
/// [2,1,1] names the Chern monomial c2*c1*c1; [] names the constant 1.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; they are sorted largest first.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Number of parts equal to k.
    int multiplicity(int k) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    /// Transposed Young diagram.
    Partition conjugate() const {
        std::vector<int> out(static_cast<std::size_t>(largest()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
        Partition c;
        c.parts_ = std::move(out);
        return c;
    }

    /// Multiset union (product of the named monomials).
    friend Partition operator*(const Partition& a, const Partition& b) {
        std::vector<int> parts;
        parts.reserve(a.length() + b.length());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   std::back_inserter(parts), std::greater<>());
        Partition out;
        out.parts_ = std::move(parts);
        return out;
    }

    /// Lexicographic on the part sequence. The canonical basis order is the
    /// reverse of this: [4] < [3,1] < [2,2] in canonical position.
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Orders partitions largest-first, i.e. canonical basis order.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// "[3,1]"; the empty partition is "[]".
inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

/// All partitions of n in canonical (reverse-lexicographic) order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        // Rightmost part greater than one.
        std::size_t k = a.size();
        while (k > 0 && a[k - 1] == 1) --k;
        if (k == 0) break;
        const int ones = static_cast<int>(a.size() - k);
        int rest = ones + 1;
        const int top = --a[k - 1];
        a.resize(k);
        while (rest > 0) {
            const int part = std::min(top, rest);
            a.push_back(part);
            rest -= part;
        }
    }
    return out;
}

/// pi(n).
inline std::size_t partition_count(int n) { return enumerate_partitions(n).size(); }

/// Enumerated partitions of n with reverse lookup. Fixes the column order of C_n.
class PartitionBasis {
public:
    explicit PartitionBasis(int n) : n_(n), list_(enumerate_partitions(n)) {
        for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
    }

    int degree() const { return n_; }
    std::size_t size() const { return list_.size(); }
    const std::vector<Partition>& partitions() const { return list_; }
    const Partition& operator[](std::size_t i) const { return list_[i]; }

    std::size_t index_of(const Partition& p) const {
        if (p.weight() != n_) throw std::invalid_argument("partition not of weight n");
        return index_.at(p);
    }

private:
    int n_;
    std::vector<Partition> list_;
    std::map<Partition, std::size_t> index_;
};

/// Position of p in enumerate_partitions(n).
inline std::size_t partition_index(const Partition& p, int n) {
    if (p.weight() != n) throw std::invalid_argument("partition not of weight n");
    return PartitionBasis(n).index_of(p);
}

}  // namespace chernum
