#pragma once

#include <compare>
#include <string>
#include <vector>

#include "symm/numeric.hpp"

namespace symm {

// partition of n, parts weakly decreasing; the empty partition is n = 0
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // comma-separated, largest first, e.g. "5,3,1"; "" is the empty partition
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool is_self_conjugate() const { return parts_ == conjugate().parts_; }

    // min(n - λ₁, n - λ'₁); rejects the empty partition
    int level() const;

    // delete the first row when λ₁ attains the level (ties delete the row),
    // otherwise the first column; result is a partition of level() boxes
    Partition tilde() const;

    // number of standard Young tableaux, by the hook-length formula
    Int dimension() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // lexicographic on the parts vector; canonical enumeration order is
    // reverse-lexicographic, i.e. descending under this comparison
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// canonical (reverse-lexicographic) order predicate: a enumerates before b
inline bool canonical_before(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

// all partitions of n in reverse-lexicographic order, (n) first, (1^n) last
std::vector<Partition> partitions_of(int n);

// the λ ⊢ n with level(λ) ≤ d, in reverse-lexicographic order, without
// enumerating all of p(n); built by gluing μ ⊢ k ≤ d under a row of n−k
// plus conjugates
std::vector<Partition> partitions_of_level_at_most(int n, int d);

std::vector<Partition> partitions_of_level_exactly(int n, int d);

}  // namespace symm
