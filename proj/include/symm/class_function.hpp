#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symm/partition.hpp"

namespace symm {

enum class Group { S, A };

// cycle type of a conjugacy class: parts are cycle lengths, fixed points
// included as 1s
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition p);
    static CycleType parse(const std::string& text) { return CycleType(Partition::parse(text)); }

    const Partition& partition() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    std::string to_string() const { return p_.to_string(); }
    int n() const { return p_.n(); }

    int mult(int len) const;  // f_len, the number of cycles of that length
    int fixed_points() const { return mult(1); }
    int cycles() const { return p_.rows(); }

    bool is_even() const;  // parity of Σ (length − 1)

    Int class_size() const;  // n! / ∏ i^{f_i} f_i!

    // cycle type of σ^m: each L-cycle falls apart into gcd(L,m) cycles of
    // length L/gcd(L,m)
    CycleType power(int m) const;

    bool operator==(const CycleType& o) const { return p_ == o.p_; }

private:
    Partition p_;
    std::vector<int> mult_;  // mult_[i] = number of parts equal to i
};

// cycle types that split into two A_n classes: all parts odd and distinct
std::vector<CycleType> an_split_classes(int n);

// canonical list of the conjugacy classes a class function is indexed by:
// all cycle types of n for S, the even ones for A, in reverse-lexicographic
// order; cached per (group, n)
class ClassList {
public:
    static const ClassList& get(Group g, int n);

    Group group;
    int n;
    std::vector<CycleType> types;
    std::vector<Rat> densities;  // class size / |group|
    Int group_order;

    int index_of(const Partition& ct) const;  // throws if absent
    std::optional<int> find(const Partition& ct) const;
    int size() const { return static_cast<int>(types.size()); }

private:
    ClassList() = default;
};

// class function with exact rational values, indexed by cycle type; A_n
// functions live in the S_n-invariant subspace (equal values on both halves
// of a split class), so they are indexed by even S_n cycle types
class ClassFunction {
public:
    ClassFunction(Group g, int n);

    static ClassFunction constant(Group g, int n, const Rat& c);
    static ClassFunction normalized_class_indicator(Group g, const CycleType& ct);
    // normalized indicator of a union of classes: 1_B / μ(B)
    static ClassFunction normalized_indicator(Group g, int n,
                                              const std::vector<CycleType>& classes);

    Group group() const { return list_->group; }
    int n() const { return list_->n; }
    const ClassList& classes() const { return *list_; }
    int size() const { return list_->size(); }

    const Rat& value(int i) const { return v_[i]; }
    const Rat& value(const Partition& ct) const { return v_[list_->index_of(ct)]; }
    void set(int i, const Rat& x) { v_[i] = x; }
    void set(const Partition& ct, const Rat& x) { v_[list_->index_of(ct)] = x; }

    Rat inner(const ClassFunction& g) const;  // Σ density·f·g
    Rat mean() const;
    Rat l1_norm() const;
    Rat l2_norm_sq() const;
    Rat lp_pow(unsigned q) const;    // Σ density·|f|^q, exact for integer q
    double lp_norm(double p) const;  // (Σ density·|f|^p)^{1/p}

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction scaled(const Rat& c) const;
    ClassFunction pointwise_mul(const ClassFunction& o) const;

    std::string to_json() const;
    static ClassFunction from_json(const std::string& text);

private:
    const ClassList* list_;
    std::vector<Rat> v_;
};

}  // namespace symm
