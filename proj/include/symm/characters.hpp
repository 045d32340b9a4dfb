#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "symm/class_function.hpp"

namespace symm {

struct CharacterTable {
    Group group;
    int n;
    std::vector<Partition> lambdas;     // row labels
    std::vector<CycleType> types;       // column labels
    std::vector<std::vector<Int>> values;

    std::string to_csv() const;
    std::string to_json() const;
};

// exact character values of S_n (and restrictions to A_n) via the
// Murnaghan-Nakayama rule, with a bounded memo shared across calls
class CharacterEvaluator {
public:
    explicit CharacterEvaluator(size_t memo_cap = size_t(1) << 24) : cap_(memo_cap) {}

    // χ_λ at the class of ct; longest cycle consumed first
    Int value(const Partition& lambda, const CycleType& ct);
    Int value(const Partition& lambda, const Partition& ct) { return value(lambda, CycleType(ct)); }

    Int dimension(const Partition& lambda) const { return lambda.dimension(); }

    // χ_λ(σ) for σ with ℓ fixed points and every other cycle longer than
    // d = level(λ): equals dimension((λ₁−n+ℓ, λ₂, …)); requires λ₁ = n−d
    // and ℓ ≥ d + λ₂
    Int long_cycle_value(const Partition& lambda, int ell);

    // multiplicity of each μ ⊢ n−m in the m-step restriction of λ
    std::map<Partition, Int> branching_multiplicities(const Partition& lambda, int m);

    // value of the restricted irreducible χ_λ|_{A_n} for λ ≠ λ' on an even
    // class; self-conjugate λ split and are out of scope
    Int an_value(const Partition& lambda, const CycleType& ct);

    // the character of λ as a ClassFunction on the given group
    ClassFunction character(Group g, const Partition& lambda);

    // full table; rows in reverse-lexicographic order; for A, rows are the
    // unordered pairs {λ, λ'} represented by their earlier member and
    // self-conjugate λ are omitted
    CharacterTable table(Group g, int n, int cap = 20, int threads = 0);

    void clear_memo();
    size_t memo_entries() const;
    size_t memo_resets() const { return resets_; }

    bool save_cache(const std::string& path) const;
    bool load_cache(const std::string& path);

private:
    using Key = std::vector<int32_t>;
    struct KeyHash {
        size_t operator()(const Key& k) const {
            uint64_t h = 1469598103934665603ull;
            for (int32_t x : k) {
                for (int b = 0; b < 4; b++) {
                    h ^= static_cast<uint8_t>(x >> (8 * b));
                    h *= 1099511628211ull;
                }
            }
            return static_cast<size_t>(h);
        }
    };

    Int mn_recurse(const std::vector<int>& shape, const std::vector<int>& cycles, size_t pos);

    size_t cap_;
    mutable std::mutex mu_;
    std::unordered_map<Key, Int, KeyHash> memo_;
    size_t resets_ = 0;
};

}  // namespace symm
