#pragma once

// brute-force oracles built by direct enumeration of permutations; these are
// deliberately independent of the recursive character engine

#include <map>
#include <stdexcept>
#include <vector>

#include "symm/class_function.hpp"
#include "symm/numeric.hpp"
#include "symm/partition.hpp"
#include "symm/perm.hpp"

namespace oracle {

using symm::ClassFunction;
using symm::ClassList;
using symm::CycleType;
using symm::Group;
using symm::Int;
using symm::Partition;
using symm::Rat;

// class sizes counted one permutation at a time
inline std::map<Partition, long> brute_class_sizes(int n) {
    std::map<Partition, long> sizes;
    symm::for_each_perm(n, [&](const std::vector<int>& p) {
        sizes[Partition(symm::cycle_lengths(p))]++;
    });
    return sizes;
}

// permutations of S_r with every cycle longer than d
inline Int brute_no_short_cycles(int r, int d) {
    long hits = 0;
    symm::for_each_perm(r, [&](const std::vector<int>& p) {
        for (int len : symm::cycle_lengths(p))
            if (len <= d) return;
        hits++;
    });
    return Int(hits);
}

// convolution algebra from structure constants, enumerated once per (g, n)
class BruteAlgebra {
public:
    BruteAlgebra(Group g, int n) : cl_(ClassList::get(g, n)) {
        int k = cl_.size();
        cnt_.assign(k, std::vector<std::vector<Int>>(k, std::vector<Int>(k, Int(0))));
        std::vector<std::vector<int>> reps;
        for (int z = 0; z < k; z++) reps.push_back(symm::perm_with_type(cl_.types[z]));
        symm::for_each_perm(n, [&](const std::vector<int>& x) {
            if (g == Group::A && !symm::is_even_perm(x)) return;
            int a = index_of(symm::cycle_lengths(x));
            std::vector<int> xi = symm::inverse(x);
            for (int z = 0; z < k; z++) {
                int b = index_of(symm::cycle_lengths(symm::compose(xi, reps[z])));
                cnt_[a][b][z] += 1;
            }
        });
    }

    // h(z) = E_x f(x) g(x^{-1} z), expectation over the group
    ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) const {
        if (&f.classes() != &cl_ || &g.classes() != &cl_)
            throw std::invalid_argument("brute convolve: class list mismatch");
        int k = cl_.size();
        ClassFunction h(cl_.group, cl_.n);
        for (int z = 0; z < k; z++) {
            Rat acc(0);
            for (int a = 0; a < k; a++) {
                if (f.value(a) == 0) continue;
                for (int b = 0; b < k; b++) {
                    if (cnt_[a][b][z] == 0 || g.value(b) == 0) continue;
                    acc += f.value(a) * g.value(b) * Rat(cnt_[a][b][z]);
                }
            }
            acc /= Rat(cl_.group_order);
            acc.canonicalize();
            h.set(z, acc);
        }
        return h;
    }

private:
    int index_of(const std::vector<int>& lens) const {
        return cl_.index_of(Partition(lens));
    }

    const ClassList& cl_;
    std::vector<std::vector<std::vector<Int>>> cnt_;
};

// E_{x,y}[f(x) g(y) h(xy)] by double enumeration
inline Rat brute_triple_expectation(Group g, const ClassFunction& f, const ClassFunction& h2,
                                    const ClassFunction& h3) {
    int n = f.n();
    const ClassList& cl = f.classes();
    Rat acc(0);
    symm::for_each_perm(n, [&](const std::vector<int>& x) {
        if (g == Group::A && !symm::is_even_perm(x)) return;
        const Rat& fx = f.value(cl.index_of(Partition(symm::cycle_lengths(x))));
        if (fx == 0) return;
        symm::for_each_perm(n, [&](const std::vector<int>& y) {
            if (g == Group::A && !symm::is_even_perm(y)) return;
            const Rat& gy = h2.value(cl.index_of(Partition(symm::cycle_lengths(y))));
            if (gy == 0) return;
            const Rat& hz =
                h3.value(cl.index_of(Partition(symm::cycle_lengths(symm::compose(x, y)))));
            if (hz == 0) return;
            acc += fx * gy * hz;
        });
    });
    acc /= Rat(cl.group_order * cl.group_order);
    acc.canonicalize();
    return acc;
}

// E[(fix - 1)^q] over S_n from the fixed-point count distribution
inline Rat fixed_point_moment(int n, unsigned q) {
    std::vector<Int> derange(n + 1);
    derange[0] = 1;
    if (n >= 1) derange[1] = 0;
    for (int m = 2; m <= n; m++) derange[m] = Int(m - 1) * (derange[m - 1] + derange[m - 2]);
    Int total(0);
    for (int k = 0; k <= n; k++) {
        Int ways = symm::binomial(n, k) * derange[n - k];
        total += ways * symm::int_pow(Int(k - 1), q);
    }
    Rat r(total, symm::factorial(n));
    r.canonicalize();
    return r;
}

// character table from exterior powers of the natural permutation character,
// orthogonalized exactly; triangularity makes each remainder irreducible
struct OracleTable {
    std::vector<Partition> lambdas;             // canonical order
    std::map<Partition, std::vector<Rat>> rows;  // indexed like ClassList
};

inline OracleTable gram_schmidt_table(int n) {
    const ClassList& cl = ClassList::get(Group::S, n);
    int k = cl.size();
    // exterior-power generators in the power-sum basis: e_deg = sum over
    // rho |- deg of coeff * p_rho, built by Newton's identities; the basis
    // product (concatenate parts) is the induction product of characters
    using PExpr = std::map<Partition, Rat>;
    auto mul_by_power = [](const PExpr& a, int m) {
        PExpr out;
        for (const auto& [rho, c] : a) {
            std::vector<int> parts = rho.parts();
            parts.insert(std::upper_bound(parts.begin(), parts.end(), m, std::greater<int>()), m);
            out[Partition(parts)] += c;
        }
        return out;
    };
    std::vector<PExpr> e(n + 1);
    e[0][Partition()] = 1;
    for (int deg = 1; deg <= n; deg++) {
        for (int m = 1; m <= deg; m++) {
            Rat sgn(m % 2 == 0 ? -1 : 1, deg);
            for (const auto& [rho, c] : mul_by_power(e[deg - m], m)) e[deg][rho] += sgn * c;
        }
        for (auto& [rho, c] : e[deg]) c.canonicalize();
    }
    // values on a class follow from the p-basis coefficient at its type:
    // the p_rho class function is z_rho on the class of type rho, 0 elsewhere
    std::vector<Int> zs(k);
    for (int c = 0; c < k; c++)
        zs[c] = symm::exact_div(symm::factorial(n), cl.types[c].class_size());
    auto values_of = [&](const PExpr& expr) {
        std::vector<Rat> row(k, Rat(0));
        for (int c = 0; c < k; c++) {
            auto it = expr.find(cl.types[c].partition());
            if (it == expr.end()) continue;
            Rat v = it->second * Rat(zs[c]);
            v.canonicalize();
            row[c] = v;
        }
        return row;
    };
    auto inner = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        Rat acc(0);
        for (int c = 0; c < k; c++) acc += cl.densities[c] * a[c] * b[c];
        acc.canonicalize();
        return acc;
    };
    // descending lexicographic order on mu; dominance refines into it, so at
    // mu every shape strictly dominating mu is already known; e_mu expands as
    // the mu-conjugate Schur row plus Kostka multiples of dominating rows
    std::vector<Partition> mus = symm::partitions_of(n);
    std::sort(mus.begin(), mus.end(),
              [](const Partition& a, const Partition& b) { return symm::canonical_before(a, b); });
    OracleTable table;
    for (const Partition& mu : mus) {
        PExpr acc;
        acc[Partition()] = 1;
        for (int part : mu.parts()) {
            PExpr next;
            for (const auto& [r1, c1] : acc)
                for (const auto& [r2, c2] : e[part]) {
                    std::vector<int> parts = r1.parts();
                    parts.insert(parts.end(), r2.parts().begin(), r2.parts().end());
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    Rat c = c1 * c2;
                    c.canonicalize();
                    next[Partition(parts)] += c;
                }
            acc = std::move(next);
        }
        std::vector<Rat> prod = values_of(acc);
        for (const auto& [known_lam, known_row] : table.rows) {
            Rat coef = inner(prod, known_row);
            if (coef.get_den() != 1 || coef < 0)
                throw std::logic_error("projection is not a nonnegative integer");
            if (coef == 0) continue;
            for (int c = 0; c < k; c++) prod[c] -= coef * known_row[c];
        }
        for (int c = 0; c < k; c++) {
            prod[c].canonicalize();
            if (prod[c].get_den() != 1)
                throw std::logic_error("orthogonalized remainder is not integral");
        }
        if (inner(prod, prod) != 1) throw std::logic_error("remainder norm is not one");
        if (prod[cl.index_of(Partition(std::vector<int>(n, 1)))] <= 0)
            throw std::logic_error("remainder has nonpositive dimension");
        table.rows[mu.conjugate()] = prod;
    }
    table.lambdas = symm::partitions_of(n);
    return table;
}

}  // namespace oracle
