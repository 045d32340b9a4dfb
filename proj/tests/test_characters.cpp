#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iterator>
#include <string>

#include "symm/characters.hpp"
#include "perm_group.hpp"

using symm::CharacterEvaluator;
using symm::CycleType;
using symm::ClassList;
using symm::Group;
using symm::Int;
using symm::Partition;
using symm::Rat;

static CharacterEvaluator& ev() {
    static CharacterEvaluator e;
    return e;
}

TEST_CASE("hand-checked small values") {
    CHECK(ev().value(Partition({2, 1}), Partition({3})) == -1);
    CHECK(ev().value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(ev().value(Partition({2, 1}), Partition({2, 1})) == 0);
    // S_5, λ = (3,2): χ(1^5)=5, χ(2,1^3)=1, χ(2,2,1)=1, χ(3,1,1)=-1,
    // χ(3,2)=1, χ(4,1)=-1, χ(5)=0  (standard table)
    Partition lam({3, 2});
    CHECK(ev().value(lam, Partition({1, 1, 1, 1, 1})) == 5);
    CHECK(ev().value(lam, Partition({2, 1, 1, 1})) == 1);
    CHECK(ev().value(lam, Partition({2, 2, 1})) == 1);
    CHECK(ev().value(lam, Partition({3, 1, 1})) == -1);
    CHECK(ev().value(lam, Partition({3, 2})) == 1);
    CHECK(ev().value(lam, Partition({4, 1})) == -1);
    CHECK(ev().value(lam, Partition({5})) == 0);
    CHECK_THROWS(ev().value(Partition({3, 2}), Partition({4})));  // size mismatch
}

TEST_CASE("trivial, sign, and standard rows") {
    for (int n = 2; n <= 10; n++) {
        Partition triv({n});
        Partition sign(std::vector<int>(n, 1));
        Partition std_rep({n - 1, 1});
        for (const CycleType& ct : ClassList::get(Group::S, n).types) {
            CHECK(ev().value(triv, ct) == 1);
            CHECK(ev().value(sign, ct) == (ct.is_even() ? 1 : -1));
            CHECK(ev().value(std_rep, ct) == Int(ct.fixed_points() - 1));
        }
    }
}

TEST_CASE("identity column gives hook-length dimension") {
    for (int n = 1; n <= 12; n++) {
        CycleType id(Partition(std::vector<int>(n, 1)));
        for (const Partition& lam : symm::partitions_of(n))
            CHECK(ev().value(lam, id) == lam.dimension());
    }
}

TEST_CASE("conjugate twist by sign") {
    for (int n = 2; n <= 8; n++) {
        for (const Partition& lam : symm::partitions_of(n))
            for (const CycleType& ct : ClassList::get(Group::S, n).types) {
                Int v = ev().value(lam, ct);
                Int w = ev().value(lam.conjugate(), ct);
                CHECK(v == (ct.is_even() ? w : -w));
            }
    }
}

TEST_CASE("matches Gram-Schmidt oracle on natural-module exterior powers") {
    for (int n = 2; n <= 8; n++) {
        auto table = oracle::gram_schmidt_table(n);
        const ClassList& cl = ClassList::get(Group::S, n);
        for (const auto& [lam, row] : table.rows)
            for (int i = 0; i < cl.size(); i++)
                CHECK(Rat(ev().value(lam, cl.types[i])) == row[i]);
    }
}

TEST_CASE("row and column orthogonality") {
    for (int n = 2; n <= 9; n++) {
        const ClassList& cl = ClassList::get(Group::S, n);
        auto lambdas = symm::partitions_of(n);
        std::vector<std::vector<Int>> rows;
        for (const Partition& lam : lambdas) {
            std::vector<Int> row;
            for (const CycleType& ct : cl.types) row.push_back(ev().value(lam, ct));
            rows.push_back(std::move(row));
        }
        Int nfact = symm::factorial(n);
        for (size_t a = 0; a < rows.size(); a++)
            for (size_t b = a; b < rows.size(); b++) {
                Int acc(0);
                for (int i = 0; i < cl.size(); i++)
                    acc += cl.types[i].class_size() * rows[a][i] * rows[b][i];
                CHECK(acc == (a == b ? nfact : Int(0)));
            }
        for (int i = 0; i < cl.size(); i++)
            for (int j = i; j < cl.size(); j++) {
                Int acc(0);
                for (size_t a = 0; a < rows.size(); a++) acc += rows[a][i] * rows[a][j];
                Int expect = (i == j) ? nfact / cl.types[i].class_size() : Int(0);
                CHECK(acc == expect);
            }
    }
}

TEST_CASE("long cycle specialization") {
    // λ = (n−d, tail): with ℓ fixed points and the rest in cycles longer
    // than d, the value is the dimension of (ℓ−d, tail)
    for (int n = 6; n <= 25; n += 19) {
        for (const Partition& lam : symm::partitions_of_level_at_most(n, 3)) {
            if (lam.part(0) != n - lam.level()) continue;  // row-oriented only
            int d = lam.level();
            for (int ell = d + lam.part(1); ell <= n; ell++) {
                int rest = n - ell;
                if (rest != 0 && rest <= d) continue;
                std::vector<int> mparts{ell - d};
                for (int r = 1; r < lam.rows(); r++) mparts.push_back(lam.part(r));
                if (!mparts.empty() && mparts[0] == 0) mparts.clear();
                Int expect = Partition(mparts).dimension();
                CHECK(ev().long_cycle_value(lam, ell) == expect);
                // cross-check against MN on an explicit such class
                if (rest == 0) {
                    std::vector<int> ct(ell, 1);
                    CHECK(ev().value(lam, Partition(ct)) == expect);
                } else {
                    std::vector<int> ct{rest};
                    ct.insert(ct.end(), ell, 1);
                    CHECK(ev().value(lam, Partition(ct)) == expect);
                }
            }
        }
    }
    CHECK_THROWS(ev().long_cycle_value(Partition({2, 2, 2}), 6));  // column shape
    CHECK_THROWS(ev().long_cycle_value(Partition({5, 2}), 2));     // ell below d+lambda_2
    CHECK_THROWS(ev().long_cycle_value(Partition({5, 2}), 6));     // leftover cycle too short
}

TEST_CASE("branching multiplicities") {
    CharacterEvaluator& e = ev();
    // one-step: corners of (3,2) are (2,2) and (3,1)
    auto one = e.branching_multiplicities(Partition({3, 2}), 1);
    CHECK(one.size() == 2);
    CHECK(one.at(Partition({2, 2})) == 1);
    CHECK(one.at(Partition({3, 1})) == 1);
    // full-depth restriction counts standard tableaux
    for (int n = 2; n <= 8; n++)
        for (const Partition& lam : symm::partitions_of(n)) {
            auto full = e.branching_multiplicities(lam, n);
            CHECK(full.size() == 1);
            CHECK(full.at(Partition()) == lam.dimension());
        }
    // restriction is dimension-preserving and value-preserving on S_{n−m}
    for (int m = 1; m <= 3; m++) {
        Partition lam({4, 2, 1});
        auto mult = e.branching_multiplicities(lam, m);
        Int dim_sum(0);
        for (const auto& [mu, c] : mult) {
            CHECK(c > 0);
            dim_sum += c * mu.dimension();
        }
        CHECK(dim_sum == lam.dimension());
        for (const CycleType& ct : ClassList::get(Group::S, 7 - m).types) {
            std::vector<int> padded = ct.partition().parts();
            std::vector<int> ones(m, 1);
            std::vector<int> joined;
            std::merge(padded.begin(), padded.end(), ones.begin(), ones.end(),
                       std::back_inserter(joined), std::greater<int>());
            Int lhs = e.value(lam, Partition(joined));
            Int rhs(0);
            for (const auto& [mu, c] : mult) rhs += c * e.value(mu, ct.partition());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("alternating group restrictions") {
    CharacterEvaluator& e = ev();
    for (int n = 3; n <= 8; n++) {
        const ClassList& al = ClassList::get(Group::A, n);
        for (const Partition& lam : symm::partitions_of(n)) {
            if (lam.is_self_conjugate()) {
                CHECK_THROWS(e.an_value(lam, al.types[0]));
                continue;
            }
            for (const CycleType& ct : al.types)
                CHECK(e.an_value(lam, ct) == e.value(lam, ct));
        }
    }
    CHECK_THROWS(e.an_value(Partition({3, 1}), CycleType::parse("2,1,1")));  // odd class
}

TEST_CASE("character as class function and norms") {
    CharacterEvaluator& e = ev();
    for (int n = 2; n <= 8; n++) {
        auto lambdas = symm::partitions_of(n);
        for (size_t a = 0; a < lambdas.size(); a++) {
            auto f = e.character(Group::S, lambdas[a]);
            CHECK(f.l2_norm_sq() == Rat(1));
            for (size_t b = a + 1; b < lambdas.size(); b++)
                CHECK(f.inner(e.character(Group::S, lambdas[b])) == Rat(0));
        }
    }
    // A_n: non-self-conjugate restrictions stay orthonormal
    for (int n = 4; n <= 7; n++) {
        std::vector<symm::ClassFunction> fs;
        for (const Partition& lam : symm::partitions_of(n)) {
            if (lam.is_self_conjugate()) continue;
            if (symm::canonical_before(lam.conjugate(), lam)) continue;  // one per pair
            fs.push_back(e.character(Group::A, lam));
        }
        for (size_t a = 0; a < fs.size(); a++)
            for (size_t b = a; b < fs.size(); b++)
                CHECK(fs[a].inner(fs[b]) == Rat(a == b ? 1 : 0));
    }
}

TEST_CASE("table shape and consistency") {
    CharacterEvaluator& e = ev();
    auto t = e.table(Group::S, 6);
    CHECK(t.lambdas.size() == 11);
    CHECK(t.types.size() == 11);
    for (size_t r = 0; r < t.lambdas.size(); r++)
        for (size_t c = 0; c < t.types.size(); c++)
            CHECK(t.values[r][c] == e.value(t.lambdas[r], t.types[c]));
    CHECK(t.to_csv().find("lambda") != std::string::npos);
    CHECK(t.to_json().find("\"values\"") != std::string::npos);
    auto ta = e.table(Group::A, 6);
    for (const Partition& lam : ta.lambdas) {
        CHECK_FALSE(lam.is_self_conjugate());
        CHECK_FALSE(symm::canonical_before(lam.conjugate(), lam));
    }
    for (size_t r = 0; r < ta.lambdas.size(); r++)
        for (size_t c = 0; c < ta.types.size(); c++)
            CHECK(ta.values[r][c] == e.an_value(ta.lambdas[r], ta.types[c]));
    CHECK_THROWS(e.table(Group::S, 25, 20));  // above cap
}

TEST_CASE("memo cache file round-trip") {
    CharacterEvaluator a;
    a.value(Partition({5, 3, 2}), Partition({4, 3, 2, 1}));
    a.value(Partition({6, 4}), Partition({5, 5}));
    size_t entries = a.memo_entries();
    CHECK(entries > 0);
    std::string path = "mn_memo_test.bin";
    REQUIRE(a.save_cache(path));
    CharacterEvaluator b;
    REQUIRE(b.load_cache(path));
    CHECK(b.memo_entries() == entries);
    CHECK(b.value(Partition({5, 3, 2}), Partition({4, 3, 2, 1})) ==
          a.value(Partition({5, 3, 2}), Partition({4, 3, 2, 1})));
    std::remove(path.c_str());
    CHECK_FALSE(b.load_cache("no_such_dir/nope.bin"));
}
