#include "symm/harmonic.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symm/perm.hpp"

namespace symm {

Rat FourierExpansion::parseval() const {
    Rat acc(0);
    for (size_t i = 0; i < labels.size(); ++i) acc += weights[i] * coeffs[i] * coeffs[i];
    return acc;
}

size_t FourierExpansion::trivial_index() const {
    // labels follow canonical order, so the single-row partition comes first
    if (labels.empty() || labels[0].rows() > 1)
        throw std::logic_error("trivial label missing from expansion");
    return 0;
}

std::vector<Partition> spectrum_labels(Group g, int n) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(n)) {
        if (g == Group::A) {
            Partition conj = lam.conjugate();
            if (!(lam == conj) && !canonical_before(lam, conj)) continue;
        }
        out.push_back(lam);
    }
    return out;
}

FourierExpansion expand(CharacterEvaluator& ev, const ClassFunction& f) {
    const ClassList& cl = f.classes();
    FourierExpansion fe;
    fe.group = cl.group;
    fe.n = cl.n;
    fe.labels = spectrum_labels(cl.group, cl.n);
    fe.coeffs.reserve(fe.labels.size());
    fe.weights.reserve(fe.labels.size());
    fe.dims.reserve(fe.labels.size());
    for (const Partition& lam : fe.labels) {
        Rat acc(0);
        for (int i = 0; i < cl.size(); ++i) {
            if (f.value(i) == 0) continue;
            acc += cl.densities[i] * f.value(i) * Rat(ev.value(lam, cl.types[i]));
        }
        acc.canonicalize();
        fe.coeffs.push_back(acc);
        bool split = cl.group == Group::A && lam.is_self_conjugate();
        fe.weights.push_back(split ? Rat(1, 2) : Rat(1));
        fe.dims.push_back(ev.dimension(lam));
    }
    return fe;
}

ClassFunction synthesize(CharacterEvaluator& ev, const FourierExpansion& fe) {
    const ClassList& cl = ClassList::get(fe.group, fe.n);
    ClassFunction f(fe.group, fe.n);
    for (int i = 0; i < cl.size(); ++i) {
        Rat acc(0);
        for (size_t k = 0; k < fe.labels.size(); ++k) {
            if (fe.coeffs[k] == 0) continue;
            acc += fe.weights[k] * fe.coeffs[k] * Rat(ev.value(fe.labels[k], cl.types[i]));
        }
        acc.canonicalize();
        f.set(i, acc);
    }
    return f;
}

Rat fourier_coefficient(CharacterEvaluator& ev, const ClassFunction& f, const Partition& lambda) {
    const ClassList& cl = f.classes();
    if (lambda.n() != cl.n) throw std::invalid_argument("partition size does not match function");
    Rat acc(0);
    for (int i = 0; i < cl.size(); ++i) {
        if (f.value(i) == 0) continue;
        acc += cl.densities[i] * f.value(i) * Rat(ev.value(lambda, cl.types[i]));
    }
    acc.canonicalize();
    return acc;
}

Rat q_norm_exact_pow(CharacterEvaluator& ev, Group g, const Partition& lambda, unsigned q) {
    if (q == 0 || q % 2 != 0) throw std::invalid_argument("exact norms need a positive even q");
    if (g == Group::A && lambda.is_self_conjugate())
        throw std::invalid_argument("split characters are out of scope");
    const ClassList& cl = ClassList::get(g, lambda.n());
    Rat acc(0);
    for (int i = 0; i < cl.size(); ++i) {
        Int v = ev.value(lambda, cl.types[i]);
        if (v == 0) continue;
        acc += cl.densities[i] * Rat(int_pow(v, q));
    }
    acc.canonicalize();
    return acc;
}

double q_norm(CharacterEvaluator& ev, Group g, const Partition& lambda, double q) {
    if (q < 1.0) throw std::invalid_argument("q must be at least 1");
    if (g == Group::A && lambda.is_self_conjugate())
        throw std::invalid_argument("split characters are out of scope");
    const ClassList& cl = ClassList::get(g, lambda.n());
    // compensated summation of density * |chi|^q
    long double sum = 0.0L, comp = 0.0L;
    for (int i = 0; i < cl.size(); ++i) {
        Int v = ev.value(lambda, cl.types[i]);
        if (v == 0) continue;
        Int av = abs(v);
        long double term =
            expl(static_cast<long double>(q) * static_cast<long double>(log_int(av))) *
            static_cast<long double>(to_double(cl.densities[i]));
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return static_cast<double>(powl(sum, 1.0L / static_cast<long double>(q)));
}

ClassFunction convolve(CharacterEvaluator& ev, const ClassFunction& f, const ClassFunction& g) {
    const ClassList& cl = f.classes();
    if (&cl != &g.classes()) throw std::invalid_argument("convolution needs matching group and n");
    FourierExpansion fh = expand(ev, f);
    FourierExpansion gh = expand(ev, g);
    FourierExpansion hh = fh;
    for (size_t k = 0; k < hh.labels.size(); ++k) {
        hh.coeffs[k] = fh.coeffs[k] * gh.coeffs[k] / Rat(fh.dims[k]);
        hh.coeffs[k].canonicalize();
    }
    return synthesize(ev, hh);
}

Int kronecker(CharacterEvaluator& ev, const Partition& lambda, const Partition& mu,
              const Partition& nu) {
    int n = lambda.n();
    if (mu.n() != n || nu.n() != n) throw std::invalid_argument("partition sizes differ");
    const ClassList& cl = ClassList::get(Group::S, n);
    Rat acc(0);
    for (int i = 0; i < cl.size(); ++i) {
        Int v = ev.value(lambda, cl.types[i]) * ev.value(mu, cl.types[i]) *
                ev.value(nu, cl.types[i]);
        if (v == 0) continue;
        acc += cl.densities[i] * Rat(v);
    }
    acc.canonicalize();
    if (acc.get_den() != 1 || acc.get_num() < 0)
        throw std::logic_error("kronecker sum is not a nonnegative integer");
    return acc.get_num();
}

Int restriction_norm_sq(CharacterEvaluator& ev, const Partition& lambda, int m) {
    auto mults = ev.branching_multiplicities(lambda, m);
    Int acc(0);
    for (const auto& [mu, c] : mults) acc += c * c;
    return acc;
}

double restriction_norm(CharacterEvaluator& ev, const Partition& lambda, int m) {
    return std::sqrt(to_double(Rat(restriction_norm_sq(ev, lambda, m))));
}

Rat coset_restriction_norm_sq_bruteforce(CharacterEvaluator& ev, const Partition& lambda,
                                         const std::vector<int>& I, const std::vector<int>& J) {
    int n = lambda.n();
    if (n > 8) throw std::invalid_argument("brute-force coset norms are capped at n = 8");
    if (I.size() != J.size()) throw std::invalid_argument("tuples must have equal length");
    int m = static_cast<int>(I.size());
    if (m > n) throw std::invalid_argument("tuple longer than n");
    std::vector<char> in_i(n, 0), in_j(n, 0);
    for (int k = 0; k < m; ++k) {
        if (I[k] < 0 || I[k] >= n || J[k] < 0 || J[k] >= n || in_i[I[k]] || in_j[J[k]])
            throw std::invalid_argument("tuple entries must be distinct points in range");
        in_i[I[k]] = in_j[J[k]] = 1;
    }
    std::vector<int> comp_i, comp_j;
    for (int x = 0; x < n; ++x) {
        if (!in_i[x]) comp_i.push_back(x);
        if (!in_j[x]) comp_j.push_back(x);
    }
    const ClassList& cl = ClassList::get(Group::S, n);
    std::vector<Int> by_class(cl.size());
    std::vector<char> have(cl.size(), 0);
    Int sum(0);
    std::vector<int> p(n);
    std::vector<int> arr = comp_j;
    do {
        for (int k = 0; k < m; ++k) p[I[k]] = J[k];
        for (size_t t = 0; t < comp_i.size(); ++t) p[comp_i[t]] = arr[t];
        int idx = cl.index_of(Partition(cycle_lengths(p)));
        if (!have[idx]) {
            by_class[idx] = ev.value(lambda, cl.types[idx]);
            have[idx] = 1;
        }
        sum += by_class[idx] * by_class[idx];
    } while (std::next_permutation(arr.begin(), arr.end()));
    Rat out(sum, factorial(static_cast<unsigned long>(n - m)));
    out.canonicalize();
    return out;
}

double coset_restriction_norm_bruteforce(CharacterEvaluator& ev, const Partition& lambda,
                                         const std::vector<int>& I, const std::vector<int>& J) {
    return std::sqrt(to_double(coset_restriction_norm_sq_bruteforce(ev, lambda, I, J)));
}

namespace {

std::vector<int> random_tuple(int n, int m, std::mt19937_64& rng) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < m; ++k) {
        std::uniform_int_distribution<int> pick(k, n - 1);
        std::swap(pool[k], pool[pick(rng)]);
    }
    pool.resize(m);
    return pool;
}

void all_tuples(int n, int m, std::vector<int>& cur, std::vector<char>& used,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    for (int x = 0; x < n; ++x) {
        if (used[x]) continue;
        used[x] = 1;
        cur.push_back(x);
        all_tuples(n, m, cur, used, out);
        cur.pop_back();
        used[x] = 0;
    }
}

}  // namespace

GlobalnessReport globalness_certificate(CharacterEvaluator& ev, const Partition& lambda,
                                        bool brute, int sample_cap, uint64_t seed) {
    int n = lambda.n();
    if (n < 1) throw std::invalid_argument("empty partition");
    GlobalnessReport rep;
    rep.lambda = lambda;
    rep.level = lambda.level();
    rep.tilde_dim = lambda.tilde().dimension();
    rep.chain_ok = true;
    for (int m = 0; m <= n - 1; ++m) {
        auto mults = ev.branching_multiplicities(lambda, m);
        Int b(0);
        for (const auto& [mu, c] : mults) b += c;
        rep.branching_sums.push_back(b);
        if (b > int_pow(2ul, static_cast<unsigned long>(m)) * rep.tilde_dim) rep.chain_ok = false;
    }
    int d = rep.level;
    if (d == 0) {
        rep.gamma_constant = 0.0;
    } else {
        double dim_log = log_int(ev.dimension(lambda));
        double worst = -1e300;
        for (int m = 0; m <= n - 1; ++m) {
            double lhs = log_int(rep.branching_sums[m]) - m * std::log(2.0) - dim_log;
            worst = std::max(worst, lhs);
        }
        rep.gamma_constant = (static_cast<double>(n) / d) * std::exp(worst / d);
    }
    if (brute && n <= 8) {
        std::mt19937_64 rng(seed);
        for (int m = 1; m <= n - 1; ++m) {
            long long tuples = 1;
            for (int k = 0; k < m; ++k) tuples *= n - k;
            Int bound_sq = rep.branching_sums[m] * rep.branching_sums[m];
            if (tuples * tuples <= sample_cap) {
                std::vector<std::vector<int>> all;
                std::vector<int> cur;
                std::vector<char> used(n, 0);
                all_tuples(n, m, cur, used, all);
                for (const auto& I : all)
                    for (const auto& J : all) {
                        Rat got = coset_restriction_norm_sq_bruteforce(ev, lambda, I, J);
                        ++rep.brute_pairs;
                        if (got > Rat(bound_sq)) rep.brute_ok = false;
                    }
            } else {
                for (int s = 0; s < sample_cap; ++s) {
                    auto I = random_tuple(n, m, rng);
                    auto J = random_tuple(n, m, rng);
                    Rat got = coset_restriction_norm_sq_bruteforce(ev, lambda, I, J);
                    ++rep.brute_pairs;
                    if (got > Rat(bound_sq)) rep.brute_ok = false;
                }
            }
        }
    }
    return rep;
}

std::string GlobalnessReport::to_string() const {
    std::ostringstream os;
    os << "lambda=" << lambda.to_string() << " level=" << level
       << " tilde_dim=" << tilde_dim.get_str() << " chain=" << (chain_ok ? "ok" : "FAIL");
    if (brute_pairs > 0) os << " brute_pairs=" << brute_pairs << (brute_ok ? " ok" : " FAIL");
    os << " gamma_c=" << gamma_constant;
    return os.str();
}

}  // namespace symm
