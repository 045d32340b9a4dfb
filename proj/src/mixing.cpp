#include "symm/mixing.hpp"

#include <cmath>
#include <stdexcept>

namespace symm {

namespace {

Rat rat_pow(const Rat& q, unsigned long e) {
    if (e == 0) return Rat(1);
    return Rat(int_pow(Int(q.get_num()), e), int_pow(Int(q.get_den()), e));
}

void require_unit_l1(const ClassFunction& f) {
    if (f.l1_norm() != 1) throw std::invalid_argument("walk density must have unit L1 norm");
}

}  // namespace

Rat spectral_l2_distance_sq(CharacterEvaluator& ev, const ClassFunction& f, unsigned ell) {
    require_unit_l1(f);
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    FourierExpansion fe = expand(ev, f);
    size_t triv = fe.trivial_index();
    Rat acc(0);
    for (size_t k = 0; k < fe.labels.size(); ++k) {
        if (k == triv) continue;
        if (fe.coeffs[k] == 0) continue;
        Rat t = fe.weights[k] * rat_pow(fe.coeffs[k], 2 * ell) /
                Rat(int_pow(fe.dims[k], 2 * ell - 2));
        acc += t;
    }
    Rat mean_dev = rat_pow(fe.coeffs[triv], ell) - 1;
    acc += mean_dev * mean_dev;
    acc.canonicalize();
    return acc;
}

double spectral_l2_distance(CharacterEvaluator& ev, const ClassFunction& f, unsigned ell) {
    return std::sqrt(to_double(spectral_l2_distance_sq(ev, f, ell)));
}

MixingProfile mixing_profile(CharacterEvaluator& ev, const ClassFunction& f, int steps) {
    require_unit_l1(f);
    MixingProfile prof;
    prof.group = f.group();
    prof.n = f.n();
    FourierExpansion fe = expand(ev, f);
    size_t triv = fe.trivial_index();
    // term(l) = w a^{2l} / D^{2l-2}; advance by (a/D)^2 each step
    std::vector<Rat> term(fe.labels.size()), ratio_sq(fe.labels.size());
    for (size_t k = 0; k < fe.labels.size(); ++k) {
        term[k] = fe.weights[k] * fe.coeffs[k] * fe.coeffs[k];
        Rat r = fe.coeffs[k] / Rat(fe.dims[k]);
        ratio_sq[k] = r * r;
    }
    Rat mean_pow = fe.coeffs[triv];
    for (int l = 1; l <= steps; ++l) {
        Rat acc(0);
        for (size_t k = 0; k < fe.labels.size(); ++k) {
            if (k == triv) continue;
            acc += term[k];
            term[k] *= ratio_sq[k];
        }
        Rat dev = mean_pow - 1;
        acc += dev * dev;
        acc.canonicalize();
        prof.dist_sq.push_back(acc);
        mean_pow *= fe.coeffs[triv];
    }
    return prof;
}

int mixing_time(CharacterEvaluator& ev, const ClassFunction& f, double eps, int p, int cap) {
    require_unit_l1(f);
    if (p != 1 && p != 2) throw std::invalid_argument("p must be 1 or 2");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    Rat eps_rat(eps);
    if (p == 2) {
        MixingProfile prof = mixing_profile(ev, f, cap);
        for (int l = 1; l <= cap; ++l)
            if (prof.dist_sq[l - 1] < eps_rat * eps_rat) return l;
        return -1;
    }
    // p = 1: reconstruct the l-step density and take the exact L1 distance
    FourierExpansion fe = expand(ev, f);
    const ClassList& cl = f.classes();
    FourierExpansion cur = fe;
    for (int l = 1; l <= cap; ++l) {
        ClassFunction fl = synthesize(ev, cur);
        Rat dist(0);
        for (int i = 0; i < cl.size(); ++i) dist += cl.densities[i] * abs(fl.value(i) - 1);
        if (dist < eps_rat) return l;
        for (size_t k = 0; k < cur.labels.size(); ++k)
            cur.coeffs[k] = cur.coeffs[k] * fe.coeffs[k] / Rat(fe.dims[k]);
    }
    return -1;
}

Rat multi_convolution_distance_sq(CharacterEvaluator& ev, const std::vector<ClassFunction>& fs) {
    if (fs.empty()) throw std::invalid_argument("need at least one function");
    const ClassList& cl = fs[0].classes();
    for (const ClassFunction& f : fs) {
        if (&f.classes() != &cl) throw std::invalid_argument("functions live on different groups");
        require_unit_l1(f);
    }
    std::vector<FourierExpansion> fes;
    fes.reserve(fs.size());
    for (const ClassFunction& f : fs) fes.push_back(expand(ev, f));
    size_t triv = fes[0].trivial_index();
    unsigned long ell = fs.size();
    Rat acc(0);
    for (size_t k = 0; k < fes[0].labels.size(); ++k) {
        if (k == triv) continue;
        Rat prod(1);
        bool zero = false;
        for (const FourierExpansion& fe : fes) {
            if (fe.coeffs[k] == 0) {
                zero = true;
                break;
            }
            prod *= fe.coeffs[k] * fe.coeffs[k];
        }
        if (zero) continue;
        acc += fes[0].weights[k] * prod / Rat(int_pow(fes[0].dims[k], 2 * ell - 2));
    }
    Rat mean_prod(1);
    for (const FourierExpansion& fe : fes) mean_prod *= fe.coeffs[triv];
    Rat dev = mean_prod - 1;
    acc += dev * dev;
    acc.canonicalize();
    return acc;
}

std::pair<Rat, double> two_step_return(CharacterEvaluator& ev, const ClassFunction& f) {
    ClassFunction ff = convolve(ev, f, f);
    Partition id(std::vector<int>(f.n(), 1));
    Rat ret = ff.value(id);
    if (ret != f.l2_norm_sq())
        throw std::logic_error("two-step return does not match the squared L2 norm");
    FourierExpansion fe = expand(ev, f);
    size_t triv = fe.trivial_index();
    Rat acc(0);
    for (size_t k = 0; k < fe.labels.size(); ++k) {
        if (k == triv || fe.coeffs[k] == 0) continue;
        Rat b = fe.coeffs[k] * fe.coeffs[k] / Rat(fe.dims[k]);
        acc += fe.weights[k] * b * b;
    }
    Rat dev = fe.coeffs[triv] * fe.coeffs[triv] - 1;
    acc += dev * dev;
    return {ret, std::sqrt(to_double(acc))};
}

CycleType lower_bound_walk(int n, int ell) {
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    if (n < 3) throw std::invalid_argument("n too small");
    int m = static_cast<int>(std::floor(
        std::pow(static_cast<double>(n), 1.0 - 1.0 / static_cast<double>(ell)) + 1e-9));
    if ((n - m) % 2 == 0) ++m;  // an even-length cycle is an odd permutation
    if (m < 0 || n - m < 2) throw std::invalid_argument("degenerate witness at this (n, ell)");
    std::vector<int> parts;
    parts.push_back(n - m);
    parts.insert(parts.end(), m, 1);
    CycleType ct((Partition(parts)));
    if (!ct.is_even()) throw std::logic_error("witness parity adjustment failed");
    // density over A_n must come out as 2/(m! (n-m))
    Rat density = Rat(ct.class_size()) / Rat(factorial(static_cast<unsigned long>(n)) / 2);
    Rat expected = Rat(2) / Rat(factorial(static_cast<unsigned long>(m)) * (n - m));
    if (density != expected) throw std::logic_error("witness density identity failed");
    return ct;
}

Rat product_mixing_lhs(CharacterEvaluator& ev, const ClassFunction& f, const ClassFunction& g,
                       const ClassFunction& h) {
    const ClassList& cl = f.classes();
    if (&g.classes() != &cl || &h.classes() != &cl)
        throw std::invalid_argument("functions live on different groups");
    FourierExpansion fh = expand(ev, f);
    FourierExpansion gh = expand(ev, g);
    FourierExpansion hh = expand(ev, h);
    size_t triv = fh.trivial_index();
    Rat acc(0);
    for (size_t k = 0; k < fh.labels.size(); ++k) {
        if (k == triv) continue;
        if (fh.coeffs[k] == 0 || gh.coeffs[k] == 0 || hh.coeffs[k] == 0) continue;
        acc += fh.weights[k] * fh.coeffs[k] * gh.coeffs[k] * hh.coeffs[k] / Rat(fh.dims[k]);
    }
    acc += fh.coeffs[triv] * gh.coeffs[triv] * hh.coeffs[triv] - 1;
    acc.canonicalize();
    return acc;
}

CycleType non_mixer_witness(int n) {
    if (n < 7) throw std::invalid_argument("witness needs n >= 7");
    int level_cap = static_cast<int>(std::floor(std::cbrt(static_cast<double>(n)) + 1e-9));
    int t_formula =
        static_cast<int>(std::ceil(10.0 * std::cbrt(static_cast<double>(n)) + 1.0 - 1e-9));
    // largest t <= the recipe value that still leaves a cycle longer than
    // level_cap; the fixed-point block must dominate twice the level cap so
    // the rim-hook argument applies to every low-level character
    for (int t = std::min(t_formula, n - level_cap - 1); t >= 2 * level_cap; --t) {
        if ((n - t) % 2 == 0) continue;  // keep the permutation even
        std::vector<int> parts;
        parts.push_back(n - t);
        parts.insert(parts.end(), t, 1);
        return CycleType((Partition(parts)));
    }
    throw std::invalid_argument("no feasible witness at this n");
}

std::vector<std::pair<Partition, Rat>> triple_sum_terms(CharacterEvaluator& ev,
                                                        const ClassFunction& f, int level_cap) {
    std::vector<std::pair<Partition, Rat>> out;
    for (const Partition& lam : spectrum_labels(f.group(), f.n())) {
        if (lam.rows() == 1) continue;  // trivial label
        if (lam.level() > level_cap) continue;
        Rat a = fourier_coefficient(ev, f, lam);
        bool split = f.group() == Group::A && lam.is_self_conjugate();
        Rat w = split ? Rat(1, 2) : Rat(1);
        Rat term = w * a * a * a / Rat(ev.dimension(lam));
        term.canonicalize();
        out.emplace_back(lam, term);
    }
    return out;
}

}  // namespace symm
