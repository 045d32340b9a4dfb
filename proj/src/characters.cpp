#include "symm/characters.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "symm/parallel.hpp"

namespace symm {

Int CharacterEvaluator::value(const Partition& lambda, const CycleType& ct) {
    if (lambda.n() != ct.n())
        throw std::invalid_argument("mn value: |lambda| != |cycle type|");
    return mn_recurse(lambda.parts(), ct.parts(), 0);
}

Int CharacterEvaluator::mn_recurse(const std::vector<int>& shape,
                                   const std::vector<int>& cycles, size_t pos) {
    if (shape.empty()) return 1;

    Key key;
    key.reserve(shape.size() + 1 + (cycles.size() - pos));
    for (int p : shape) key.push_back(p);
    key.push_back(-1);
    for (size_t i = pos; i < cycles.size(); i++) key.push_back(cycles[i]);
    {
        std::lock_guard lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const int t = cycles[pos];
    const int m = static_cast<int>(shape.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; i++) beta[i] = shape[i] + (m - 1 - i);

    Int acc = 0;
    for (int i = 0; i < m; i++) {
        int b = beta[i];
        if (b < t) continue;
        int target = b - t;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < m; j++) {
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < b) height++;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nshape(m);
        for (int j = 0; j < m; j++) nshape[j] = nb[j] - (m - 1 - j);
        while (!nshape.empty() && nshape.back() == 0) nshape.pop_back();

        Int sub = mn_recurse(nshape, cycles, pos + 1);
        if (height % 2)
            acc -= sub;
        else
            acc += sub;
    }

    std::lock_guard lock(mu_);
    if (memo_.size() >= cap_) {
        memo_.clear();
        resets_++;
    }
    memo_.emplace(std::move(key), acc);
    return acc;
}

Int CharacterEvaluator::long_cycle_value(const Partition& lambda, int ell) {
    const int n = lambda.n();
    const int d = n - lambda.part(0);
    if (lambda.empty() || d != lambda.level())
        throw std::invalid_argument("long_cycle_value: first row must attain the level");
    if (ell < d + lambda.part(1) || ell > n)
        throw std::invalid_argument("long_cycle_value: need d + lambda_2 <= ell <= n");
    if (n - ell != 0 && n - ell <= d)
        throw std::invalid_argument("long_cycle_value: no class with all non-fixed cycles > level");
    std::vector<int> mu;
    mu.push_back(ell - d);
    for (int i = 1; i < lambda.rows(); i++) mu.push_back(lambda.parts()[i]);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return Partition(mu).dimension();
}

std::map<Partition, Int> CharacterEvaluator::branching_multiplicities(
    const Partition& lambda, int m) {
    if (m < 0 || m > lambda.n())
        throw std::invalid_argument("branching_multiplicities: need 0 <= m <= n");
    std::map<Partition, Int> cur{{lambda, Int(1)}};
    for (int step = 0; step < m; step++) {
        std::map<Partition, Int> next;
        for (const auto& [mu, c] : cur) {
            const auto& parts = mu.parts();
            for (int i = 0; i < mu.rows(); i++) {
                if (i + 1 < mu.rows() && parts[i] == parts[i + 1]) continue;
                std::vector<int> np = parts;
                if (--np[i] == 0) np.erase(np.begin() + i);
                next[Partition(np)] += c;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Int CharacterEvaluator::an_value(const Partition& lambda, const CycleType& ct) {
    if (lambda.is_self_conjugate())
        throw std::invalid_argument("an_value: self-conjugate lambda splits; out of scope");
    if (!ct.is_even()) throw std::invalid_argument("an_value: odd cycle type");
    return value(lambda, ct);
}

ClassFunction CharacterEvaluator::character(Group g, const Partition& lambda) {
    if (g == Group::A && lambda.is_self_conjugate())
        throw std::invalid_argument("character: self-conjugate lambda splits in A_n; out of scope");
    ClassFunction f(g, lambda.n());
    const auto& cl = f.classes();
    for (int i = 0; i < cl.size(); i++) f.set(i, Rat(value(lambda, cl.types[i])));
    return f;
}

CharacterTable CharacterEvaluator::table(Group g, int n, int cap, int threads) {
    if (n > cap) throw std::invalid_argument("table: n exceeds cap");
    CharacterTable t;
    t.group = g;
    t.n = n;
    t.types = ClassList::get(g, n).types;
    for (const auto& lam : partitions_of(n)) {
        if (g == Group::A) {
            Partition conj = lam.conjugate();
            if (lam == conj || !canonical_before(lam, conj)) continue;
        }
        t.lambdas.push_back(lam);
    }
    t.values.assign(t.lambdas.size(), {});
    parallel_for(
        static_cast<int>(t.lambdas.size()),
        [&](int r) {
            std::vector<Int> row;
            row.reserve(t.types.size());
            for (const auto& ct : t.types) row.push_back(value(t.lambdas[r], ct));
            t.values[r] = std::move(row);
        },
        threads);
    return t;
}

void CharacterEvaluator::clear_memo() {
    std::lock_guard lock(mu_);
    memo_.clear();
}

size_t CharacterEvaluator::memo_entries() const {
    std::lock_guard lock(mu_);
    return memo_.size();
}

std::string CharacterTable::to_csv() const {
    std::ostringstream os;
    os << "\"lambda\"";
    for (const auto& ct : types) os << ",\"" << ct.to_string() << "\"";
    os << "\n";
    for (size_t r = 0; r < lambdas.size(); r++) {
        os << "\"" << lambdas[r].to_string() << "\"";
        for (const auto& v : values[r]) os << "," << v.get_str();
        os << "\n";
    }
    return os.str();
}

std::string CharacterTable::to_json() const {
    nlohmann::ordered_json j;
    j["group"] = group == Group::S ? "S" : "A";
    j["n"] = n;
    j["lambdas"] = nlohmann::ordered_json::array();
    for (const auto& l : lambdas) j["lambdas"].push_back(l.to_string());
    j["types"] = nlohmann::ordered_json::array();
    for (const auto& ct : types) j["types"].push_back(ct.to_string());
    j["values"] = nlohmann::ordered_json::array();
    for (const auto& row : values) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& v : row) jr.push_back(v.get_str());
        j["values"].push_back(std::move(jr));
    }
    return j.dump(2);
}

namespace {
constexpr uint64_t kCacheMagic = 0x53594d484d454d31ull;  // "SYMHMEM1"
}

bool CharacterEvaluator::save_cache(const std::string& path) const {
    std::lock_guard lock(mu_);
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return false;
    uint64_t count = memo_.size();
    bool ok = std::fwrite(&kCacheMagic, 8, 1, f) == 1 && std::fwrite(&count, 8, 1, f) == 1;
    for (auto it = memo_.begin(); ok && it != memo_.end(); ++it) {
        uint32_t len = static_cast<uint32_t>(it->first.size());
        ok = std::fwrite(&len, 4, 1, f) == 1 &&
             std::fwrite(it->first.data(), 4, len, f) == len &&
             mpz_out_raw(f, it->second.get_mpz_t()) > 0;
    }
    std::fclose(f);
    return ok;
}

bool CharacterEvaluator::load_cache(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    uint64_t magic = 0, count = 0;
    bool ok = std::fread(&magic, 8, 1, f) == 1 && magic == kCacheMagic &&
              std::fread(&count, 8, 1, f) == 1;
    std::lock_guard lock(mu_);
    for (uint64_t i = 0; ok && i < count && memo_.size() < cap_; i++) {
        uint32_t len = 0;
        ok = std::fread(&len, 4, 1, f) == 1 && len < (1u << 16);
        if (!ok) break;
        Key key(len);
        Int v;
        ok = std::fread(key.data(), 4, len, f) == len && mpz_inp_raw(v.get_mpz_t(), f) > 0;
        if (ok) memo_.emplace(std::move(key), std::move(v));
    }
    std::fclose(f);
    return ok;
}

}  // namespace symm
