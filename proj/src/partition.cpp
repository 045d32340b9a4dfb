#include "symm/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); i++) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Partition: bad part '" + tok + "'");
            parts.push_back(v);
        }
        if (ss.bad() || text.back() == ',')
            throw std::invalid_argument("Partition: trailing comma");
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); i++) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.resize(parts_[0]);
        for (int row : parts_)
            for (int j = 0; j < row; j++) c[j]++;
    }
    return Partition(std::move(c));
}

int Partition::level() const {
    if (empty()) throw std::invalid_argument("level: empty partition");
    return std::min(n_ - parts_[0], n_ - rows());
}

Partition Partition::tilde() const {
    int d = level();
    if (n_ - parts_[0] == d) {
        std::vector<int> rest(parts_.begin() + 1, parts_.end());
        return Partition(std::move(rest));
    }
    std::vector<int> rest;
    for (int row : parts_)
        if (row > 1) rest.push_back(row - 1);
    return Partition(std::move(rest));
}

Int Partition::dimension() const {
    if (empty()) return 1;
    const auto conj = conjugate().parts();
    Int hooks = 1;
    for (int i = 0; i < rows(); i++)
        for (int j = 0; j < parts_[i]; j++)
            hooks *= (parts_[i] - 1 - j) + (conj[j] - 1 - i) + 1;
    return exact_div(factorial(n_), hooks);
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; k--) {
        acc.push_back(k);
        emit_partitions(n - k, k, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
    if (n > 64) throw std::invalid_argument("partitions_of: full enumeration capped at n = 64");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Partition> partitions_of_level_at_most(int n, int d) {
    if (n < 1 || d < 0 || d >= n)
        throw std::invalid_argument("partitions_of_level_at_most: need 0 <= d < n");
    std::set<std::vector<int>, std::greater<>> seen;
    for (int k = 0; k <= d; k++) {
        if (k == 0) {
            seen.insert(std::vector<int>{n});
            seen.insert(std::vector<int>(n, 1));
            continue;
        }
        for (const auto& mu : partitions_of(k)) {
            if (mu.part(0) > n - k) continue;
            std::vector<int> glued;
            glued.push_back(n - k);
            glued.insert(glued.end(), mu.parts().begin(), mu.parts().end());
            Partition lam{glued};
            if (lam.level() <= d) seen.insert(lam.parts());
            Partition conj = lam.conjugate();
            if (conj.level() <= d) seen.insert(conj.parts());
        }
    }
    std::vector<Partition> out;
    for (const auto& p : seen) out.emplace_back(p);
    return out;
}

std::vector<Partition> partitions_of_level_exactly(int n, int d) {
    std::vector<Partition> out;
    for (auto& p : partitions_of_level_at_most(n, d))
        if (p.level() == d) out.push_back(std::move(p));
    return out;
}

}  // namespace symm
