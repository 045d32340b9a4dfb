#include "symm/class_function.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace symm {

CycleType::CycleType(Partition p) : p_(std::move(p)) {
    mult_.assign(p_.n() + 1, 0);
    for (int part : p_.parts()) mult_[part]++;
}

int CycleType::mult(int len) const {
    if (len < 1 || len >= static_cast<int>(mult_.size())) return 0;
    return mult_[len];
}

bool CycleType::is_even() const { return (n() - cycles()) % 2 == 0; }

Int CycleType::class_size() const {
    Int denom = 1;
    for (int len = 1; len <= n(); len++) {
        if (int f = mult(len); f > 0)
            denom *= int_pow(static_cast<unsigned long>(len), f) * factorial(f);
    }
    return exact_div(factorial(n()), denom);
}

CycleType CycleType::power(int m) const {
    if (m < 0) throw std::invalid_argument("CycleType::power: m < 0");
    std::vector<int> parts;
    for (int len : p_.parts()) {
        int g = std::gcd(len, m);
        for (int i = 0; i < g; i++) parts.push_back(len / g);
    }
    std::sort(parts.rbegin(), parts.rend());
    return CycleType(Partition(std::move(parts)));
}

std::vector<CycleType> an_split_classes(int n) {
    if (n < 2) throw std::invalid_argument("an_split_classes: n < 2");
    std::vector<CycleType> out;
    for (const auto& p : partitions_of(n)) {
        bool ok = true;
        for (size_t i = 0; i < p.parts().size() && ok; i++) {
            if (p.parts()[i] % 2 == 0) ok = false;
            if (i > 0 && p.parts()[i] == p.parts()[i - 1]) ok = false;
        }
        if (ok) out.emplace_back(p);
    }
    return out;
}

const ClassList& ClassList::get(Group g, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ClassList> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(g), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (n < 0) throw std::invalid_argument("ClassList: n < 0");
    if (g == Group::A && n < 2) throw std::invalid_argument("ClassList: A_n needs n >= 2");
    ClassList cl;
    cl.group = g;
    cl.n = n;
    cl.group_order = factorial(n);
    if (g == Group::A) cl.group_order /= 2;
    for (const auto& p : partitions_of(n)) {
        CycleType ct(p);
        if (g == Group::A && !ct.is_even()) continue;
        cl.densities.emplace_back(Rat(ct.class_size()) / Rat(cl.group_order));
        cl.types.push_back(std::move(ct));
    }
    return cache.emplace(key, std::move(cl)).first->second;
}

int ClassList::index_of(const Partition& ct) const {
    auto i = find(ct);
    if (!i) throw std::invalid_argument("ClassList: no class " + ct.to_string());
    return *i;
}

std::optional<int> ClassList::find(const Partition& ct) const {
    // types are sorted descending under lexicographic comparison
    auto it = std::lower_bound(types.begin(), types.end(), ct,
                               [](const CycleType& a, const Partition& b) {
                                   return a.partition().parts() > b.parts();
                               });
    if (it == types.end() || !(it->partition() == ct)) return std::nullopt;
    return static_cast<int>(it - types.begin());
}

ClassFunction::ClassFunction(Group g, int n)
    : list_(&ClassList::get(g, n)), v_(list_->size(), Rat(0)) {}

ClassFunction ClassFunction::constant(Group g, int n, const Rat& c) {
    ClassFunction f(g, n);
    for (auto& x : f.v_) x = c;
    return f;
}

ClassFunction ClassFunction::normalized_class_indicator(Group g, const CycleType& ct) {
    return normalized_indicator(g, ct.n(), {ct});
}

ClassFunction ClassFunction::normalized_indicator(Group g, int n,
                                                  const std::vector<CycleType>& classes) {
    if (classes.empty()) throw std::invalid_argument("normalized_indicator: empty class set");
    ClassFunction f(g, n);
    Rat mass(0);
    std::vector<int> idx;
    for (const auto& ct : classes) {
        if (ct.n() != n) throw std::invalid_argument("normalized_indicator: size mismatch");
        if (g == Group::A && !ct.is_even())
            throw std::invalid_argument("normalized_indicator: odd class under A_n tag");
        int i = f.list_->index_of(ct.partition());
        if (f.v_[i] != 0) continue;
        f.v_[i] = 1;
        mass += f.list_->densities[i];
    }
    for (int i = 0; i < f.size(); i++)
        if (f.v_[i] != 0) f.v_[i] = 1 / mass;
    return f;
}

Rat ClassFunction::inner(const ClassFunction& g) const {
    if (list_ != g.list_) throw std::invalid_argument("inner: mismatched class functions");
    Rat s(0);
    for (int i = 0; i < size(); i++) s += list_->densities[i] * v_[i] * g.v_[i];
    return s;
}

Rat ClassFunction::mean() const {
    Rat s(0);
    for (int i = 0; i < size(); i++) s += list_->densities[i] * v_[i];
    return s;
}

Rat ClassFunction::l1_norm() const {
    Rat s(0);
    for (int i = 0; i < size(); i++) s += list_->densities[i] * abs(v_[i]);
    return s;
}

Rat ClassFunction::l2_norm_sq() const { return inner(*this); }

Rat ClassFunction::lp_pow(unsigned q) const {
    Rat s(0);
    for (int i = 0; i < size(); i++) {
        Rat t(1);
        for (unsigned k = 0; k < q; k++) t *= v_[i];
        s += list_->densities[i] * abs(t);
    }
    return s;
}

double ClassFunction::lp_norm(double p) const {
    if (p < 1) throw std::invalid_argument("lp_norm: p < 1");
    double s = 0;
    for (int i = 0; i < size(); i++) {
        double x = std::abs(to_double(v_[i]));
        if (x > 0) s += to_double(list_->densities[i]) * std::exp(p * std::log(x));
    }
    return std::pow(s, 1.0 / p);
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (list_ != o.list_) throw std::invalid_argument("+: mismatched class functions");
    ClassFunction r = *this;
    for (int i = 0; i < size(); i++) r.v_[i] += o.v_[i];
    return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    if (list_ != o.list_) throw std::invalid_argument("-: mismatched class functions");
    ClassFunction r = *this;
    for (int i = 0; i < size(); i++) r.v_[i] -= o.v_[i];
    return r;
}

ClassFunction ClassFunction::scaled(const Rat& c) const {
    ClassFunction r = *this;
    for (auto& x : r.v_) x *= c;
    return r;
}

ClassFunction ClassFunction::pointwise_mul(const ClassFunction& o) const {
    if (list_ != o.list_) throw std::invalid_argument("pointwise_mul: mismatched class functions");
    ClassFunction r = *this;
    for (int i = 0; i < size(); i++) r.v_[i] *= o.v_[i];
    return r;
}

std::string ClassFunction::to_json() const {
    nlohmann::ordered_json j;
    j["group"] = group() == Group::S ? "S" : "A";
    j["n"] = n();
    j["values"] = nlohmann::ordered_json::array();
    for (int i = 0; i < size(); i++) {
        Rat v = v_[i];
        v.canonicalize();
        j["values"].push_back({{"type", list_->types[i].to_string()},
                               {"num", Int(v.get_num()).get_str()},
                               {"den", Int(v.get_den()).get_str()}});
    }
    return j.dump(2);
}

ClassFunction ClassFunction::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::string gs = j.at("group").get<std::string>();
    if (gs != "S" && gs != "A") throw std::invalid_argument("from_json: bad group tag");
    Group g = gs == "S" ? Group::S : Group::A;
    int n = j.at("n").get<int>();
    ClassFunction f(g, n);
    for (const auto& e : j.at("values")) {
        Partition ct = Partition::parse(e.at("type").get<std::string>());
        Rat v(Int(e.at("num").get<std::string>()), Int(e.at("den").get<std::string>()));
        v.canonicalize();
        f.set(ct, v);
    }
    return f;
}

}  // namespace symm
