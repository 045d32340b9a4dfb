#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "symm/bounds.hpp"
#include "symm/harmonic.hpp"
#include "symm/mixing.hpp"

using nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string subcommand;
    std::string group_text = "S";
    std::string lambda_text;
    std::string type_text;
    std::string mu_text;
    std::string nu_text;
    std::string class_text;
    std::string a_text, b_text, c_text;
    int n = 0;
    double q = 2.0;
    bool exact = false;
    bool brute = false;
    int steps = 8;
    double eps = 0.36787944117144233;  // 1/e, the L1 convention default
    int cap = 64;
    int ell = 2;
    int table_cap = 20;
    std::string format = "text";  // text | json | csv
    std::string out_path;
    std::uint64_t seed = 0x5EED;
    int threads = 0;
    symm::VerifyOptions verify;
};

symm::Group parse_group(const std::string& text) {
    if (text == "S" || text == "s") return symm::Group::S;
    if (text == "A" || text == "a") return symm::Group::A;
    throw std::invalid_argument("group must be S or A");
}

symm::CharacterEvaluator& evaluator() {
    static symm::CharacterEvaluator ev;
    return ev;
}

std::string cache_file() {
    const char* dir = std::getenv("SYMH_CACHE_DIR");
    if (!dir || !*dir) return "";
    return std::string(dir) + "/mn-memo.bin";
}

ordered_json rat_json(const symm::Rat& r) {
    ordered_json j;
    j["num"] = r.get_num().get_str();
    j["den"] = r.get_den().get_str();
    return j;
}

ordered_json int_json(const symm::Int& z) {
    ordered_json j;
    j["num"] = z.get_str();
    j["den"] = "1";
    return j;
}

std::string rat_text(const symm::Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// writes a report to stdout or to the requested path; csv mode flattens
// scalar fields into key,value rows
void emit(const RunConfig& cfg, const ordered_json& rep, const std::string& text_form) {
    std::ostringstream body;
    if (cfg.format == "json") {
        body << rep.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        body << "key,value\n";
        std::function<void(const std::string&, const ordered_json&)> walk =
            [&](const std::string& prefix, const ordered_json& node) {
                if (node.is_object()) {
                    for (const auto& [k, v] : node.items())
                        walk(prefix.empty() ? k : prefix + "." + k, v);
                } else if (node.is_array()) {
                    for (size_t i = 0; i < node.size(); i++)
                        walk(prefix + "[" + std::to_string(i) + "]", node[i]);
                } else if (node.is_string()) {
                    std::string s = node.get<std::string>();
                    for (char& ch : s)
                        if (ch == ',') ch = ';';
                    body << prefix << "," << s << "\n";
                } else {
                    body << prefix << "," << node.dump() << "\n";
                }
            };
        walk("", rep);
    } else {
        body << text_form;
    }
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
        out << body.str();
    } else {
        std::cout << body.str();
    }
}

int run_char_eval(const RunConfig& cfg) {
    symm::Group g = parse_group(cfg.group_text);
    symm::Partition lam = symm::Partition::parse(cfg.lambda_text);
    symm::CycleType ct = symm::CycleType::parse(cfg.type_text);
    symm::Int v = (g == symm::Group::S) ? evaluator().value(lam, ct)
                                        : evaluator().an_value(lam, ct);
    ordered_json rep;
    rep["op"] = "char.eval";
    rep["inputs"] = {{"group", cfg.group_text}, {"lambda", lam.to_string()},
                     {"type", ct.to_string()}};
    rep["exact"] = int_json(v);
    rep["float"] = v.get_d();
    rep["witness"] = "";
    emit(cfg, rep, v.get_str() + "\n");
    return 0;
}

int run_char_table(const RunConfig& cfg) {
    symm::Group g = parse_group(cfg.group_text);
    symm::CharacterTable tab = evaluator().table(g, cfg.n, cfg.table_cap, cfg.threads);
    std::string body = (cfg.format == "json") ? tab.to_json() : tab.to_csv();
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
        out << body;
    } else {
        std::cout << body;
    }
    return 0;
}

int run_norm(const RunConfig& cfg) {
    symm::Group g = parse_group(cfg.group_text);
    symm::Partition lam = symm::Partition::parse(cfg.lambda_text);
    ordered_json rep;
    rep["op"] = "norm";
    rep["inputs"] = {{"group", cfg.group_text}, {"lambda", lam.to_string()},
                     {"q", cfg.q}, {"exact", cfg.exact}};
    std::string text;
    if (cfg.exact) {
        double qi;
        if (std::modf(cfg.q, &qi) != 0.0 || cfg.q < 2.0 ||
            (static_cast<unsigned long>(cfg.q) % 2) != 0)
            throw std::invalid_argument("exact norms need an even integer q");
        unsigned uq = static_cast<unsigned>(cfg.q);
        symm::Rat pw = symm::q_norm_exact_pow(evaluator(), g, lam, uq);
        rep["exact"] = rat_json(pw);
        rep["float"] = std::pow(symm::to_double(pw), 1.0 / cfg.q);
        rep["witness"] = "exact value is the q-th power of the norm";
        text = rat_text(pw) + "\n";
    } else {
        double v = symm::q_norm(evaluator(), g, lam, cfg.q);
        rep["exact"] = nullptr;
        rep["float"] = v;
        rep["witness"] = "";
        std::ostringstream os;
        os << std::setprecision(17) << v << "\n";
        text = os.str();
    }
    emit(cfg, rep, text);
    return 0;
}

int run_kronecker(const RunConfig& cfg) {
    symm::Partition lam = symm::Partition::parse(cfg.lambda_text);
    symm::Partition mu = symm::Partition::parse(cfg.mu_text);
    symm::Partition nu = symm::Partition::parse(cfg.nu_text);
    symm::Int gkc = symm::kronecker(evaluator(), lam, mu, nu);
    ordered_json rep;
    rep["op"] = "kronecker";
    rep["inputs"] = {{"l", lam.to_string()}, {"m", mu.to_string()}, {"nu", nu.to_string()}};
    rep["exact"] = int_json(gkc);
    rep["float"] = gkc.get_d();
    rep["witness"] = "";
    emit(cfg, rep, gkc.get_str() + "\n");
    return 0;
}

int run_global(const RunConfig& cfg) {
    symm::Partition lam = symm::Partition::parse(cfg.lambda_text);
    symm::GlobalnessReport grep = symm::globalness_certificate(
        evaluator(), lam, cfg.brute, 200, cfg.seed);
    ordered_json rep;
    rep["op"] = "global";
    rep["inputs"] = {{"lambda", lam.to_string()}, {"brute", cfg.brute}};
    rep["exact"] = int_json(grep.tilde_dim);
    rep["float"] = grep.gamma_constant;
    rep["witness"] = grep.to_string();
    emit(cfg, rep, grep.to_string() + "\n");
    return (grep.chain_ok && grep.brute_ok) ? 0 : 1;
}

int run_mix_profile(const RunConfig& cfg) {
    symm::Group g = parse_group(cfg.group_text);
    symm::CycleType ct = symm::CycleType::parse(cfg.class_text);
    if (ct.n() != cfg.n) throw std::invalid_argument("--class must be a cycle type of n");
    symm::ClassFunction f = symm::ClassFunction::normalized_class_indicator(g, ct);
    symm::MixingProfile prof = symm::mixing_profile(evaluator(), f, cfg.steps);
    int t2 = symm::mixing_time(evaluator(), f, cfg.eps, 2, cfg.cap);
    int t1 = symm::mixing_time(evaluator(), f, cfg.eps, 1, cfg.cap);
    ordered_json rep;
    rep["op"] = "mix.profile";
    rep["inputs"] = {{"group", cfg.group_text}, {"n", cfg.n},
                     {"class", ct.to_string()}, {"steps", cfg.steps},
                     {"eps", cfg.eps}, {"cap", cfg.cap}};
    ordered_json steps = ordered_json::array();
    std::ostringstream text;
    text << "walk on " << cfg.group_text << "_" << cfg.n << " from class "
         << ct.to_string() << "\n";
    for (size_t i = 0; i < prof.dist_sq.size(); i++) {
        ordered_json item;
        item["ell"] = i + 1;
        item["dist_sq_exact"] = rat_json(prof.dist_sq[i]);
        item["dist"] = std::sqrt(symm::to_double(prof.dist_sq[i]));
        steps.push_back(item);
        text << "  ell=" << (i + 1) << "  dist=" << std::setprecision(12)
             << std::sqrt(symm::to_double(prof.dist_sq[i])) << "\n";
    }
    rep["profile"] = steps;
    ordered_json times = ordered_json::array();
    times.push_back({{"convention", "L2 distance below eps"},
                     {"eps", cfg.eps},
                     {"t", t2},
                     {"capped", t2 < 0}});
    times.push_back({{"convention", "L1 distance below eps"},
                     {"eps", cfg.eps},
                     {"t", t1},
                     {"capped", t1 < 0}});
    rep["mixing_time"] = times;
    text << "  t(L2, eps) = " << t2 << ", t(L1, eps) = " << t1
         << (t1 < 0 || t2 < 0 ? "  (negative means the cap was hit)" : "") << "\n";
    emit(cfg, rep, text.str());
    return 0;
}

int run_mix_lower(const RunConfig& cfg) {
    symm::CycleType wit = symm::lower_bound_walk(cfg.n, cfg.ell);
    symm::Rat density(wit.class_size(), symm::factorial(cfg.n));
    density.canonicalize();
    ordered_json rep;
    rep["op"] = "mix.lower-bound";
    rep["inputs"] = {{"n", cfg.n}, {"ell", cfg.ell}};
    rep["exact"] = rat_json(density);
    rep["float"] = symm::to_double(density);
    rep["witness"] = wit.to_string();
    emit(cfg, rep,
         "witness class " + wit.to_string() + " density " + rat_text(density) + "\n");
    return 0;
}

int run_mix_product(const RunConfig& cfg) {
    symm::Group g = parse_group(cfg.group_text);
    symm::CycleType ca = symm::CycleType::parse(cfg.a_text);
    symm::CycleType cb = symm::CycleType::parse(cfg.b_text);
    symm::CycleType cc = symm::CycleType::parse(cfg.c_text);
    if (ca.n() != cb.n() || ca.n() != cc.n())
        throw std::invalid_argument("the three classes must share one n");
    symm::ClassFunction fa = symm::ClassFunction::normalized_class_indicator(g, ca);
    symm::ClassFunction fb = symm::ClassFunction::normalized_class_indicator(g, cb);
    symm::ClassFunction fc = symm::ClassFunction::normalized_class_indicator(g, cc);
    symm::Rat dev = symm::product_mixing_lhs(evaluator(), fa, fb, fc);
    ordered_json rep;
    rep["op"] = "mix.product";
    rep["inputs"] = {{"group", cfg.group_text}, {"a", ca.to_string()},
                     {"b", cb.to_string()}, {"c", cc.to_string()}};
    rep["exact"] = rat_json(dev);
    rep["float"] = symm::to_double(dev);
    rep["witness"] = "deviation of the triple product expectation from 1";
    emit(cfg, rep, "deviation " + rat_text(dev) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact harmonic analysis on symmetric and alternating groups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* cmd_char = app.add_subcommand("char", "character values and tables");
    cmd_char->require_subcommand(1);
    auto* char_eval = cmd_char->add_subcommand("eval", "evaluate one character value");
    char_eval->add_option("--lambda", cfg.lambda_text, "shape, e.g. 5,3,1")->required();
    char_eval->add_option("--type", cfg.type_text, "cycle type, e.g. 4,4,1")->required();
    char_eval->add_option("--group", cfg.group_text, "S or A");
    char_eval->add_option("--format", cfg.format, "text, json or csv");
    char_eval->add_option("--out", cfg.out_path, "write the report to a file");
    auto* char_table = cmd_char->add_subcommand("table", "full character table");
    char_table->add_option("--n", cfg.n, "degree")->required();
    char_table->add_option("--group", cfg.group_text, "S or A");
    char_table->add_option("--format", cfg.format, "csv or json");
    char_table->add_option("--max-n", cfg.table_cap, "guard cap for the table size");
    char_table->add_option("--threads", cfg.threads, "worker threads for table rows");
    char_table->add_option("--out", cfg.out_path, "write the table to a file");

    auto* cmd_norm = app.add_subcommand("norm", "q-norm of an irreducible character");
    cmd_norm->add_option("--lambda", cfg.lambda_text)->required();
    cmd_norm->add_option("--q", cfg.q, "exponent, q >= 1")->required();
    cmd_norm->add_flag("--exact", cfg.exact, "exact q-th power for even integer q");
    cmd_norm->add_option("--group", cfg.group_text, "S or A");
    cmd_norm->add_option("--format", cfg.format);
    cmd_norm->add_option("--out", cfg.out_path);

    auto* cmd_kron = app.add_subcommand("kronecker", "Kronecker coefficient of three shapes");
    cmd_kron->add_option("--l", cfg.lambda_text)->required();
    cmd_kron->add_option("--m", cfg.mu_text)->required();
    cmd_kron->add_option("--nu", cfg.nu_text)->required();
    cmd_kron->add_option("--format", cfg.format);
    cmd_kron->add_option("--out", cfg.out_path);

    auto* cmd_global = app.add_subcommand("global", "globalness certificate for a shape");
    cmd_global->add_option("--lambda", cfg.lambda_text)->required();
    cmd_global->add_flag("--brute", cfg.brute, "verify coset norms by enumeration (n <= 8)");
    cmd_global->add_option("--seed", cfg.seed, "sampling seed");
    cmd_global->add_option("--format", cfg.format);
    cmd_global->add_option("--out", cfg.out_path);

    auto* cmd_verify = app.add_subcommand("verify", "exact checks and constant fits");
    cmd_verify->add_option("--theorem", cfg.verify.theorem,
                           "dims, branching, mn-long, prob-recursion, main-norm, ratio, "
                           "fourier, kronecker or all");
    cmd_verify->add_option("--n-max", cfg.verify.n_max, "sweep ceiling")->required();
    cmd_verify->add_option("--json", cfg.verify.json_out, "write the report array here");
    cmd_verify->add_option("--locks", cfg.verify.lock_path, "constants lock file");
    cmd_verify->add_flag("--update-locks", cfg.verify.update_locks,
                         "rewrite the lock file from this run");
    cmd_verify->add_option("--threads", cfg.verify.threads);

    auto* cmd_mix = app.add_subcommand("mix", "random walk mixing diagnostics");
    cmd_mix->add_option("--group", cfg.group_text, "S or A");
    cmd_mix->add_option("--n", cfg.n, "degree");
    cmd_mix->add_option("--class", cfg.class_text, "generating class, e.g. 9,1,1,1");
    cmd_mix->add_option("--steps", cfg.steps, "profile length");
    cmd_mix->add_option("--eps", cfg.eps, "distance threshold (default 1/e)");
    cmd_mix->add_option("--cap", cfg.cap, "step cap for mixing times");
    bool mix_json = false;
    cmd_mix->add_flag("--json", mix_json, "emit the profile as JSON");
    cmd_mix->add_option("--format", cfg.format);
    cmd_mix->add_option("--out", cfg.out_path);
    auto* mix_lower = cmd_mix->add_subcommand("lower-bound", "slow-mixing witness class");
    mix_lower->add_option("--n", cfg.n, "degree")->required();
    mix_lower->add_option("--ell", cfg.ell, "number of steps")->required();
    mix_lower->add_option("--format", cfg.format);
    mix_lower->add_option("--out", cfg.out_path);
    auto* mix_product = cmd_mix->add_subcommand("product", "triple product expectation");
    mix_product->add_option("--a", cfg.a_text)->required();
    mix_product->add_option("--b", cfg.b_text)->required();
    mix_product->add_option("--c", cfg.c_text)->required();
    mix_product->add_option("--group", cfg.group_text, "S or A");
    mix_product->add_option("--format", cfg.format);
    mix_product->add_option("--out", cfg.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (mix_json) cfg.format = "json";
    std::string cache = cache_file();
    if (!cache.empty()) evaluator().load_cache(cache);
    int code = 0;
    try {
        if (*char_eval) {
            cfg.subcommand = "char";
            code = run_char_eval(cfg);
        } else if (*char_table) {
            cfg.subcommand = "char";
            code = run_char_table(cfg);
        } else if (*cmd_norm) {
            cfg.subcommand = "norm";
            code = run_norm(cfg);
        } else if (*cmd_kron) {
            cfg.subcommand = "kronecker";
            code = run_kronecker(cfg);
        } else if (*cmd_global) {
            cfg.subcommand = "global";
            code = run_global(cfg);
        } else if (*cmd_verify) {
            cfg.subcommand = "verify";
            code = symm::run_verify(cfg.verify);
        } else if (*mix_lower) {
            cfg.subcommand = "mix";
            code = run_mix_lower(cfg);
        } else if (*mix_product) {
            cfg.subcommand = "mix";
            code = run_mix_product(cfg);
        } else if (*cmd_mix) {
            cfg.subcommand = "mix";
            if (cfg.class_text.empty() || cfg.n <= 0)
                throw std::invalid_argument("mix needs --n and --class");
            code = run_mix_profile(cfg);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 1;
    }
    if (!cache.empty()) evaluator().save_cache(cache);
    return code;
}
