#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uinv/affine_map.hpp"
#include "uinv/generators.hpp"
#include "uinv/json_io.hpp"
#include "uinv/phi.hpp"
#include "uinv/rewrite.hpp"
#include "uinv/solver.hpp"
#include "uinv/tables.hpp"
#include "uinv/verify.hpp"

namespace {

using namespace uinv;
using nlohmann::json;

int default_threads() {
    if (const char* env = std::getenv("UINV_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

struct NamedPoly {
    std::string name;
    Polynomial poly;
    int degree;
};

NamedPoly resolve_generator(const std::string& kase, int n, const std::string& name) {
    auto index_of = [&](char prefix) {
        long v = std::stol(name.substr(1));
        if (name.size() < 2) throw std::invalid_argument("gen: bad name");
        (void)prefix;
        return static_cast<int>(v);
    };
    if (kase == "affine") {
        if (name.size() >= 2 && name[0] == 'u') {
            int k = index_of('u');
            return {name, u_generator(n, k), 2};
        }
        if (name.size() >= 2 && name[0] == 'v') {
            int k = index_of('v');
            return {name, v_generator(n, k), 3};
        }
        if (name.size() >= 2 && name[0] == 'y') {
            int i = index_of('y');
            if (i < 2 || i > n) throw std::invalid_argument("gen: y index out of range");
            return {name, y_generator(n, i - 1), i};
        }
        if (name.size() >= 2 && name[0] == 'w') {
            int k = index_of('w');
            return {name, w_generator(n, k), 5};
        }
        throw std::invalid_argument("gen: unknown affine generator '" + name + "'");
    }
    // graded case: ring has n+1 variables
    if (name == "x1") return {name, Polynomial::variable(n + 1, 0), 1};
    if (name == "s" || name == "t") {
        GeneratorSet set = special_generators(n);
        if (!set.has(name)) throw std::invalid_argument("gen: '" + name + "' needs n = " + (name == "s" ? "3" : "4"));
        return {name, set.at(name), name == "s" ? 4 : 3};
    }
    if (name.size() >= 2 && name[0] == 'p') {
        int k = index_of('p');
        return {name, graded_generator(GradedKind::P, n, k), 2};
    }
    if (name.size() >= 2 && name[0] == 'q') {
        int k = index_of('q');
        return {name, graded_generator(GradedKind::Q, n, k), 3};
    }
    if (name.size() >= 2 && name[0] == 'f') {
        int i = index_of('f');
        if (i < 2 || i > n) throw std::invalid_argument("gen: f index out of range");
        return {name, f_generator(n, i - 1), i};
    }
    throw std::invalid_argument("gen: unknown graded generator '" + name + "'");
}

void list_generators(const std::string& kase, int n) {
    if (kase == "affine") {
        for (int k = 1; k <= quadratic_count(n); ++k) std::cout << "u" << k << "\n";
        for (int k = 1; k <= mu_count(n); ++k) std::cout << "v" << k << "\n";
        for (int i = 2; i <= n; ++i) std::cout << "y" << i << "\n";
        if (n >= 5)
            for (int k = 2; k <= mu_count(n); ++k) std::cout << "w" << k << "\n";
        return;
    }
    std::cout << "x1\n";
    for (int k = 1; k <= quadratic_count(n); ++k) std::cout << "p" << k << "\n";
    for (int k = 1; k <= mu_count(n); ++k) std::cout << "q" << k << "\n";
    for (int i = 2; i <= n; ++i) std::cout << "f" << i << "\n";
    if (n == 3) std::cout << "s\n";
    if (n == 4) std::cout << "t\n";
}

UnipotentAffineMap map_for(const std::string& kase, int n) {
    if (kase == "affine") return make_affine_jordan(n);
    return make_graded_jordan(n + 1);
}

std::string relation_text(int n) {
    if (n == 3) return "x1^2*s = q1^2 + 3*x1*p1*q1 - p1^3 + 2*x1^2*p1^2";
    return "x1^3*t = q1^2 - p1^3 + 3*x1*p1*q1 + 2*x1^2*p1^2 + 3*x1^2*p1*p2";
}

Polynomial relation_difference(int n) {
    GeneratorSet g = special_generators(n);
    Polynomial x1 = g.at("x1"), p1 = g.at("p1"), q1 = g.at("q1");
    if (n == 3) {
        Polynomial s = g.at("s");
        return x1.pow(2) * s -
               (q1.pow(2) + Rational(3) * (x1 * p1 * q1) - p1.pow(3) +
                Rational(2) * (x1.pow(2) * p1.pow(2)));
    }
    Polynomial p2 = g.at("p2"), t = g.at("t");
    return x1.pow(3) * t -
           (q1.pow(2) - p1.pow(3) + Rational(3) * (x1 * p1 * q1) +
            Rational(2) * (x1.pow(2) * p1.pow(2)) + Rational(3) * (x1.pow(2) * (p1 * p2)));
}

void print_relation(int n) {
    bool ok = verify_relation(n);
    std::cout << (ok ? "OK: " : "FAIL: ") << relation_text(n) << "\n";
    std::cout << "diff hash: fnv1a64:" << hex64(fnv1a64(relation_difference(n).str())) << "\n";
}

CoeffKind parse_kind(const std::string& s) {
    if (s == "lambda") return CoeffKind::Lambda;
    if (s == "mu") return CoeffKind::Mu;
    if (s == "alpha") return CoeffKind::Alpha;
    if (s == "beta") return CoeffKind::Beta;
    throw std::invalid_argument("unknown coefficient kind '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of unipotent affine automorphisms"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a named generator");
    std::string gen_case = "affine", gen_name;
    int gen_n = 0;
    bool gen_json = false, gen_list = false;
    gen->add_option("--case", gen_case)->check(CLI::IsMember({"affine", "graded"}));
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--name", gen_name);
    gen->add_flag("--json", gen_json);
    gen->add_flag("--list", gen_list);
    gen->callback([&] {
        if (gen_list) {
            list_generators(gen_case, gen_n);
            return;
        }
        if (gen_name.empty()) throw std::invalid_argument("gen: --name or --list is required");
        NamedPoly g = resolve_generator(gen_case, gen_n, gen_name);
        if (gen_json) {
            json j{{"name", g.name}, {"degree", g.degree}, {"poly", g.poly.str()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << g.poly.str() << "\n";
        }
    });

    // solve
    auto* solve = app.add_subcommand("solve", "basis of the bounded invariant space");
    std::string solve_case = "affine", solve_mode = "filtered";
    int solve_n = 0, solve_degree = 0, solve_threads = default_threads();
    bool solve_json = false;
    solve->add_option("--case", solve_case)->check(CLI::IsMember({"affine", "graded-map"}));
    solve->add_option("--n", solve_n)->required();
    solve->add_option("--degree", solve_degree)->required();
    solve->add_option("--mode", solve_mode)->check(CLI::IsMember({"filtered", "graded"}));
    solve->add_option("--threads", solve_threads);
    solve->add_flag("--json", solve_json);
    solve->callback([&] {
        auto map = map_for(solve_case == "affine" ? "affine" : "graded", solve_n);
        InvariantBasis b = solve_mode == "filtered" ? solve_filtered(map, solve_degree, solve_threads)
                                                    : solve_graded(map, solve_degree, solve_threads);
        if (solve_json) {
            json j = json::array();
            for (const auto& p : b.basis) j.push_back(p.str());
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& p : b.basis) std::cout << p.str() << "\n";
        }
    });

    // dims
    auto* dims = app.add_subcommand("dims", "kernel dimensions up to a degree bound");
    std::string dims_case = "affine", dims_mode = "filtered";
    int dims_n = 0, dims_max = 0, dims_threads = default_threads();
    bool dims_json = false;
    dims->add_option("--case", dims_case)->check(CLI::IsMember({"affine", "graded-map"}));
    dims->add_option("--n", dims_n)->required();
    dims->add_option("--dmax", dims_max)->required();
    dims->add_option("--mode", dims_mode)->check(CLI::IsMember({"filtered", "graded"}));
    dims->add_option("--threads", dims_threads);
    dims->add_flag("--json", dims_json);
    dims->callback([&] {
        auto map = map_for(dims_case == "affine" ? "affine" : "graded", dims_n);
        auto mode = dims_mode == "filtered" ? SolveMode::Filtered : SolveMode::Graded;
        std::vector<int> table = dimension_table(map, dims_max, mode, dims_threads);
        if (dims_json) {
            std::cout << json(table).dump() << "\n";
        } else {
            for (size_t d = 0; d < table.size(); ++d) std::cout << d << " " << table[d] << "\n";
        }
    });

    // rewrite
    auto* rewrite = app.add_subcommand("rewrite", "express a polynomial in the free generators");
    std::string rw_case = "affine", rw_expr, rw_file;
    int rw_n = 0;
    bool rw_json = false;
    rewrite->add_option("--case", rw_case)->check(CLI::IsMember({"affine", "graded"}));
    rewrite->add_option("--n", rw_n)->required();
    rewrite->add_option("--expr", rw_expr);
    rewrite->add_option("--file", rw_file);
    rewrite->add_flag("--json", rw_json);
    rewrite->callback([&] {
        std::string text = rw_expr;
        if (text.empty() && !rw_file.empty()) {
            std::ifstream in(rw_file);
            if (!in) throw std::invalid_argument("rewrite: cannot open '" + rw_file + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        if (text.empty()) throw std::invalid_argument("rewrite: --expr or --file is required");
        if (rw_case == "affine") {
            Polynomial f = Polynomial::parse(text, rw_n);
            RewriteResult r = rewrite_affine(f, rw_n);
            if (rw_json) {
                json j{{"expression", r.str()}, {"residual_x1_degree", r.residual_x1_degree}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << r.str() << "\n";
                std::cout << "residual x1 degree: " << r.residual_x1_degree << "\n";
            }
        } else {
            Polynomial f = Polynomial::parse(text, rw_n + 1);
            GradedRewriteResult r = rewrite_graded(f);
            if (rw_json) {
                json j{{"expression", r.str()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << r.str() << "\n";
            }
        }
    });

    // relations
    auto* relations = app.add_subcommand("relations", "expand and check the defining relations");
    int rel_n = 0;
    relations->add_option("--n", rel_n)->check(CLI::IsMember({3, 4}));
    relations->callback([&] {
        if (rel_n != 0) {
            print_relation(rel_n);
        } else {
            print_relation(3);
            print_relation(4);
        }
    });

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "factorial basis and truncated series");
    int phi_i = -1, phi_size = 0;
    std::string phi_dir = "minus", phi_series;
    bool phi_json = false;
    phi_cmd->add_option("--i", phi_i);
    phi_cmd->add_option("--direction", phi_dir)->check(CLI::IsMember({"plus", "minus"}));
    phi_cmd->add_option("--series", phi_series)->check(CLI::IsMember({"e", "e-", "lambda", "lambda-inv"}));
    phi_cmd->add_option("--size", phi_size);
    phi_cmd->add_flag("--json", phi_json);
    phi_cmd->callback([&] {
        if (!phi_series.empty()) {
            if (phi_size < 1) throw std::invalid_argument("phi: --size is required with --series");
            NilpotentSeries s = phi_series == "e"        ? exp_series(ExpSign::Plus, phi_size)
                                : phi_series == "e-"     ? exp_series(ExpSign::Minus, phi_size)
                                : phi_series == "lambda" ? lambda_matrix(phi_size)
                                                         : lambda_inverse(phi_size);
            if (phi_json) {
                json j = json::array();
                for (int k = 0; k < s.size(); ++k) j.push_back(s.coeff(k).str());
                std::cout << j.dump() << "\n";
            } else {
                for (int k = 0; k < s.size(); ++k)
                    std::cout << "Theta^" << k << ": " << s.coeff(k).str() << "\n";
            }
            return;
        }
        if (phi_i < 0) throw std::invalid_argument("phi: --i or --series is required");
        Polynomial p = phi(phi_i, phi_dir == "plus" ? PhiDirection::Plus : PhiDirection::Minus);
        std::cout << p.str() << "\n";
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run the full check suite and report");
    int verify_nmax = 5;
    bool verify_json = false;
    std::string fault_spec;
    verify->add_option("--nmax", verify_nmax);
    verify->add_flag("--json", verify_json);
    verify->add_option("--inject-coeff-fault", fault_spec,
                       "kind:k:i:j -- add 1 to one table entry (negative control)");
    verify->callback([&] {
        if (!fault_spec.empty()) {
            std::istringstream in(fault_spec);
            std::string kind;
            std::string part;
            std::getline(in, kind, ':');
            int vals[3] = {0, 0, 0};
            for (int t = 0; t < 3 && std::getline(in, part, ':'); ++t) vals[t] = std::stoi(part);
            inject_coeff_fault({parse_kind(kind), vals[0], vals[1], vals[2], Rational(1)});
        }
        Report rep = verify_all(verify_nmax);
        if (verify_json) {
            std::cout << report_to_json(rep).dump(2) << "\n";
        } else {
            for (const auto& r : rep.results) {
                std::string tag = r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "SKIP";
                std::cout << "[" << tag << "] " << r.id << " (" << r.params << ")";
                if (r.status == "fail") std::cout << " -- " << r.claim;
                std::cout << "\n";
            }
            std::cout << rep.count("pass") << " passed, " << rep.count("fail") << " failed, "
                      << rep.count("skip") << " skipped\n";
        }
        clear_coeff_fault();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const uinv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
