#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtk/algorithm1.hpp"
#include "dtk/curves.hpp"
#include "dtk/density.hpp"
#include "dtk/dynatomic.hpp"
#include "dtk/report.hpp"
#include "dtk/verify.hpp"

namespace {

using nlohmann::json;

int cmd_dynatomic(unsigned n, const std::string& c_text, bool generic, bool as_json) {
    dtk::PolyMap f =
        generic ? dtk::quadratic_family_generic() : dtk::quadratic_family_at(dtk::Rational::parse(c_text));
    auto phi = dtk::dynatomic(f, n);
    if (as_json) {
        json out{{"n", n},
                 {"degree", phi.degree},
                 {"parameter", generic ? "generic" : c_text},
                 {"phi", phi.phi.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << phi.phi.str() << "\n";
    }
    return 0;
}

json pair_to_json(const dtk::AlgorithmOnePair& p) {
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back(g.str());
    return json{{"order", p.order},
                {"index_set", p.index_set},
                {"structure", p.structure.tag()},
                {"generators", gens}};
}

int cmd_algorithm1(int n, int s, const std::string& verify_file, bool as_json) {
    if (!verify_file.empty()) {
        dtk::AlgorithmOneInput input{n, s};
        auto cands = dtk::load_candidates_file(verify_file, static_cast<int>(input.big_n()));
        auto reports = dtk::verify_candidates(n, s, cands);
        bool all_pass = true;
        json arr = json::array();
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            if (as_json) {
                arr.push_back(json{{"name", r.name},
                                   {"order", r.order},
                                   {"commutes_with_pi", r.commutes_with_pi},
                                   {"union_condition", r.union_condition},
                                   {"proper_condition", r.proper_condition},
                                   {"index_set", r.index_set},
                                   {"structure", r.structure_tag},
                                   {"expectations_met", r.expectations_met},
                                   {"pass", r.pass()}});
            } else {
                std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << "  order=" << r.order
                          << " I={";
                for (size_t i = 0; i < r.index_set.size(); ++i)
                    std::cout << (i ? "," : "") << r.index_set[i];
                std::cout << "} structure=" << r.structure_tag << "\n";
            }
        }
        if (as_json) std::cout << json{{"candidates", arr}}.dump(2) << "\n";
        return all_pass ? 0 : 1;
    }

    auto res = dtk::run_algorithm1({n, s});
    if (as_json) {
        json pairs = json::array();
        for (const auto& p : res.pairs) pairs.push_back(pair_to_json(p));
        json out{{"n", n},
                 {"s", s},
                 {"degree", res.degree},
                 {"cycles", res.r},
                 {"centralizer_order", res.centralizer_order.get_str()},
                 {"subgroup_classes", res.class_count},
                 {"pairs", pairs}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "N=" << res.degree << " r=" << res.r
                  << " |W|=" << res.centralizer_order.get_str()
                  << " classes=" << res.class_count << " pairs=" << res.pairs.size() << "\n";
        for (const auto& p : res.pairs) {
            std::cout << "  order=" << p.order << " I={";
            for (size_t i = 0; i < p.index_set.size(); ++i)
                std::cout << (i ? "," : "") << p.index_set[i];
            std::cout << "} structure=" << p.structure.tag() << " gens:";
            for (const auto& g : p.generators) std::cout << " " << g.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_density_sample(const std::string& poly_text, uint64_t bound, unsigned jobs, bool as_json) {
    dtk::MPoly F = dtk::MPoly::parse(poly_text);
    auto used = F.used_vars();
    if (used.size() != 1) throw CLI::ValidationError("--poly", "polynomial must be univariate");
    auto est = dtk::sampled_density(F, used[0], bound, jobs);
    if (as_json) {
        json out{{"poly", poly_text},
                 {"bound", bound},
                 {"hits", est.hits},
                 {"total", est.total},
                 {"estimate", est.value()},
                 {"excluded_primes", est.excluded_primes}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << est.hits << "/" << est.total << " = " << est.value() << " (excluded";
        for (auto p : est.excluded_primes) std::cout << " " << p;
        std::cout << ")\n";
    }
    return 0;
}

int cmd_density_exact(const std::string& group_file, const std::string& points_text, int degree,
                      bool as_json) {
    std::ifstream in(group_file);
    if (!in) throw CLI::ValidationError("--group", "cannot open " + group_file);
    std::vector<std::string> lines;
    std::string line;
    int max_point = 0;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
        for (size_t i = 0; i < line.size(); ++i) {
            if (std::isdigit(static_cast<unsigned char>(line[i]))) {
                size_t j = i;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
                max_point = std::max(max_point, std::stoi(line.substr(i, j - i)));
                i = j;
            }
        }
    }
    if (degree == 0) degree = max_point;
    std::vector<dtk::Perm> gens;
    for (const auto& l : lines) gens.push_back(dtk::Perm::parse(l, degree));
    std::vector<int32_t> points;
    std::istringstream ps(points_text);
    std::string tok;
    while (std::getline(ps, tok, ',')) points.push_back(std::stoi(tok));
    dtk::GaloisData data{dtk::PermGroup(degree, gens), points};
    dtk::Rational d = dtk::exact_density(data);
    if (as_json) {
        json out{{"group", group_file},
                 {"degree", degree},
                 {"order", data.group.order().get_str()},
                 {"points", points},
                 {"density", d.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << d.str() << "\n";
    }
    return 0;
}

dtk::CheckResult check_curve_fixture(const std::string& path) {
    dtk::CheckResult r;
    r.name = "curve-fixture";
    r.paper_location = "known points from " + path;
    std::ifstream in(path);
    if (!in) {
        r.status = dtk::CheckResult::Status::fail;
        r.detail = "cannot open " + path;
        return r;
    }
    std::string kind, line;
    int bad = 0, seen = 0;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        if (!(ss >> kind) || kind[0] == '#') continue;
        std::string a, b, c;
        if (kind == "X") {
            ss >> a >> b >> c;
            ++seen;
            if (!dtk::on_X(dtk::Rational::parse(a), dtk::Rational::parse(b), dtk::Rational::parse(c)))
                ++bad;
        } else if (kind == "C05") {
            ss >> a >> b;
            ++seen;
            if (!dtk::on_C05(dtk::Rational::parse(a), dtk::Rational::parse(b))) ++bad;
        }
    }
    r.status = bad == 0 ? dtk::CheckResult::Status::pass : dtk::CheckResult::Status::fail;
    std::ostringstream d;
    d << seen << " points, " << bad << " off-curve";
    if (bad != 0) r.detail = d.str();
    return r;
}

int run_verify(const dtk::VerifyOptions& opt, bool as_json, bool with_fixture_points) {
    dtk::RunReport report = dtk::verify_paper(opt);
    if (with_fixture_points)
        report.checks.push_back(check_curve_fixture(opt.fixture_dir + "/curve_points.txt"));
    if (as_json)
        dtk::emit_json(report, std::cout);
    else
        dtk::emit_text(report, std::cout);
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for periodic points of quadratic polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dtk::version_string());

    bool as_json = false;

    auto* dyn = app.add_subcommand("dynatomic", "print the n-th dynatomic polynomial of x^2 + c");
    unsigned dyn_n = 1;
    std::string dyn_c;
    bool dyn_generic = false;
    dyn->add_option("--n", dyn_n, "period")->required()->check(CLI::Range(1u, 6u));
    auto* copt = dyn->add_option("--c", dyn_c, "rational parameter a/b");
    dyn->add_flag("--generic", dyn_generic, "keep c generic")->excludes(copt);
    dyn->add_flag("--json", as_json, "machine-readable output");

    auto* alg = app.add_subcommand("algorithm1", "group search for given period and degree");
    int alg_n = 1, alg_s = 2;
    std::string alg_verify;
    alg->add_option("--n", alg_n, "period")->required();
    alg->add_option("--s", alg_s, "polynomial degree")->required();
    alg->add_option("--verify", alg_verify, "verify candidates from file instead of enumerating");
    alg->add_flag("--json", as_json, "machine-readable output");

    auto* den = app.add_subcommand("density", "density of primes where a polynomial has a root");
    den->require_subcommand(1);
    auto* den_sample = den->add_subcommand("sample", "estimate by counting primes");
    std::string den_poly;
    uint64_t den_bound = 1000000;
    unsigned den_jobs = 1;
    den_sample->add_option("--poly", den_poly, "polynomial, e.g. \"x^2+2*x-1\"")->required();
    den_sample->add_option("--bound", den_bound, "prime bound");
    den_sample->add_option("--jobs", den_jobs, "worker count");
    den_sample->add_flag("--json", as_json, "machine-readable output");
    auto* den_exact = den->add_subcommand("exact", "exact value from Galois-group data");
    std::string den_group, den_points;
    int den_degree = 0;
    den_exact->add_option("--group", den_group, "file with one permutation per line")->required();
    den_exact->add_option("--points", den_points, "comma-separated stabilizer points")->required();
    den_exact->add_option("--degree", den_degree, "permutation degree (default: max point)");
    den_exact->add_flag("--json", as_json, "machine-readable output");

    auto* cur = app.add_subcommand("curves", "curve identities and known points");
    auto* cur_verify = cur->add_subcommand("verify", "run the curve checks");
    std::string cur_fixtures = dtk::VerifyOptions::default_fixture_dir();
    cur_verify->add_option("--fixtures", cur_fixtures, "fixture directory");
    cur_verify->add_flag("--json", as_json, "machine-readable output");

    auto* ver = app.add_subcommand("verify-paper", "run the full verification suite");
    dtk::VerifyOptions vopt;
    ver->add_option("--only", vopt.only, "run a single check (or a name prefix)");
    ver->add_option("--bound", vopt.prime_bound, "prime bound for sampled densities");
    ver->add_option("--c-samples", vopt.c_samples, "integer parameters for the disc Phi_5 check");
    ver->add_option("--jobs", vopt.jobs, "parallel workers for the samplers");
    ver->add_option("--fixtures", vopt.fixture_dir, "fixture directory");
    ver->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (dyn->parsed())
            return cmd_dynatomic(dyn_n, dyn_c.empty() ? "0" : dyn_c, dyn_generic || dyn_c.empty(),
                                 as_json);
        if (alg->parsed()) return cmd_algorithm1(alg_n, alg_s, alg_verify, as_json);
        if (den->parsed()) {
            if (den_sample->parsed()) return cmd_density_sample(den_poly, den_bound, den_jobs, as_json);
            return cmd_density_exact(den_group, den_points, den_degree, as_json);
        }
        if (cur->parsed()) {
            dtk::VerifyOptions opt;
            opt.only = "curves";
            opt.fixture_dir = cur_fixtures;
            return run_verify(opt, as_json, true);
        }
        if (ver->parsed()) return run_verify(vopt, as_json, false);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
