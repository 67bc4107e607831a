#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdiv/bell.hpp"
#include "gdiv/champions.hpp"
#include "gdiv/constants.hpp"
#include "gdiv/divisors.hpp"
#include "gdiv/parallel.hpp"
#include "gdiv/primes.hpp"
#include "gdiv/summing.hpp"
#include "gdiv/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gdiv;

namespace {

constexpr const char* kVersion = "1.0.0";

using Clock = std::chrono::steady_clock;

// Stable envelope: {command, parameters, rows, metadata}; timing lives in
// metadata only, so everything else is byte-identical across runs.
json envelope(const std::string& command, json parameters, json rows,
              Clock::time_point t0, json extra_meta = json::object()) {
    json meta = std::move(extra_meta);
    meta["version"] = kVersion;
    meta["timing_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return json{{"command", command},
                {"parameters", std::move(parameters)},
                {"rows", std::move(rows)},
                {"metadata", std::move(meta)}};
}

const char* class_name(PrimeClass c) {
    switch (c) {
    case PrimeClass::Ramified: return "ramified";
    case PrimeClass::Split:    return "split";
    default:                   return "inert";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exponential divisor functions over Z and Z[i]"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (env GDIV_THREADS)");

    std::string family_str = "frak_t_e_k", format = "json", which_str = "C";
    int k = 2, l = 2, truncation = 0;
    std::uint64_t x = 0, max_norm = 100, cutoff = 1000000, big_x = 100000;
    int series_truncation = 64;
    std::string arg_str, xs_str;
    bool use_oracle = false, rational = false;

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a family at one argument");
    cmd_eval->add_option("--family", family_str)->required();
    cmd_eval->add_option("--k", k)->required();
    cmd_eval->add_option("--arg", arg_str, "n or a+bi")->required();

    auto* cmd_factor = app.add_subcommand("factor", "factor over Z[i] (or Z with --rational)");
    cmd_factor->add_option("--arg", arg_str)->required();
    cmd_factor->add_flag("--rational", rational);
    cmd_factor->add_option("--format", format);

    auto* cmd_primes = app.add_subcommand("primes", "Gaussian primes by norm");
    cmd_primes->add_option("--max-norm", max_norm)->required();
    cmd_primes->add_option("--format", format);

    auto* cmd_bell = app.add_subcommand("bell", "local Euler factor and zeta exponents");
    cmd_bell->add_option("--family", family_str)->required();
    cmd_bell->add_option("--k", k)->required();
    cmd_bell->add_option("--truncation", truncation);
    cmd_bell->add_option("--format", format);

    auto* cmd_sum = app.add_subcommand("sum", "summatory function vs main term");
    cmd_sum->add_option("--family", family_str)->required();
    cmd_sum->add_option("--k", k)->required();
    cmd_sum->add_option("--x", x);
    cmd_sum->add_option("--xs", xs_str, "comma-separated grid, e.g. 1e4,1e5");
    cmd_sum->add_flag("--oracle", use_oracle, "cross-check against the lattice oracle");
    cmd_sum->add_option("--format", format);

    auto* cmd_const = app.add_subcommand("constants", "Euler-product constants");
    cmd_const->add_option("--which", which_str, "C|Cstar|A")->required();
    cmd_const->add_option("--k", k)->required();
    cmd_const->add_option("--cutoff", cutoff);
    cmd_const->add_option("--truncation", series_truncation);
    cmd_const->add_option("--format", format);

    auto* cmd_champ = app.add_subcommand("champions", "running maxima of the order ratio");
    cmd_champ->add_option("--family", family_str)->required();
    cmd_champ->add_option("--k", k)->required();
    cmd_champ->add_option("--max", big_x)->required();
    cmd_champ->add_option("--format", format);

    auto* cmd_extremal = app.add_subcommand("extremal", "extremal-product ratio");
    cmd_extremal->add_option("--family", family_str)->required();
    cmd_extremal->add_option("--k", k)->required();
    cmd_extremal->add_option("--l", l)->required();
    cmd_extremal->add_option("--X", big_x)->required();

    auto* cmd_verify = app.add_subcommand("verify-all", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }
    if (threads > 0) par::set_max_threads(threads);
    auto t0 = Clock::now();

    if (cmd_verify->parsed())
        return verify::print_and_check(std::cout, std::cerr) ? 0 : 2;

    if (cmd_eval->parsed()) {
        FunctionFamily fam{parse_family(family_str), k};
        std::int64_t value;
        GaussInt z = parse_gauss(arg_str);
        if (gaussian_domain(fam.family)) {
            value = eval(fam, z);
        } else {
            if (z.im != 0 || z.re < 1)
                throw std::domain_error("rational family needs a positive integer argument");
            value = eval(fam, static_cast<std::uint64_t>(z.re));
        }
        std::cout << value << "\n";
        return 0;
    }

    if (cmd_factor->parsed()) {
        if (rational) {
            GaussInt z = parse_gauss(arg_str);
            if (z.im != 0 || z.re < 1)
                throw std::domain_error("--rational needs a positive integer");
            auto rf = factor_rational(static_cast<std::uint64_t>(z.re));
            json rows = json::array();
            for (auto [p, a] : rf.factors) rows.push_back({{"p", p}, {"a", a}});
            std::cout << envelope("factor", {{"arg", arg_str}, {"rational", true}},
                                  rows, t0).dump(2) << "\n";
        } else {
            auto gf = factor_gauss(parse_gauss(arg_str));
            json rows = json::array();
            for (const auto& [p, a] : gf.factors)
                rows.push_back({{"prime", format_gauss(p)}, {"exponent", a}});
            std::cout << envelope("factor",
                                  {{"arg", arg_str}, {"rational", false}},
                                  rows, t0,
                                  {{"unit", format_gauss(unit_value(gf.unit))}})
                             .dump(2)
                      << "\n";
        }
        return 0;
    }

    if (cmd_primes->parsed()) {
        auto primes = gaussian_primes_up_to(max_norm);
        if (format == "csv") {
            std::cout << "re,im,norm,class\n";
            for (GaussInt p : primes) {
                std::uint64_t n = norm(p);
                PrimeClass c = n == 2 ? PrimeClass::Ramified
                               : p.im == 0 ? PrimeClass::Inert
                                           : PrimeClass::Split;
                std::cout << p.re << "," << p.im << "," << n << ","
                          << class_name(c) << "\n";
            }
        } else {
            json rows = json::array();
            for (GaussInt p : primes) {
                std::uint64_t n = norm(p);
                PrimeClass c = n == 2 ? PrimeClass::Ramified
                               : p.im == 0 ? PrimeClass::Inert
                                           : PrimeClass::Split;
                rows.push_back({{"re", p.re}, {"im", p.im}, {"norm", n},
                                {"class", class_name(c)}});
            }
            std::cout << envelope("primes", {{"max_norm", max_norm}}, rows, t0)
                             .dump(2) << "\n";
        }
        return 0;
    }

    if (cmd_bell->parsed()) {
        FunctionFamily fam{parse_family(family_str), k};
        int t = truncation > 0 ? truncation : default_truncation(fam.family);
        auto series = bell_series(fam, t);
        auto rep = verify_factorization(fam, t);
        json rows = {{"coefficients", series.c},
                     {"exponents", rep.exponents},
                     {"residual", rep.residual.c},
                     {"pass", rep.pass}};
        std::cout << envelope("bell",
                              {{"family", family_str}, {"k", k}, {"truncation", t}},
                              rows, t0).dump(2) << "\n";
        return rep.pass ? 0 : 2;
    }

    if (cmd_sum->parsed()) {
        FunctionFamily fam{parse_family(family_str), k};
        std::vector<std::uint64_t> xs;
        if (!xs_str.empty()) {
            std::stringstream ss(xs_str);
            std::string tok;
            while (std::getline(ss, tok, ','))
                xs.push_back(static_cast<std::uint64_t>(std::stod(tok)));
        }
        if (x > 0) xs.push_back(x);
        if (xs.empty()) throw std::domain_error("sum: provide --x or --xs");
        json rows = json::array();
        bool oracle_ok = true;
        if (format == "csv")
            std::cout << "x,exact,main,residual,normalized_residual\n";
        for (std::uint64_t xi : xs) {
            auto rep = summatory(fam, xi);
            if (use_oracle) {
                auto o = lattice_summatory_oracle(fam, xi);
                if (o != rep.exact_sum) oracle_ok = false;
            }
            if (format == "csv") {
                char line[160];
                std::snprintf(line, sizeof line, "%llu,%lld,%.12g,%.12g,%.12g\n",
                              (unsigned long long)xi, (long long)rep.exact_sum,
                              rep.main_term, rep.residual, rep.normalized_residual);
                std::cout << line;
            } else {
                rows.push_back({{"x", xi},
                                {"exact", rep.exact_sum},
                                {"main", rep.main_term},
                                {"residual", rep.residual},
                                {"normalized_residual", rep.normalized_residual}});
            }
        }
        if (format != "csv")
            std::cout << envelope("sum",
                                  {{"family", family_str}, {"k", k},
                                   {"oracle", use_oracle}},
                                  rows, t0,
                                  {{"constant_cutoff", 1000000}}).dump(2)
                      << "\n";
        return oracle_ok ? 0 : 2;
    }

    if (cmd_const->parsed()) {
        WhichConstant which = which_str == "C"       ? WhichConstant::C
                              : which_str == "Cstar" ? WhichConstant::CStar
                              : which_str == "A"     ? WhichConstant::A
                                                     : throw std::domain_error(
                                                           "unknown constant: " + which_str);
        auto res = compute_constant(which, k, cutoff, series_truncation);
        json rows = {{"value", res.value}, {"tail_estimate", res.tail_estimate}};
        std::cout << envelope("constants",
                              {{"which", which_str}, {"k", k},
                               {"cutoff", res.prime_cutoff},
                               {"truncation", res.series_truncation}},
                              rows, t0).dump(2) << "\n";
        return 0;
    }

    if (cmd_champ->parsed()) {
        FunctionFamily fam{parse_family(family_str), k};
        auto records = champion_scan(fam, big_x);
        if (format == "csv") {
            std::cout << "argument,n_or_norm,ratio\n";
            for (const auto& r : records) {
                char line[160];
                std::snprintf(line, sizeof line, "%s,%llu,%.12g\n",
                              r.argument.c_str(), (unsigned long long)r.n_or_norm,
                              r.ratio);
                std::cout << line;
            }
        } else {
            json rows = json::array();
            for (const auto& r : records)
                rows.push_back({{"argument", r.argument},
                                {"n_or_norm", r.n_or_norm},
                                {"ratio", r.ratio}});
            std::cout << envelope("champions",
                                  {{"family", family_str}, {"k", k}, {"max", big_x}},
                                  rows, t0).dump(2) << "\n";
        }
        return 0;
    }

    if (cmd_extremal->parsed()) {
        FunctionFamily fam{parse_family(family_str), k};
        double ratio = extremal_construction(fam, l, big_x);
        std::cout << envelope("extremal",
                              {{"family", family_str}, {"k", k}, {"l", l},
                               {"X", big_x}},
                              json{{"ratio", ratio}}, t0).dump(2) << "\n";
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
