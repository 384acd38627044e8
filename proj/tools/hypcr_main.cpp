// Command-line front end. Subcommands:
//   sectors    enumerate inertia sectors of one stack
//   poincare   orbifold Poincare polynomial, closed formula or first principles
//   stringy    stringy variant (coarse polynomials collapsed to 1)
//   reconcile  per-sector cross-check table for one genus
//   verify     run every law over a genus range
//   sweep      sectors + polynomials + report for a whole range, one document
// Exit codes: 0 success, 1 a verification failed, 2 usage error.

#include "hypcr/hypcr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using hypcr::Grading;
using hypcr::Mode;
using hypcr::json;

struct Options {
    long long g = 2;
    long long g_max = -1;
    long long n = -1;
    std::string mode = "paper";
    std::string grading = "real";
    std::string format = "text";
    std::string out;
    int jobs = 1;
};

Mode parse_mode(const std::string& s) {
    if (s == "paper") return Mode::Paper;
    if (s == "fp") return Mode::FirstPrinciples;
    throw std::invalid_argument("--mode: expected 'paper' or 'fp'");
}

Grading parse_grading(const std::string& s) {
    if (s == "real") return Grading::Real;
    if (s == "complex") return Grading::Complex;
    throw std::invalid_argument("--grading: expected 'real' or 'complex'");
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << payload;
}

json j_polynomial_doc(long long g, const std::string& kind, const std::string& mode,
                      const std::string& grading, const hypcr::QPolynomial& p) {
    json j;
    j["g"] = g;
    j["kind"] = kind;
    j["mode"] = mode;
    j["grading"] = grading;
    j["total"] = p.total();
    j["polynomial"] = hypcr::j_polynomial(p);
    return j;
}

std::string render_polynomial(const Options& opt, long long g, const std::string& kind,
                              const hypcr::QPolynomial& p) {
    if (opt.format == "json")
        return hypcr::json_dump(j_polynomial_doc(g, kind, opt.mode, opt.grading, p));
    if (opt.format == "latex") return hypcr::latex_polynomial(p) + "\n";
    if (opt.format == "csv") {
        std::string out = "exp,coeff\n";
        for (const auto& [e, c] : p.terms()) out += e.str() + "," + std::to_string(c) + "\n";
        return out;
    }
    return p.str() + "\n";
}

hypcr::QPolynomial poincare_of(long long g, Mode mode, Grading grading) {
    return mode == Mode::Paper ? hypcr::pcr_paper(g)
                               : hypcr::pcr_first_principles(g, grading);
}

json sweep_entry(long long g) {
    json e;
    e["g"] = g;
    json secs = json::array();
    for (const hypcr::HypSector& s : hypcr::sectors_hyp(g)) secs.push_back(hypcr::j_sector(s));
    e["sectors"] = secs;
    e["pcr_paper"] = hypcr::j_polynomial(hypcr::pcr_paper(g));
    e["pcr_first_principles_real"] =
        hypcr::j_polynomial(hypcr::pcr_first_principles(g, Grading::Real));
    e["pcr_first_principles_complex"] =
        hypcr::j_polynomial(hypcr::pcr_first_principles(g, Grading::Complex));
    e["stringy_first_principles_complex"] =
        hypcr::j_polynomial(hypcr::stringy_chow(g, Mode::FirstPrinciples, Grading::Complex));
    e["report"] = hypcr::j_report(hypcr::reconcile(g));
    return e;
}

int run(int argc, char** argv) {
    CLI::App app{"inertia sectors and orbifold Poincare polynomials of hyperelliptic moduli"};
    app.require_subcommand(1);
    Options opt;

    auto* sectors = app.add_subcommand("sectors", "enumerate inertia sectors");
    std::string stack = "hyp";
    sectors->add_option("--stack", stack, "hyp or m0n")->check(CLI::IsMember({"hyp", "m0n"}));
    sectors->add_option("--g", opt.g, "genus (hyp)");
    sectors->add_option("--n", opt.n, "marked points (m0n)");
    sectors->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    sectors->add_option("--out", opt.out, "write to file instead of stdout");

    auto* poincare = app.add_subcommand("poincare", "orbifold Poincare polynomial");
    poincare->add_option("--g", opt.g, "genus");
    poincare->add_option("--n", opt.n, "marked points: the genus-0 stack instead");
    poincare->add_option("--mode", opt.mode)->check(CLI::IsMember({"paper", "fp"}));
    poincare->add_option("--grading", opt.grading)->check(CLI::IsMember({"real", "complex"}));
    poincare->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    poincare->add_option("--out", opt.out);

    auto* stringy = app.add_subcommand("stringy", "stringy polynomial (sector monomials)");
    stringy->add_option("--g", opt.g, "genus");
    stringy->add_option("--mode", opt.mode)->check(CLI::IsMember({"paper", "fp"}));
    stringy->add_option("--grading", opt.grading)->check(CLI::IsMember({"real", "complex"}));
    stringy->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    stringy->add_option("--out", opt.out);

    auto* reconcile = app.add_subcommand("reconcile", "per-sector exponent/age cross-check");
    reconcile->add_option("--g", opt.g, "genus");
    reconcile->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    reconcile->add_option("--out", opt.out);

    auto* verify = app.add_subcommand("verify", "run every law over a genus range");
    verify->add_option("--g", opt.g, "lowest genus");
    verify->add_option("--g-max", opt.g_max, "highest genus (default: same as --g)");
    verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "sectors, polynomials and report for a range");
    sweep->add_option("--g", opt.g, "lowest genus");
    sweep->add_option("--g-max", opt.g_max, "highest genus (default: same as --g)");
    sweep->add_option("--format", opt.format)->check(CLI::IsMember({"json"}));
    sweep->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sectors->parsed()) {
        if (stack == "m0n") {
            if (opt.n < 0) throw std::invalid_argument("sectors --stack m0n requires --n");
            long long n = opt.n;
            std::vector<hypcr::M0nSector> list = hypcr::sectors_m0n(n);
            if (opt.format == "json") {
                json j;
                j["stack"] = "m0n";
                j["n"] = n;
                json arr = json::array();
                for (const auto& s : list) arr.push_back(hypcr::j_sector(s));
                j["sectors"] = arr;
                j["inertia_poincare"] = hypcr::j_polynomial(hypcr::inertia_poincare_m0n(n));
                emit(opt, hypcr::json_dump(j));
            } else if (opt.format == "csv") {
                emit(opt, hypcr::csv_sectors(list));
            } else if (opt.format == "latex") {
                emit(opt, hypcr::latex_sectors(list));
            } else {
                emit(opt, hypcr::text_sectors(list) + "inertia poincare: " +
                              hypcr::inertia_poincare_m0n(n).str() + "\n");
            }
            return 0;
        }
        std::vector<hypcr::HypSector> list = hypcr::sectors_hyp(opt.g);
        if (opt.format == "json") {
            json j;
            j["stack"] = "hyp";
            j["g"] = opt.g;
            json arr = json::array();
            for (const auto& s : list) arr.push_back(hypcr::j_sector(s));
            j["sectors"] = arr;
            emit(opt, hypcr::json_dump(j));
        } else if (opt.format == "csv") {
            emit(opt, hypcr::csv_sectors(list));
        } else if (opt.format == "latex") {
            emit(opt, hypcr::latex_sectors(list));
        } else {
            emit(opt, hypcr::text_sectors(list));
        }
        return 0;
    }

    if (poincare->parsed()) {
        if (opt.n >= 0) {
            emit(opt, render_polynomial(opt, opt.n, "inertia_poincare_m0n",
                                        hypcr::inertia_poincare_m0n(opt.n)));
            return 0;
        }
        emit(opt, render_polynomial(opt, opt.g, "pcr",
                                    poincare_of(opt.g, parse_mode(opt.mode),
                                                parse_grading(opt.grading))));
        return 0;
    }

    if (stringy->parsed()) {
        emit(opt, render_polynomial(opt, opt.g, "stringy",
                                    hypcr::stringy_chow(opt.g, parse_mode(opt.mode),
                                                        parse_grading(opt.grading))));
        return 0;
    }

    if (reconcile->parsed()) {
        hypcr::ReconciliationReport rep = hypcr::reconcile(opt.g);
        if (opt.format == "json")
            emit(opt, hypcr::json_dump(hypcr::j_report(rep)));
        else if (opt.format == "csv")
            emit(opt, hypcr::csv_report(rep));
        else if (opt.format == "latex")
            emit(opt, hypcr::latex_report(rep));
        else
            emit(opt, hypcr::text_report(rep));
        return 0;
    }

    if (verify->parsed()) {
        long long g_max = opt.g_max >= 0 ? opt.g_max : opt.g;
        auto violation = hypcr::verify_range(opt.g, g_max, opt.jobs);
        if (violation) {
            std::cerr << "verify: " << *violation << "\n";
            return 1;
        }
        long long sectors_checked = 0;
        for (long long g = opt.g; g <= g_max; ++g)
            sectors_checked += static_cast<long long>(hypcr::sectors_hyp(g).size());
        std::cout << "verify: all laws hold for g in [" << opt.g << ", " << g_max << "] ("
                  << sectors_checked << " sectors)\n";
        return 0;
    }

    if (sweep->parsed()) {
        long long g_max = opt.g_max >= 0 ? opt.g_max : opt.g;
        if (g_max < opt.g) throw std::invalid_argument("--g-max must be >= --g");
        std::size_t count = static_cast<std::size_t>(g_max - opt.g + 1);
        // One compact document per genus, rendered inside the worker;
        // assembly order is fixed by genus, so the bytes cannot depend on
        // the worker count.
        std::vector<std::string> entries(count);
        std::vector<std::exception_ptr> errors(count);
        auto render_one = [&](std::size_t i) {
            try {
                entries[i] = sweep_entry(opt.g + static_cast<long long>(i)).dump();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        };
        if (opt.jobs <= 1) {
            for (std::size_t i = 0; i < count; ++i) render_one(i);
        } else {
            std::vector<std::thread> pool;
            std::size_t step = static_cast<std::size_t>(opt.jobs);
            for (std::size_t t = 0; t < step; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t i = t; i < count; i += step) render_one(i);
                });
            for (std::thread& th : pool) th.join();
        }
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
        std::string doc = "{\"g_min\":" + std::to_string(opt.g) +
                          ",\"g_max\":" + std::to_string(g_max) + ",\"entries\":[";
        for (std::size_t i = 0; i < count; ++i) {
            if (i) doc += ",";
            doc += entries[i];
        }
        doc += "]}\n";
        emit(opt, doc);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hypcr::VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
