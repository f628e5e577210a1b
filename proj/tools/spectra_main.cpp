#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spectra/bowen.hpp"
#include "spectra/continued_fraction.hpp"
#include "spectra/gauss_cantor.hpp"
#include "spectra/markov_triples.hpp"
#include "spectra/spectra_approx.hpp"

namespace {

using namespace spectra;

// decimal or fraction literal -> exact rational ("2.2", "1e-8", "22/7")
Rat parse_rat(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        size_t slash = s.find('/');
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    std::string t = s;
    bool neg = !t.empty() && t[0] == '-';
    if (neg || (!t.empty() && t[0] == '+')) t = t.substr(1);
    long expo = 0;
    if (size_t e = t.find_first_of("eE"); e != std::string::npos) {
        expo = std::stol(t.substr(e + 1));
        t = t.substr(0, e);
    }
    std::string digits = t;
    long frac = 0;
    if (size_t dot = t.find('.'); dot != std::string::npos) {
        frac = static_cast<long>(t.size() - dot - 1);
        digits = t.substr(0, dot) + t.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed number '" + s + "'");
    Rat v(Int(digits));
    long shift = expo - frac;
    Int p10 = 1;
    for (long i = 0; i < std::labs(shift); ++i) p10 *= 10;
    if (shift >= 0)
        v *= Rat(p10);
    else
        v /= Rat(p10);
    return neg ? Rat(-v) : v;
}

std::pair<Rat, Rat> parse_range(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("range must be 'lo,hi'");
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

WordSet parse_set(const std::string& s) { return WordSet(parse_word_list(s)); }

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    return file;
}

// round up to 6 decimals, as printed in the dimension-sum bound
std::string ceil6(const Rat& x) {
    Int scaled = -floor_div(Int(-x.get_num() * 1000000), x.get_den());
    return rat_to_decimal(make_rat(scaled, 1000000), 6);
}

int run(int argc, char** argv) {
    CLI::App app{"Lagrange/Markov spectra toolkit: continued fractions, Markov triples,\n"
                 "Gauss-Cantor covers, transfer-operator dimensions, spectrum approximation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file with defaults for the flags below");

    RunConfig cfg;
    if (const char* env = std::getenv("SPECTRA_BITS")) cfg.bits = std::atol(env);
    app.add_option("--bits", cfg.bits, "working precision in bits (env SPECTRA_BITS)")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads for window enumeration")
        ->capture_default_str();
    app.add_option("--max-cover", cfg.max_cover_intervals, "budget: cover intervals / orbits")
        ->capture_default_str();
    app.add_option("--max-sum-nodes", cfg.max_sum_nodes, "budget: sum-cover refinement nodes")
        ->capture_default_str();
    app.add_option("--max-window-nodes", cfg.max_window_nodes, "budget: window search nodes")
        ->capture_default_str();
    app.add_option("--inner-period", cfg.inner_period_cap, "period bound for inner points")
        ->capture_default_str();

    // ---- approx ----
    auto* ap = app.add_subcommand("approx", "inner/outer 1/Q approximation of the spectra");
    std::string ap_range, ap_out, ap_svg;
    long ap_q = 100;
    int ap_alpha = 2;
    ap->add_option("--range", ap_range, "value range 'a,b'")->required();
    ap->add_option("--Q", ap_q, "resolution parameter")->capture_default_str();
    ap->add_option("--alphabet", ap_alpha, "digit bound A")->capture_default_str();
    ap->add_option("--out", ap_out, "CSV output path (default stdout)");
    ap->add_option("--svg", ap_svg, "strip-plot SVG output path");
    ap->callback([&] {
        auto [a, b] = parse_range(ap_range);
        auto approx = approximate_spectra(a, b, ap_q, ap_alpha, cfg);
        std::ofstream f;
        write_approx_csv(open_out(f, ap_out), approx);
        if (!ap_svg.empty()) {
            std::ofstream svg(ap_svg, std::ios::binary);
            if (!svg) throw std::invalid_argument("cannot open '" + ap_svg + "'");
            write_approx_svg(svg, approx);
        }
    });

    // ---- gaps ----
    auto* gp = app.add_subcommand("gaps", "maximal open intervals missed by the outer cover");
    std::string gp_range, gp_scan, gp_out;
    long gp_q = 100;
    int gp_alpha = 2;
    gp->add_option("--range", gp_range, "cover range 'a,b'")->required();
    gp->add_option("--scan", gp_scan, "scan range 'lo,hi' (default = --range)");
    gp->add_option("--Q", gp_q, "resolution parameter")->capture_default_str();
    gp->add_option("--alphabet", gp_alpha, "digit bound A")->capture_default_str();
    gp->add_option("--out", gp_out, "CSV output path (default stdout)");
    gp->callback([&] {
        auto [a, b] = parse_range(gp_range);
        auto approx = approximate_spectra(a, b, gp_q, gp_alpha, cfg);
        auto [lo, hi] = gp_scan.empty() ? std::pair<Rat, Rat>{a, b} : parse_range(gp_scan);
        auto rep = detect_gaps(approx, lo, hi);
        std::ofstream f;
        write_gaps_csv(open_out(f, gp_out), rep);
    });

    // ---- markov ----
    auto* mk = app.add_subcommand("markov", "Markov triple combinatorics");
    mk->require_subcommand(1);
    auto* tree = mk->add_subcommand("tree", "enumerate ordered triples with z <= bound");
    std::string tree_bound = "1000", tree_out;
    tree->add_option("--bound", tree_bound, "largest-coordinate bound")->capture_default_str();
    tree->add_option("--out", tree_out, "CSV output path (default stdout)");
    tree->callback([&] {
        std::ofstream f;
        write_triples_csv(open_out(f, tree_out), enumerate_triples(Int(tree_bound)));
    });
    auto* modp = mk->add_subcommand("modp", "Vieta graph on solutions over F_p");
    long modp_p = 0, modp_max = 0;
    std::string modp_out;
    modp->add_option("--p", modp_p, "single prime");
    modp->add_option("--p-max", modp_max, "all primes 3..p-max");
    modp->add_option("--out", modp_out, "CSV output path (default stdout)");
    modp->callback([&] {
        if (!modp_p && !modp_max) throw std::invalid_argument("modp: give --p or --p-max");
        std::ofstream f;
        auto& os = open_out(f, modp_out);
        os << "p,num_vertices,num_components,largest\n";
        if (modp_p) write_modp_csv_row(os, mod_p_graph(modp_p));
        for (long p = 3; p <= modp_max; ++p)
            if (is_prime(static_cast<unsigned long>(p))) write_modp_csv_row(os, mod_p_graph(p));
    });
    auto* cnt = mk->add_subcommand("count", "Markov numbers below x vs Zagier's asymptotic");
    std::string cnt_x = "1000000";
    cnt->add_option("--x", cnt_x, "threshold")->capture_default_str();
    cnt->callback([&] {
        auto zc = zagier_count(Int(cnt_x));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", zc.reference);
        std::cout << "M(x) = " << zc.count << "\n";
        std::cout << "c*log(3x)^2 = " << buf << " (c = " << kZagierConstantDigits << ")\n";
        std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(zc.count) / zc.reference);
        std::cout << "ratio = " << buf << "\n";
    });
    auto* desc = mk->add_subcommand("descend", "Vieta descent to (1,1,1)");
    std::string desc_triple;
    desc->add_option("--triple", desc_triple, "x,y,z")->required();
    desc->callback([&] {
        std::istringstream ss(desc_triple);
        std::string sx, sy, sz;
        if (!std::getline(ss, sx, ',') || !std::getline(ss, sy, ',') || !std::getline(ss, sz))
            throw std::invalid_argument("descend: triple must be 'x,y,z'");
        MarkovTriple t{Int(sx), Int(sy), Int(sz)};
        auto path = descend(t);
        for (const auto& st : path.states)
            std::cout << st.x.get_str() << "," << st.y.get_str() << "," << st.z.get_str() << "\n";
        std::cout << "vieta_steps="
                  << std::count_if(path.moves.begin(), path.moves.end(),
                                   [](const DescentMove& m) { return m.kind == DescentMove::Kind::Vieta; })
                  << "\n";
    });

    // ---- dim ----
    auto* dim = app.add_subcommand("dim", "Hausdorff dimension of Gauss-Cantor sets");
    dim->require_subcommand(1);
    auto* bw = dim->add_subcommand("bowen", "Fredholm-determinant truncation root");
    std::string bw_set = "1,2";
    int bw_order = 12;
    bw->add_option("--set", bw_set, "block words, e.g. \"1,2\" or \"11,22\"")->capture_default_str();
    bw->add_option("--order", bw_order, "truncation order M")->capture_default_str();
    bw->callback([&] {
        auto rep = solve_dimension(parse_set(bw_set), bw_order, cfg.bits, cfg);
        std::cout << format_report(rep);
    });
    auto* cv = dim->add_subcommand("cover", "covering bounds alpha_m <= dim <= beta_m");
    std::string cv_set = "1,2", cv_prefix, cv_out;
    int cv_level = 8;
    cv->add_option("--set", cv_set, "block words")->capture_default_str();
    cv->add_option("--level", cv_level, "cover depth m")->capture_default_str();
    cv->add_option("--prefix", cv_prefix, "cylinder prefix word (digits)");
    cv->add_option("--out", cv_out, "also dump the cover as CSV to this path");
    cv->callback([&] {
        GaussCantorSpec spec = cv_prefix.empty()
                                   ? GaussCantorSpec(parse_set(cv_set))
                                   : GaussCantorSpec(parse_word_list(cv_prefix).at(0), parse_set(cv_set));
        auto b = palis_takens_bounds(spec, cv_level, 1, cfg);
        char buf[128];
        std::snprintf(buf, sizeof buf, "alpha_%d = %.12f\nbeta_%d = %.12f\n", b.level, b.alpha,
                      b.level, b.beta);
        std::cout << buf;
        if (!cv_out.empty()) {
            std::ofstream f(cv_out, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open '" + cv_out + "'");
            write_cover_csv(f, cover(spec, cv_level, cfg));
        }
    });
    auto* gx = dim->add_subcommand("gapexp", "two-child cylinder-length exponent check");
    std::string gx_s0 = "0.174813";
    int gx_nmax = 12;
    gx->add_option("--s0", gx_s0, "exponent")->capture_default_str();
    gx->add_option("--nmax", gx_nmax, "max word length over {1,2}")->capture_default_str();
    gx->callback([&] {
        auto rep = gap_exponent_check(parse_rat(gx_s0), gx_nmax);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: words %ld, worst relative margin %.6e at '%s'\n",
                      rep.pass ? "PASS" : "FAIL", rep.words_checked, rep.worst_margin,
                      format_word_compact(rep.worst_word).c_str());
        std::cout << buf;
        if (rep.pass) {
            auto dimrep = solve_dimension(parse_set("1,2"), 10, 256, cfg);
            std::string d6 = ceil6(parse_rat(dimrep.s_decimal));
            Rat total = parse_rat(d6) + parse_rat(gx_s0);
            std::cout << "dim(C(2)) < " << d6 << "\n";
            std::cout << "upper bound: " << d6 << " + " << rat_to_decimal(parse_rat(gx_s0), 6)
                      << " = " << rat_to_decimal(total, 6) << "\n";
        }
    });

    // ---- hall ----
    auto* hl = app.add_subcommand("hall", "Hall-ray realization of a target value");
    std::string hl_target, hl_eps = "1e-8";
    hl->add_option("--target", hl_target, "value in [6,7]")->required();
    hl->add_option("--eps", hl_eps, "target precision")->capture_default_str();
    hl->callback([&] {
        Rat target = parse_rat(hl_target);
        if (target < 6 || target > 7)
            throw std::invalid_argument("hall: target must lie in [6,7]");
        auto r = hall_realize(target, parse_rat(hl_eps), cfg);
        std::cout << "c0 = " << r.c0 << "\n";
        std::cout << "x = [0;" << format_word(r.x_digits) << ",...]\n";
        std::cout << "y = [0;" << format_word(r.y_digits) << ",...]\n";
        std::cout << "sequence = " << r.seq.to_string() << "\n";
        auto mv = markov_value(r.seq);
        std::cout << "markov_value = " << mv.value.decimal(20) << "\n";
    });

    // ---- constants ----
    auto* ct = app.add_subcommand("constants", "named constants of the spectra");
    ct->callback([&] {
        auto c = constants();
        std::cout << "sqrt(12) = " << c.sqrt12.decimal(30) << "\n";
        std::cout << "sqrt(13) = " << c.sqrt13.decimal(30) << "\n";
        std::cout << "(9*sqrt(3)+65)/22 = " << c.perron_third.decimal(30) << "\n";
        std::cout << "freiman c_F = " << c.freiman.decimal(30) << "\n";
        std::cout << "zagier c = " << rat_to_decimal(c.zagier_c, 15) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const spectra::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
