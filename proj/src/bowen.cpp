#include "spectra/bowen.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spectra/periodic.hpp"

namespace spectra {

PeriodicOrbit make_orbit(const Word& block_word, int blocks) {
    PeriodicOrbit o;
    o.block_word = block_word;
    o.blocks = blocks;
    o.fixed_point = eval_periodic(Word(0, {}), block_word);
    Mat2 m = Mat2{0, 1, 1, 0} * digit_product(block_word.digits);
    // |(G^N)'(x)| = (q_N + q_{N-1} x)^2 at the periodic point, q's of [0; w]
    QuadraticSurd lin = o.fixed_point * QuadraticSurd(Rat(m.d)) + QuadraticSurd(Rat(m.c));
    o.abs_multiplier = lin * lin;
    o.sign = block_word.digits.size() % 2 == 0 ? 1 : -1;
    return o;
}

std::vector<PeriodicOrbit> enumerate_periodic(const WordSet& b, int n, const RunConfig& cfg) {
    if (n < 1) throw std::invalid_argument("enumerate_periodic: period must be >= 1");
    double cnt = 1;
    for (int i = 0; i < n; ++i) {
        cnt *= static_cast<double>(b.size());
        if (cnt > static_cast<double>(cfg.max_cover_intervals))
            throw BudgetError("enumerate_periodic: |B|^n exceeds the orbit budget");
    }
    std::vector<PeriodicOrbit> out;
    std::vector<size_t> choice(static_cast<size_t>(n), 0);
    while (true) {
        Word w;
        for (size_t i = 0; i < choice.size(); ++i) w = concat(w, b.words()[choice[i]]);
        out.push_back(make_orbit(w, n));
        size_t pos = choice.size();
        while (pos > 0 && choice[pos - 1] == b.size() - 1) choice[--pos] = 0;
        if (pos == 0) break;
        ++choice[pos - 1];
    }
    return out;
}

Interval multiplier_value(const PeriodicOrbit& orbit, mpfr_prec_t prec) {
    Interval v = orbit.abs_multiplier.enclosure(prec);
    return orbit.sign > 0 ? v : -v;
}

TraceTable::TraceTable(const WordSet& b, int max_period, mpfr_prec_t prec, const RunConfig& cfg)
    : prec_(prec) {
    for (int n = 1; n <= max_period; ++n) {
        std::vector<Entry> entries;
        long count = 0;
        for (const auto& orbit : enumerate_periodic(b, n, cfg)) {
            Interval absd = orbit.abs_multiplier.enclosure(prec);
            Interval one = Interval::of_long(1, prec);
            Interval dinv = one / absd;  // |D|^{-1}
            // 1/(1 - D^{-1}) with D = sign |D|
            Interval denom = orbit.sign > 0 ? one / (one - dinv) : one / (one + dinv);
            entries.push_back({log(absd), denom, 1});
            ++count;
        }
        periods_.push_back(std::move(entries));
        counts_.push_back(count);
    }
}

TraceTable::TraceTable(const AffineSystem& sys, int max_period, mpfr_prec_t prec) : prec_(prec) {
    if (sys.branches < 1 || sys.slope <= 1)
        throw std::invalid_argument("AffineSystem: need branches >= 1 and slope > 1");
    Rat slope_n(1);
    long mult = 1;
    for (int n = 1; n <= max_period; ++n) {
        slope_n *= sys.slope;
        mult *= sys.branches;
        Interval absd = Interval::of_rat(slope_n, prec);
        Interval one = Interval::of_long(1, prec);
        Interval denom = one / (one - one / absd);  // multipliers are +slope^n
        periods_.push_back({Entry{log(absd), denom, mult}});
        counts_.push_back(mult);
    }
}

long TraceTable::orbit_count(int n) const {
    if (n < 1 || n > max_period()) throw std::invalid_argument("orbit_count: period out of range");
    return counts_[static_cast<size_t>(n - 1)];
}

Interval TraceTable::trace(const Interval& s, int n) const {
    if (n < 1 || n > max_period()) throw std::invalid_argument("trace: period out of range");
    Interval acc = Interval::of_long(0, prec_);
    for (const auto& e : periods_[static_cast<size_t>(n - 1)]) {
        Interval term = exp(-(s * e.log_abs_d)) * e.denom;
        if (e.multiplicity != 1) term = term.scaled(Rat(e.multiplicity));
        acc = acc + term;
    }
    return acc;
}

Interval trace(const TraceTable& table, const Interval& s, int n) { return table.trace(s, n); }

std::vector<Interval> fredholm_coefficients(const TraceTable& table, const Interval& s, int M) {
    if (M < 1 || M > table.max_period())
        throw std::invalid_argument("fredholm_coefficients: order out of range");
    std::vector<Interval> traces;
    traces.reserve(static_cast<size_t>(M));
    for (int n = 1; n <= M; ++n) traces.push_back(table.trace(s, n));
    std::vector<Interval> d;  // d[0] = d_0 = 1
    d.push_back(Interval::of_long(1, table.prec()));
    for (int n = 1; n <= M; ++n) {
        Interval acc = Interval::of_long(0, table.prec());
        for (int k = 1; k <= n; ++k)
            acc = acc + traces[static_cast<size_t>(k - 1)] * d[static_cast<size_t>(n - k)];
        d.push_back(acc.scaled(make_rat(-1, n)));
    }
    return {d.begin() + 1, d.end()};
}

namespace {

Interval truncated_determinant(const TraceTable& table, const Interval& s, int M) {
    Interval acc = Interval::of_long(1, table.prec());
    for (const auto& dn : fredholm_coefficients(table, s, M)) acc = acc + dn;
    return acc;
}

// Root of the order-M truncation in (1e-3, 1-1e-3): bisection to a short
// bracket, then secant at full precision, then a certified re-bracketing.
struct RootResult {
    Real root;
    double residual;
};

RootResult solve_truncation(const TraceTable& table, int M) {
    const mpfr_prec_t prec = table.prec();
    const Rat eps = make_rat(1, 1000);
    auto phi_rat = [&](const Rat& s) { return truncated_determinant(table, Interval::of_rat(s, prec), M); };
    auto phi_real = [&](const Real& s) { return truncated_determinant(table, point_interval(s), M); };

    Rat lo = eps, hi = Rat(1) - eps;
    int slo = phi_rat(lo).sign(), shi = phi_rat(hi).sign();
    if (slo >= 0 || shi <= 0)
        throw DimensionError("solve_dimension: no sign change of the truncated determinant in (0,1)");
    for (int it = 0; it < 40; ++it) {
        Rat mid = (lo + hi) / 2;
        int s = phi_rat(mid).sign();
        if (s == 0) break;
        (s < 0 ? lo : hi) = mid;
    }

    Real a = Real::of_rat(lo, prec, MPFR_RNDN);
    Real b = Real::of_rat(hi, prec, MPFR_RNDN);
    Real fa = phi_real(a).lo();  // point evaluations; midpoint of the tight enclosure
    Real fb = phi_real(b).lo();
    Real tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -(prec - 16), MPFR_RNDN);
    for (int it = 0; it < 60; ++it) {
        Real denom = rn_sub(fb, fa);
        if (denom.sgn() == 0) break;
        Real step = rn_div(rn_mul(fb, rn_sub(b, a)), denom);
        Real c = rn_sub(b, step);
        a = b;
        fa = fb;
        b = c;
        fb = phi_real(b).lo();
        if (cmp(rn_abs(rn_sub(b, a)), tol) < 0) break;
    }

    Interval residual = phi_real(b);
    Real rbound = rn_abs(residual.lo());
    Real rhigh = rn_abs(residual.hi());
    if (cmp(rhigh, rbound) > 0) rbound = rhigh;
    return {b, rbound.to_double()};
}

DimensionReport run_report(const TraceTable& table, int M, long precision_bits) {
    DimensionReport rep;
    rep.order = M;
    rep.precision_bits = precision_bits;
    for (int n = 1; n <= M; ++n) rep.orbit_counts.push_back(table.orbit_count(n));
    for (int m = 2; m <= M; ++m) {
        if (m < M) {
            // low-order truncations may lack a bracketed root (double roots
            // happen, e.g. affine systems at order 2); they are only
            // convergence diagnostics, so record them when they exist
            try {
                rep.s_by_order.push_back(solve_truncation(table, m).root.to_double());
            } catch (const DimensionError&) {
                rep.s_by_order.push_back(std::numeric_limits<double>::quiet_NaN());
            }
            continue;
        }
        RootResult r = solve_truncation(table, m);
        rep.s_by_order.push_back(r.root.to_double());
        rep.s_value = r.root.to_double();
        int digits = static_cast<int>(static_cast<double>(precision_bits) * 0.3010) - 4;
        rep.s_decimal = r.root.decimal(digits);
        rep.residual = r.residual;
    }
    return rep;
}

}  // namespace

DimensionReport solve_dimension(const WordSet& b, int M, long precision_bits, const RunConfig& cfg) {
    if (M < 2) throw std::invalid_argument("solve_dimension: order must be >= 2");
    for (long bits = precision_bits;; bits *= 2) {
        TraceTable table(b, M, bits, cfg);
        DimensionReport rep = run_report(table, M, bits);
        if (rep.residual <= std::ldexp(1.0, -128) || bits >= 8 * precision_bits) return rep;
    }
}

DimensionReport solve_dimension(const AffineSystem& sys, int M, long precision_bits) {
    if (M < 2) throw std::invalid_argument("solve_dimension: order must be >= 2");
    for (long bits = precision_bits;; bits *= 2) {
        TraceTable table(sys, M, bits);
        DimensionReport rep = run_report(table, M, bits);
        if (rep.residual <= std::ldexp(1.0, -128) || bits >= 8 * precision_bits) return rep;
    }
}

std::string format_report(const DimensionReport& rep) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"order\": " << rep.order << ",\n";
    os << "  \"precision_bits\": " << rep.precision_bits << ",\n";
    os << "  \"digits\": " << rep.s_decimal.size() - 2 << ",\n";
    os << "  \"s_M\": \"" << rep.s_decimal << "\",\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", rep.residual);
    os << "  \"residual\": " << buf << ",\n";
    os << "  \"orbit_count\": {";
    for (size_t n = 0; n < rep.orbit_counts.size(); ++n)
        os << (n ? ", " : "") << "\"" << n + 1 << "\": " << rep.orbit_counts[n];
    os << "},\n";
    os << "  \"s_by_order\": {";
    for (size_t i = 0; i < rep.s_by_order.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.15f", rep.s_by_order[i]);
        os << (i ? ", " : "") << "\"" << i + 2 << "\": " << buf;
    }
    os << "}\n}\n";
    return os.str();
}

}  // namespace spectra
