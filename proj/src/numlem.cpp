#include "lemn/numlem.hpp"

#include <cmath>
#include <random>

#include "lemn/lemnatomic.hpp"

namespace lemn {

namespace {

// Incomplete arc-length integrand in double, Simpson rule; used only to seed
// the high-precision Newton iteration.
double arc_double(double r) {
    const int n = 256;
    double h = r / n;
    double sum = 0.0;
    auto f = [](double t) { return 1.0 / std::sqrt(1.0 - t * t * t * t); };
    for (int i = 0; i <= n; ++i) {
        double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * f(h * i);
    }
    return sum * h / 3.0;
}

}  // namespace

PhiEvaluator::PhiEvaluator(int digits)
    : digits_(digits),
      prec_(static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219281)) + 64),
      varpi_(prec_),
      pole_tol_(prec_) {
    if (digits < 10) throw precision_failure_error("PhiEvaluator requires >= 10 digits");
    pole_tol_ = Real::pow10(-(digits_ / 2), prec_);
    setup_gauss_legendre();
    Real quad = varpi_by_quadrature();
    Real agm = varpi_by_agm();
    Real agree_tol = Real::pow10(-(digits_ - 5), prec_);
    if (abs(quad - agm) > agree_tol)
        throw precision_failure_error(
            "quadrature and AGM values of varpi disagree: " + quad.str(digits_) + " vs " +
            agm.str(digits_));
    varpi_ = agm;
}

Real PhiEvaluator::varpi_by_agm() const {
    Real a(1L, prec_);
    Real b = sqrt(Real(2L, prec_));
    Real eps = ldexp2(Real(1L, prec_), -(prec_ - 4));
    for (int i = 0; i < 64 && abs(a - b) > eps * abs(a); ++i) {
        Real an = (a + b) / 2L;
        b = sqrt(a * b);
        a = an;
    }
    return Real::pi(prec_) / ((a + b) / 2L);
}

// tanh-sinh quadrature of 1/sqrt(1 - t^4) on [0, 1]; the endpoint
// singularity is absorbed by the double-exponential weights. The substituted
// abscissa is kept in the cancellation-free form 1 - t = 1/(E+1).
Real PhiEvaluator::varpi_by_quadrature() const {
    mpfr_prec_t wp = prec_ + 32;
    Real half_pi = Real::pi(wp) / 2L;
    Real one(1L, wp);
    Real cutoff = ldexp2(one, -(wp + 16));

    auto term = [&](const Real& u) -> Real {
        Real w = half_pi * sinh(u);
        Real E(wp);
        mpfr_exp(E.raw(), (w * 2L).raw(), MPFR_RNDN);
        Real ep1 = E + one;
        Real weight = Real::pi(wp) * cosh(u) * E / (ep1 * ep1);
        Real t = E / ep1;
        Real omt = one / ep1;  // 1 - t
        Real g = omt * (one + t) * (one + t * t);
        Real value = weight / sqrt(g);
        // the integrand blows up like 1/sqrt(1-t), so cut on the full term
        if (abs(value) < cutoff) return Real(0L, wp);
        return value;
    };

    // terms decay like cosh(u) exp(-(pi/2) sinh(u)) near t = 1
    double max_u = std::asinh((wp * 0.6931 + 96.0) * 2.0 / M_PI);

    // level 0: h = 1, value = h * sum of terms at integer abscissas
    Real value = term(Real(0L, wp));
    for (int k = 1; k <= static_cast<int>(max_u) + 1; ++k)
        value += term(Real(double(k), wp)) + term(Real(double(-k), wp));

    Real tol = ldexp2(one, -(prec_ + 8));
    double h = 1.0;
    for (int level = 1; level <= 14; ++level) {
        h /= 2;
        Real refinement(0L, wp);
        for (double u = h; u <= max_u; u += 2 * h)
            refinement += term(Real(u, wp)) + term(Real(-u, wp));
        Real prev = value;
        value = ldexp2(value, -1) + refinement * Real(h, wp);
        if (level > 3 && abs(value - prev) < tol * abs(value)) break;
    }
    Real out(prec_);
    mpfr_set(out.raw(), (value * 2L).raw(), MPFR_RNDN);
    return out;
}

void PhiEvaluator::setup_gauss_legendre() {
    int n = 32 + (digits_ * 8) / 5;
    gl_nodes_.clear();
    gl_weights_.clear();
    gl_nodes_.reserve(n);
    gl_weights_.reserve(n);
    Real one(1L, prec_);
    for (int k = 1; k <= n; ++k) {
        double guess = std::cos(M_PI * (k - 0.25) / (n + 0.5));
        Real x(guess, prec_);
        Real dP(prec_);
        for (int iter = 0; iter < 40; ++iter) {
            // Legendre P_n and P_n' by upward recurrence
            Real p0 = one, p1 = x;
            for (int j = 2; j <= n; ++j) {
                Real p2 = (x * p1 * (2 * j - 1) - p0 * (j - 1)) / long(j);
                p0 = p1;
                p1 = p2;
            }
            dP = (x * p1 - p0) * long(n) / (x * x - one);
            Real dx = p1 / dP;
            x -= dx;
            if (abs(dx) < ldexp2(one, -(prec_ - 8))) break;
        }
        gl_nodes_.push_back(x);
        gl_weights_.push_back(Real(2L, prec_) / ((one - x * x) * dP * dP));
    }
}

Real PhiEvaluator::arc_length(const Real& r) const {
    if (r.is_zero()) return Real(0L, prec_);
    Real one(1L, prec_);
    Real half_r = r / 2L;
    Real sum(0L, prec_);
    for (std::size_t i = 0; i < gl_nodes_.size(); ++i) {
        Real t = half_r * (gl_nodes_[i] + one);
        Real t2 = t * t;
        sum += gl_weights_[i] / sqrt(one - t2 * t2);
    }
    return sum * half_r;
}

Real PhiEvaluator::invert_arc(const Real& s) const {
    if (s.is_zero()) return Real(0L, prec_);
    double sd = s.to_double();
    // double-precision seed
    double r = std::min(0.9, sd);
    for (int i = 0; i < 60; ++i) {
        double f = arc_double(r) - sd;
        double step = f * std::sqrt(std::max(1e-30, 1.0 - r * r * r * r));
        r -= step;
        r = std::min(0.93, std::max(0.0, r));
        if (std::fabs(step) < 1e-13) break;
    }
    Real x(r, prec_);
    Real one(1L, prec_);
    Real done = ldexp2(one, -(prec_ - 4));
    for (int i = 0; i < 8; ++i) {
        Real x2 = x * x;
        Real step = (arc_length(x) - s) * sqrt(one - x2 * x2);
        x -= step;
        if (abs(step) < done) break;
    }
    return x;
}

PhiEvaluator::PhiPair PhiEvaluator::phi_pair(const Real& s) const {
    Real period = varpi_ * 2L;
    Real t = fmod(s, period);
    if (t.sign() < 0) t += period;
    int sign = 1;
    if (t >= varpi_) {
        t -= varpi_;
        sign = -1;  // phi(s + varpi) = -phi(s), same for phi'
    }
    bool mirrored = false;
    Real half = varpi_ / 2L;
    if (t > half) {
        t = varpi_ - t;
        mirrored = true;  // phi(varpi - s) = phi(s), phi'(varpi - s) = -phi'(s)
    }
    Real one(1L, prec_);
    Real phi(prec_), phiprime(prec_);
    if (t <= half / 2L) {
        phi = invert_arc(t);
        Real p2 = phi * phi;
        phiprime = sqrt(one - p2 * p2);
    } else {
        // t = varpi/2 - u with small u: phi = phi'(u)/(1+phi(u)^2),
        // phi' = 2 phi(u)/(1+phi(u)^2)
        Real u = half - t;
        Real ru = invert_arc(u);
        Real ru2 = ru * ru;
        Real denom = one + ru2;
        phi = sqrt(one - ru2 * ru2) / denom;
        phiprime = ru * 2L / denom;
    }
    if (mirrored) phiprime = -phiprime;
    if (sign < 0) {
        phi = -phi;
        phiprime = -phiprime;
    }
    return {std::move(phi), std::move(phiprime)};
}

PhiEvaluator::ComplexPair PhiEvaluator::phi_complex_pair(const Complex& z) const {
    PhiPair px = phi_pair(z.re);
    PhiPair py = phi_pair(z.im);
    Real one(1L, prec_);
    Real prod = px.phi * py.phi;
    Real den = one - prod * prod;
    if (abs(den) < pole_tol_)
        throw pole_error("phi evaluated too close to a pole");
    Complex num(px.phi * py.phiprime, py.phi * px.phiprime);
    Complex phi = num / den;

    // derivative along the real direction with phi'' = -2 phi^3
    Real px3 = px.phi * px.phi * px.phi;
    Complex num_x(px.phiprime * py.phiprime, -(py.phi * px3 * 2L));
    Real den_x = -(px.phi * px.phiprime * py.phi * py.phi * 2L);
    Complex phiprime = (num_x * den - num * den_x) / (den * den);
    return {std::move(phi), std::move(phiprime)};
}

Complex eval_poly_complex(const ZiPoly& p, const Complex& z) {
    mpfr_prec_t prec = z.re.prec();
    Complex acc(Real(0L, prec), Real(0L, prec));
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * z + Complex(p.coeffs()[i], prec);
    return acc;
}

Real verify_lemnatomic_roots(const PhiEvaluator& ev, const GaussInt& beta) {
    LemnatomicRecord rec = lemnatomic(beta);
    Complex delta_num = ev.make_complex(GaussInt(1, 1));
    Complex bn = ev.make_complex(rec.beta);
    Real worst(0L, ev.prec());
    for (const auto& alpha : unit_residues(rec.beta)) {
        Complex z = (ev.make_complex(alpha) * delta_num / bn) * ev.varpi();
        Complex root = ev.phi_complex(z);
        Real residual = abs(eval_poly_complex(rec.poly, root));
        if (residual > worst) worst = residual;
    }
    return worst;
}

namespace {

Complex apply_mult_map(const PhiEvaluator& ev, const MultMap& m, const Complex& x) {
    Complex x2 = x * x;
    Complex x4 = x2 * x2;
    Complex p = eval_poly_complex(m.P, x4);
    Complex q = eval_poly_complex(m.Q, x4);
    Complex unit = ev.make_complex(GaussInt::unit_i_pow(m.epsilon));
    return unit * x * p / q;
}

}  // namespace

Real verify_multmap_numeric(const PhiEvaluator& ev, const GaussInt& beta, int samples,
                            uint64_t seed) {
    MultMap m = mult_map(beta);
    Complex b = ev.make_complex(beta);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.08, 0.92);
    double vp = ev.varpi().to_double();
    Real worst(0L, ev.prec());
    int done = 0, attempts = 0;
    while (done < samples && attempts < samples * 50) {
        ++attempts;
        Complex z(ev.make_real(dist(rng) * vp), ev.make_real(dist(rng) * vp * 0.45));
        try {
            Complex phiz = ev.phi_complex(z);
            Complex x2 = phiz * phiz;
            Complex q = eval_poly_complex(m.Q, x2 * x2);
            if (abs(q).to_double() < 1e-3) continue;
            Complex lhs = ev.phi_complex(b * z);
            Real residual = abs(lhs - apply_mult_map(ev, m, phiz));
            if (residual > worst) worst = residual;
            ++done;
        } catch (const pole_error&) {
            continue;
        }
    }
    if (done < samples)
        throw precision_failure_error("could not collect pole-free samples");
    return worst;
}

std::vector<IdentityResidual> verify_identities(const PhiEvaluator& ev, int samples,
                                                uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.02, 1.98);
    double vp = ev.varpi().to_double();
    mpfr_prec_t prec = ev.prec();
    Real one(1L, prec);

    Real add_worst(0L, prec), dup_worst(0L, prec), diffeq_worst(0L, prec),
        halfp_worst(0L, prec), two_vp_worst(0L, prec);

    // addition law and duplication on the real line (pole-free)
    for (int i = 0; i < samples; ++i) {
        Real s = ev.make_real(dist(rng) * vp);
        Real t = ev.make_real(dist(rng) * vp);
        auto ps = ev.phi_pair(s);
        auto pt = ev.phi_pair(t);
        Real prod = ps.phi * pt.phi;
        Real rhs = (ps.phi * pt.phiprime + pt.phi * ps.phiprime) / (one + prod * prod);
        Real r = abs(ev.phi_real(s + t) - rhs);
        if (r > add_worst) add_worst = r;

        Real p4 = ps.phi * ps.phi * ps.phi * ps.phi;
        Real dup = ps.phi * ps.phiprime * 2L / (one + p4);
        r = abs(ev.phi_real(s * 2L) - dup);
        if (r > dup_worst) dup_worst = r;

        r = abs(ps.phiprime * ps.phiprime + p4 - one);
        if (r > diffeq_worst) diffeq_worst = r;

        // phi'(z - varpi/2) = 2 phi(z) / (1 + phi(z)^2)
        Real lhs = ev.phiprime_real(s - ev.varpi() / 2L);
        Real rhs2 = ps.phi * 2L / (one + ps.phi * ps.phi);
        r = abs(lhs - rhs2);
        if (r > halfp_worst) halfp_worst = r;
    }

    // complex samples for the addition law and the differential equation
    int complex_done = 0, attempts = 0;
    while (complex_done < samples / 2 && attempts < samples * 40) {
        ++attempts;
        Complex z(ev.make_real(dist(rng) * vp), ev.make_real(dist(rng) * vp * 0.4));
        Complex w(ev.make_real(dist(rng) * vp), ev.make_real(dist(rng) * vp * 0.4));
        try {
            auto pz = ev.phi_complex_pair(z);
            auto pw = ev.phi_complex_pair(w);
            Complex prod = pz.phi * pw.phi;
            Complex den = Complex(one) + prod * prod;
            if (abs(den).to_double() < 0.05) continue;
            Complex rhs = (pz.phi * pw.phiprime + pw.phi * pz.phiprime) / den;
            Real r = abs(ev.phi_complex(z + w) - rhs);
            if (r > add_worst) add_worst = r;

            Complex p2 = pz.phi * pz.phi;
            r = abs(pz.phiprime * pz.phiprime + p2 * p2 - Complex(one));
            if (r > diffeq_worst) diffeq_worst = r;
            ++complex_done;
        } catch (const pole_error&) {
            continue;
        }
    }

    // phi(2 varpi / beta) = (1-i) phi(d) phi'(d) / (1 - phi(d)^4) with
    // d = (1+i) varpi / beta; the denominator follows from the addition law
    // at (d, -i d), where phi(-i d)^2 = -phi(d)^2.
    std::vector<GaussInt> betas = {GaussInt(3),      GaussInt(5),      GaussInt(7),
                                   GaussInt(9),      GaussInt(-1, 2),  GaussInt(-1, -2),
                                   GaussInt(2, 3),   GaussInt(3, 2),   GaussInt(11)};
    for (const auto& beta : betas) {
        Complex b = ev.make_complex(beta);
        Complex delta = (ev.make_complex(GaussInt(1, 1)) / b) * ev.varpi();
        auto pd = ev.phi_complex_pair(delta);
        Complex p2 = pd.phi * pd.phi;
        Complex rhs = ev.make_complex(GaussInt(1, -1)) * pd.phi * pd.phiprime /
                      (Complex(one) - p2 * p2);
        Complex lhs = ev.phi_complex(Complex(ev.varpi() * 2L) / b);
        Real r = abs(lhs - rhs);
        if (r > two_vp_worst) two_vp_worst = r;
    }

    return {{"addition_law", add_worst},
            {"duplication_law", dup_worst},
            {"differential_equation", diffeq_worst},
            {"half_period_derivative", halfp_worst},
            {"two_varpi_over_beta", two_vp_worst}};
}

}  // namespace lemn
