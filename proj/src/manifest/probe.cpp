#include "cyclebound/manifest/probe.hpp"

#include <cmath>

namespace cyclebound {

namespace {

using Vec = std::vector<double>;

Vec eval_field(const VectorField &f, const Vec &x, double sign) {
    Vec out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = sign * f[i].evaluate(std::span<const double>(x));
    return out;
}

Vec axpy(const Vec &x, double a, const Vec &k) {
    Vec out(x);
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] += a * k[i];
    return out;
}

double norm(const Vec &x) {
    double s = 0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

} // namespace

ProbeResult probe_invariance(const OdeSystem &s, const Polynomial &w, std::vector<double> start, double horizon,
                             double step, bool backward) {
    s.validate();
    std::size_t n = s.vars->n();
    if (start.size() != n)
        throw UsageError("probe start has the wrong dimension");
    if (!(step > 0) || !(horizon >= 0))
        throw UsageError("probe needs step > 0 and horizon >= 0");

    ScaledFraction W(w);
    std::vector<ScaledFraction> grad;
    for (std::size_t i = 0; i < n; ++i)
        grad.push_back(partial_derivative(W, i));
    auto wval = [&](const Vec &x) { return W.evaluate(std::span<const double>(x)); };

    // Newton steps along the gradient onto w = 0
    Vec x = std::move(start);
    int it = 0;
    for (; it < 50 && std::fabs(wval(x)) > 1e-8; ++it) {
        Vec g(n);
        double gg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = grad[i].evaluate(std::span<const double>(x));
            gg += g[i] * g[i];
        }
        if (gg == 0)
            break;
        x = axpy(x, -wval(x) / gg, g);
    }
    if (std::fabs(wval(x)) > 1e-8)
        throw UsageError("probe start could not be refined onto w = 0");

    ProbeResult r;
    r.start = x;
    r.max_abs_w = std::fabs(wval(x));
    double sign = backward ? -1.0 : 1.0;
    long total = static_cast<long>(std::ceil(horizon / step - 1e-9));
    for (long k = 0; k < total; ++k) {
        Vec k1 = eval_field(s.f, x, sign);
        Vec k2 = eval_field(s.f, axpy(x, step / 2, k1), sign);
        Vec k3 = eval_field(s.f, axpy(x, step / 2, k2), sign);
        Vec k4 = eval_field(s.f, axpy(x, step, k3), sign);
        for (std::size_t i = 0; i < n; ++i)
            x[i] += step / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        ++r.steps;
        if (!std::isfinite(norm(x)) || norm(x) > 1e6) {
            r.diverged = true;
            break;
        }
        r.max_abs_w = std::max(r.max_abs_w, std::fabs(wval(x)));
    }
    return r;
}

} // namespace cyclebound
