#include "dirichlet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace dirichlet {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15)
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
double vnorm(T v);
template <>
double vnorm(double v) { return std::fabs(v); }
template <>
double vnorm(std::complex<double> v) { return std::abs(v); }

template <class T, class F>
void gk15(const F& f, double a, double b, T& value, double& err) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    T fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    T kron = kWgk[7] * fv[7];
    for (int i = 0; i < 7; ++i) kron += kWgk[i] * (fv[i] + fv[14 - i]);
    T gauss = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    value = h * kron;
    const double diff = vnorm<T>(h * (kron - gauss));
    // QUADPACK-style sharpening of the raw |K15-G7| difference
    const double scale = vnorm<T>(value);
    if (diff > 0.0 && scale > 0.0 && 200.0 * diff < scale)
        err = scale * std::pow(200.0 * diff / scale, 1.5) / 200.0;
    else
        err = diff;
}

template <class T>
struct Interval {
    double a, b, err;
    T value;
    bool operator<(const Interval& o) const { return err < o.err; }
};

template <class T, class F>
void adaptive(const F& f, double a, double b, double abs_tol, double rel_tol,
              int max_intervals, T& value, double& error, long& evals, bool& ok) {
    std::priority_queue<Interval<T>> q;
    Interval<T> whole{a, b, 0.0, T{}};
    gk15<T>(f, a, b, whole.value, whole.err);
    evals = 15;
    T total = whole.value;
    double toterr = whole.err;
    q.push(whole);
    while (toterr > std::max(abs_tol, rel_tol * vnorm<T>(total)) &&
           static_cast<int>(q.size()) < max_intervals) {
        Interval<T> worst = q.top();
        q.pop();
        if (worst.b - worst.a < 1e-14 * std::fabs(b - a)) { q.push(worst); break; }
        const double mid = 0.5 * (worst.a + worst.b);
        Interval<T> left{worst.a, mid, 0.0, T{}}, right{mid, worst.b, 0.0, T{}};
        gk15<T>(f, left.a, left.b, left.value, left.err);
        gk15<T>(f, right.a, right.b, right.value, right.err);
        evals += 30;
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        q.push(left);
        q.push(right);
    }
    value = total;
    error = toterr;
    ok = toterr <= std::max(abs_tol, rel_tol * vnorm<T>(total));
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals) {
    QuadResult r;
    if (a == b) { r.converged = true; return r; }
    adaptive<double>(f, a, b, abs_tol, rel_tol, max_intervals,
                     r.value, r.error, r.evaluations, r.converged);
    return r;
}

QuadResultC integrate(const std::function<std::complex<double>(double)>& f,
                      double a, double b, double abs_tol, double rel_tol,
                      int max_intervals) {
    QuadResultC r;
    if (a == b) { r.converged = true; return r; }
    adaptive<std::complex<double>>(f, a, b, abs_tol, rel_tol, max_intervals,
                                   r.value, r.error, r.evaluations, r.converged);
    return r;
}

QuadResultC integrate_windowed(const std::function<std::complex<double>(double)>& f,
                               double a, double b, double window, double abs_tol) {
    QuadResultC out;
    if (b <= a) { out.converged = true; return out; }
    const long nwin = std::max(1L, static_cast<long>(std::ceil((b - a) / window)));
    const double w = (b - a) / static_cast<double>(nwin);
    const double per_tol = abs_tol / static_cast<double>(nwin);
    std::complex<double> sum(0.0, 0.0), comp(0.0, 0.0); // Kahan
    double err = 0.0;
    long evals = 0;
    bool ok = true;
    for (long i = 0; i < nwin; ++i) {
        const double lo = a + w * static_cast<double>(i);
        const double hi = (i + 1 == nwin) ? b : lo + w;
        QuadResultC r = integrate(f, lo, hi, per_tol, 0.0, 60);
        const std::complex<double> y = r.value - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += r.error;
        evals += r.evaluations;
        ok = ok && r.converged;
    }
    out.value = sum;
    out.error = err;
    out.evaluations = evals;
    out.converged = ok;
    return out;
}

} // namespace dirichlet
