#include "greencut/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>

namespace greencut::quad {

namespace {

Rule compute_gauss_legendre(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

void legendre_values(double x, int nmax, std::span<double> vals) {
    vals[0] = 1.0;
    if (nmax >= 1) vals[1] = x;
    for (int k = 2; k <= nmax; ++k)
        vals[k] = ((2 * k - 1) * x * vals[k - 1] - (k - 1) * vals[k - 2]) / k;
}

void sph_bessel_array(double x, int nmax, std::span<double> out) {
    if (x < 1e-3) {
        // series j_n = x^n/(2n+1)!! (1 - x^2/(2(2n+3)) + x^4/(8(2n+3)(2n+5)))
        double xn = 1.0, dfact = 1.0;
        for (int n = 0; n <= nmax; ++n) {
            double c = 1.0 - x * x / (2.0 * (2 * n + 3)) +
                       x * x * x * x / (8.0 * (2 * n + 3) * (2 * n + 5));
            out[n] = xn / dfact * c;
            xn *= x;
            dfact *= (2 * n + 3);
        }
        return;
    }
    const int m = nmax + 16 + static_cast<int>(x);
    double fp = 0.0, fc = 1e-300;
    std::vector<double> tmp(nmax + 1, 0.0);
    for (int k = m; k >= 1; --k) {
        double fm = (2 * k + 1) / x * fc - fp;
        fp = fc;
        fc = fm;
        if (k - 1 <= nmax) tmp[k - 1] = fc;
        if (std::abs(fc) > 1e250) {  // rescale to avoid overflow
            double s = 1e-250;
            fp *= s;
            fc *= s;
            for (auto& v : tmp) v *= s;
        }
    }
    const double j0 = std::sin(x) / x;
    const double scale = j0 / fc;
    for (int n = 0; n <= nmax; ++n) out[n] = tmp[n] * scale;
}

AdaptiveResult adaptive_integrate(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double abs_tol, int max_intervals) {
    struct Seg {
        double a, b, err;
        std::complex<double> val;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    auto eval = [&](double lo, double hi) {
        std::complex<double> v1 = gl_integrate(f, lo, hi, 15);
        std::complex<double> v2 = gl_integrate(f, lo, hi, 25);
        return Seg{lo, hi, std::abs(v2 - v1), v2};
    };
    AdaptiveResult res;
    std::priority_queue<Seg> heap;
    Seg s0 = eval(a, b);
    res.evaluations = 40;
    std::complex<double> total = s0.val;
    double toterr = s0.err;
    heap.push(s0);
    int made = 1;
    while (toterr > abs_tol && made < max_intervals) {
        Seg worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval at rounding floor
            heap.push(Seg{worst.a, worst.b, 0.0, worst.val});
            continue;
        }
        Seg l = eval(worst.a, mid), r = eval(mid, worst.b);
        res.evaluations += 80;
        total += l.val + r.val - worst.val;
        toterr += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++made;
    }
    res.value = total;
    res.error = toterr;
    res.converged = toterr <= abs_tol;
    return res;
}

AdaptiveResult tanh_sinh(const std::function<std::complex<double>(double)>& f,
                         double a, double b, double abs_tol, int max_level) {
    const double h0 = 0.5 * (b - a);
    const double umax = 3.8;
    AdaptiveResult res;

    // Node at transformed coordinate u: distance from the nearer endpoint is
    // computed directly to keep precision when the node hugs an edge.
    auto eval_at = [&](double u, double& weight) -> std::complex<double> {
        const double s = 0.5 * M_PI * std::sinh(u);
        const double c = std::cosh(s);
        weight = h0 * 0.5 * M_PI * std::cosh(u) / (c * c);
        double x;
        if (u >= 0) {
            const double d = h0 * 2.0 / (1.0 + std::exp(2.0 * s));  // h0*(1-tanh s)
            if (d <= 0.0) return {0.0, 0.0};
            x = b - d;
        } else {
            const double d = h0 * 2.0 / (1.0 + std::exp(-2.0 * s));
            if (d <= 0.0) return {0.0, 0.0};
            x = a + d;
        }
        std::complex<double> v = f(x);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {0.0, 0.0};
        return v;
    };

    double h = 1.0;
    double w0;
    std::complex<double> sum = eval_at(0.0, w0) * w0;
    for (int k = 1; k * h <= umax; ++k) {
        double wl, wr;
        std::complex<double> vr = eval_at(k * h, wr);
        std::complex<double> vl = eval_at(-k * h, wl);
        sum += vr * wr + vl * wl;
        res.evaluations += 2;
    }
    std::complex<double> prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        std::complex<double> add{};
        for (int k = 1; k * h <= umax; k += 2) {
            double wl, wr;
            std::complex<double> vr = eval_at(k * h, wr);
            std::complex<double> vl = eval_at(-k * h, wl);
            add += vr * wr + vl * wl;
            res.evaluations += 2;
        }
        std::complex<double> cur = prev * 0.5 + add * h;
        res.error = std::abs(cur - prev);
        prev = cur;
        if (level >= 3 && res.error <= abs_tol) {
            res.value = cur;
            res.converged = true;
            return res;
        }
    }
    res.value = prev;
    res.converged = res.error <= abs_tol;
    return res;
}

namespace {

struct FilonTable {
    Rule rule;
    std::vector<double> proj;  // (2k+1)/2 * w_i * P_k(x_i), row-major k*n+i
};

const FilonTable& filon_table(int n) {
    static std::mutex mu;
    static std::map<int, FilonTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        FilonTable t;
        t.rule = gauss_legendre(n);
        t.proj.resize(static_cast<size_t>(n) * n);
        std::vector<double> pv(n);
        for (int i = 0; i < n; ++i) {
            legendre_values(t.rule.x[i], n - 1, pv);
            for (int k = 0; k < n; ++k)
                t.proj[static_cast<size_t>(k) * n + i] = (2 * k + 1) * 0.5 * t.rule.w[i] * pv[k];
        }
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

template <typename T>
std::complex<double> filon_impl(const std::function<T(double)>& f, double a, double b,
                                double t, int n, double* err_out) {
    const FilonTable& tab = filon_table(n);
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    std::vector<T> fv(n);
    for (int i = 0; i < n; ++i) fv[i] = f(m + h * tab.rule.x[i]);
    std::vector<T> coef(n, T{});
    for (int k = 0; k < n; ++k) {
        T s{};
        for (int i = 0; i < n; ++i) s += tab.proj[static_cast<size_t>(k) * n + i] * fv[i];
        coef[k] = s;
    }
    const double theta = h * t;
    std::vector<double> jn(n);
    sph_bessel_array(std::abs(theta), n - 1, jn);
    // int_{-1}^{1} P_k(x) e^{-i theta x} dx = 2 (-i)^k j_k(theta); for
    // theta < 0 conjugate via j_k parity.
    std::complex<double> acc{};
    std::complex<double> mik = 1.0;  // (-i)^k
    const std::complex<double> step = (theta >= 0) ? std::complex<double>(0, -1)
                                                   : std::complex<double>(0, 1);
    for (int k = 0; k < n; ++k) {
        acc += coef[k] * (2.0 * jn[k]) * mik;
        mik *= step;
    }
    if (err_out) {
        double tail = 0.0;
        if constexpr (std::is_same_v<T, double>) {
            tail = std::abs(coef[n - 1]) + std::abs(coef[n - 2]);
        } else {
            tail = std::abs(coef[n - 1]) + std::abs(coef[n - 2]);
        }
        *err_out = 2.0 * h * tail;
    }
    return h * std::exp(std::complex<double>(0.0, -m * t)) * acc;
}

}  // namespace

std::complex<double> filon_panel(const std::function<double(double)>& f, double a,
                                 double b, double t, int n, double* err_out) {
    return filon_impl<double>(f, a, b, t, n, err_out);
}

std::complex<double> filon_panel_c(const std::function<std::complex<double>(double)>& f,
                                   double a, double b, double t, int n, double* err_out) {
    return filon_impl<std::complex<double>>(f, a, b, t, n, err_out);
}

}  // namespace greencut::quad
