#include "rndf/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "rndf/errors.hpp"

namespace rndf {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] (QUADPACK dqk15).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct panel {
    double a, b;
    complex value;
    double err;
    bool operator<(const panel& o) const { return err < o.err; }
};

panel eval_panel(const std::function<complex(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    complex fc = f(mid);
    complex k15 = wgk[7] * fc;
    complex g7 = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        complex f1 = f(mid - half * xgk[j]);
        complex f2 = f(mid + half * xgk[j]);
        k15 += wgk[j] * (f1 + f2);
        if (j % 2 == 1) g7 += wg[j / 2] * (f1 + f2);
    }
    k15 *= half;
    g7 *= half;
    double err = std::abs(k15 - g7);
    // QUADPACK-style sharpening of the raw discrepancy
    err = err * std::min(1.0, std::pow(200.0 * err / std::max(std::abs(k15), 1e-300), 0.5));
    return {a, b, k15, err};
}

} // namespace

quad_result adaptive_gk15(const std::function<complex(double)>& f, double a, double b,
                          double abs_tol, int max_panels, int min_panels) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("adaptive_gk15: abs_tol must be > 0");
    if (a == b) return {complex{0.0, 0.0}, 0.0, 0};
    std::priority_queue<panel> heap;
    double total_err = 0.0;
    int used = 0;
    for (int i = 0; i < min_panels; ++i) {
        double pa = a + (b - a) * i / min_panels;
        double pb = a + (b - a) * (i + 1) / min_panels;
        panel p = eval_panel(f, pa, pb);
        total_err += p.err;
        heap.push(p);
        ++used;
    }
    while (total_err > abs_tol) {
        if (used >= max_panels)
            throw numeric_error("adaptive_gk15: panel budget exhausted before reaching tolerance");
        panel worst = heap.top();
        heap.pop();
        total_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw numeric_error("adaptive_gk15: interval underflow before reaching tolerance");
        panel l = eval_panel(f, worst.a, mid);
        panel r = eval_panel(f, mid, worst.b);
        total_err += l.err + r.err;
        heap.push(l);
        heap.push(r);
        ++used;
    }
    complex sum{0.0, 0.0};
    std::vector<panel> rest;
    rest.reserve(heap.size());
    while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
    }
    // accumulate smallest panels first
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) sum += it->value;
    return {sum, total_err, used};
}

} // namespace rndf
