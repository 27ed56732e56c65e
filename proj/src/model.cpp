#include "qrabi/model.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qrabi {

namespace {

void check_indices(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("photon index must be nonnegative");
}

// Kahan sum of terms pre-sorted by descending magnitude.
long double kahan_sum_desc(std::vector<long double>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](long double a, long double b) { return fabsl(a) > fabsl(b); });
    long double sum = 0.0L, comp = 0.0L;
    for (long double t : terms) {
        long double y = t - comp;
        long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

// Associated Laguerre L_q^{(a)}(x), upward recurrence in the degree.
long double laguerre(int q, int a, long double x) {
    if (q == 0) return 1.0L;
    long double lm1 = 1.0L;
    long double l = 1.0L + a - x;
    for (int i = 1; i < q; ++i) {
        long double lp1 = ((2 * i + 1 + a - x) * l - (i + a) * lm1) / (i + 1);
        lm1 = l;
        l = lp1;
    }
    return l;
}

} // namespace

double displacement_overlap(int m, int n, double g) {
    check_indices(m, n);
    if (g < 0.0) throw std::invalid_argument("displacement_overlap: g must be nonnegative");

    if (g == 0.0) {
        // only the k = m = n term survives; (2g)^0 = 1
        if (m != n) return 0.0;
        return (m % 2 == 0) ? 1.0 : -1.0;
    }

    const long double log2g = logl(2.0L * (long double)g);
    const long double lg_mn = 0.5L * (lgammal(m + 1.0L) + lgammal(n + 1.0L));

    const int kmax = std::min(m, n);
    std::vector<long double> terms;
    terms.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        long double lt = lg_mn + (m + n - 2 * k) * log2g - lgammal(m - k + 1.0L) -
                         lgammal(n - k + 1.0L) - lgammal(k + 1.0L);
        long double t = expl(lt);
        terms.push_back((k % 2 == 0) ? t : -t);
    }
    long double sum = kahan_sum_desc(terms);
    return (double)(expl(-2.0L * (long double)g * (long double)g) * sum);
}

Eigen::MatrixXd displacement_overlap_matrix(int n_max, double g) {
    if (n_max < 0) throw std::invalid_argument("displacement_overlap_matrix: n_max must be >= 0");
    Eigen::MatrixXd d(n_max + 1, n_max + 1);
    for (int m = 0; m <= n_max; ++m)
        for (int n = m; n <= n_max; ++n) {
            double v = displacement_overlap(m, n, g);
            d(m, n) = v;
            d(n, m) = v;
        }
    return d;
}

double displacement_matrix_element(double beta, int k, int n) {
    check_indices(k, n);
    if (beta == 0.0) return k == n ? 1.0 : 0.0;

    const int lo = std::min(k, n);
    const int hi = std::max(k, n);
    const int d = hi - lo;
    // base^d with base = beta for k >= n (raising side), -beta otherwise
    const double base = (k >= n) ? beta : -beta;
    const long double x = (long double)beta * (long double)beta;

    long double logpref = d * logl(fabsl((long double)base)) +
                          0.5L * (lgammal(lo + 1.0L) - lgammal(hi + 1.0L)) - 0.5L * x;
    long double sign = (base < 0.0 && d % 2 != 0) ? -1.0L : 1.0L;
    return (double)(sign * expl(logpref) * laguerre(lo, d, x));
}

Eigen::MatrixXd displacement_matrix(double beta, int n_rows, int n_cols) {
    Eigen::MatrixXd d(n_rows, n_cols);
    for (int k = 0; k < n_rows; ++k)
        for (int n = 0; n < n_cols; ++n) d(k, n) = displacement_matrix_element(beta, k, n);
    return d;
}

ParityBlock build_parity_block(const ModelParams& params, Parity sign, int n_tr) {
    params.validate();
    if (n_tr < 1) throw std::invalid_argument("build_parity_block: n_tr must be >= 1");

    const int dim = n_tr + 1;
    const double half_delta = 0.5 * params.delta_atom * parity_sign(sign);

    ParityBlock block;
    block.sign = sign;
    block.dim = dim;
    block.matrix = half_delta * displacement_overlap_matrix(n_tr, params.g);
    for (int m = 0; m < dim; ++m)
        block.matrix(m, m) += params.omega * (m - params.g * params.g);
    return block;
}

} // namespace qrabi
