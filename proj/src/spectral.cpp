#include "spokit/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "spokit/words.hpp"

namespace spokit {

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw ResourceError("characteristic polynomial coefficients overflow");
    }
    return static_cast<std::int64_t>(v);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    IntMatrix c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                __int128 v = static_cast<__int128>(c[i][j]) +
                             static_cast<__int128>(a[i][k]) * b[k][j];
                c[i][j] = checked(v);
            }
        }
    }
    return c;
}

double eval_poly(const std::vector<std::int64_t>& p, double x) {
    double r = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + static_cast<double>(p[i]);
    return r;
}

double power_iteration(const IntMatrix& a) {
    const std::size_t n = a.size();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = static_cast<double>(a[i][j]) + (i == j ? 1.0 : 0.0);
        }
    }
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    double lam = 1.0;
    for (int it = 0; it < 200000; ++it) {
        Eigen::VectorXd w = m * v;
        double norm = w.lpNorm<Eigen::Infinity>();
        if (norm == 0.0) return 0.0;
        w /= norm;
        if (std::abs(norm - lam) <= 1e-14 * std::max(1.0, lam) && it > 10) {
            return norm - 1.0;
        }
        lam = norm;
        v = w;
    }
    return lam - 1.0;
}

}  // namespace

std::vector<std::int64_t> char_poly(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return c;
    IntMatrix m = a;
    std::vector<std::int64_t> coeff(n + 1, 0);  // coeff[k] multiplies x^{n-k}
    coeff[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // m <- a * (m + coeff[k-1] * I)
            IntMatrix t = m;
            for (std::size_t i = 0; i < n; ++i) {
                t[i][i] = checked(static_cast<__int128>(t[i][i]) + coeff[k - 1]);
            }
            m = mul(a, t);
        }
        __int128 tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        coeff[k] = checked(-tr / static_cast<__int128>(k));
    }
    for (std::size_t k = 0; k <= n; ++k) c[n - k] = coeff[k];
    return c;
}

double spectral_radius(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    for (const auto& row : a) {
        if (row.size() != n) throw DomainError("matrix is not square");
        for (auto v : row) {
            if (v < 0) throw DomainError("matrix has a negative entry");
        }
    }
    if (n <= 8) {
        try {
            auto p = char_poly(a);
            std::int64_t maxrow = 0;
            for (const auto& row : a) {
                std::int64_t s = 0;
                for (auto v : row) s += v;
                maxrow = std::max(maxrow, s);
            }
            double hi = static_cast<double>(maxrow) + 1.0;
            // walk down a grid to bracket the largest sign change
            const int grid = 1 << 14;
            double lo = -1.0;
            for (int k = grid - 1; k >= 0; --k) {
                double x = hi * k / grid;
                if (eval_poly(p, x) <= 0.0) {
                    lo = x;
                    break;
                }
            }
            if (lo >= 0.0) {
                double top = lo + hi / grid;
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + top);
                    if (eval_poly(p, mid) <= 0.0) {
                        lo = mid;
                    } else {
                        top = mid;
                    }
                }
                return 0.5 * (lo + top);
            }
            // no sign change, e.g. repeated or defective top eigenvalue
        } catch (const ResourceError&) {
            // coefficients too large, use the iterative path
        }
    }
    return power_iteration(a);
}

}  // namespace spokit
