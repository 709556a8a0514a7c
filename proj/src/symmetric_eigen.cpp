#include "hdx/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hdx/error.hpp"

namespace hdx {

namespace {

double off_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i * n + j)];
            sum += 2.0 * v * v;
        }
    }
    return std::sqrt(sum);
}

}  // namespace

EigenResult symmetric_eigenvalues(std::span<const double> matrix, int n, double tolerance) {
    if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw DomainError("matrix size does not match dimension");
    }
    std::vector<double> a(matrix.begin(), matrix.end());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a[static_cast<std::size_t>(i * n + j)] != a[static_cast<std::size_t>(j * n + i)]) {
                throw DomainError("matrix is not symmetric");
            }
        }
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };

    const double target = std::min(tolerance, 1.0) * 1e-3;
    constexpr int kMaxSweeps = 100;

    EigenResult result;
    double off = off_norm(a, n);
    while (off > target && result.sweeps < kMaxSweeps) {
        ++result.sweeps;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rotation annihilating a(p,q) (Golub & Van Loan, Alg. 8.5.1).
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
        const double next = off_norm(a, n);
        if (next >= off) {
            off = next;
            break;
        }
        off = next;
    }

    result.off_diagonal_norm = off;
    if (off > tolerance) {
        throw Error("Jacobi iteration stalled at off-diagonal norm " + std::to_string(off));
    }
    result.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) result.values[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(result.values.begin(), result.values.end(), std::greater<>());
    return result;
}

}  // namespace hdx
