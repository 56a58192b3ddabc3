// Micro-benchmark for apply_function: documents the n^3 * d scaling of the
// centered evaluation (d-fold factored products of n x n matrices).
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "matfunc/annihilator.hpp"
#include "matfunc/entire_function.hpp"
#include "matfunc/matfun.hpp"

using namespace matfunc;

namespace {

// Householder similarity H D H of a diagonal matrix: dense, exact spectrum.
Matrix dense_with_spectrum(int n, const std::vector<cx>& eigs, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cx> v(static_cast<std::size_t>(n), cx(0.0));
    double vnorm2 = 0.0;
    for (cx& x : v) {
        x = cx(u(rng), u(rng));
        vnorm2 += std::norm(x);
    }
    Matrix h = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) -= 2.0 * v[std::size_t(i)] * std::conj(v[std::size_t(j)]) / vnorm2;
    Matrix d(n);
    for (int i = 0; i < n; ++i) d(i, i) = eigs[std::size_t(i) % eigs.size()];
    return h * d * h;
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);
    std::printf("%6s %4s %12s\n", "n", "d", "ms");
    for (int n : {32, 64, 128, 256}) {
        for (int k : {2, 4, 8}) {
            std::vector<Root> roots;
            std::vector<cx> eigs;
            for (int p = 0; p < k; ++p) {
                cx a(0.3 * p - 0.5, 0.1 * p);
                roots.push_back(Root{a, 0});
                eigs.push_back(a);
            }
            AnnihilatorSpec spec(roots);
            Matrix a = dense_with_spectrum(n, eigs, rng);
            const auto start = std::chrono::steady_clock::now();
            Matrix f = apply_function(EntireFunction::exp(), a, spec);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
            std::printf("%6d %4d %12.2f\n", n, spec.degree(), ms);
            (void)f;
        }
    }
    return 0;
}
