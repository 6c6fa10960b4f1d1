#include "bcross/bigint.hpp"

#include <stdexcept>
#include <utility>

namespace bcross {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;

    BigInt prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m[c][c] == 0) {
            std::size_t swap_row = c;
            while (swap_row < n && m[swap_row][c] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[c], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[c][c] - m[i][c] * m[c][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace bcross
