// Prints the eigenmatrices of X(2,2;2,3), checks P Q = |X^n| I, then measures the
// Terwilliger algebra of the base scheme.
#include <iostream>

#include <ohs/ohs.hpp>

int main() {
    const ohs::SchemeParams p({2, 3}, 2);
    const auto e = ohs::eigen_n(p);

    std::cout << p.label() << ", shapes:";
    for (const auto& s : e.shapes) std::cout << ' ' << s.to_string();
    std::cout << "\nP =\n";
    for (std::size_t i = 0; i < e.P.rows(); ++i) {
        for (std::size_t j = 0; j < e.P.cols(); ++j) std::cout << '\t' << e.P(i, j);
        std::cout << '\n';
    }

    const auto size = ohs::power(ohs::Rational(static_cast<long>(p.base_size())), p.n);
    const bool ok = e.P * e.Q == size * ohs::RatMatrix::identity(e.shapes.size());
    std::cout << "P Q = |X^n| I: " << (ok ? "yes" : "no") << '\n';

    const auto base = p.with_length(1);
    std::cout << "dim T(" << base.label() << ") = " << ohs::terwilliger_closure(base).dimension() << '\n';
    return ok ? 0 : 1;
}
