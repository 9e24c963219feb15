#include "quadrics/schubert.hpp"

#include "quadrics/poset.hpp"

namespace quadrics {

SchubertClass schubert(const Permutation& w) {
    int n = w.size();
    std::vector<int> staircase(n > 0 ? n - 1 : 0);
    for (int k = 0; k < n - 1; ++k) staircase[k] = n - 1 - k;
    Polynomial poly = Polynomial::monomial(staircase, 1);

    Permutation v = w.inverse() * Permutation::longest(n);
    GeneratorWord word = lex_min_reduced_word(v);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        poly = divided_difference(*it, poly);
    return {w, poly};
}

Polynomial restriction_class(const Composition& mu, ExponentMode mode) {
    Polynomial sum;
    for (const auto& w : d_set_mu(mu)) sum += schubert(w.inverse()).poly;
    int exponent = 0;
    if (mode == ExponentMode::blockwise) {
        for (int part : mu.parts()) exponent += part / 2;
    } else {
        exponent = mu.n() / 2;
    }
    return sum * (1LL << exponent);
}

Polynomial conjecture_product(int n) {
    Polynomial p = Polynomial::constant(1);
    for (int i = 1; 2 * i <= n; ++i)
        for (int j = i; j <= n - i; ++j)
            p = p * (Polynomial::variable(i) + Polynomial::variable(j));
    return p;
}

ConjectureReport check_conjecture(int n) {
    ConjectureReport report;
    report.n = n;
    report.restriction = restriction_class(Composition({n}));
    report.product = conjecture_product(n);
    report.diff = report.restriction - report.product;
    return report;
}

ExponentComparison compare_restriction_exponents(const Composition& mu) {
    ExponentComparison cmp{mu, 0, mu.n() / 2, false, mu.num_parts() > 1};
    for (int part : mu.parts()) cmp.blockwise_exponent += part / 2;
    cmp.values_equal = cmp.blockwise_exponent == cmp.half_n_exponent;
    return cmp;
}

}  // namespace quadrics
