#pragma once

#include "quadrics/composition.hpp"
#include "quadrics/permutation.hpp"
#include "quadrics/polynomial.hpp"

namespace quadrics {

struct SchubertClass {
    Permutation w;
    Polynomial poly;
};

// Divided-difference chain down from the staircase monomial of the longest
// element: apply the letters of a reduced word of w^-1 w_0, rightmost
// first.  The braid relations make the result word-independent.
SchubertClass schubert(const Permutation& w);

enum class ExponentMode { blockwise, half_n };

// 2^e times the sum of the Schubert classes of the inverses of
// d_set_mu(mu).  The default exponent e is the doubled-cover count of the
// maximum, sum of floor(mu_i/2); the alternative is floor(n/2).
Polynomial restriction_class(const Composition& mu,
                             ExponentMode mode = ExponentMode::blockwise);

// Expansion of the product of (x_i + x_j) over 1 <= i <= j <= n-i.
Polynomial conjecture_product(int n);

struct ConjectureReport {
    int n;
    Polynomial restriction;  // restriction_class((n))
    Polynomial product;      // conjecture_product(n)
    Polynomial diff;         // restriction - product
    bool equal() const { return diff.is_zero(); }
};
ConjectureReport check_conjecture(int n);

// The two published scalars in front of the restriction class.  They are
// distinct formulas whenever the composition has several strings, though
// the values still coincide when at most one string has odd size.
struct ExponentComparison {
    Composition mu;
    int blockwise_exponent;  // sum of floor(mu_i / 2)
    int half_n_exponent;     // floor(n / 2)
    bool values_equal;
    bool formulas_differ;    // several strings: genuinely different formulas
};
ExponentComparison compare_restriction_exponents(const Composition& mu);

}  // namespace quadrics
