#pragma once

#include <map>
#include <string>
#include <vector>

namespace quadrics {

// Exponent vectors compare lexicographically with implicit zero padding,
// highest power of x_1 first, so leading terms print first.
struct MonomialOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse integer polynomial in x_1, x_2, ...  Keys are exponent vectors
// with trailing zeros stripped; stored coefficients are never zero.
class Polynomial {
public:
    using Terms = std::map<std::vector<int>, long long, MonomialOrder>;

    Polynomial() = default;  // zero
    static Polynomial constant(long long c);
    static Polynomial variable(int i);  // x_i
    static Polynomial monomial(std::vector<int> exps, long long coef);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    bool homogeneous() const;
    long long coefficient(std::vector<int> exps) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(long long c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // "2*x1^2 + 2*x1*x2"; the zero polynomial prints as "0".
    std::string str() const;

private:
    void add_term(const std::vector<int>& exps, long long coef);
    Terms terms_;
};

// (f - s_i f) / (x_i - x_{i+1}) where s_i swaps x_i and x_{i+1}; computed
// per monomial by the telescoping identity, so division is exact.
Polynomial divided_difference(int i, const Polynomial& f);

}  // namespace quadrics
