#include "quadrics/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrics {

namespace {

void normalize(std::vector<int>& exps) {
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

}  // namespace

bool MonomialOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    std::size_t m = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < m; ++k) {
        int av = k < a.size() ? a[k] : 0;
        int bv = k < b.size() ? b[k] : 0;
        if (av != bv) return av > bv;
    }
    return false;
}

Polynomial Polynomial::constant(long long c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(int i) {
    if (i < 1) throw std::invalid_argument("variables are numbered from 1");
    std::vector<int> exps(i, 0);
    exps[i - 1] = 1;
    Polynomial p;
    p.add_term(exps, 1);
    return p;
}

Polynomial Polynomial::monomial(std::vector<int> exps, long long coef) {
    normalize(exps);
    Polynomial p;
    p.add_term(exps, coef);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [exps, coef] : terms_) {
        int total = 0;
        for (int e : exps) total += e;
        d = std::max(d, total);
    }
    return d;
}

bool Polynomial::homogeneous() const {
    int d = -1;
    for (const auto& [exps, coef] : terms_) {
        int total = 0;
        for (int e : exps) total += e;
        if (d == -1) d = total;
        if (total != d) return false;
    }
    return true;
}

long long Polynomial::coefficient(std::vector<int> exps) const {
    normalize(exps);
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const std::vector<int>& exps, long long coef) {
    if (coef == 0) return;
    auto [it, fresh] = terms_.try_emplace(exps, coef);
    if (fresh) return;
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [exps, coef] : o.terms_) add_term(exps, coef);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [exps, coef] : o.terms_) add_term(exps, -coef);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> exps(std::max(ea.size(), eb.size()), 0);
            for (std::size_t k = 0; k < ea.size(); ++k) exps[k] += ea[k];
            for (std::size_t k = 0; k < eb.size(); ++k) exps[k] += eb[k];
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(long long c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [exps, coef] : terms_) out.add_term(exps, coef * c);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exps, coef] : terms_) {
        long long c = coef;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (exps[k] > 1) mono += "^" + std::to_string(exps[k]);
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

Polynomial divided_difference(int i, const Polynomial& f) {
    if (i < 1) throw std::out_of_range("divided difference needs i >= 1");
    Polynomial out;
    for (const auto& [exps, coef] : f.terms()) {
        int a = i - 1 < static_cast<int>(exps.size()) ? exps[i - 1] : 0;
        int b = i < static_cast<int>(exps.size()) ? exps[i] : 0;
        if (a == b) continue;
        std::vector<int> base = exps;
        if (static_cast<int>(base.size()) < i + 1) base.resize(i + 1, 0);
        // (u^a v^b - u^b v^a) / (u - v) telescopes into a - b monomials.
        if (a > b) {
            for (int t = 0; t < a - b; ++t) {
                base[i - 1] = a - 1 - t;
                base[i] = b + t;
                out += Polynomial::monomial(base, coef);
            }
        } else {
            for (int t = 0; t < b - a; ++t) {
                base[i - 1] = b - 1 - t;
                base[i] = a + t;
                out += Polynomial::monomial(base, -coef);
            }
        }
    }
    return out;
}

}  // namespace quadrics
