#include "quadrics/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace quadrics {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    int n = static_cast<int>(word_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index outside 1..n-1");
    return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::out_of_range("transposition entries must be distinct points of 1..n");
    Permutation p = identity(n);
    std::swap(p.word_[a - 1], p.word_[b - 1]);
    return p;
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
    Permutation out;
    out.word_ = std::move(w);
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (word_[i] != i + 1) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if (word_[word_[i - 1] - 1] != i) return false;
    return true;
}

int Permutation::length() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (word_[i] > word_[j]) ++count;
    return count;
}

int Permutation::excedance() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        if (word_[i] > i + 1) ++count;
    return count;
}

bool Permutation::left_descent(int i) const {
    return inverse().right_descent(i);
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("cannot compose permutations of different sizes");
    std::vector<int> w(p.size());
    for (int k = 0; k < p.size(); ++k) w[k] = p.word_[q.word_[k] - 1];
    Permutation out;
    out.word_ = std::move(w);
    return out;
}

std::string Permutation::str() const {
    std::string out;
    bool digits = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (i && !digits) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
            if (ec != std::errc{} || ptr != text.data() + comma)
                throw std::invalid_argument("bad permutation entry in '" + std::string(text) + "'");
            w.push_back(value);
            pos = comma + 1;
            if (comma == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad permutation digit in '" + std::string(text) + "'");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

int involution_rank(const Permutation& p) {
    if (!p.is_involution())
        throw std::invalid_argument("involution rank of a non-involution: " + p.str());
    return (p.length() + p.excedance()) / 2;
}

Permutation evaluate_word(int n, const GeneratorWord& w) {
    Permutation p = Permutation::identity(n);
    for (int i : w) p = p * Permutation::simple(n, i);
    return p;
}

namespace {

void collect_reduced_words(const Permutation& p, GeneratorWord& suffix,
                           std::vector<GeneratorWord>& out) {
    if (p.is_identity()) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    int n = p.size();
    for (int i = 1; i < n; ++i) {
        if (!p.right_descent(i)) continue;
        suffix.push_back(i);
        collect_reduced_words(p * Permutation::simple(n, i), suffix, out);
        suffix.pop_back();
    }
}

}  // namespace

std::vector<GeneratorWord> reduced_words(const Permutation& p) {
    std::vector<GeneratorWord> out;
    GeneratorWord suffix;  // letters peeled from the right, in reverse order
    collect_reduced_words(p, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt reduced_word_count(const Permutation& p) {
    std::map<Permutation, BigInt> memo;
    auto rec = [&](auto&& self, const Permutation& q) -> BigInt {
        if (q.is_identity()) return 1;
        auto it = memo.find(q);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int i = 1; i < q.size(); ++i)
            if (q.right_descent(i)) total += self(self, q * Permutation::simple(q.size(), i));
        memo.emplace(q, total);
        return total;
    };
    return rec(rec, p);
}

GeneratorWord lex_min_reduced_word(const Permutation& p) {
    GeneratorWord word;
    Permutation q = p;
    Permutation qinv = p.inverse();
    while (!q.is_identity()) {
        for (int i = 1; i < q.size(); ++i) {
            if (qinv.right_descent(i)) {  // i is a left descent of q
                word.push_back(i);
                q = Permutation::simple(q.size(), i) * q;
                qinv = q.inverse();
                break;
            }
        }
    }
    return word;
}

bool bruhat_leq(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("cannot compare permutations of different sizes");
    int n = p.size();
    // p <= q iff every prefix of p dominates the same prefix of q:
    // #{k <= i : p(k) <= j} >= #{k <= i : q(k) <= j} for all i, j.
    std::vector<int> pcount(n + 1, 0), qcount(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = p(i); j <= n; ++j) ++pcount[j];
        for (int j = q(i); j <= n; ++j) ++qcount[j];
        for (int j = 1; j <= n; ++j)
            if (pcount[j] < qcount[j]) return false;
    }
    return true;
}

bool in_parabolic(const Permutation& p, const Composition& mu) {
    if (p.size() != mu.n()) return false;
    for (int v = 1; v <= p.size(); ++v)
        if (mu.block_of(p(v)) != mu.block_of(v)) return false;
    return true;
}

CosetDecomposition coset_decompose(const Permutation& p, const Composition& mu) {
    if (p.size() != mu.n())
        throw std::invalid_argument("permutation size does not match composition");
    int n = p.size();
    // v sends the sorted positions hitting value block i to that block in
    // increasing order; this is the minimal-length element of S_mu p.
    std::vector<int> vword(n);
    for (int i = 1; i <= mu.num_parts(); ++i) {
        std::vector<int> positions;
        for (int k = 1; k <= n; ++k)
            if (mu.block_of(p(k)) == i) positions.push_back(k);
        std::sort(positions.begin(), positions.end());
        for (size_t t = 0; t < positions.size(); ++t)
            vword[positions[t] - 1] = mu.nu(i - 1) + static_cast<int>(t) + 1;
    }
    Permutation v(std::move(vword));
    return {p * v.inverse(), v};
}

}  // namespace quadrics
