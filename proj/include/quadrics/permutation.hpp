#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quadrics/composition.hpp"

namespace quadrics {

using BigInt = boost::multiprecision::cpp_int;

// A permutation of {1, ..., n} in one-line notation: word()[k] is the image
// of k+1.  Value semantics throughout; composition is (p * q)(k) = p(q(k)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation simple(int n, int i);            // adjacent transposition s_i
    static Permutation transposition(int n, int a, int b);
    static Permutation longest(int n);                  // w_0 = [n, n-1, ..., 1]

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_involution() const;

    int length() const;     // number of inversions
    int excedance() const;  // #{i : p(i) > i}

    // Position-i descent: p(i) > p(i+1), i.e. l(p s_i) < l(p).
    bool right_descent(int i) const { return word_[i - 1] > word_[i]; }
    // Value-i descent: i appears after i+1, i.e. l(s_i p) < l(p).
    bool left_descent(int i) const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

    // Digit string for n <= 9 ("3421"), comma-separated otherwise.
    std::string str() const;
    // Accepts both of the above forms.
    static Permutation parse(std::string_view text);

private:
    std::vector<int> word_;
};

// (l(p) + excedance(p)) / 2 for an involution p; its rank in the poset of
// involutions under the reverse weak order.  Throws for non-involutions.
int involution_rank(const Permutation& p);

// A word in the generators s_1, ..., s_{n-1}, stored as the list of indices.
using GeneratorWord = std::vector<int>;

// Product s_{w[0]} s_{w[1]} ... s_{w[back]} as a permutation of [n].
Permutation evaluate_word(int n, const GeneratorWord& w);

// All reduced words of p, built by recursion on right descents.
std::vector<GeneratorWord> reduced_words(const Permutation& p);

// Number of reduced words; overflows int64 well below S_9, hence BigInt.
BigInt reduced_word_count(const Permutation& p);

// Lexicographically smallest reduced word (greedy on left descents).
GeneratorWord lex_min_reduced_word(const Permutation& p);

// Bruhat order via the dominance criterion on prefix counts.
bool bruhat_leq(const Permutation& p, const Permutation& q);

// Does p map every mu-block of values into itself?
bool in_parabolic(const Permutation& p, const Composition& mu);

// p = u * v with u in the parabolic subgroup S_mu and v the minimal-length
// representative of the coset S_mu p, so l(v) = min over w in S_mu of l(w p).
struct CosetDecomposition {
    Permutation u;
    Permutation v;
};
CosetDecomposition coset_decompose(const Permutation& p, const Composition& mu);

}  // namespace quadrics
