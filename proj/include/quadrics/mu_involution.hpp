#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadrics/composition.hpp"
#include "quadrics/permutation.hpp"

namespace quadrics {

// The permutation of the sorted alphabet of a string, as a permutation of
// ranks: entry k is the rank of the k-th string entry within the alphabet.
// E.g. [8,3,5,1] -> [4,2,3,1].
Permutation string_to_relative(const std::vector<int>& s);

// A mu-involution: a permutation of [n] cut by the composition mu into
// strings, each of which is an involution on its own alphabet in relative
// order.  Written bar-delimited, e.g. [26|8351|7|94] for mu = (2,4,1,2).
class MuInvolution {
public:
    MuInvolution(Composition mu, Permutation perm);

    const Composition& mu() const { return mu_; }
    const Permutation& permutation() const { return perm_; }
    int n() const { return mu_.n(); }

    // The i-th string (1-based): entries of the word at positions in block i.
    std::vector<int> string(int i) const;
    std::vector<Permutation> relative_strings() const;

    bool operator==(const MuInvolution& o) const {
        return mu_ == o.mu_ && perm_ == o.perm_;
    }
    bool operator<(const MuInvolution& o) const {
        return mu_ == o.mu_ ? perm_ < o.perm_ : mu_ < o.mu_;
    }

    // Bar-delimited form, "26|8351|7|94"; mu is recovered from the bars.
    std::string str() const;
    static MuInvolution parse(std::string_view text);

private:
    Composition mu_;
    Permutation perm_;
};

// The identity mu-involution e_mu = [12|34|...], the minimum of the order.
MuInvolution identity_mu(const Composition& mu);

// The maximum pi_{0,mu}: the i-th string runs through the i-th block of
// values, counted from the top, in decreasing order, e.g. [6543|21].
MuInvolution top_mu(const Composition& mu);

// Rank in the reverse weak order: the minimal length over the coset of pi
// under rearrangements within strings (the cross-string inversion count),
// plus the involution rank of every relative string.
int rank_mu(const MuInvolution& pi);

// Number of involutions in S_m.
BigInt involution_count(int m);

// |I_mu| = multinomial(n; mu) * prod involution_count(mu_i).
BigInt count_mu_involutions(const Composition& mu);

}  // namespace quadrics
