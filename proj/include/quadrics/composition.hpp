#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace quadrics {

// A composition mu = (mu_1, ..., mu_k) of n: an ordered tuple of positive
// integers.  Blocks refer to the consecutive intervals of [n] cut out by the
// partial sums nu_i = mu_1 + ... + mu_i; block i is {nu_{i-1}+1, ..., nu_i}.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    int n() const { return nu_.back(); }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    // Partial sum nu_j = mu_1 + ... + mu_j, with nu_0 = 0.
    int nu(int j) const { return nu_[j]; }

    // {nu_1, ..., nu_{k-1}}: the proper partial sums, a subset of [n-1].
    std::vector<int> descents() const;

    // 1-based index of the block containing the value v in 1..n.
    int block_of(int v) const;

    bool single_block() const { return parts_.size() == 1; }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    // "3,1,2" style.
    std::string str() const;
    static Composition parse(std::string_view text);

private:
    std::vector<int> parts_;
    std::vector<int> nu_;
};

// All compositions of n, in lexicographic order of the part tuples.
std::vector<Composition> all_compositions(int n);

}  // namespace quadrics
