#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadrics/monoid.hpp"
#include "quadrics/mu_involution.hpp"

namespace quadrics {

enum class Multiplicity { single, doubled };

// A cover pi_src --s_label--> pi_dst of the reverse weak order.  Doubled
// covers are the 2-cycle insertions; the same node pair can be joined by
// two covers with different labels.
struct CoverEdge {
    int src;
    int dst;
    int label;
    Multiplicity mult;
    bool operator==(const CoverEdge&) const = default;
};

// The full reverse weak order on I_mu, built by saturating the generator
// action from the identity.  Node ids are assigned by (rank, word).
class WeakOrderPoset {
public:
    static WeakOrderPoset build(const Composition& mu, int max_n = 10);

    const Composition& mu() const { return mu_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const MuInvolution& node(int id) const { return nodes_[id]; }
    int rank(int id) const { return ranks_[id]; }
    int height() const { return ranks_.back(); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }

    // -1 when pi is not a node.
    int id_of(const MuInvolution& pi) const;

    const std::vector<CoverEdge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int id) const { return out_[id]; }
    const std::vector<int>& in_edges(int id) const { return in_[id]; }

private:
    WeakOrderPoset(Composition mu) : mu_(std::move(mu)) {}

    Composition mu_;
    std::vector<MuInvolution> nodes_;
    std::vector<int> ranks_;
    std::vector<CoverEdge> edges_;
    std::vector<std::vector<int>> out_, in_;  // edge indices per node
};

// Multiplicity of the cover s_label pi over pi; throws if s_label fixes pi.
Multiplicity classify_edge(const MuInvolution& pi, int label);

// Number of doubled covers on any maximal chain from the identity to pi:
// the total number of 2-cycles among the relative strings.
int double_edge_count(const MuInvolution& pi);

// W(pi): the permutations w with w . e_mu = pi and l(w) = rank of pi.
struct WSet {
    MuInvolution pi;
    std::vector<Permutation> elements;  // sorted by one-line word

    // W of the associated orbit closure: the elementwise inverses.
    std::vector<Permutation> inverses() const;
};

WSet w_set(const WeakOrderPoset& poset, const MuInvolution& pi);

// W-sets of every node at once, indexed by node id.
std::vector<std::vector<Permutation>> all_w_sets(const WeakOrderPoset& poset);

// The W-set of the longest involution in I_n: permutations whose extreme
// values n, n-1, ... pair inward toward 1, 2, ... with nothing in between.
// Two constructions agree: a direct filter of S_n and a recursion inserting
// the adjacent pair "n 1" into shifted members for n-2.
std::vector<Permutation> d_set(int n);            // recursive construction
std::vector<Permutation> d_set_by_filter(int n);  // cycle-condition filter

// Blockwise version: string i runs over the i-th block of values from the
// top and is itself drawn from d_set(mu_i), shifted into that alphabet.
std::vector<Permutation> d_set_mu(const Composition& mu);

// Maximal chains from bottom to top, counted with their cover labels.
BigInt maximal_chain_count(const WeakOrderPoset& poset);

// Label sequences of all maximal chains, bottom to top, sorted; refuses via
// ResourceLimitError when the count exceeds the limit.
std::vector<GeneratorWord> maximal_chains(const WeakOrderPoset& poset,
                                          std::uint64_t limit = 1000000);

struct CheckCount {
    long long cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// The two-run words v = (s_{n-1}...s_{j+1})(s_1...s_{i-1}) for j < i and
// v = (s_{n-1}...s_j)(s_1...s_{i-1}) for i < j: checks the closed forms of
// v . e (products of the cycles (1,n), (1,i), (j,n), (j+1,i-1)) and the
// offset between the involution rank of v . e and l(v).
CheckCount check_run_word_actions(int n);

// Every cover of plain involutions that creates the extreme cycle (1,n)
// carries the label 1 or n-1.
CheckCount check_extreme_cycle_labels(int n);

// w_set(top) == d_set_mu plus the two supporting checks above.
struct TheoremReport {
    Composition mu;
    bool wset_equals_dset = false;
    std::vector<Permutation> top_w_set;
    std::vector<Permutation> d_mu;
    CheckCount run_words;
    CheckCount cycle_labels;
    bool ok() const { return wset_equals_dset && run_words.ok() && cycle_labels.ok(); }
};
TheoremReport verify_main_theorems(const Composition& mu);

// Graphviz rendering, drawn bottom-up, one rank per layer; doubled covers
// are drawn as parallel strokes.
std::string to_dot(const WeakOrderPoset& poset);

// Flat content of a poset for serialization and comparisons.
struct PosetNodeDump {
    std::string word;
    int rank;
    int dcount;
    bool operator==(const PosetNodeDump&) const = default;
};
struct PosetDump {
    std::vector<int> mu;
    std::vector<PosetNodeDump> nodes;
    std::vector<CoverEdge> edges;
    bool operator==(const PosetDump&) const = default;
};
PosetDump dump(const WeakOrderPoset& poset);

}  // namespace quadrics
