#pragma once

#include <string>
#include <vector>

#include "quadrics/mu_involution.hpp"

namespace quadrics {

// How a generator s_i moves a mu-involution.
//   fixed:        i+1 occurs before i, nothing happens
//   cross_string: i and i+1 sit in different strings and trade places
//   insert_cycle: both fixed in relative order within one string; swapping
//                 them inserts a 2-cycle (the doubled covers of the order)
//   conjugate:    i and i+1 share a string, which is conjugated by their
//                 transposition in relative order
enum class ActionCase { fixed, cross_string, insert_cycle, conjugate };

struct ActionResult {
    MuInvolution result;
    ActionCase kind;
};

// The monoid generator s_i applied to pi.  Either fixes pi or yields the
// mu-involution covering pi along s_i in the reverse weak order.
ActionResult act(int i, const MuInvolution& pi);

inline MuInvolution act_simple(int i, const MuInvolution& pi) { return act(i, pi).result; }

// Letters act right to left: acting with {i, j} means s_j first, then s_i.
MuInvolution act_word(const GeneratorWord& word, const MuInvolution& pi);

// w . pi along any reduced word of w; the result is word-independent, the
// lexicographically smallest word is used.
MuInvolution act_word(const Permutation& w, const MuInvolution& pi);

struct RelationReport {
    long long checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the monoid relations s.s = s, commutation and braid, instantiated
// on every element of the sample.  n fixes the generator range 1..n-1.
RelationReport verify_relations(int n, const std::vector<MuInvolution>& sample);

}  // namespace quadrics
