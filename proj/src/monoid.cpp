#include "quadrics/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrics {

ActionResult act(int i, const MuInvolution& pi) {
    int n = pi.n();
    if (i < 1 || i >= n)
        throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n - 1));
    const Permutation& p = pi.permutation();
    Permutation pinv = p.inverse();
    int pos_i = pinv(i), pos_next = pinv(i + 1);
    if (pos_i > pos_next) return {pi, ActionCase::fixed};

    const Composition& mu = pi.mu();
    std::vector<int> w = p.word();
    if (mu.block_of(pos_i) != mu.block_of(pos_next)) {
        w[pos_i - 1] = i + 1;
        w[pos_next - 1] = i;
        return {MuInvolution(mu, Permutation(std::move(w))), ActionCase::cross_string};
    }

    // Same string: find the alphabet rank a of the value i there; i+1 has
    // rank a+1.  The string fixes i exactly when its a-th entry is i.
    int block = mu.block_of(pos_i);
    int base = mu.nu(block - 1);
    std::vector<int> alphabet = pi.string(block);
    std::sort(alphabet.begin(), alphabet.end());
    int a = static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), i) -
                             alphabet.begin()) +
            1;

    if (w[base + a - 1] == i && w[base + a] == i + 1) {
        w[base + a - 1] = i + 1;
        w[base + a] = i;
        return {MuInvolution(mu, Permutation(std::move(w))), ActionCase::insert_cycle};
    }

    // Conjugation: exchange the values i, i+1, then the entries at alphabet
    // positions a, a+1.
    w[pos_i - 1] = i + 1;
    w[pos_next - 1] = i;
    std::swap(w[base + a - 1], w[base + a]);
    return {MuInvolution(mu, Permutation(std::move(w))), ActionCase::conjugate};
}

MuInvolution act_word(const GeneratorWord& word, const MuInvolution& pi) {
    MuInvolution out = pi;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_simple(*it, out);
    return out;
}

MuInvolution act_word(const Permutation& w, const MuInvolution& pi) {
    if (w.size() != pi.n())
        throw std::invalid_argument("permutation size does not match the mu-involution");
    return act_word(lex_min_reduced_word(w), pi);
}

RelationReport verify_relations(int n, const std::vector<MuInvolution>& sample) {
    RelationReport report;
    auto complain = [&](const MuInvolution& pi, const std::string& what) {
        if (report.violations.size() < 32)
            report.violations.push_back(what + " fails at [" + pi.str() + "]");
    };
    for (const auto& pi : sample) {
        if (pi.n() != n)
            throw std::invalid_argument("sample element [" + pi.str() + "] is not on 1.." +
                                        std::to_string(n));
        std::vector<MuInvolution> moved;
        moved.reserve(n - 1);
        for (int i = 1; i < n; ++i) moved.push_back(act_simple(i, pi));
        for (int i = 1; i < n; ++i) {
            ++report.checked;
            if (act_simple(i, moved[i - 1]) != moved[i - 1])
                complain(pi, "s" + std::to_string(i) + " idempotence");
        }
        for (int i = 1; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) {
                ++report.checked;
                if (act_simple(i, moved[j - 1]) != act_simple(j, moved[i - 1]))
                    complain(pi, "s" + std::to_string(i) + "/s" + std::to_string(j) +
                                     " commutation");
            }
            if (i + 1 < n) {
                ++report.checked;
                if (act_simple(i, act_simple(i + 1, moved[i - 1])) !=
                    act_simple(i + 1, act_simple(i, moved[i])))
                    complain(pi, "s" + std::to_string(i) + "/s" + std::to_string(i + 1) +
                                     " braid");
            }
        }
    }
    return report;
}

}  // namespace quadrics
