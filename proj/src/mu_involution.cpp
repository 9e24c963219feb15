#include "quadrics/mu_involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrics {

Permutation string_to_relative(const std::vector<int>& s) {
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rel(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), s[k]);
        rel[k] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(rel));  // throws on repeated entries
}

MuInvolution::MuInvolution(Composition mu, Permutation perm)
    : mu_(std::move(mu)), perm_(std::move(perm)) {
    if (perm_.size() != mu_.n())
        throw std::invalid_argument("permutation size does not match composition");
    for (int i = 1; i <= mu_.num_parts(); ++i) {
        if (!string_to_relative(string(i)).is_involution())
            throw std::invalid_argument("string " + std::to_string(i) + " of [" + str() +
                                        "] is not an involution in relative order");
    }
}

std::vector<int> MuInvolution::string(int i) const {
    auto& w = perm_.word();
    return {w.begin() + mu_.nu(i - 1), w.begin() + mu_.nu(i)};
}

std::vector<Permutation> MuInvolution::relative_strings() const {
    std::vector<Permutation> out;
    out.reserve(mu_.num_parts());
    for (int i = 1; i <= mu_.num_parts(); ++i) out.push_back(string_to_relative(string(i)));
    return out;
}

std::string MuInvolution::str() const {
    bool digits = n() <= 9;
    std::string out;
    for (int i = 1; i <= mu_.num_parts(); ++i) {
        if (i > 1) out += '|';
        bool first = true;
        for (int v : string(i)) {
            if (!first && !digits) out += ',';
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

MuInvolution MuInvolution::parse(std::string_view text) {
    if (!text.empty() && text.front() == '[' && text.back() == ']') {
        text.remove_prefix(1);
        text.remove_suffix(1);
    }
    std::vector<int> parts;
    std::string flat;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t bar = text.find('|', pos);
        if (bar == std::string_view::npos) bar = text.size();
        std::string_view segment = text.substr(pos, bar - pos);
        if (segment.empty())
            throw std::invalid_argument("empty string segment in '" + std::string(text) + "'");
        std::vector<int> values;
        if (segment.find(',') != std::string_view::npos) {
            size_t p2 = 0;
            while (p2 <= segment.size()) {
                size_t comma = segment.find(',', p2);
                if (comma == std::string_view::npos) comma = segment.size();
                values.push_back(std::stoi(std::string(segment.substr(p2, comma - p2))));
                p2 = comma + 1;
                if (comma == segment.size()) break;
            }
        } else {
            for (char c : segment) {
                if (c < '1' || c > '9')
                    throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
                values.push_back(c - '0');
            }
        }
        parts.push_back(static_cast<int>(values.size()));
        for (int v : values) {
            if (!flat.empty()) flat += ',';
            flat += std::to_string(v);
        }
        pos = bar + 1;
        if (bar == text.size()) break;
    }
    return MuInvolution(Composition(std::move(parts)), Permutation::parse(flat));
}

MuInvolution identity_mu(const Composition& mu) {
    return MuInvolution(mu, Permutation::identity(mu.n()));
}

MuInvolution top_mu(const Composition& mu) {
    int n = mu.n();
    std::vector<int> w(n);
    for (int i = 1; i <= mu.num_parts(); ++i)
        for (int k = mu.nu(i - 1); k < mu.nu(i); ++k)
            w[k] = n - mu.nu(i - 1) - (k - mu.nu(i - 1));
    return MuInvolution(mu, Permutation(std::move(w)));
}

int rank_mu(const MuInvolution& pi) {
    // Minimal length over the coset of position rearrangements within
    // strings: only the inversions across distinct strings survive.
    const Permutation& p = pi.permutation();
    const Composition& mu = pi.mu();
    int rank = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (mu.block_of(i) != mu.block_of(j) && p(i) > p(j)) ++rank;
    for (const auto& rel : pi.relative_strings()) rank += involution_rank(rel);
    return rank;
}

BigInt involution_count(int m) {
    BigInt a = 1, b = 1;  // counts for sizes m-2 and m-1
    for (int i = 2; i <= m; ++i) {
        BigInt next = b + (i - 1) * a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

BigInt count_mu_involutions(const Composition& mu) {
    // Multinomial n! / prod(mu_i!) built incrementally as prod C(nu_i, mu_i).
    BigInt total = 1;
    for (int i = 1; i <= mu.num_parts(); ++i) {
        int top = mu.nu(i);
        for (int j = 1; j <= mu.parts()[i - 1]; ++j) {
            total *= top;
            total /= j;
            --top;
        }
        total *= involution_count(mu.parts()[i - 1]);
    }
    return total;
}

}  // namespace quadrics
