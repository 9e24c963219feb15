#include "quadrics/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "quadrics/errors.hpp"

namespace quadrics {

WeakOrderPoset WeakOrderPoset::build(const Composition& mu, int max_n) {
    if (mu.n() > max_n)
        throw ResourceLimitError("poset for n = " + std::to_string(mu.n()) +
                                 " exceeds the bound " + std::to_string(max_n) +
                                 "; estimated node count " + count_mu_involutions(mu).str());

    std::vector<MuInvolution> found{identity_mu(mu)};
    std::unordered_map<std::string, int> ids{{found[0].str(), 0}};
    struct RawEdge {
        int src, dst, label;
        Multiplicity mult;
    };
    std::vector<RawEdge> raw;
    for (int src = 0; src < static_cast<int>(found.size()); ++src) {
        for (int i = 1; i < mu.n(); ++i) {
            ActionResult r = act(i, found[src]);
            if (r.kind == ActionCase::fixed) continue;
            auto [it, fresh] = ids.try_emplace(r.result.str(), static_cast<int>(found.size()));
            if (fresh) found.push_back(r.result);
            raw.push_back({src, it->second, i,
                           r.kind == ActionCase::insert_cycle ? Multiplicity::doubled
                                                              : Multiplicity::single});
        }
    }
    if (count_mu_involutions(mu) != found.size())
        throw std::logic_error("generator action did not reach every mu-involution");

    // Renumber by (rank, word) so ids are canonical and rank-monotone.
    int n_nodes = static_cast<int>(found.size());
    std::vector<int> ranks(n_nodes);
    for (int v = 0; v < n_nodes; ++v) ranks[v] = rank_mu(found[v]);
    std::vector<int> order(n_nodes);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
        return found[a].permutation() < found[b].permutation();
    });
    std::vector<int> new_id(n_nodes);
    for (int pos = 0; pos < n_nodes; ++pos) new_id[order[pos]] = pos;

    WeakOrderPoset poset(mu);
    poset.nodes_.reserve(n_nodes);
    poset.ranks_.reserve(n_nodes);
    for (int pos = 0; pos < n_nodes; ++pos) {
        poset.nodes_.push_back(found[order[pos]]);
        poset.ranks_.push_back(ranks[order[pos]]);
    }
    for (const auto& e : raw) {
        if (poset.ranks_[new_id[e.dst]] != poset.ranks_[new_id[e.src]] + 1)
            throw std::logic_error("cover does not raise the rank by one");
        poset.edges_.push_back({new_id[e.src], new_id[e.dst], e.label, e.mult});
    }
    std::sort(poset.edges_.begin(), poset.edges_.end(), [](const CoverEdge& a, const CoverEdge& b) {
        return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
    });
    poset.out_.resize(n_nodes);
    poset.in_.resize(n_nodes);
    for (int e = 0; e < static_cast<int>(poset.edges_.size()); ++e) {
        poset.out_[poset.edges_[e].src].push_back(e);
        poset.in_[poset.edges_[e].dst].push_back(e);
    }
    return poset;
}

int WeakOrderPoset::id_of(const MuInvolution& pi) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), pi,
                               [](const MuInvolution& a, const MuInvolution& b) {
                                   int ra = rank_mu(a), rb = rank_mu(b);
                                   if (ra != rb) return ra < rb;
                                   return a.permutation() < b.permutation();
                               });
    if (it == nodes_.end() || !(*it == pi)) return -1;
    return static_cast<int>(it - nodes_.begin());
}

Multiplicity classify_edge(const MuInvolution& pi, int label) {
    ActionResult r = act(label, pi);
    switch (r.kind) {
        case ActionCase::fixed:
            throw std::invalid_argument("s" + std::to_string(label) + " fixes [" + pi.str() +
                                        "]; not a cover");
        case ActionCase::insert_cycle:
            return Multiplicity::doubled;
        default:
            return Multiplicity::single;
    }
}

int double_edge_count(const MuInvolution& pi) {
    int total = 0;
    for (const auto& rel : pi.relative_strings()) total += rel.excedance();
    return total;
}

std::vector<Permutation> WSet::inverses() const {
    std::vector<Permutation> out;
    out.reserve(elements.size());
    for (const auto& w : elements) out.push_back(w.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Propagate W-sets upward along covers, restricted to the given nodes
// (empty restriction means all).  Requires ids in rank order, which build
// guarantees.
std::vector<std::set<Permutation>> propagate_w_sets(const WeakOrderPoset& poset,
                                                    const std::vector<char>& wanted) {
    int n = poset.mu().n();
    std::vector<std::set<Permutation>> sets(poset.size());
    sets[poset.bottom()].insert(Permutation::identity(n));
    for (int id = 0; id < poset.size(); ++id) {
        if (!wanted.empty() && !wanted[id]) continue;
        for (int e : poset.out_edges(id)) {
            const CoverEdge& edge = poset.edges()[e];
            if (!wanted.empty() && !wanted[edge.dst]) continue;
            Permutation s = Permutation::simple(n, edge.label);
            for (const auto& w : sets[id]) {
                Permutation longer = s * w;
                if (longer.length() == w.length() + 1) sets[edge.dst].insert(longer);
            }
        }
    }
    return sets;
}

}  // namespace

WSet w_set(const WeakOrderPoset& poset, const MuInvolution& pi) {
    int target = poset.id_of(pi);
    if (target < 0)
        throw std::invalid_argument("[" + pi.str() + "] is not a node of this poset");
    // Only ancestors of the target can contribute.
    std::vector<char> wanted(poset.size(), 0);
    wanted[target] = 1;
    for (int id = target; id >= 0; --id) {
        if (!wanted[id]) continue;
        for (int e : poset.in_edges(id)) wanted[poset.edges()[e].src] = 1;
    }
    auto sets = propagate_w_sets(poset, wanted);
    return {pi, {sets[target].begin(), sets[target].end()}};
}

std::vector<std::vector<Permutation>> all_w_sets(const WeakOrderPoset& poset) {
    auto sets = propagate_w_sets(poset, {});
    std::vector<std::vector<Permutation>> out(poset.size());
    for (int id = 0; id < poset.size(); ++id) out[id] = {sets[id].begin(), sets[id].end()};
    return out;
}

std::vector<Permutation> d_set(int n) {
    if (n <= 0) throw std::invalid_argument("d_set needs n >= 1");
    if (n == 1) return {Permutation::identity(1)};
    if (n == 2) return {Permutation::longest(2)};
    std::vector<Permutation> out;
    for (const auto& u : d_set(n - 2)) {
        for (int gap = 0; gap <= n - 2; ++gap) {
            std::vector<int> w;
            w.reserve(n);
            for (int k = 0; k < gap; ++k) w.push_back(u(k + 1) + 1);
            w.push_back(n);
            w.push_back(1);
            for (int k = gap; k < n - 2; ++k) w.push_back(u(k + 1) + 1);
            out.emplace_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> d_set_by_filter(int n) {
    if (n <= 0) throw std::invalid_argument("d_set needs n >= 1");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation w(word);
        Permutation pos = w.inverse();
        bool good = true;
        for (int i = 1; good && 2 * i <= n; ++i) {
            if (pos(n + 1 - i) >= pos(i)) {
                good = false;
                break;
            }
            for (int j = i + 1; j < n + 1 - i; ++j)
                if (pos(n + 1 - i) < pos(j) && pos(j) < pos(i)) {
                    good = false;
                    break;
                }
        }
        if (good) out.push_back(w);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Permutation> d_set_mu(const Composition& mu) {
    int n = mu.n();
    std::vector<std::vector<Permutation>> blocks;
    for (int part : mu.parts()) blocks.push_back(d_set(part));
    std::vector<Permutation> out;
    std::vector<int> word(n);
    auto rec = [&](auto&& self, int block) -> void {
        if (block > mu.num_parts()) {
            out.emplace_back(word);
            return;
        }
        int base = mu.nu(block - 1);
        int shift = n - mu.nu(block);  // block alphabet is shift+1 .. shift+mu_block
        for (const auto& u : blocks[block - 1]) {
            for (int t = 1; t <= u.size(); ++t) word[base + t - 1] = u(t) + shift;
            self(self, block + 1);
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt maximal_chain_count(const WeakOrderPoset& poset) {
    std::vector<BigInt> paths(poset.size());
    paths[poset.bottom()] = 1;
    for (const auto& e : poset.edges()) paths[e.dst] += paths[e.src];
    return paths[poset.top()];
}

std::vector<GeneratorWord> maximal_chains(const WeakOrderPoset& poset, std::uint64_t limit) {
    BigInt count = maximal_chain_count(poset);
    if (count > limit)
        throw ResourceLimitError("refusing to enumerate " + count.str() +
                                 " maximal chains (limit " + std::to_string(limit) + ")");
    std::vector<GeneratorWord> out;
    GeneratorWord labels;
    auto dfs = [&](auto&& self, int id) -> void {
        if (id == poset.top()) {
            out.push_back(labels);
            return;
        }
        for (int e : poset.out_edges(id)) {
            labels.push_back(poset.edges()[e].label);
            self(self, poset.edges()[e].dst);
            labels.pop_back();
        }
    };
    dfs(dfs, poset.bottom());
    std::sort(out.begin(), out.end());
    return out;
}

CheckCount check_run_word_actions(int n) {
    CheckCount report;
    if (n < 2) return report;
    Composition whole({n});
    MuInvolution e = identity_mu(whole);
    auto complain = [&](const std::string& what) {
        if (report.failures.size() < 32) report.failures.push_back(what);
    };
    auto cycles = [&](int a, int b, int c, int d) {
        Permutation p = Permutation::identity(n);
        if (a != b) p = p * Permutation::transposition(n, a, b);
        if (c != d) p = p * Permutation::transposition(n, c, d);
        return p;
    };

    // Descending run s_{n-1}..s_{hi}, then ascending run s_1..s_{i-1}.
    auto run_word = [&](int hi, int i) {
        GeneratorWord w;
        for (int t = n - 1; t >= hi; --t) w.push_back(t);
        for (int t = 1; t <= i - 1; ++t) w.push_back(t);
        return w;
    };

    for (int j = 1; j < n; ++j) {
        for (int i = j + 1; i <= n; ++i) {
            ++report.cases;
            GeneratorWord word = run_word(j + 1, i);
            Permutation v = evaluate_word(n, word);
            Permutation image = act_word(word, e).permutation();
            Permutation expected =
                i > j + 2 ? cycles(1, n, j + 1, i - 1) : cycles(1, n, 1, 1);
            int offset = i == j + 1 ? 0 : -1;
            if (image != expected || involution_rank(image) != v.length() + offset)
                complain("descending-ascending word fails at n=" + std::to_string(n) +
                         " j=" + std::to_string(j) + " i=" + std::to_string(i));
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            ++report.cases;
            GeneratorWord word = run_word(j, i);
            Permutation v = evaluate_word(n, word);
            Permutation image = act_word(word, e).permutation();
            if (image != cycles(1, i, j, n) || involution_rank(image) != v.length())
                complain("two-run word fails at n=" + std::to_string(n) +
                         " i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }
    return report;
}

CheckCount check_extreme_cycle_labels(int n) {
    CheckCount report;
    if (n < 2) return report;
    Composition whole({n});
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        Permutation p(word);
        if (!p.is_involution() || p(1) == n) continue;
        MuInvolution pi(whole, p);
        for (int i = 1; i < n; ++i) {
            MuInvolution moved = act_simple(i, pi);
            if (moved.permutation()(1) != n) continue;
            ++report.cases;
            if (i != 1 && i != n - 1 && report.failures.size() < 32)
                report.failures.push_back("cycle (1," + std::to_string(n) +
                                          ") created by s" + std::to_string(i) + " at [" +
                                          pi.str() + "]");
        }
    } while (std::next_permutation(word.begin(), word.end()));
    return report;
}

TheoremReport verify_main_theorems(const Composition& mu) {
    TheoremReport report{mu, false, {}, {}, {}, {}};
    WeakOrderPoset poset = WeakOrderPoset::build(mu);
    report.top_w_set = w_set(poset, top_mu(mu)).elements;
    report.d_mu = d_set_mu(mu);
    report.wset_equals_dset = report.top_w_set == report.d_mu;
    report.run_words = check_run_word_actions(mu.n());
    report.cycle_labels = check_extreme_cycle_labels(mu.n());
    return report;
}

std::string to_dot(const WeakOrderPoset& poset) {
    std::string out = "digraph weak_order {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int level = 0; level <= poset.height(); ++level) {
        out += "  { rank=same;";
        for (int id = 0; id < poset.size(); ++id)
            if (poset.rank(id) == level) out += " \"" + poset.node(id).str() + "\";";
        out += " }\n";
    }
    for (const auto& e : poset.edges()) {
        out += "  \"" + poset.node(e.src).str() + "\" -> \"" + poset.node(e.dst).str() +
               "\" [label=\"s" + std::to_string(e.label) + "\"";
        if (e.mult == Multiplicity::doubled) out += ", color=\"black:invis:black\"";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

PosetDump dump(const WeakOrderPoset& poset) {
    PosetDump d;
    d.mu = poset.mu().parts();
    for (int id = 0; id < poset.size(); ++id)
        d.nodes.push_back(
            {poset.node(id).str(), poset.rank(id), double_edge_count(poset.node(id))});
    d.edges = poset.edges();
    return d;
}

}  // namespace quadrics
