#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadrics/composition.hpp"
#include "quadrics/errors.hpp"
#include "quadrics/json_io.hpp"
#include "quadrics/monoid.hpp"
#include "quadrics/mu_involution.hpp"
#include "quadrics/permutation.hpp"
#include "quadrics/polynomial.hpp"
#include "quadrics/poset.hpp"
#include "quadrics/schubert.hpp"

namespace {

using quadrics::Composition;
using quadrics::ExponentMode;
using quadrics::MuInvolution;
using quadrics::Permutation;
using quadrics::Polynomial;
using quadrics::WeakOrderPoset;

constexpr int kPosetBound = 10;
constexpr int kConjectureBound = 8;

Composition parse_mu(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int part = std::stoi(item, &used);
        if (used != item.size() || part <= 0)
            throw std::invalid_argument("bad composition part: " + item);
        parts.push_back(part);
    }
    if (parts.empty()) throw std::invalid_argument("empty composition");
    return Composition(parts);
}

// One-line word with '|' between the mu-blocks, digit form while n <= 9.
std::string bar_str(const Permutation& w, const Composition& mu) {
    bool digits = w.size() <= 9;
    std::string out;
    int k = 1;
    for (int i = 1; i <= mu.num_parts(); ++i) {
        if (i > 1) out += '|';
        for (int j = 0; j < mu.parts()[i - 1]; ++j, ++k) {
            if (j > 0 && !digits) out += ',';
            out += std::to_string(w(k));
        }
    }
    return out;
}

int bound(int limit, int fallback) { return limit > 0 ? limit : fallback; }

void print_lines(const std::vector<std::string>& lines, const std::string& format) {
    if (format == "json") {
        std::cout << quadrics::json(lines).dump() << "\n";
        return;
    }
    for (const auto& line : lines) std::cout << line << "\n";
}

int run_enumerate(const Composition& mu, int limit, const std::string& format) {
    WeakOrderPoset poset = WeakOrderPoset::build(mu, bound(limit, kPosetBound));
    std::vector<int> ids(poset.size());
    for (int id = 0; id < poset.size(); ++id) ids[id] = id;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return poset.node(a).str() < poset.node(b).str();
    });
    if (format == "json") {
        quadrics::json out = quadrics::json::array();
        for (int id : ids)
            out.push_back({{"word", poset.node(id).str()},
                           {"rank", poset.rank(id)},
                           {"dcount", quadrics::double_edge_count(poset.node(id))}});
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (int id : ids)
        std::cout << poset.node(id).str() << " " << poset.rank(id) << " "
                  << quadrics::double_edge_count(poset.node(id)) << "\n";
    return 0;
}

int run_poset(const Composition& mu, int limit, const std::string& format) {
    WeakOrderPoset poset = WeakOrderPoset::build(mu, bound(limit, kPosetBound));
    if (format == "dot") {
        std::cout << quadrics::to_dot(poset);
        return 0;
    }
    if (format == "json") {
        std::cout << quadrics::to_json(poset).dump(2) << "\n";
        return 0;
    }
    std::cout << "mu";
    for (int part : mu.parts()) std::cout << " " << part;
    std::cout << "\n";
    for (int id = 0; id < poset.size(); ++id)
        std::cout << "node " << id << " " << poset.node(id).str() << " "
                  << poset.rank(id) << "\n";
    for (const auto& edge : poset.edges())
        std::cout << "edge " << edge.src << " " << edge.dst << " s" << edge.label
                  << (edge.mult == quadrics::Multiplicity::doubled ? " double" : " single")
                  << "\n";
    return 0;
}

int run_wset(const std::string& pi_text, const std::string& mu_text, int limit,
             const std::string& format) {
    MuInvolution pi = MuInvolution::parse(pi_text);
    if (!mu_text.empty() && !(parse_mu(mu_text) == pi.mu()))
        throw std::invalid_argument("pi does not match mu");
    WeakOrderPoset poset = WeakOrderPoset::build(pi.mu(), bound(limit, kPosetBound));
    std::vector<std::string> lines;
    for (const auto& w : quadrics::w_set(poset, pi).elements) lines.push_back(w.str());
    print_lines(lines, format);
    return 0;
}

int run_dset(int n, const std::string& mu_text, int limit, const std::string& format) {
    std::vector<std::string> lines;
    if (!mu_text.empty()) {
        Composition mu = parse_mu(mu_text);
        if (mu.n() > bound(limit, kPosetBound))
            throw quadrics::ResourceLimitError("raise --limit past " + std::to_string(mu.n()));
        for (const auto& w : quadrics::d_set_mu(mu)) lines.push_back(bar_str(w, mu));
    } else {
        if (n > bound(limit, kPosetBound))
            throw quadrics::ResourceLimitError("raise --limit past " + std::to_string(n));
        for (const auto& w : quadrics::d_set(n)) lines.push_back(w.str());
    }
    std::sort(lines.begin(), lines.end());
    print_lines(lines, format);
    return 0;
}

int run_chains(const Composition& mu, int limit) {
    WeakOrderPoset poset = WeakOrderPoset::build(mu, bound(limit, kPosetBound));
    std::cout << quadrics::maximal_chain_count(poset) << "\n";
    return 0;
}

bool graded(const WeakOrderPoset& poset, std::string& why) {
    int bottoms = 0, tops = 0;
    for (int id = 0; id < poset.size(); ++id) {
        if (poset.in_edges(id).empty()) {
            ++bottoms;
            if (poset.rank(id) != 0) why = "source above rank 0";
        }
        if (poset.out_edges(id).empty()) {
            ++tops;
            if (poset.rank(id) != poset.height()) why = "chain stalls at " + poset.node(id).str();
        }
    }
    if (bottoms != 1 || tops != 1) why = "extremes not unique";
    return why.empty();
}

// Doubled covers below a node: the same count along every path, and equal
// to the node's own 2-cycle count.
bool doubles_invariant(const WeakOrderPoset& poset, std::string& why) {
    std::vector<int> seen(poset.size(), -1);
    seen[poset.bottom()] = 0;
    for (int id = 0; id < poset.size(); ++id) {
        for (int e : poset.in_edges(id)) {
            const auto& edge = poset.edges()[e];
            int d = seen[edge.src] + (edge.mult == quadrics::Multiplicity::doubled);
            if (seen[id] == -1) seen[id] = d;
            if (seen[id] != d) why = "path doubles differ at " + poset.node(id).str();
        }
        if (seen[id] != quadrics::double_edge_count(poset.node(id)))
            why = "doubles mismatch at " + poset.node(id).str();
        if (!why.empty()) return false;
    }
    return true;
}

bool verify_one(const Composition& mu, int limit) {
    WeakOrderPoset poset = WeakOrderPoset::build(mu, bound(limit, kPosetBound));
    std::vector<MuInvolution> sample;
    for (int id = 0; id < poset.size(); ++id) sample.push_back(poset.node(id));
    auto relations = quadrics::verify_relations(mu.n(), sample);
    auto theorems = quadrics::verify_main_theorems(mu);
    std::string why;
    bool ok = relations.ok() && theorems.ok() && graded(poset, why) &&
              doubles_invariant(poset, why);

    std::cout << (ok ? "ok " : "FAIL ");
    for (int i = 0; i < mu.num_parts(); ++i)
        std::cout << (i ? "," : "") << mu.parts()[i];
    std::cout << " nodes=" << poset.size() << " relations=" << relations.checked
              << " wset=" << theorems.top_w_set.size();
    if (!relations.ok()) std::cout << " " << relations.violations.front();
    if (!theorems.ok()) std::cout << " main theorem check failed";
    if (!why.empty()) std::cout << " " << why;
    std::cout << "\n";
    return ok;
}

int run_verify(int n, const std::string& mu_text, int limit) {
    bool ok = true;
    if (!mu_text.empty()) {
        ok = verify_one(parse_mu(mu_text), limit);
    } else {
        for (int m = 1; m <= n; ++m)
            for (const auto& mu : quadrics::all_compositions(m)) ok &= verify_one(mu, limit);
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

void print_poly(const Polynomial& poly, const std::string& format) {
    if (format == "json")
        std::cout << quadrics::to_json(poly).dump() << "\n";
    else
        std::cout << poly.str() << "\n";
}

int run_conjecture(int n, int limit) {
    if (n > bound(limit, kConjectureBound))
        throw quadrics::ResourceLimitError("raise --limit past " + std::to_string(n));
    auto report = quadrics::check_conjecture(n);
    if (report.equal()) {
        std::cout << "PASS: " << report.restriction.str() << "\n";
        return 0;
    }
    std::cout << "FAIL: restriction " << report.restriction.str() << " vs product "
              << report.product.str() << " differ by " << report.diff.str() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reverse weak order on mu-involutions and its restriction classes"};
    app.require_subcommand(1);

    std::string mu_text, pi_text, w_text;
    std::string format = "text";
    int n = 0, limit = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text|json|dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };
    auto add_limit = [&](CLI::App* cmd) {
        cmd->add_option("--limit", limit, "raise the default resource bound");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list I_mu with ranks and 2-cycle counts");
    enumerate->add_option("--mu", mu_text)->required();
    add_format(enumerate);
    add_limit(enumerate);

    auto* poset = app.add_subcommand("poset", "export the weak order diagram");
    poset->add_option("--mu", mu_text)->required();
    add_format(poset);
    add_limit(poset);

    auto* wset = app.add_subcommand("wset", "W-set of a mu-involution");
    wset->add_option("--pi", pi_text)->required();
    wset->add_option("--mu", mu_text, "optional check against pi");
    add_format(wset);
    add_limit(wset);

    auto* dset = app.add_subcommand("dset", "the set D_n or its blockwise version D_mu");
    dset->add_option("--n", n);
    dset->add_option("--mu", mu_text);
    add_format(dset);
    add_limit(dset);

    auto* chains = app.add_subcommand("chains", "count maximal chains");
    chains->add_option("--mu", mu_text)->required();
    add_limit(chains);

    auto* verify = app.add_subcommand("verify", "relations, gradedness, doubles, main theorems");
    verify->add_option("--n", n, "all compositions of every m <= n");
    verify->add_option("--mu", mu_text, "a single composition");
    add_limit(verify);

    auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    schubert->add_option("--w", w_text)->required();
    add_format(schubert);

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction class of the top orbit");
    restrict_cmd->add_option("--mu", mu_text)->required();
    std::string mode = "blocks";
    restrict_cmd->add_option("--exponent-mode", mode, "blocks|half-n")
        ->check(CLI::IsMember({"blocks", "half-n"}));
    add_format(restrict_cmd);
    add_limit(restrict_cmd);

    auto* conjecture = app.add_subcommand("conjecture", "compare against the product formula");
    conjecture->add_option("--n", n)->required();
    add_limit(conjecture);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(parse_mu(mu_text), limit, format);
        if (poset->parsed()) return run_poset(parse_mu(mu_text), limit, format);
        if (wset->parsed()) return run_wset(pi_text, mu_text, limit, format);
        if (dset->parsed()) {
            if ((n > 0) == !mu_text.empty())
                throw std::invalid_argument("need exactly one of --n / --mu");
            return run_dset(n, mu_text, limit, format);
        }
        if (chains->parsed()) return run_chains(parse_mu(mu_text), limit);
        if (verify->parsed()) {
            if ((n > 0) == !mu_text.empty())
                throw std::invalid_argument("need exactly one of --n / --mu");
            return run_verify(n, mu_text, limit);
        }
        if (schubert->parsed()) {
            print_poly(quadrics::schubert(Permutation::parse(w_text)).poly, format);
            return 0;
        }
        if (restrict_cmd->parsed()) {
            Composition mu = parse_mu(mu_text);
            if (mu.n() > bound(limit, kPosetBound))
                throw quadrics::ResourceLimitError("raise --limit past " +
                                                   std::to_string(mu.n()));
            auto exps = mode == "blocks" ? ExponentMode::blockwise : ExponentMode::half_n;
            print_poly(quadrics::restriction_class(mu, exps), format);
            return 0;
        }
        if (conjecture->parsed()) return run_conjecture(n, limit);
    } catch (const quadrics::ResourceLimitError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
