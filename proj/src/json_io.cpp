#include "quadrics/json_io.hpp"

#include <stdexcept>

namespace quadrics {

json to_json(const MuInvolution& pi) {
    json j;
    j["mu"] = pi.mu().parts();
    j["word"] = pi.permutation().word();
    return j;
}

MuInvolution mu_involution_from_json(const json& j) {
    if (!j.contains("mu") || !j.contains("word"))
        throw std::invalid_argument("mu-involution json needs \"mu\" and \"word\"");
    Composition mu(j.at("mu").get<std::vector<int>>());
    Permutation p(j.at("word").get<std::vector<int>>());
    return MuInvolution(mu, p);
}

json to_json(const Polynomial& p) {
    json j = json::array();
    for (const auto& [exps, coef] : p.terms()) j.push_back({{"exps", exps}, {"coef", coef}});
    return j;
}

Polynomial polynomial_from_json(const json& j) {
    Polynomial p;
    for (const auto& jt : j)
        p += Polynomial::monomial(jt.at("exps").get<std::vector<int>>(),
                                  jt.at("coef").get<long long>());
    return p;
}

json to_json(const PosetDump& dump) {
    json j;
    j["mu"] = dump.mu;
    j["nodes"] = json::array();
    for (std::size_t id = 0; id < dump.nodes.size(); ++id) {
        const auto& node = dump.nodes[id];
        j["nodes"].push_back({{"id", id},
                              {"word", node.word},
                              {"rank", node.rank},
                              {"dcount", node.dcount}});
    }
    j["edges"] = json::array();
    for (const auto& e : dump.edges) {
        j["edges"].push_back(
            {{"src", e.src},
             {"dst", e.dst},
             {"label", e.label},
             {"mult", e.mult == Multiplicity::doubled ? "double" : "single"}});
    }
    return j;
}

PosetDump poset_dump_from_json(const json& j) {
    PosetDump dump{j.at("mu").get<std::vector<int>>(), {}, {}};
    dump.nodes.resize(j.at("nodes").size());
    for (const auto& jn : j.at("nodes")) {
        std::size_t id = jn.at("id").get<std::size_t>();
        if (id >= dump.nodes.size())
            throw std::invalid_argument("poset json: node id out of range");
        dump.nodes[id] = PosetNodeDump{jn.at("word").get<std::string>(),
                                       jn.at("rank").get<int>(),
                                       jn.at("dcount").get<int>()};
    }
    for (const auto& je : j.at("edges")) {
        std::string mult = je.at("mult").get<std::string>();
        if (mult != "single" && mult != "double")
            throw std::invalid_argument("poset json: bad edge multiplicity");
        dump.edges.push_back(CoverEdge{
            je.at("src").get<int>(), je.at("dst").get<int>(),
            je.at("label").get<int>(),
            mult == "double" ? Multiplicity::doubled : Multiplicity::single});
    }
    return dump;
}

}  // namespace quadrics
