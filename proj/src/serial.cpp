#include "fitring/serial.hpp"

namespace fitring {

namespace {

json coeff_to_json(const CoeffElem& x) {
    json a = json::array();
    for (auto c : x.coords()) a.push_back(c);
    return a;
}

CoeffElem coeff_from_json(const Cfg& cfg, const json& j) {
    std::vector<std::uint64_t> c;
    for (const auto& v : j) c.push_back(v.get<std::uint64_t>());
    return CoeffElem(cfg, std::move(c));
}

json elem_to_json(const GroupRingElem& g) {
    json a = json::array();
    for (const auto& x : g.coords()) a.push_back(coeff_to_json(x));
    return a;
}

GroupRingElem elem_from_json(const Cfg& cfg, const json& j) {
    std::vector<CoeffElem> c;
    for (const auto& v : j) c.push_back(coeff_from_json(cfg, v));
    return GroupRingElem::from_coords(cfg, std::move(c));
}

} // namespace

json presentation_to_json(const Presentation& P) {
    json j;
    j["p"] = P.cfg->p;
    j["d"] = P.cfg->d;
    j["Nprec"] = P.cfg->nprec;
    j["h"] = P.cfg->h;
    j["t"] = P.t;
    j["e"] = P.kill_exp;
    json rel = json::array();
    for (const auto& col : P.cols) {
        json c = json::array();
        for (const auto& g : col) c.push_back(elem_to_json(g));
        rel.push_back(c);
    }
    j["relations"] = rel;
    return j;
}

Presentation presentation_from_json(const json& j) {
    std::vector<std::uint64_t> h;
    if (j.contains("h")) h = j["h"].get<std::vector<std::uint64_t>>();
    Cfg cfg = RingConfig::make(j.at("p").get<std::uint64_t>(), j.at("d").get<unsigned>(),
                               j.at("Nprec").get<unsigned>(), std::move(h));
    unsigned t = j.at("t").get<unsigned>();
    unsigned e = j.at("e").get<unsigned>();
    std::vector<std::vector<GroupRingElem>> cols;
    for (const auto& c : j.at("relations")) {
        std::vector<GroupRingElem> col;
        for (const auto& g : c) col.push_back(elem_from_json(cfg, g));
        cols.push_back(std::move(col));
    }
    return make_presentation(cfg, t, std::move(cols), e);
}

json report_to_json(const ModuleReport& r) {
    json j;
    j["t"] = r.t;
    j["s"] = r.s;
    j["card_log_p"] = r.card_log_p;
    j["fit_quot_log_p"] = r.fit_quot_log_p;
    j["principal"] = r.principal;
    j["dim_K_mod_mK"] = r.dim_k_mod_mk;
    j["tilde_card_log_p"] = r.tilde_card_log_p;
    j["hk_log_p"] = r.hk_log_p;
    j["equality"] = r.equality();
    json f;
    for (const auto& [k, v] : r.flags) f[k] = v;
    j["flags"] = f;
    return j;
}

ModuleReport report_from_json(const json& j) {
    ModuleReport r;
    r.t = j.at("t").get<unsigned>();
    r.s = j.at("s").get<std::size_t>();
    r.card_log_p = j.at("card_log_p").get<unsigned>();
    r.fit_quot_log_p = j.at("fit_quot_log_p").get<unsigned>();
    r.principal = j.at("principal").get<bool>();
    r.dim_k_mod_mk = j.at("dim_K_mod_mK").get<unsigned>();
    r.tilde_card_log_p = j.at("tilde_card_log_p").get<unsigned>();
    r.hk_log_p = j.at("hk_log_p").get<unsigned>();
    if (j.contains("flags"))
        for (const auto& [k, v] : j.at("flags").items()) r.flags[k] = v.get<bool>();
    return r;
}

json value_set_to_json(const std::vector<GroupRingElem>& vs) {
    json a = json::array();
    for (const auto& g : vs) a.push_back(elem_to_json(g));
    return a;
}

std::vector<GroupRingElem> value_set_from_json(const Cfg& cfg, const json& j) {
    std::vector<GroupRingElem> out;
    for (const auto& g : j) out.push_back(elem_from_json(cfg, g));
    return out;
}

} // namespace fitring
