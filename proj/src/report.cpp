#include "rectify/report.hpp"

#include <sstream>
#include <stdexcept>

namespace rectify {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render(const Json& j, const std::string& key, int depth, std::ostringstream& os) {
    const std::string indent(2 * depth, ' ');
    if (is_scalar(j)) {
        os << indent << key << ": " << scalar_text(j) << "\n";
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (!is_scalar(e)) scalars = false;
        if (scalars) {
            os << indent << key << ": [";
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar_text(j[i]);
            os << "]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            render(j[i], key + "[" + std::to_string(i) + "]", depth, os);
        return;
    }
    if (!key.empty()) os << indent << key << ":\n";
    for (const auto& [k, v] : j.items()) render(v, k, key.empty() ? depth : depth + 1, os);
}

Json int_list(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

bool elem_is_zero(const TowerElem& e) {
    if (e.level == 0) return e.scalar == 0;
    for (const auto& c : e.coeffs)
        if (!elem_is_zero(c)) return false;
    return true;
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream os;
    render(doc, "", 0, os);
    return os.str();
}

Json elem_to_json(const TowerElem& e) {
    if (e.level == 0) return e.scalar.get_str();
    Json a = Json::array();
    for (const auto& c : e.coeffs) a.push_back(elem_to_json(c));
    return a;
}

TowerElem elem_from_json(const Json& j, int level) {
    TowerElem e;
    e.level = level;
    if (level == 0) {
        if (!j.is_string()) throw std::invalid_argument("elem_from_json: rational must be a string");
        e.scalar = Rat(j.get<std::string>());
        e.scalar.canonicalize();
        return e;
    }
    if (!j.is_array()) throw std::invalid_argument("elem_from_json: expected coefficient array");
    for (const auto& c : j) e.coeffs.push_back(elem_from_json(c, level - 1));
    while (!e.coeffs.empty() && elem_is_zero(e.coeffs.back())) e.coeffs.pop_back();
    return e;
}

Json tower_to_json(const Tower& tw) {
    Json t;
    t["prime"] = tw.prime().get_str();
    t["degree"] = tw.degree().get_str();
    Json gens = Json::array();
    for (int i = 1; i <= tw.levels(); ++i) {
        Json g;
        g["generator"] = "a" + std::to_string(i);
        Json mp = Json::array();
        for (const auto& c : tw.minpoly(i)) mp.push_back(elem_to_json(c));
        g["minpoly"] = std::move(mp);
        g["anchor"] = tw.anchor(i).get_str();
        gens.push_back(std::move(g));
    }
    t["generators"] = std::move(gens);
    return t;
}

Tower tower_from_json(const Json& j) {
    Tower tw((Int(j.at("prime").get<std::string>())));
    int level = 0;
    for (const auto& g : j.at("generators")) {
        std::vector<TowerElem> mp;
        for (const auto& c : g.at("minpoly")) mp.push_back(elem_from_json(c, level));
        tw.adjoin(std::move(mp), Int(g.at("anchor").get<std::string>()));
        ++level;
    }
    return tw;
}

Json rectified_to_json(const std::vector<Int>& A, const Int& p, const Int& k, const Int& t,
                       const RectifiedSet& rs) {
    Json d;
    d["command"] = "rectify";
    Json in;
    in["p"] = p.get_str();
    in["k"] = k.get_str();
    in["t"] = (t > 0 ? t : k).get_str();
    in["set"] = int_list(A);
    d["input"] = std::move(in);

    Json flags;
    flags["verified"] = rs.verified;
    flags["guaranteed"] = rs.guaranteed;
    flags["exact_bound_held"] = rs.gate.exact_ok;
    flags["forced_drop"] = rs.chain.forced_drop;
    d["flags"] = std::move(flags);

    d["tower"] = tower_to_json(rs.tower);
    Json pts = Json::array(), ptstr = Json::array();
    for (const auto& b : rs.points) {
        pts.push_back(elem_to_json(b));
        ptstr.push_back(tower_elem_to_string(b));
    }
    d["points"] = std::move(pts);
    d["points_pretty"] = std::move(ptstr);
    d["anchors"] = int_list(rs.chain.anchors);

    Json ledger;
    ledger["u"] = int_list(rs.chain.ledger.u);
    ledger["v"] = int_list(rs.chain.ledger.v);
    d["ledger"] = std::move(ledger);

    Json levels = Json::array();
    for (std::size_t i = 0; i < rs.chain.levels.size(); ++i) {
        const auto& lv = rs.chain.levels[i];
        Json l;
        l["level"] = static_cast<long>(i);
        l["members"] = static_cast<long>(lv.L.size());
        l["aggregated"] = static_cast<long>(lv.A_mod.size());
        l["pivot"] = lv.pivot;
        l["delta"] = lv.delta;
        l["y_count"] = lv.y_count;
        levels.push_back(std::move(l));
    }
    Json chain;
    chain["r"] = rs.chain.r;
    chain["levels"] = std::move(levels);
    d["chain"] = std::move(chain);

    d["relations_checked"] = rs.relations_checked.get_str();
    d["verify_message"] = rs.verify_message;
    return d;
}

ParsedResult result_from_json(const Json& j) {
    ParsedResult r{{}, 0, 0, 0, Tower(Int(j.at("input").at("p").get<std::string>())), {}};
    const Json& in = j.at("input");
    r.p = Int(in.at("p").get<std::string>());
    r.k = Int(in.at("k").get<std::string>());
    r.t = Int(in.at("t").get<std::string>());
    for (const auto& x : in.at("set")) r.A.emplace_back(x.get<std::string>());
    r.tower = tower_from_json(j.at("tower"));
    for (const auto& b : j.at("points")) r.points.push_back(elem_from_json(b, r.tower.levels()));
    return r;
}

Json chain_to_json(const Chain& c) {
    Json d;
    d["command"] = "chain";
    Json prof;
    prof["k"] = c.profile.k.get_str();
    prof["t"] = c.profile.t.get_str();
    d["profile"] = std::move(prof);
    d["target"] = c.value().get_str();
    d["step_count"] = c.step_count();
    Json steps = Json::array();
    for (const auto& st : c.steps) {
        Json s;
        s["value"] = st.value.get_str();
        s["f"] = st.f.to_string();
        s["vars"] = st.f.nvars();
        steps.push_back(std::move(s));
    }
    d["steps"] = std::move(steps);
    return d;
}

Chain chain_from_json(const Json& j) {
    Chain c;
    c.profile.k = Int(j.at("profile").at("k").get<std::string>());
    c.profile.t = Int(j.at("profile").at("t").get<std::string>());
    for (const auto& s : j.at("steps")) {
        Int v(s.at("value").get<std::string>());
        IntPoly f = IntPoly::parse(s.at("f").get<std::string>(), s.at("vars").get<int>());
        c.steps.push_back({std::move(v), std::move(f)});
    }
    if (c.steps.empty()) throw std::invalid_argument("chain_from_json: empty chain");
    return c;
}

Json transfer_to_json(const std::vector<Int>& A, const Int& p, const TransferReport& rep) {
    Json d;
    d["command"] = "demo";
    const char* names[] = {"sumproduct", "incidence", "inverse", "polynomial-image"};
    d["mode"] = names[static_cast<int>(rep.mode)];
    Json in;
    in["p"] = p.get_str();
    in["k"] = rep.k.get_str();
    in["set"] = int_list(A);
    d["input"] = std::move(in);
    d["tower_degree"] = rep.result.tower.degree().get_str();
    d["verified"] = rep.result.verified;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["name"] = e.name;
        je["count_mod_p"] = e.fp_count;
        je["count_tower"] = e.tower_count;
        entries.push_back(std::move(je));
    }
    d["entries"] = std::move(entries);
    d["all_equal"] = rep.all_equal;
    return d;
}

}  // namespace rectify
