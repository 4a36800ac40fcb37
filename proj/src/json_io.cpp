#include "greenwalk/json_io.hpp"

#include <sstream>

namespace gwjson {

Json int_to_json(const ratlin::Int& x)
{
    if (!x.fits_slong_p())
        throw std::domain_error("int_to_json: entry exceeds the JSON integer range");
    return Json(x.get_si());
}

Json intvec_to_json(const ratlin::IntVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

Json matrix_to_json(const ratlin::IntMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(intvec_to_json(m.row(i)));
    return rows;
}

Json ratvec_to_json(const ratlin::RatVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

ratlin::RatVec ratvec_from_json(const Json& j)
{
    ratlin::RatVec v;
    for (const auto& item : j) {
        if (item.is_string()) v.push_back(ratlin::Rational::parse(item.get<std::string>()));
        else if (item.is_number_integer()) v.push_back(ratlin::Rational(item.get<long>()));
        else throw std::invalid_argument("rational vector entries must be strings or integers");
    }
    return v;
}

Json ratvec_to_float_json(const ratlin::RatVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_double());
    return a;
}

Json quiver_to_json(const cluster::Quiver& q)
{
    Json j;
    j["n"] = q.n();
    Json arrows = Json::array();
    for (auto [a, b] : q.arrows()) arrows.push_back(Json::array({a, b}));
    j["arrows"] = arrows;
    return j;
}

cluster::Quiver quiver_from_json(const Json& j)
{
    if (!j.contains("n") || !j.contains("arrows"))
        throw std::invalid_argument("quiver JSON needs fields \"n\" and \"arrows\"");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument("quiver arrow must be a pair [i, j]");
        arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return cluster::Quiver(j["n"].get<int>(), std::move(arrows));
}

Json walk_to_json(const cluster::GreenWalk& w)
{
    Json j;
    j["quiver"] = quiver_to_json(w.quiver);
    j["steps"] = w.steps;
    Json states = Json::array();
    for (const auto& s : w.states) {
        Json st;
        st["b"] = matrix_to_json(s.b);
        st["c"] = matrix_to_json(s.c);
        states.push_back(st);
    }
    j["states"] = states;
    j["maximal"] = w.is_maximal();
    return j;
}

Json bricks_to_json(const cluster::BrickSeq& b)
{
    Json j;
    j["n"] = b.n;
    Json dims = Json::array();
    for (const auto& d : b.dims) dims.push_back(intvec_to_json(d));
    j["bricks"] = dims;
    return j;
}

cluster::BrickSeq bricks_from_json(const Json& j)
{
    if (!j.contains("n") || !j.contains("bricks"))
        throw std::invalid_argument("bricks JSON needs fields \"n\" and \"bricks\"");
    cluster::BrickSeq b{j["n"].get<int>(), {}};
    for (const auto& d : j["bricks"]) {
        ratlin::IntVec v;
        for (const auto& x : d) v.emplace_back(x.get<long>());
        if (static_cast<int>(v.size()) != b.n)
            throw std::invalid_argument("brick has wrong dimension");
        b.dims.push_back(std::move(v));
    }
    return b;
}

Json crossing_report_to_json(const charge::CrossingReport& r)
{
    Json j;
    j["bricks"] = bricks_to_json(r.bricks)["bricks"];
    j["beta"] = ratvec_to_json(r.beta_used);
    Json rows = Json::array();
    for (const auto& row : r.system.rows()) rows.push_back(intvec_to_json(row));
    j["rows"] = rows;
    j["verdict"] = r.feasible() ? "feasible" : "infeasible_for_given_beta";
    if (r.alpha) j["alpha"] = ratvec_to_json(*r.alpha);
    return j;
}

namespace {

Json interval_to_json(const repkit::ThinModule& m) { return Json::array({m.lo, m.hi}); }

Json class_to_json(const repkit::TorsionLattice& lat, repkit::ModSet mask)
{
    Json mods = Json::array();
    for (size_t x = 0; x < lat.ind.size(); ++x)
        if ((mask >> x) & 1) mods.push_back(interval_to_json(lat.ind[x]));
    return mods;
}

} // namespace

Json lattice_to_json(const repkit::TorsionLattice& lat)
{
    Json j;
    j["typeA"] = lat.q.str();
    j["n"] = lat.q.n();
    Json classes = Json::array();
    for (size_t i = 0; i < lat.classes.size(); ++i) {
        Json c;
        c["index"] = i;
        c["modules"] = class_to_json(lat, lat.classes[i]);
        classes.push_back(c);
    }
    j["classes"] = classes;
    Json edges = Json::array();
    for (const auto& [edge, label] : lat.labels) {
        Json e;
        e["from"] = edge.first;
        e["to"] = edge.second;
        e["label"] = interval_to_json(lat.ind[static_cast<size_t>(label)]);
        edges.push_back(e);
    }
    j["edges"] = edges;
    j["class_count"] = lat.classes.size();
    j["maximal_chain_count"] = maximal_chains(lat).size();
    return j;
}

std::string lattice_to_dot(const repkit::TorsionLattice& lat)
{
    std::ostringstream out;
    out << "digraph torsion_lattice {\n  rankdir=BT;\n";
    for (size_t i = 0; i < lat.classes.size(); ++i) {
        out << "  t" << i << " [label=\"{";
        bool first = true;
        for (size_t x = 0; x < lat.ind.size(); ++x)
            if ((lat.classes[i] >> x) & 1) {
                if (!first) out << ",";
                out << lat.ind[x].str();
                first = false;
            }
        out << "}\"];\n";
    }
    for (const auto& [edge, label] : lat.labels)
        out << "  t" << edge.first << " -> t" << edge.second << " [label=\""
            << lat.ind[static_cast<size_t>(label)].str() << "\"];\n";
    out << "}\n";
    return out.str();
}

Json cfho_report_to_json(const repkit::CfhoReport& r)
{
    Json j;
    j["ok"] = r.ok();
    j["bricks_ok"] = r.bricks_ok;
    j["forward_hom_orthogonal"] = r.forward_ok;
    j["insertion_maximal"] = r.maximal_ok;
    j["intermediate_perps_vanish"] = r.intermediate_ok;
    j["generates_category"] = r.generates_ok;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

Json hn_to_json(const repkit::HNFiltration& f)
{
    Json j;
    Json summands = Json::array();
    for (const auto& m : f.summands) summands.push_back(interval_to_json(m));
    j["summands"] = summands;
    Json steps = Json::array();
    for (size_t s = 0; s < f.phases.size(); ++s) {
        Json step;
        Json subs = Json::array();
        for (size_t i = 0; i < f.summands.size(); ++i) {
            Json parts = Json::array();
            for (const auto& c : repkit::components(f.step_masks[s][i]))
                parts.push_back(interval_to_json(c));
            subs.push_back(parts);
        }
        step["submodule"] = subs;
        Json factors = Json::array();
        for (const auto& c : f.factors[s]) factors.push_back(interval_to_json(c));
        step["factor"] = factors;
        charge::Phase p = f.phases[s];
        step["cot"] = (p.cot_num / p.cot_den).str();
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["length"] = f.phases.size();
    return j;
}

Json pairs_to_json(const repkit::TorsionLattice& lat,
                   const std::vector<repkit::TauTiltingPair>& pairs)
{
    Json arr = Json::array();
    for (size_t i = 0; i < pairs.size(); ++i) {
        Json p;
        p["class"] = i;
        p["torsion_class"] = class_to_json(lat, lat.classes[i]);
        Json mpart = Json::array();
        for (const auto& m : pairs[i].m_part) mpart.push_back(interval_to_json(m));
        p["m_part"] = mpart;
        p["p_part"] = pairs[i].p_vertices;
        p["g_matrix"] = matrix_to_json(pairs[i].g);
        p["c_matrix"] = matrix_to_json(pairs[i].c);
        arr.push_back(p);
    }
    return arr;
}

} // namespace gwjson
