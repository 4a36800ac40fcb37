/*
 * Python bindings for the main operations.  Structured results cross the
 * boundary as JSON strings (the same documents the CLI emits); the
 * greenwalk python package parses them into dicts.
 */

#include "greenwalk/json_io.hpp"
#include "greenwalk/rotation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using gwjson::Json;

cluster::Quiver quiver_of(int n, const std::vector<std::pair<int, int>>& arrows)
{
    return cluster::Quiver(n, arrows);
}

cluster::BrickSeq bricks_of(int n, const std::vector<std::vector<long>>& dims)
{
    cluster::BrickSeq seq{n, {}};
    for (const auto& d : dims) {
        ratlin::IntVec v;
        for (long x : d) v.emplace_back(x);
        seq.dims.push_back(std::move(v));
    }
    return seq;
}

ratlin::RatVec ratvec_of(const std::vector<std::string>& entries)
{
    ratlin::RatVec v;
    for (const auto& s : entries) v.push_back(ratlin::Rational::parse(s));
    return v;
}

cluster::RotationVariant variant_of(const std::string& name)
{
    if (name == "reflection") return cluster::RotationVariant::Reflection;
    if (name == "projection") return cluster::RotationVariant::Projection;
    throw std::invalid_argument("variant must be 'reflection' or 'projection'");
}

std::string run_walk_json(int n, const std::vector<std::pair<int, int>>& arrows,
                          const std::vector<int>& seq)
{
    cluster::GreenWalk w = cluster::run_walk(quiver_of(n, arrows), seq);
    Json j = gwjson::walk_to_json(w);
    j["bricks"] = gwjson::bricks_to_json(cluster::bricks_of_walk(w))["bricks"];
    return j.dump();
}

std::string enumerate_json(int n, const std::vector<std::pair<int, int>>& arrows, size_t max_len,
                           size_t limit)
{
    auto result = cluster::enumerate_mgs(quiver_of(n, arrows), max_len, limit);
    Json j;
    j["count"] = result.walks.size();
    j["truncated"] = result.truncated;
    j["budget_hits"] = result.budget_hits;
    Json walks = Json::array();
    for (const auto& w : result.walks) {
        Json wj;
        wj["steps"] = w.steps;
        wj["final_c"] = gwjson::matrix_to_json(w.states.back().c);
        walks.push_back(wj);
    }
    j["walks"] = walks;
    return j.dump();
}

std::string solve_crossing_json(int n, const std::vector<std::vector<long>>& bricks,
                                const std::vector<std::string>& beta)
{
    auto report = charge::solve_crossing(bricks_of(n, bricks), ratvec_of(beta));
    return gwjson::crossing_report_to_json(report).dump();
}

bool verify_charge_order_py(int n, const std::vector<std::vector<long>>& bricks,
                            const std::vector<std::string>& alpha,
                            const std::vector<std::string>& beta)
{
    return charge::verify_charge_order(ratvec_of(alpha), ratvec_of(beta), bricks_of(n, bricks));
}

std::string rotate_cfho_json(int n, const std::vector<std::pair<int, int>>& arrows,
                             const std::vector<std::vector<long>>& bricks, int k,
                             const std::string& variant)
{
    cluster::Quiver q = quiver_of(n, arrows);
    cluster::BrickSeq rotated = cluster::rotate_cfho(bricks_of(n, bricks), k, q,
                                                     variant_of(variant));
    Json j = gwjson::bricks_to_json(rotated);
    j["mutated_quiver"] = gwjson::quiver_to_json(cluster::mutate_quiver(q, k));
    return j.dump();
}

std::string strict_feasible_json(int n, const std::vector<std::vector<long>>& rows)
{
    ratlin::StrictSystem sys(n);
    for (const auto& r : rows) {
        ratlin::IntVec v;
        for (long x : r) v.emplace_back(x);
        sys.add_row(std::move(v));
    }
    auto result = ratlin::strict_feasible(sys);
    Json j;
    j["feasible"] = result.feasible();
    if (result.feasible()) j["witness"] = gwjson::ratvec_to_json(*result.witness);
    return j.dump();
}

std::string torsion_lattice_json(const std::string& type_a)
{
    return gwjson::lattice_to_json(repkit::torsion_lattice(repkit::TypeAQuiver::parse(type_a)))
        .dump();
}

std::string oracle_chains_json(const std::string& type_a)
{
    repkit::TorsionLattice lat = repkit::torsion_lattice(repkit::TypeAQuiver::parse(type_a));
    Json j = Json::array();
    for (const auto& chain : repkit::maximal_chains(lat)) {
        Json cj;
        cj["classes"] = chain;
        Json mods = Json::array();
        for (const auto& m : repkit::cfho_from_chain(lat, chain))
            mods.push_back(Json::array({m.lo, m.hi}));
        cj["cfho"] = mods;
        j.push_back(cj);
    }
    return j.dump();
}

std::string verify_cfho_json(const std::string& type_a,
                             const std::vector<std::pair<int, int>>& intervals)
{
    repkit::TorsionLattice lat = repkit::torsion_lattice(repkit::TypeAQuiver::parse(type_a));
    std::vector<repkit::ThinModule> mods;
    for (auto [lo, hi] : intervals) mods.push_back(repkit::ThinModule{lo, hi});
    return gwjson::cfho_report_to_json(repkit::verify_cfho(lat, mods)).dump();
}

std::string hn_json(const std::string& type_a, const std::vector<std::pair<int, int>>& summands,
                    const std::vector<std::string>& alpha, const std::vector<std::string>& beta)
{
    repkit::TypeAQuiver q = repkit::TypeAQuiver::parse(type_a);
    std::vector<repkit::ThinModule> mods;
    for (auto [lo, hi] : summands) mods.push_back(repkit::ThinModule{lo, hi});
    charge::CentralCharge z(ratvec_of(alpha), ratvec_of(beta));
    return gwjson::hn_to_json(repkit::hn_filtration(q, mods, z)).dump();
}

std::string verify_induction_json(const std::string& type_a,
                                  const std::vector<std::vector<long>>& chain_bricks,
                                  const std::vector<std::string>& alpha,
                                  const std::vector<std::string>& beta)
{
    repkit::TorsionLattice lat = repkit::torsion_lattice(repkit::TypeAQuiver::parse(type_a));
    std::vector<repkit::ThinModule> mods;
    for (const auto& d : chain_bricks) {
        ratlin::IntVec v;
        for (long x : d) v.emplace_back(x);
        auto m = repkit::interval_of_dim(lat.q, v);
        if (!m) throw std::invalid_argument("chain brick is not an interval dimension vector");
        mods.push_back(*m);
    }
    auto chain = repkit::mgs_from_cfho(lat, mods);
    charge::CentralCharge z(ratvec_of(alpha), ratvec_of(beta));
    auto rep = repkit::verify_induction(lat, chain, z);
    Json j;
    j["holds"] = rep.ok;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j.dump();
}

std::string cmatrices_json(const std::string& type_a)
{
    repkit::TorsionLattice lat = repkit::torsion_lattice(repkit::TypeAQuiver::parse(type_a));
    return gwjson::pairs_to_json(lat, repkit::tau_tilting_pairs(lat)).dump();
}

} // namespace

PYBIND11_MODULE(_greenwalk, m)
{
    m.doc() = "exact maximal green sequence computations (JSON-string results)";

    m.def("run_walk", &run_walk_json, py::arg("n"), py::arg("arrows"), py::arg("seq"));
    m.def("enumerate_mgs", &enumerate_json, py::arg("n"), py::arg("arrows"),
          py::arg("max_len") = 24, py::arg("limit") = 1000);
    m.def("solve_crossing", &solve_crossing_json, py::arg("n"), py::arg("bricks"),
          py::arg("beta"));
    m.def("verify_charge_order", &verify_charge_order_py, py::arg("n"), py::arg("bricks"),
          py::arg("alpha"), py::arg("beta"));
    m.def("rotate_cfho", &rotate_cfho_json, py::arg("n"), py::arg("arrows"), py::arg("bricks"),
          py::arg("k"), py::arg("variant") = "reflection");
    m.def("strict_feasible", &strict_feasible_json, py::arg("n"), py::arg("rows"));
    m.def("torsion_lattice", &torsion_lattice_json, py::arg("type_a"));
    m.def("oracle_chains", &oracle_chains_json, py::arg("type_a"));
    m.def("verify_cfho", &verify_cfho_json, py::arg("type_a"), py::arg("intervals"));
    m.def("hn_filtration", &hn_json, py::arg("type_a"), py::arg("summands"), py::arg("alpha"),
          py::arg("beta"));
    m.def("verify_induction", &verify_induction_json, py::arg("type_a"), py::arg("chain_bricks"),
          py::arg("alpha"), py::arg("beta"));
    m.def("cmatrices", &cmatrices_json, py::arg("type_a"));
}
