/*
 * greenwalk: exact computations with maximal green sequences.
 *
 * Subcommands: walk, enumerate, bricks, check-crossing, charge-verify,
 * rotate, and the oracle family (torsion-lattice, enumerate-mgs,
 * verify-cfho, hn, verify-induction, cmatrices).  All structured output
 * is JSON on stdout (or --out); rationals print exactly as "p/q".
 *
 * Exit codes:
 *   0  success / feasible / verification passed
 *   1  parse or input error
 *   2  non-green mutation step
 *   3  infeasible for the given beta / negative verification verdict
 *   4  budget or oracle bound exceeded
 *   5  rotation precondition failed
 */

#include "greenwalk/json_io.hpp"
#include "greenwalk/rotation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using gwjson::Json;
using ratlin::Rational;
using ratlin::RatVec;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNonGreen = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;
constexpr int kExitRotation = 5;
constexpr int kExitInternal = 70;

struct Output {
    std::string path; // empty = stdout
    bool float_approx = false;

    void write(Json j) const
    {
        std::string text = j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            if (!f) throw std::invalid_argument("cannot open output file " + path);
            f << text;
        }
    }
};

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            throw std::invalid_argument("cannot parse integer list entry '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

RatVec parse_rat_vec(const std::string& s)
{
    RatVec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw std::invalid_argument("empty rational vector");
    return out;
}

// "0,1,0,0;1,0,0,0" -> brick dimension vectors
cluster::BrickSeq parse_brick_list(const std::string& s, int n)
{
    cluster::BrickSeq bricks{n, {}};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        ratlin::IntVec v;
        std::stringstream es(item);
        std::string entry;
        while (std::getline(es, entry, ',')) {
            try {
                v.emplace_back(std::stol(entry));
            } catch (...) {
                throw std::invalid_argument("cannot parse brick entry '" + entry + "'");
            }
        }
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("brick has wrong dimension");
        bricks.dims.push_back(std::move(v));
    }
    if (bricks.dims.empty()) throw std::invalid_argument("empty brick list");
    return bricks;
}

// "1..3" or "1..2+3..3" -> interval summands
std::vector<repkit::ThinModule> parse_summands(const std::string& s)
{
    std::vector<repkit::ThinModule> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '+')) {
        auto dots = item.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("interval must look like a..b");
        try {
            out.push_back(
                repkit::ThinModule{std::stoi(item.substr(0, dots)), std::stoi(item.substr(dots + 2))});
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cannot parse interval '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty module");
    return out;
}

Json read_json_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

cluster::Quiver load_quiver(const std::string& quiver_path, const std::string& type_a)
{
    if (!quiver_path.empty()) return gwjson::quiver_from_json(read_json_file(quiver_path));
    if (!type_a.empty()) return repkit::TypeAQuiver::parse(type_a).as_quiver();
    throw std::invalid_argument("need --quiver FILE or --typeA SPEC");
}

cluster::BrickSeq load_bricks(const std::string& bricks_path, const std::string& quiver_path,
                              const std::string& type_a, const std::string& seq)
{
    if (!bricks_path.empty()) return gwjson::bricks_from_json(read_json_file(bricks_path));
    if (!seq.empty()) {
        cluster::Quiver q = load_quiver(quiver_path, type_a);
        return cluster::bricks_of_walk(cluster::run_walk(q, parse_int_list(seq)));
    }
    throw std::invalid_argument("need --bricks FILE or --quiver/--typeA with --seq");
}

// dispatcher state shared by all subcommands
struct Cli {
    Output out;
    int exit_code = kExitOk;
};

void add_walk(CLI::App& app, Cli& cli)
{
    auto* cmd = app.add_subcommand("walk", "run a green mutation walk and print every state");
    cmd->fallthrough();
    auto quiver = std::make_shared<std::string>();
    auto type_a = std::make_shared<std::string>();
    auto seq = std::make_shared<std::string>();
    cmd->add_option("--quiver", *quiver, "quiver JSON file");
    cmd->add_option("--typeA", *type_a, "type-A spec, e.g. 1>2,2>3 or a4");
    cmd->add_option("--seq", *seq, "mutation sequence, e.g. 2,1,4,3,1,2")->required();
    cmd->callback([&cli, quiver, type_a, seq] {
        cluster::Quiver q = load_quiver(*quiver, *type_a);
        cluster::GreenWalk w = cluster::run_walk(q, parse_int_list(*seq));
        Json j = gwjson::walk_to_json(w);
        j["bricks"] = gwjson::bricks_to_json(cluster::bricks_of_walk(w))["bricks"];
        cli.out.write(j);
    });
}

void add_bricks(CLI::App& app, Cli& cli)
{
    auto* cmd = app.add_subcommand("bricks", "brick dimension vectors of a green walk");
    cmd->fallthrough();
    auto quiver = std::make_shared<std::string>();
    auto type_a = std::make_shared<std::string>();
    auto seq = std::make_shared<std::string>();
    cmd->add_option("--quiver", *quiver, "quiver JSON file");
    cmd->add_option("--typeA", *type_a, "type-A spec");
    cmd->add_option("--seq", *seq, "mutation sequence")->required();
    cmd->callback([&cli, quiver, type_a, seq] {
        cluster::Quiver q = load_quiver(*quiver, *type_a);
        cluster::GreenWalk w = cluster::run_walk(q, parse_int_list(*seq));
        cli.out.write(gwjson::bricks_to_json(cluster::bricks_of_walk(w)));
    });
}

void add_enumerate(CLI::App& app, Cli& cli)
{
    auto* cmd = app.add_subcommand("enumerate", "enumerate maximal green walks (DFS)");
    cmd->fallthrough();
    auto quiver = std::make_shared<std::string>();
    auto type_a = std::make_shared<std::string>();
    auto max_len = std::make_shared<size_t>(24);
    auto limit = std::make_shared<size_t>(1000);
    cmd->add_option("--quiver", *quiver, "quiver JSON file");
    cmd->add_option("--typeA", *type_a, "type-A spec");
    cmd->add_option("--max-len", *max_len, "walk length budget")->check(CLI::PositiveNumber);
    cmd->add_option("--limit", *limit, "walk count budget")->check(CLI::PositiveNumber);
    cmd->callback([&cli, quiver, type_a, max_len, limit] {
        cluster::Quiver q = load_quiver(*quiver, *type_a);
        auto result = cluster::enumerate_mgs(q, *max_len, *limit);
        Json j;
        j["count"] = result.walks.size();
        j["truncated"] = result.truncated;
        Json hits = Json::array();
        for (const auto& h : result.budget_hits) hits.push_back(h);
        j["budget_hits"] = hits;
        Json walks = Json::array();
        for (const auto& w : result.walks) {
            Json wj;
            wj["steps"] = w.steps;
            wj["final_c"] = gwjson::matrix_to_json(w.states.back().c);
            walks.push_back(wj);
        }
        j["walks"] = walks;
        cli.out.write(j);
        if (result.truncated || !result.budget_hits.empty()) cli.exit_code = kExitBudget;
    });
}

void add_check_crossing(CLI::App& app, Cli& cli)
{
    auto* cmd = app.add_subcommand("check-crossing",
                                   "decide the crossing inequalities for a brick sequence");
    cmd->fallthrough();
    auto bricks_path = std::make_shared<std::string>();
    auto quiver = std::make_shared<std::string>();
    auto type_a = std::make_shared<std::string>();
    auto seq = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    auto sweep = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    cmd->add_option("--bricks", *bricks_path, "bricks JSON file");
    cmd->add_option("--quiver", *quiver, "quiver JSON file (with --seq)");
    cmd->add_option("--typeA", *type_a, "type-A spec (with --seq)");
    cmd->add_option("--seq", *seq, "green walk to read bricks from");
    cmd->add_option("--beta", *beta, "positive rational vector (default all ones)");
    cmd->add_option("--beta-sweep", *sweep, "semicolon-separated list of betas to try in order");
    cmd->add_option("--alpha", *alpha, "also verify this alpha against the bricks");
    cmd->callback([&cli, bricks_path, quiver, type_a, seq, beta, sweep, alpha] {
        cluster::BrickSeq bricks = load_bricks(*bricks_path, *quiver, *type_a, *seq);
        charge::CrossingReport report
            = [&] {
                  if (!sweep->empty()) {
                      std::vector<RatVec> betas;
                      std::stringstream ss(*sweep);
                      std::string item;
                      while (std::getline(ss, item, ';')) betas.push_back(parse_rat_vec(item));
                      return charge::solve_crossing_sweep(bricks, betas);
                  }
                  RatVec b = beta->empty()
                                 ? RatVec(static_cast<size_t>(bricks.n), Rational(1))
                                 : parse_rat_vec(*beta);
                  return charge::solve_crossing(bricks, b);
              }();
        Json j = gwjson::crossing_report_to_json(report);
        if (!alpha->empty()) {
            RatVec a = parse_rat_vec(*alpha);
            j["alpha_supplied"] = gwjson::ratvec_to_json(a);
            j["alpha_supplied_verified"]
                = charge::verify_charge_order(a, report.beta_used, bricks);
        }
        if (cli.out.float_approx) {
            Json approx;
            approx["beta"] = gwjson::ratvec_to_float_json(report.beta_used);
            if (report.alpha) approx["alpha"] = gwjson::ratvec_to_float_json(*report.alpha);
            approx["note"] = "decimal rendering only; the exact strings are authoritative";
            j["approx"] = approx;
        }
        cli.out.write(j);
        if (!report.feasible()) cli.exit_code = kExitInfeasible;
    });
}

void add_charge_verify(CLI::App& app, Cli& cli)
{
    auto* cmd = app.add_subcommand(
        "charge-verify", "check that a charge orders a brick sequence with decreasing phases");
    cmd->fallthrough();
    auto bricks_path = std::make_shared<std::string>();
    auto quiver = std::make_shared<std::string>();
    auto type_a = std::make_shared<std::string>();
    auto seq = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    cmd->add_option("--bricks", *bricks_path, "bricks JSON file");
    cmd->add_option("--quiver", *quiver, "quiver JSON file (with --seq)");
    cmd->add_option("--typeA", *type_a, "type-A spec (with --seq)");
    cmd->add_option("--seq", *seq, "green walk to read bricks from");
    cmd->add_option("--alpha", *alpha, "rational vector")->required();
    cmd->add_option("--beta", *beta, "positive rational vector")->required();
    cmd->callback([&cli, bricks_path, quiver, type_a, seq, alpha, beta] {
        cluster::BrickSeq bricks = load_bricks(*bricks_path, *quiver, *type_a, *seq);
        RatVec a = parse_rat_vec(*alpha), b = parse_rat_vec(*beta);
        bool ordered = charge::verify_charge_order(a, b, bricks);
        Json j;
        j["ordered"] = ordered;
        Json cots = Json::array();
        charge::CentralCharge z(a, b);
        for (const auto& d : bricks.dims) cots.push_back(charge::eval_charge(z, d).cot().str());
        j["cots"] = cots;
        if (cli.out.float_approx) {
            Json approx = Json::array();
            for (const auto& d : bricks.dims)
                approx.push_back(charge::eval_charge(z, d).cot().to_double());
            j["approx"] = Json{{"cots", approx}};
        }
        cli.out.write(j);
        if (!ordered) cli.exit_code = kExitInfeasible;
    });
}

void add_rotate(CLI::App& app, Cli& cli)
{
    auto* cmd = app.add_subcommand(
        "rotate", "transport a brick sequence (and optionally a charge) across a mutation");
    cmd->fallthrough();
    auto bricks_path = std::make_shared<std::string>();
    auto quiver = std::make_shared<std::string>();
    auto type_a = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto variant = std::make_shared<std::string>("reflection");
    auto alpha = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    cmd->add_option("--bricks", *bricks_path, "bricks JSON file")->required();
    cmd->add_option("--quiver", *quiver, "quiver JSON file");
    cmd->add_option("--typeA", *type_a, "type-A spec");
    cmd->add_option("--k", *k, "mutation vertex; first brick must be its simple")->required();
    cmd->add_option("--variant", *variant, "reflection (default) or projection");
    cmd->add_option("--alpha", *alpha, "rational vector to transport");
    cmd->add_option("--beta", *beta, "rational vector to transport (B_k beta must be positive)");
    cmd->callback([&cli, bricks_path, quiver, type_a, k, variant, alpha, beta] {
        cluster::Quiver q = load_quiver(*quiver, *type_a);
        cluster::BrickSeq bricks = gwjson::bricks_from_json(read_json_file(*bricks_path));
        cluster::RotationVariant var;
        if (*variant == "reflection") var = cluster::RotationVariant::Reflection;
        else if (*variant == "projection") var = cluster::RotationVariant::Projection;
        else throw std::invalid_argument("variant must be reflection or projection");

        cluster::BrickSeq rotated = cluster::rotate_cfho(bricks, *k, q, var);
        cluster::Quiver mutated = cluster::mutate_quiver(q, *k);
        Json j;
        j["variant"] = *variant;
        j["bricks"] = gwjson::bricks_to_json(rotated)["bricks"];
        j["mutated_quiver"] = gwjson::quiver_to_json(mutated);

        // re-verify through the oracle whenever the mutated quiver is an
        // acyclic type-A path inside the configured bound
        auto type_a_mutated = repkit::TypeAQuiver::from_quiver(mutated);
        if (type_a_mutated && mutated.n() <= repkit::configured_max_n()) {
            repkit::TorsionLattice lat = repkit::torsion_lattice(*type_a_mutated);
            std::vector<repkit::ThinModule> mods;
            bool intervals_ok = true;
            for (const auto& d : rotated.dims) {
                auto m = repkit::interval_of_dim(*type_a_mutated, d);
                if (!m) { intervals_ok = false; break; }
                mods.push_back(*m);
            }
            if (intervals_ok) {
                j["oracle"] = gwjson::cfho_report_to_json(repkit::verify_cfho(lat, mods));
            } else {
                j["oracle"] = Json{{"ok", false},
                                   {"detail", "a transported brick is not an interval module"}};
            }
        } else {
            j["oracle"] = nullptr;
        }

        if (!alpha->empty() || !beta->empty()) {
            if (alpha->empty() || beta->empty())
                throw std::invalid_argument("--alpha and --beta go together");
            charge::CentralCharge z
                = cluster::rotate_charge(parse_rat_vec(*alpha), parse_rat_vec(*beta), *k, q, var);
            Json cz;
            cz["alpha"] = gwjson::ratvec_to_json(z.alpha);
            cz["beta"] = gwjson::ratvec_to_json(z.beta);
            cz["orders_rotated_bricks"] = charge::verify_charge_order(z.alpha, z.beta, rotated);
            j["charge"] = cz;
        }
        cli.out.write(j);
    });
}

void add_oracle(CLI::App& app, Cli& cli)
{
    auto* oracle = app.add_subcommand("oracle", "brute-force type-A module category checks");
    oracle->fallthrough();
    oracle->require_subcommand(1);

    auto type_a = std::make_shared<std::string>();
    oracle->add_option("--typeA", *type_a, "type-A spec, e.g. 1>2,2>3 or a3")->required();

    auto lattice_for = [type_a] { return repkit::torsion_lattice(repkit::TypeAQuiver::parse(*type_a)); };

    auto oracle_sub = [&oracle](const std::string& name, const std::string& desc) {
        auto* sub = oracle->add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    {
        auto* cmd = oracle_sub("torsion-lattice",
                                           "classes, labelled Hasse edges, chain count");
        auto dot = std::make_shared<std::string>();
        cmd->add_option("--dot", *dot, "also write the Hasse diagram as DOT");
        cmd->callback([&cli, lattice_for, dot] {
            repkit::TorsionLattice lat = lattice_for();
            if (!dot->empty()) {
                std::ofstream f(*dot);
                if (!f) throw std::invalid_argument("cannot open " + *dot);
                f << gwjson::lattice_to_dot(lat);
            }
            cli.out.write(gwjson::lattice_to_json(lat));
        });
    }
    {
        auto* cmd = oracle_sub("enumerate-mgs",
                                           "maximal chains and their brick sequences");
        cmd->callback([&cli, lattice_for] {
            repkit::TorsionLattice lat = lattice_for();
            auto chains = repkit::maximal_chains(lat);
            Json j;
            j["count"] = chains.size();
            Json arr = Json::array();
            for (const auto& chain : chains) {
                Json cj;
                cj["classes"] = chain;
                Json mods = Json::array();
                for (const auto& m : repkit::cfho_from_chain(lat, chain))
                    mods.push_back(Json::array({m.lo, m.hi}));
                cj["cfho"] = mods;
                arr.push_back(cj);
            }
            j["chains"] = arr;
            cli.out.write(j);
        });
    }
    {
        auto* cmd = oracle_sub("verify-cfho", "check the CFHO conditions");
        auto bricks = std::make_shared<std::string>();
        cmd->add_option("--bricks", *bricks, "dimension vectors, e.g. 0,1;1,0")->required();
        cmd->callback([&cli, lattice_for, bricks] {
            repkit::TorsionLattice lat = lattice_for();
            cluster::BrickSeq seq = parse_brick_list(*bricks, lat.q.n());
            std::vector<repkit::ThinModule> mods;
            for (const auto& d : seq.dims) {
                auto m = repkit::interval_of_dim(lat.q, d);
                if (!m)
                    throw std::invalid_argument("a brick is not an interval dimension vector");
                mods.push_back(*m);
            }
            repkit::CfhoReport rep = repkit::verify_cfho(lat, mods);
            cli.out.write(gwjson::cfho_report_to_json(rep));
            if (!rep.ok()) cli.exit_code = kExitInfeasible;
        });
    }
    {
        auto* cmd = oracle_sub("hn", "Harder-Narasimhan filtration of a thin module");
        auto module = std::make_shared<std::string>();
        auto alpha = std::make_shared<std::string>();
        auto beta = std::make_shared<std::string>();
        cmd->add_option("--module", *module, "interval(s), e.g. 1..2 or 1..2+3..3")->required();
        cmd->add_option("--alpha", *alpha, "rational vector")->required();
        cmd->add_option("--beta", *beta, "positive rational vector")->required();
        cmd->callback([&cli, type_a, alpha, beta, module] {
            repkit::TypeAQuiver q = repkit::TypeAQuiver::parse(*type_a);
            if (q.n() > repkit::configured_max_n())
                throw repkit::BoundExceededError("oracle bound exceeded");
            charge::CentralCharge z(parse_rat_vec(*alpha), parse_rat_vec(*beta));
            repkit::HNFiltration f = repkit::hn_filtration(q, parse_summands(*module), z);
            cli.out.write(gwjson::hn_to_json(f));
        });
    }
    {
        auto* cmd = oracle_sub(
            "verify-induction", "check the chain of induced torsion classes against a chain");
        auto chain = std::make_shared<std::string>();
        auto alpha = std::make_shared<std::string>();
        auto beta = std::make_shared<std::string>();
        cmd->add_option("--chain", *chain, "the chain's bricks as dimension vectors")->required();
        cmd->add_option("--alpha", *alpha, "rational vector")->required();
        cmd->add_option("--beta", *beta, "positive rational vector")->required();
        cmd->callback([&cli, lattice_for, chain, alpha, beta] {
            repkit::TorsionLattice lat = lattice_for();
            cluster::BrickSeq seq = parse_brick_list(*chain, lat.q.n());
            std::vector<repkit::ThinModule> mods;
            for (const auto& d : seq.dims) {
                auto m = repkit::interval_of_dim(lat.q, d);
                if (!m)
                    throw std::invalid_argument("a chain brick is not an interval");
                mods.push_back(*m);
            }
            std::vector<int> chain_idx = repkit::mgs_from_cfho(lat, mods);
            charge::CentralCharge z(parse_rat_vec(*alpha), parse_rat_vec(*beta));
            repkit::InductionReport rep = repkit::verify_induction(lat, chain_idx, z);
            Json j;
            j["holds"] = rep.ok;
            if (!rep.detail.empty()) j["detail"] = rep.detail;
            cli.out.write(j);
            if (!rep.ok) cli.exit_code = kExitInfeasible;
        });
    }
    {
        auto* cmd = oracle_sub("cmatrices",
                                           "tau-tilting pairs with g- and c-matrices per class");
        cmd->callback([&cli, lattice_for] {
            repkit::TorsionLattice lat = lattice_for();
            cli.out.write(gwjson::pairs_to_json(lat, repkit::tau_tilting_pairs(lat)));
        });
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact maximal green sequence computations"};
    app.require_subcommand(1);
    Cli cli;
    app.add_option("--out", cli.out.path, "write JSON to this file instead of stdout");
    app.add_flag("--float", cli.out.float_approx,
                 "add non-authoritative decimal approximations to reports");

    add_walk(app, cli);
    add_bricks(app, cli);
    add_enumerate(app, cli);
    add_check_crossing(app, cli);
    add_charge_verify(app, cli);
    add_rotate(app, cli);
    add_oracle(app, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    } catch (const cluster::NonGreenStepError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGreen;
    } catch (const cluster::RotationPreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRotation;
    } catch (const repkit::BoundExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return cli.exit_code;
}
