// polycut: decide, enumerate and classify separating hyperplanes of unit
// cubes and their one-cut slices, order and chain polytopes of finite posets,
// and small Birkhoff polytopes. Verdicts are printed as one JSON object per
// line; exit code 0 means a decided verdict, 1 an input error, 2 a refusal
// by a resource guard.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polycut/polycut.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace polycut;

RatVector parse_coeff_list(const std::string& csv) {
    RatVector out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) out.push_back(parse_rational(token));
    if (out.empty()) throw input_error("empty coefficient list");
    return out;
}

std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw input_error("invalid index '" + token + "'");
        }
    }
    return out;
}

std::string pattern_string(const SignPattern& p) {
    std::string s;
    s.reserve(p.size());
    for (const auto v : p) s += v > 0 ? '+' : v < 0 ? '-' : '0';
    return s;
}

json rational_list(const RatVector& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

json witness_json(const SkeletonModel& model, const CutReport& rep) {
    switch (rep.witness) {
        case WitnessKind::none: return nullptr;
        case WitnessKind::no_positive_vertex: return {{"type", "no_positive_vertex"}};
        case WitnessKind::no_negative_vertex: return {{"type", "no_negative_vertex"}};
        case WitnessKind::bad_edge:
            return {{"type", "bad_edge"},
                    {"edge", {rep.edge_i, rep.edge_j}},
                    {"endpoints",
                     {rational_list(model.vertices[rep.edge_i]),
                      rational_list(model.vertices[rep.edge_j])}}};
    }
    return nullptr;
}

json labels_of_mask(const Poset& p, ElemSet mask) {
    json out = json::array();
    for (int i = 0; i < p.size(); ++i)
        if (mask >> i & 1) out.push_back(p.labels()[i]);
    return out;
}

void emit(const std::string& command, const std::string& verdict, json witness, json details) {
    json line;
    line["command"] = command;
    line["verdict"] = verdict;
    line["witness"] = std::move(witness);
    line["details"] = std::move(details);
    std::cout << line.dump() << "\n";
}

Poset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read poset file '" + path + "'");
    return parse_poset(in);
}

PosetHyperplane load_hyperplane(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read hyperplane file '" + path + "'");
    return parse_hyperplane(in);
}

Target parse_target(const std::string& name) {
    if (name == "order") return Target::order;
    if (name == "chain") return Target::chain;
    throw input_error("target must be 'order' or 'chain'");
}

Family parse_family(const std::string& name) {
    if (name == "chains") return Family::disjoint_chains;
    if (name == "tree") return Family::binary_tree;
    if (name == "zigzag") return Family::zigzag;
    throw input_error("family must be 'chains', 'tree' or 'zigzag'");
}

void run_cube_check(const std::string& coeffs_csv, const std::string& rhs_text) {
    const RatVector coeffs = parse_coeff_list(coeffs_csv);
    const Hyperplane h(coeffs, parse_rational(rhs_text));
    const SkeletonModel model = cube_model(static_cast<int>(coeffs.size()));
    const CutReport rep = is_separating(model, h);
    emit("cube check", rep.separating ? "separating" : "not_separating",
         witness_json(model, rep),
         {{"d", coeffs.size()}, {"pattern", pattern_string(rep.pattern)}});
}

void run_cube_canonicalize(const std::string& coeffs_csv, const std::string& rhs_text) {
    const RatVector coeffs = parse_coeff_list(coeffs_csv);
    const CubeCutForm form = canonicalize(coeffs, parse_rational(rhs_text));
    emit("cube canonicalize", "form", nullptr,
         {{"k", form.k}, {"l", form.ell}, {"complement_l", form.complement().ell}});
}

void run_cube_second(int d, int k, int ell, const std::string& i_csv,
                     const std::string& j_csv, int h, bool verify_oracle) {
    SecondCutSpec spec;
    spec.I = parse_index_list(i_csv);
    spec.J = parse_index_list(j_csv);
    spec.h = h;
    const bool verdict = second_cut_predicate(d, k, ell, spec);
    json details = {{"d", d}, {"k", k}, {"l", ell}};
    if (verify_oracle) {
        const SkeletonModel model = subpolytope_model(d, k, ell);
        const CutReport rep = is_separating(model, spec_hyperplane(d, spec));
        details["oracle_verdict"] = rep.separating ? "separating" : "not_separating";
        details["oracle_agrees"] = rep.separating == verdict;
    }
    emit("cube second", verdict ? "separating" : "not_separating", nullptr, details);
}

void run_cube_enumerate(int d) {
    const auto patterns = enumerate_cuts_oracle(cube_model(d));
    json list = json::array();
    for (const auto& p : patterns) list.push_back(pattern_string(p));
    emit("cube enumerate", "ok", nullptr,
         {{"d", d}, {"decompositions", patterns.size()}, {"patterns", std::move(list)}});
}

void run_poset_check(const std::string& poset_path, const std::string& hyperplane_path,
                     const std::string& target_name) {
    const Poset p = load_poset(poset_path);
    const Target target = parse_target(target_name);
    const PosetHyperplane h = load_hyperplane(hyperplane_path);
    const PosetCutReport rep = checkcut(p, h, target);
    json witness = nullptr;
    if (rep.bad_pair)
        witness = {{"type", "bad_pair"},
                   {"I", labels_of_mask(p, rep.bad_pair->first)},
                   {"J", labels_of_mask(p, rep.bad_pair->second)}};
    else if (rep.report.witness == WitnessKind::no_positive_vertex)
        witness = {{"type", "no_positive_vertex"}};
    else if (rep.report.witness == WitnessKind::no_negative_vertex)
        witness = {{"type", "no_negative_vertex"}};
    emit("poset check", rep.report.separating ? "separating" : "not_separating", witness,
         {{"target", target_name}, {"vertices", rep.report.pattern.size()}});
}

void run_poset_enumerate(const std::string& poset_path, const std::string& target_name) {
    const Poset p = load_poset(poset_path);
    const auto patterns = enumerate_poset_cuts(p, parse_target(target_name));
    json list = json::array();
    for (const auto& pat : patterns) list.push_back(pattern_string(pat));
    emit("poset enumerate", "ok", nullptr,
         {{"target", target_name},
          {"decompositions", patterns.size()},
          {"patterns", std::move(list)}});
}

void run_poset_classify(const std::string& poset_path, const std::string& hyperplane_path,
                        const std::string& family_name) {
    const Poset p = load_poset(poset_path);
    const PosetHyperplane h = load_hyperplane(hyperplane_path);
    const ClassifierVerdict v = classify(p, h, parse_family(family_name));
    json witness = nullptr;
    if (v.evidence)
        witness = {{"type", "bad_pair"},
                   {"I", labels_of_mask(p, v.evidence->first)},
                   {"J", labels_of_mask(p, v.evidence->second)}};
    emit("poset classify", v.separating ? "separating" : "not_separating", witness,
         {{"family", family_name},
          {"conditions",
           {{"min_signs", v.min_signs},
            {"equal_abs", v.equal_abs},
            {"unique_extension", v.unique_extension}}}});
}

void run_poset_witness(const std::string& poset_path) {
    const Poset p = load_poset(poset_path);
    if (p.is_chain()) {
        emit("poset witness", "none", nullptr, {{"reason", "poset is a chain"}});
        return;
    }
    const auto [order_h, chain_h] = existence_witnesses(p);
    const auto hp_json = [&](const PosetHyperplane& h) {
        json coeffs;
        for (const auto& [label, value] : h.coeffs) coeffs[label] = to_string(value);
        return json{{"coeffs", std::move(coeffs)}, {"rhs", to_string(h.rhs)}};
    };
    const bool order_ok = checkcut(p, order_h, Target::order).report.separating;
    const bool chain_ok = checkcut(p, chain_h, Target::chain).report.separating;
    emit("poset witness", order_ok && chain_ok ? "separating" : "not_separating", nullptr,
         {{"order", hp_json(order_h)},
          {"chain", hp_json(chain_h)},
          {"order_separating", order_ok},
          {"chain_separating", chain_ok}});
}

void run_birkhoff_verify(int n) {
    const auto witness = search_separating(n);
    if (witness) {
        emit("birkhoff verify", "separating",
             {{"type", "hyperplane"},
              {"coeffs", rational_list(witness->coeffs)},
              {"rhs", to_string(witness->rhs)}},
             {{"n", n}});
        return;
    }
    std::string note = "exhausted sign patterns";
    if (n == 3) note = "skeleton complete";
    if (n == 2) note = "single edge";
    emit("birkhoff verify", "none", nullptr, {{"n", n}, {"detail", note}});
}

void run_birkhoff_certificate(const std::string& perm_text, int n) {
    const Permutation v = parse_permutation(perm_text, n);
    const CertificateReport rep = cycle_merging_certificate(v);
    emit("birkhoff certificate", rep.passed() ? "pass" : "fail", nullptr,
         {{"identity_a", rep.identity_a},
          {"identity_b", rep.identity_b},
          {"adjacency", rep.adjacency},
          {"fewer_cycles", rep.fewer_cycles},
          {"cycle_one", rep.cycle_one},
          {"cycle_two", rep.cycle_two}});
}

void run_birkhoff_identities() {
    emit("birkhoff identities", vertex_sum_identities() ? "pass" : "fail", nullptr, json::object());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating hyperplanes of integral convex polytopes"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string coeffs_csv, rhs_text, poset_path, hyperplane_path, target_name, family_name,
        perm_text, i_csv, j_csv;
    int d = 0, k = 0, ell = 0, offset = 0, n = 0;
    bool verify_oracle = false;

    auto* cube = app.add_subcommand("cube", "unit cube cuts");
    cube->require_subcommand(1);
    auto* cube_check = cube->add_subcommand("check", "decide a hyperplane");
    cube_check->add_option("--coeffs", coeffs_csv)->required();
    cube_check->add_option("--rhs", rhs_text)->required();
    auto* cube_canon = cube->add_subcommand("canonicalize", "canonical (k, l) form");
    cube_canon->add_option("--coeffs", coeffs_csv)->required();
    cube_canon->add_option("--rhs", rhs_text)->required();
    auto* cube_second = cube->add_subcommand("second", "second cut criterion");
    cube_second->add_option("--d", d)->required();
    cube_second->add_option("--k", k)->required();
    cube_second->add_option("--l", ell)->required();
    cube_second->add_option("--I", i_csv)->required();
    cube_second->add_option("--J", j_csv)->required();
    cube_second->add_option("--h", offset)->required();
    cube_second->add_flag("--verify-oracle", verify_oracle);
    auto* cube_enum = cube->add_subcommand("enumerate", "all decompositions");
    cube_enum->add_option("--d", d)->required();

    auto* poset = app.add_subcommand("poset", "order and chain polytope cuts");
    poset->require_subcommand(1);
    auto* poset_check = poset->add_subcommand("check", "decide a hyperplane");
    poset_check->add_option("--poset", poset_path)->required();
    poset_check->add_option("--hyperplane", hyperplane_path)->required();
    poset_check->add_option("--target", target_name)->required();
    auto* poset_enum = poset->add_subcommand("enumerate", "all decompositions");
    poset_enum->add_option("--poset", poset_path)->required();
    poset_enum->add_option("--target", target_name)->required();
    auto* poset_classify = poset->add_subcommand("classify", "three-condition classifier");
    poset_classify->add_option("--poset", poset_path)->required();
    poset_classify->add_option("--hyperplane", hyperplane_path)->required();
    poset_classify->add_option("--family", family_name)->required();
    auto* poset_witness = poset->add_subcommand("witness", "existence witnesses");
    poset_witness->add_option("--poset", poset_path)->required();

    auto* birkhoff = app.add_subcommand("birkhoff", "Birkhoff polytope cuts");
    birkhoff->require_subcommand(1);
    auto* b_verify = birkhoff->add_subcommand("verify", "exhaustive search");
    b_verify->add_option("--n", n)->required();
    auto* b_cert = birkhoff->add_subcommand("certificate", "cycle-merging certificate");
    b_cert->add_option("--perm", perm_text)->required();
    b_cert->add_option("--n", n)->required();
    birkhoff->add_subcommand("identities", "vertex sum identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::ostringstream os;
        os << e.what();
        std::cerr << "error: " << os.str() << "\n";
        return 1;
    }

    try {
        if (cube_check->parsed()) run_cube_check(coeffs_csv, rhs_text);
        else if (cube_canon->parsed()) run_cube_canonicalize(coeffs_csv, rhs_text);
        else if (cube_second->parsed()) run_cube_second(d, k, ell, i_csv, j_csv, offset, verify_oracle);
        else if (cube_enum->parsed()) run_cube_enumerate(d);
        else if (poset_check->parsed()) run_poset_check(poset_path, hyperplane_path, target_name);
        else if (poset_enum->parsed()) run_poset_enumerate(poset_path, target_name);
        else if (poset_classify->parsed()) run_poset_classify(poset_path, hyperplane_path, family_name);
        else if (poset_witness->parsed()) run_poset_witness(poset_path);
        else if (b_verify->parsed()) run_birkhoff_verify(n);
        else if (b_cert->parsed()) run_birkhoff_certificate(perm_text, n);
        else run_birkhoff_identities();
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
