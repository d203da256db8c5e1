#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "sgforge/honest.hpp"
#include "sgforge/parse.hpp"
#include "sgforge/puiseux.hpp"
#include "sgforge/svg.hpp"

using json = nlohmann::json;
using namespace sgforge;

namespace {

// exit codes: 0 success, 2 input/usage errors, 3 inexact me verdicts
constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_inexact = 3;

struct Output {
    std::string format = "json";  // or "text"

    void emit(const json& j, const std::string& text) const {
        if (format == "text")
            std::cout << text << "\n";
        else
            std::cout << j.dump(2) << "\n";
    }
};

void add_format(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output rendering")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

json semigroup_record(const NumericalSemigroup& s) {
    json j;
    j["min_gens"] = s.minimal_generators();
    j["multiplicity"] = s.multiplicity();
    j["embedding_dim"] = s.embedding_dim();
    j["conductor"] = s.conductor();
    j["frobenius"] = s.frobenius();
    j["genus"] = s.genus();
    j["self_dual"] = s.is_self_dual();
    return j;
}

std::string join(const std::vector<int64>& v, const char* sep = ", ") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

json point_record(const KunzPoint& p, const FaceClass& face) {
    auto s = semigroup_of_point(p);
    MeOptions fast;
    fast.certify = false;
    auto v = minimal_embedding_dimension(s, fast);
    json j;
    j["x"] = {p.x1, p.x2, p.x3};
    j["face"] = face_name(face.kind);
    json bind = json::array();
    for (auto b : face.binding) bind.push_back(binding_name(b));
    j["binding"] = bind;
    j["e"] = s.embedding_dim();
    j["me"] = v.lower;
    return j;
}

int run_me(const std::string& gens_text, const Output& out, int64 trunc_max, bool certify) {
    auto s = NumericalSemigroup::from_generators(parse_generators(gens_text));
    MeOptions opts;
    opts.certify = certify;
    opts.oracle.trunc_ceiling = trunc_max;
    auto v = minimal_embedding_dimension(s, opts);

    json j;
    j["exact"] = v.exact;
    j["lower"] = v.lower;
    j["upper"] = v.upper;
    j["method"] = me_method_name(v.method);
    if (v.exact) j["me"] = v.lower;
    std::string text;
    if (v.exact)
        text = "me = " + std::to_string(v.lower) + " (exact, " + me_method_name(v.method) + ")";
    else
        text = "me in [" + std::to_string(v.lower) + ", " + std::to_string(v.upper) +
               "] (bound only, " + me_method_name(v.method) + ")";
    if (v.witness) {
        j["witness"]["curve"] = curve_to_string(v.witness->curve);
        j["witness"]["certificate"] =
            monomial_poly_to_string(v.witness->certificate, v.witness->curve.names());
        j["witness"]["certificate_order"] = v.witness->certificate_order;
        text += "\nwitness: " + curve_to_string(v.witness->curve) +
                "\ncertificate: " +
                monomial_poly_to_string(v.witness->certificate, v.witness->curve.names()) +
                " of order " + std::to_string(v.witness->certificate_order);
    }
    out.emit(j, text);
    return v.exact ? exit_ok : exit_inexact;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of numerical semigroups and parameterized curve branches"};
    app.require_subcommand(1);

    Output out;
    std::string gens_text, point_text, curve_text, list_text, out_path;
    int64 trunc_max = OracleOptions{}.trunc_ceiling;
    int64 max_gen = NumericalSemigroup::default_generator_cap;
    int64 bound = 0;
    bool no_certify = false;

    auto* info = app.add_subcommand("info", "invariants of a numerical semigroup");
    info->add_option("--gens", gens_text, "generator list, e.g. 4,6,13")->required();
    info->add_option("--max-gen", max_gen, "largest accepted generator")->capture_default_str();
    add_format(info, out);

    auto* me = app.add_subcommand("me", "minimal embedding dimension");
    me->add_option("--gens", gens_text)->required();
    me->add_option("--trunc-max", trunc_max, "truncation ceiling for witness verification")
        ->envname("SEMIGROUP_FORGE_TRUNC_MAX")
        ->capture_default_str();
    me->add_flag("--no-certify", no_certify, "skip witness construction");
    add_format(me, out);

    auto* planar = app.add_subcommand("planar", "plane-branch realizability of a semigroup");
    planar->add_option("--gens", gens_text)->required();
    add_format(planar, out);

    auto* p2s = app.add_subcommand("puiseux2sg", "semigroup generators of a characteristic");
    p2s->add_option("characteristic", list_text, "e.g. 8,20,22,27")->required();
    add_format(p2s, out);

    auto* s2p = app.add_subcommand("sg2puiseux", "characteristic of a planar semigroup");
    s2p->add_option("generators", list_text, "e.g. 8,20,42,89")->required();
    add_format(s2p, out);

    auto* csg = app.add_subcommand("curve-sg", "value semigroup of a parameterized curve");
    csg->add_option("--curve", curve_text, "e.g. \"x=t^4; y=t^6+t^7\"")->required();
    csg->add_option("--trunc-max", trunc_max, "truncation ceiling")
        ->envname("SEMIGROUP_FORGE_TRUNC_MAX")
        ->capture_default_str();
    add_format(csg, out);

    auto* kc = app.add_subcommand("kunz-classify", "face of a coordinate point");
    kc->add_option("--point", point_text, "x1,x2,x3 with x_i > 4, x_i = i mod 4")->required();
    add_format(kc, out);

    auto* ke = app.add_subcommand("kunz-enumerate", "all admissible points up to a bound");
    ke->add_option("--bound", bound, "coordinate bound")->required();
    add_format(ke, out);

    auto* ks = app.add_subcommand("kite-svg", "plot the cone slice with me-colored points");
    ks->add_option("--bound", bound, "coordinate bound")->required();
    ks->add_option("--out", out_path, "output file")->required();
    add_format(ks, out);

    auto* wit = app.add_subcommand("witness", "three-coordinate witness curve for me = 3");
    wit->add_option("--gens", gens_text)->required();
    wit->add_option("--trunc-max", trunc_max, "truncation ceiling for verification")
        ->envname("SEMIGROUP_FORGE_TRUNC_MAX")
        ->capture_default_str();
    add_format(wit, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            auto s = NumericalSemigroup::from_generators(parse_generators(gens_text), max_gen);
            json j = semigroup_record(s);
            j["gaps"] = s.gaps();
            j["apery"] = s.apery_set(s.multiplicity());
            out.emit(j, "S = <" + join(s.minimal_generators()) + ">\nmultiplicity " +
                            std::to_string(s.multiplicity()) + ", embedding dimension " +
                            std::to_string(s.embedding_dim()) + "\nconductor " +
                            std::to_string(s.conductor()) + ", frobenius " +
                            std::to_string(s.frobenius()) + ", genus " +
                            std::to_string(s.genus()) +
                            (s.is_self_dual() ? ", self-dual" : ""));
            return exit_ok;
        }
        if (me->parsed()) return run_me(gens_text, out, trunc_max, !no_certify);
        if (planar->parsed()) {
            auto gens = parse_generators(gens_text);
            auto s = NumericalSemigroup::from_generators(gens);
            auto r = teissier_planarity(s.minimal_generators());
            json j;
            j["planar"] = r.planar;
            if (!r.planar) {
                j["failed"] = "condition" + std::to_string(r.failed_condition);
                j["detail"] = r.detail;
            }
            out.emit(j, r.planar ? "planar"
                                 : "not planar (condition" + std::to_string(r.failed_condition) +
                                       "): " + r.detail);
            return exit_ok;
        }
        if (p2s->parsed()) {
            auto lam = parse_int_list(list_text);
            auto b = puiseux_to_generators(lam);
            json j;
            j["characteristic"] = lam;
            j["generators"] = b;
            out.emit(j, "<" + join(b) + ">");
            return exit_ok;
        }
        if (s2p->parsed()) {
            auto b = parse_int_list(list_text);
            auto lam = generators_to_puiseux(b);
            json j;
            j["generators"] = b;
            j["characteristic"] = lam;
            out.emit(j, "[" + std::to_string(lam[0]) + "; " +
                            join({lam.begin() + 1, lam.end()}) + "]");
            return exit_ok;
        }
        if (csg->parsed()) {
            auto c = parse_curve(curve_text);
            OracleOptions opts;
            opts.trunc_ceiling = trunc_max;
            auto s = semigroup_of_curve(c, opts);
            json j = semigroup_record(s);
            j["curve"] = curve_to_string(c);
            out.emit(j, "S = <" + join(s.minimal_generators()) + ">");
            return exit_ok;
        }
        if (kc->parsed()) {
            auto p = parse_kunz_point(point_text);
            auto face = classify_face(p);
            json j = point_record(p, face);
            out.emit(j, "(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + "," +
                            std::to_string(p.x3) + "): " + face_name(face.kind) +
                            ", e = " + j["e"].dump() + ", me = " + j["me"].dump());
            return exit_ok;
        }
        if (ke->parsed()) {
            json pts = json::array();
            std::string text;
            for (const auto& [p, face] : enumerate_points(bound)) {
                json rec = point_record(p, face);
                text += "(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + "," +
                        std::to_string(p.x3) + ") " + face_name(face.kind) + " e=" +
                        rec["e"].dump() + " me=" + rec["me"].dump() + "\n";
                pts.push_back(std::move(rec));
            }
            json j;
            j["bound"] = bound;
            j["count"] = pts.size();
            j["points"] = std::move(pts);
            if (!text.empty()) text.pop_back();
            out.emit(j, text.empty() ? "no points" : text);
            return exit_ok;
        }
        if (ks->parsed()) {
            auto r = emit_kite_svg(bound, out_path);
            json j;
            j["out"] = out_path;
            j["points"] = r.points;
            j["me2"] = r.me2;
            j["me3"] = r.me3;
            j["me4"] = r.me4;
            out.emit(j, "wrote " + out_path + " with " + std::to_string(r.points) + " points");
            return exit_ok;
        }
        if (wit->parsed()) {
            auto s = NumericalSemigroup::from_generators(parse_generators(gens_text));
            OracleOptions opts;
            opts.trunc_ceiling = trunc_max;
            auto w = witness_curve(s, opts);
            json j;
            j["curve"] = curve_to_string(w.curve);
            j["certificate"] = monomial_poly_to_string(w.certificate, w.curve.names());
            j["certificate_order"] = w.certificate_order;
            j["verified"] = true;
            out.emit(j, curve_to_string(w.curve) + "\ncertificate " +
                            monomial_poly_to_string(w.certificate, w.curve.names()) +
                            " of order " + std::to_string(w.certificate_order));
            return exit_ok;
        }
    } catch (const error& e) {
        json j;
        j["error"]["code"] = errc_name(e.code());
        j["error"]["message"] = e.what();
        std::cout << j.dump(2) << "\n";
        return exit_input;
    }
    return exit_input;
}
