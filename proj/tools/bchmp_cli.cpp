/**************************************************************************
 * bchmp_cli.cpp
 *
 * Copyright 2026 The bchmp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "bchmp/bch.hpp"
#include "bchmp/bounds.hpp"
#include "bchmp/code_io.hpp"
#include "bchmp/cyclotomic.hpp"
#include "bchmp/kernels.hpp"
#include "bchmp/mpc.hpp"
#include "bchmp/report_json.hpp"

namespace {

using bchmp::Elem;
using bchmp::Field;
using bchmp::GfMatrix;
using bchmp::Inner;
using bchmp::LinearCode;
using nlohmann::json;

constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParam = 3;
constexpr int kExitBudget = 4;

struct Options {
    std::string output = "text";
    std::uint64_t budget = bchmp::kDefaultDistanceBudget;
    bool json() const { return output == "json"; }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--output", opt.output, "output mode: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", opt.budget, "codeword enumeration budget");
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json()) {
        json out = doc;
        out["schema_version"] = bchmp::kSchemaVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

Inner parse_inner(const std::string& s) {
    if (s == "euclidean") return Inner::euclidean;
    if (s == "hermitian") return Inner::hermitian;
    throw bchmp::param_error("inner product must be euclidean or hermitian");
}

GfMatrix parse_matrix(const Field& f, const std::string& text) {
    GfMatrix m;
    m.f = &f;
    std::istringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<Elem> r;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            std::int64_t v = 0;
            try {
                v = std::stoll(cell);
            } catch (const std::exception&) {
                throw bchmp::param_error("bad matrix entry '" + cell + "'");
            }
            if (v < 0 || v >= static_cast<std::int64_t>(f.order()))
                throw bchmp::param_error("matrix entry " + std::to_string(v) +
                                         " outside the field");
            r.push_back(static_cast<Elem>(v));
        }
        m.a.push_back(std::move(r));
    }
    if (m.a.empty()) throw bchmp::param_error("empty matrix");
    return m;
}

json field_json(const Field& f) {
    return json{{"p", f.characteristic()},
                {"e", f.degree()},
                {"order", f.order()},
                {"modulus", f.modulus()}};
}

json distance_json(const bchmp::DistanceResult& r) { return bchmp::to_json(r); }

std::string distance_text(const bchmp::DistanceResult& r) {
    std::ostringstream os;
    if (r.kind == bchmp::DistanceResult::Kind::exact)
        os << "minimum distance: " << r.value << " (exact, " << r.enumerated
           << " codewords enumerated)";
    else
        os << "minimum distance: >= " << r.value << " (lower bound; message weights up to "
           << r.swept_weight << " swept, " << r.enumerated << " codewords)";
    return os.str();
}

// ---------------------------------------------------------------- coset ---
int run_coset(const Options& opt, std::uint64_t n, std::uint64_t q, std::uint64_t i) {
    auto c = bchmp::cyclotomic::coset(i, q, n);
    json doc{{"n", n}, {"q", q}, {"i", i}, {"elements", c.elements}, {"leader", c.leader}};
    std::ostringstream text;
    text << "coset of " << i << " mod " << n << " under multiplication by " << q << ": {"
         << join_u64(c.elements) << "}\nleader: " << c.leader << "\n";
    emit(opt, doc, text.str());
    return 0;
}

// ------------------------------------------------------------------ bch ---
int run_bch(const Options& opt, std::uint64_t n, std::uint64_t q, std::uint64_t delta,
            std::uint64_t b) {
    bchmp::BCHSpec spec = bchmp::bch_code(n, q, delta, b);
    const std::uint64_t bound = bchmp::bch_bound(spec.defining_set);
    json doc{{"n", n},
             {"q", q},
             {"delta", delta},
             {"b", b},
             {"defining_set", spec.defining_set.elements},
             {"defining_set_size", spec.defining_set.elements.size()},
             {"dimension", spec.dimension},
             {"bch_bound", bound},
             {"field", field_json(spec.generator.field())},
             {"generator", spec.generator.coeffs()}};
    std::ostringstream text;
    text << "[" << n << ", " << spec.dimension << "] BCH code over GF(" << q
         << "), designed distance " << delta << ", b = " << b << "\n";
    text << "defining set (" << spec.defining_set.elements.size() << " elements): {"
         << join_u64(spec.defining_set.elements) << "}\n";
    text << "generator coefficients (low to high): ";
    for (std::size_t i = 0; i < spec.generator.coeffs().size(); ++i)
        text << (i ? " " : "") << spec.generator.coeffs()[i];
    text << "\nfield: p = " << spec.generator.field().characteristic()
         << ", e = " << spec.generator.field().degree() << ", modulus digits ";
    for (std::size_t i = 0; i < spec.generator.field().modulus().size(); ++i)
        text << (i ? " " : "") << spec.generator.field().modulus()[i];
    text << "\nBCH bound: " << bound << "\n";
    emit(opt, doc, text.str());
    return 0;
}

// -------------------------------------------------------------- dualset ---
int run_dualset(const Options& opt, std::uint64_t n, std::uint64_t q,
                std::uint64_t delta, std::uint64_t b, const std::string& inner_name) {
    const Inner inner = parse_inner(inner_name);
    bchmp::DefiningSet T = bchmp::bch_defining_set(n, q, delta, b);
    bchmp::DefiningSet D = bchmp::dual_defining_set(T, inner);
    const std::uint64_t bound = bchmp::bch_bound(D);
    json doc{{"n", n},
             {"q", q},
             {"delta", delta},
             {"b", b},
             {"inner", inner_name},
             {"dual_set", D.elements},
             {"dual_set_size", D.elements.size()},
             {"longest_run", bound == 0 ? 0 : bound - 1},
             {"bch_bound", bound}};
    std::ostringstream text;
    text << (inner == Inner::euclidean ? "T^perp" : "T^perpH") << " for the [" << n
         << ", *] BCH code over GF(" << q << "), delta = " << delta << ", b = " << b
         << "\n";
    text << "dual defining set (" << D.elements.size() << " elements): {"
         << join_u64(D.elements) << "}\n";
    text << "longest consecutive run: " << bound - 1 << "\nBCH bound: " << bound << "\n";
    emit(opt, doc, text.str());
    return 0;
}

// -------------------------------------------------------------- mindist ---
int run_mindist(const Options& opt, const std::string& code_file, std::uint64_t n,
                std::uint64_t q, std::uint64_t delta, std::uint64_t b,
                const std::string& dual_kind) {
    LinearCode code = [&]() {
        if (!code_file.empty()) return bchmp::read_code_file(code_file);
        if (n == 0 || q == 0 || delta == 0)
            throw bchmp::param_error("mindist needs --code or --n/--q/--delta");
        bchmp::BCHSpec spec = bchmp::bch_code(n, q, delta, b);
        LinearCode m = bchmp::bch_matrix(spec);
        if (dual_kind == "euclidean") return bchmp::dual(m);
        if (dual_kind == "hermitian") return bchmp::hermitian_dual(m);
        return m;
    }();
    bchmp::DistanceResult r = bchmp::min_distance(code, opt.budget);
    json doc{{"length", code.length()},
             {"dimension", code.dim()},
             {"field", field_json(code.field())},
             {"distance", distance_json(r)}};
    std::ostringstream text;
    text << "[" << code.length() << ", " << code.dim() << "] code over GF("
         << code.field().order() << ")\n"
         << distance_text(r) << "\n";
    emit(opt, doc, text.str());
    return r.kind == bchmp::DistanceResult::Kind::exact ? 0 : kExitBudget;
}

// ------------------------------------------------------------------- mp ---
int run_mp(const Options& opt, const std::vector<std::string>& code_files,
           const std::string& matrix_text, bool with_mindist,
           const std::string& out_file) {
    if (code_files.empty()) throw bchmp::param_error("mp needs at least one --code");
    std::vector<LinearCode> codes;
    for (const auto& f : code_files) codes.push_back(bchmp::read_code_file(f));
    const Field& f = codes.front().field();
    GfMatrix A = parse_matrix(f, matrix_text);

    std::vector<bchmp::DistanceResult> dists;
    for (const auto& c : codes) dists.push_back(bchmp::min_distance(c, opt.budget));
    bchmp::MpBound bound = bchmp::mp_distance_bound(A, dists);
    LinearCode product = bchmp::matrix_product(codes, A);

    json constituents = json::array();
    for (std::size_t i = 0; i < codes.size(); ++i)
        constituents.push_back(json{{"length", codes[i].length()},
                                    {"dimension", codes[i].dim()},
                                    {"distance", distance_json(dists[i])}});
    json doc{{"length", product.length()},
             {"dimension", product.dim()},
             {"field", field_json(f)},
             {"constituents", constituents},
             {"ua_distances", bound.ua},
             {"bound", bound.value},
             {"bound_exact", bound.exact}};
    std::ostringstream text;
    text << "matrix-product code [" << product.length() << ", " << product.dim()
         << "] over GF(" << f.order() << ")\n";
    text << "constituent distances:";
    for (const auto& d : dists) text << " " << d.value;
    text << "\nU_A(k) distances: " << join_u64(bound.ua) << "\n";
    text << "distance bound: " << bound.value
         << (bound.exact ? " (exact: triangular defining matrix)" : " (lower bound)")
         << "\n";
    if (with_mindist) {
        bchmp::DistanceResult r = bchmp::min_distance(product, opt.budget);
        doc["distance"] = distance_json(r);
        text << distance_text(r) << "\n";
    }
    if (!out_file.empty()) bchmp::write_code_file(out_file, product);
    emit(opt, doc, text.str());
    return 0;
}

// ------------------------------------------------------------- selfdual ---
int run_selfdual(const Options& opt, const std::string& code_file,
                 const std::string& matrix_text, const std::string& inner_name,
                 bool with_mindist, const std::string& out_file) {
    const Inner inner = parse_inner(inner_name);
    LinearCode D = bchmp::read_code_file(code_file);
    GfMatrix A = parse_matrix(D.field(), matrix_text);
    bchmp::SelfDualResult res = bchmp::build_self_dual(D, A, inner);

    json doc{{"length", res.code.length()},
             {"dimension", res.code.dim()},
             {"field", field_json(D.field())},
             {"inner", inner_name},
             {"verified", bchmp::to_json(res.verified)},
             {"certificate",
              json{{"gram_zero", res.verified.self_orthogonal},
                   {"dimension_half_length", 2 * res.code.dim() == res.code.length()}}}};
    std::ostringstream text;
    text << "self-dual [" << res.code.length() << ", " << res.code.dim()
         << "] code over GF(" << D.field().order() << ") (" << inner_name << ")\n";
    if (inner == Inner::euclidean) {
        if (res.decision.case_id)
            doc["case"] = *res.decision.case_id;
        else
            doc["case"] = nullptr;
        doc["case_detail"] = res.decision.detail;
        doc["mu"] = res.decision.mu;
        text << "classification: ";
        if (res.decision.case_id)
            text << "case " << *res.decision.case_id;
        else
            text << "gram conditions only (" << res.decision.detail << ")";
        text << "\n";
    }
    text << "certificate: Gram matrix zero, dimension = n (" << res.code.dim() << " of "
         << res.code.length() << ")\n";
    if (with_mindist) {
        bchmp::DistanceResult r = bchmp::min_distance(res.code, opt.budget);
        doc["distance"] = distance_json(r);
        text << distance_text(r) << "\n";
    }
    if (!out_file.empty()) bchmp::write_code_file(out_file, res.code);
    emit(opt, doc, text.str());
    return 0;
}

// --------------------------------------------------------------- verify ---
struct VerifyFlags {
    std::string theorem;
    std::string mode = "run_scan";
    std::int64_t q = 0, s = -1, m = 0, t = -1, delta = 0, u = -1, lambda = 1;
    std::int64_t construction = 0;
};

int run_verify(const Options& opt, const VerifyFlags& vf) {
    using namespace bchmp::bounds;
    const TheoremId id = theorem_from_name(vf.theorem);
    VerifyMode mode = VerifyMode::run_scan;
    if (vf.mode == "exhaustive") mode = VerifyMode::exhaustive;
    else if (vf.mode == "both") mode = VerifyMode::both;
    else if (vf.mode != "run_scan") throw bchmp::param_error("bad --mode");

    BoundReport rep;
    switch (id) {
        case TheoremId::thm1:
            rep = verify_claim(theorem1_claim(vf.q, vf.s < 0 ? 1 : vf.s, vf.m, vf.t,
                                              vf.delta),
                               mode, opt.budget);
            break;
        case TheoremId::thm2:
            rep = verify_claim(theorem2_claim(vf.q, vf.m, vf.t, vf.delta), mode,
                               opt.budget);
            break;
        case TheoremId::lem5:
            rep = vf.u >= 0 ? lemma5_threshold_check(vf.q, vf.s < 0 ? 1 : vf.s, vf.t,
                                                     vf.m, vf.u)
                            : lemma5_sweep(vf.q, vf.s < 0 ? 1 : vf.s, vf.t, vf.m);
            break;
        case TheoremId::lem6:
            rep = vf.u >= 0 ? lemma6_threshold_check(vf.q, vf.m, vf.t, vf.u)
                            : lemma6_sweep(vf.q, vf.m, vf.t);
            break;
        default: {
            std::map<std::string, std::int64_t> params;
            if (vf.q > 0) params["q"] = vf.q;
            if (vf.m > 0) params["m"] = vf.m;
            if (vf.delta > 0) params["delta"] = vf.delta;
            if (vf.s >= 0) params["s"] = vf.s;
            if (vf.t >= 0) params["t"] = vf.t;
            params["lambda"] = vf.lambda;
            if (vf.construction > 0) params["construction"] = vf.construction;
            rep = verify_claim(catalog_claim(id, std::move(params)), mode, opt.budget);
            break;
        }
    }

    json doc = bchmp::to_json(rep);
    std::ostringstream text;
    text << "bound " << theorem_name(rep.claim.id) << " [" << status_name(rep.status)
         << "]\n";
    text << "claimed: " << rep.claim.claimed_bound << " ("
         << bound_class_name(rep.claim.cls) << ")\n";
    text << "params:";
    for (const auto& [k, v] : rep.claim.params) text << " " << k << "=" << v;
    text << "\nevidence: " << rep.evidence << "\n";
    if (!rep.claim.detail.empty()) text << "matched: " << rep.claim.detail << "\n";
    emit(opt, doc, text.str());
    if (rep.status == VerifyStatus::inconclusive) return kExitBudget;
    return 0;
}

// --------------------------------------------------------------- tables ---
int run_tables(const Options& opt, int which) {
    using namespace bchmp::bounds;
    std::vector<TableRow> rows = reproduce_table(which, opt.budget);
    json jrows = json::array();
    for (const auto& r : rows) jrows.push_back(bchmp::to_json(r));
    json doc{{"table", which}, {"rows", jrows}};
    std::ostringstream text;
    text << "table " << which
         << (which == 1 ? " (Euclidean dual bounds)" : " (Hermitian dual bounds)")
         << "\n";
    text << "t  m  q     n      delta     prior      bound  theorem  status\n";
    for (const auto& r : rows) {
        std::ostringstream priors;
        for (std::size_t i = 0; i < r.prior_bounds.size(); ++i)
            priors << (i ? "," : "") << r.prior_bounds[i];
        text << r.t << "  " << r.m << "  " << r.q << "  " << r.n << "  " << r.delta_min
             << "-" << r.delta_max << "  " << priors.str() << "  " << r.bound << "  "
             << r.theorem_bound << "  " << status_name(r.status)
             << (r.analogue ? "  (desk-scale analogue)" : "") << "\n";
    }
    emit(opt, doc, text.str());
    bool ok = true;
    for (const auto& r : rows)
        ok = ok && (r.status == VerifyStatus::verified_bound ||
                    r.status == VerifyStatus::verified_exact);
    return ok ? 0 : kExitBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"BCH codes, dual-distance bound verification, and matrix-product "
                 "self-dual code construction"};
    app.require_subcommand(1);

    std::string kernel_impl = "auto";
    app.add_option("--kernels", kernel_impl,
                   "vector kernel implementation: auto, scalar, avx2, neon");

    Options opt;

    // coset
    auto* coset_cmd = app.add_subcommand("coset", "cyclotomic coset and leader");
    std::uint64_t c_n = 0, c_q = 0, c_i = 0;
    coset_cmd->add_option("--n", c_n, "modulus")->required();
    coset_cmd->add_option("--q", c_q, "multiplier")->required();
    coset_cmd->add_option("--i", c_i, "representative")->required();
    add_common(coset_cmd, opt);

    // bch
    auto* bch_cmd = app.add_subcommand("bch", "BCH code construction");
    std::uint64_t b_n = 0, b_q = 0, b_delta = 0, b_b = 1;
    bch_cmd->add_option("--n", b_n, "length")->required();
    bch_cmd->add_option("--q", b_q, "field order")->required();
    bch_cmd->add_option("--delta", b_delta, "designed distance")->required();
    bch_cmd->add_option("--b", b_b, "first exponent (default 1)");
    add_common(bch_cmd, opt);

    // dualset
    auto* ds_cmd = app.add_subcommand("dualset", "dual defining set and longest run");
    std::uint64_t d_n = 0, d_q = 0, d_delta = 0, d_b = 1;
    std::string d_inner = "euclidean";
    ds_cmd->add_option("--n", d_n, "length")->required();
    ds_cmd->add_option("--q", d_q, "field order")->required();
    ds_cmd->add_option("--delta", d_delta, "designed distance")->required();
    ds_cmd->add_option("--b", d_b, "first exponent (default 1)");
    ds_cmd->add_option("--inner", d_inner, "euclidean or hermitian");
    add_common(ds_cmd, opt);

    // mindist
    auto* md_cmd = app.add_subcommand("mindist", "exhaustive minimum distance");
    std::string md_code;
    std::uint64_t md_n = 0, md_q = 0, md_delta = 0, md_b = 1;
    std::string md_dual = "none";
    md_cmd->add_option("--code", md_code, "code description file");
    md_cmd->add_option("--n", md_n, "BCH length");
    md_cmd->add_option("--q", md_q, "BCH field order");
    md_cmd->add_option("--delta", md_delta, "BCH designed distance");
    md_cmd->add_option("--b", md_b, "BCH first exponent");
    md_cmd->add_option("--dual", md_dual, "none, euclidean or hermitian");
    add_common(md_cmd, opt);

    // mp
    auto* mp_cmd = app.add_subcommand("mp", "matrix-product code");
    std::vector<std::string> mp_codes;
    std::string mp_matrix, mp_out;
    bool mp_mindist = false;
    mp_cmd->add_option("--code", mp_codes, "constituent code file (repeatable)")
        ->required();
    mp_cmd->add_option("--matrix", mp_matrix, "defining matrix, e.g. \"1,1;0,1\"")
        ->required();
    mp_cmd->add_flag("--mindist", mp_mindist, "also enumerate the product's distance");
    mp_cmd->add_option("--out", mp_out, "write the product code to this file");
    add_common(mp_cmd, opt);

    // selfdual
    auto* sd_cmd = app.add_subcommand("selfdual", "self-dual matrix-product construction");
    std::string sd_code, sd_matrix, sd_inner = "euclidean", sd_out;
    bool sd_mindist = false;
    sd_cmd->add_option("--code", sd_code, "code D description file")->required();
    sd_cmd->add_option("--matrix", sd_matrix, "2x2 defining matrix")->required();
    sd_cmd->add_option("--inner", sd_inner, "euclidean or hermitian");
    sd_cmd->add_flag("--mindist", sd_mindist, "also enumerate the distance");
    sd_cmd->add_option("--out", sd_out, "write the self-dual code to this file");
    add_common(sd_cmd, opt);

    // verify
    auto* vf_cmd = app.add_subcommand("verify", "verify a bound claim");
    VerifyFlags vf;
    vf_cmd->add_option("--theorem", vf.theorem, "bound id (thm1, lem5, thm3, ...)")
        ->required();
    vf_cmd->add_option("--mode", vf.mode, "run_scan, exhaustive or both");
    vf_cmd->add_option("--q", vf.q, "field parameter q");
    vf_cmd->add_option("--s", vf.s, "parameter s");
    vf_cmd->add_option("--m", vf.m, "parameter m");
    vf_cmd->add_option("--t", vf.t, "parameter t");
    vf_cmd->add_option("--delta", vf.delta, "designed distance");
    vf_cmd->add_option("--u", vf.u, "single u for the lemma checks");
    vf_cmd->add_option("--lambda", vf.lambda, "length divisor lambda");
    vf_cmd->add_option("--construction", vf.construction,
                       "construction tag (11125, 1112501, 1125, 112501)");
    add_common(vf_cmd, opt);

    // tables
    auto* tb_cmd = app.add_subcommand("tables", "reproduce the built-in bound tables");
    int tb_which = 1;
    tb_cmd->add_option("--which", tb_which, "table number (1 or 2)")->required();
    add_common(tb_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        bchmp::kernels::force_implementation(kernel_impl.c_str());
        if (coset_cmd->parsed()) return run_coset(opt, c_n, c_q, c_i);
        if (bch_cmd->parsed()) return run_bch(opt, b_n, b_q, b_delta, b_b);
        if (ds_cmd->parsed()) return run_dualset(opt, d_n, d_q, d_delta, d_b, d_inner);
        if (md_cmd->parsed())
            return run_mindist(opt, md_code, md_n, md_q, md_delta, md_b, md_dual);
        if (mp_cmd->parsed()) return run_mp(opt, mp_codes, mp_matrix, mp_mindist, mp_out);
        if (sd_cmd->parsed())
            return run_selfdual(opt, sd_code, sd_matrix, sd_inner, sd_mindist, sd_out);
        if (vf_cmd->parsed()) return run_verify(opt, vf);
        if (tb_cmd->parsed()) return run_tables(opt, tb_which);
        return kExitUsage;
    } catch (const bchmp::param_error& e) {
        if (opt.json())
            std::cout << json{{"schema_version", bchmp::kSchemaVersion},
                              {"error", {{"type", "param_error"}, {"message", e.what()}}}}
                             .dump(2)
                      << "\n";
        else
            std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParam;
    } catch (const bchmp::budget_error& e) {
        if (opt.json())
            std::cout << json{{"schema_version", bchmp::kSchemaVersion},
                              {"error", {{"type", "budget_error"}, {"message", e.what()}}}}
                             .dump(2)
                      << "\n";
        else
            std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        if (opt.json())
            std::cout << json{{"schema_version", bchmp::kSchemaVersion},
                              {"error",
                               {{"type", "invariant_error"}, {"message", e.what()}}}}
                             .dump(2)
                      << "\n";
        else
            std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
