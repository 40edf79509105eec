/**************************************************************************
 * acceptance.cpp
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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// failures carry concrete witnesses. Criteria 1 and 2 drive the CLI binary
// through its JSON interface; the rest exercise the library directly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bchmp/bch.hpp"
#include "bchmp/bounds.hpp"
#include "bchmp/mpc.hpp"

using namespace bchmp;
using nlohmann::json;

namespace {

std::string g_cli_path = "./bchmp";

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct Check {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    FAILED: " << what << "\n";
        }
    }
    void note(const std::string& what) { log << "    " << what << "\n"; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Table 1 reproduction through the CLI: bounds (9, 27, 9, 25), run-scan
//    verification on every row, exhaustive dual distance on the first row.
bool criterion1(Check& c) {
    CliResult r = run_cli("tables --which 1 --output json");
    c.expect(r.exit_code == 0, "tables --which 1 exited with " + std::to_string(r.exit_code));
    if (r.exit_code != 0) return c.ok;
    json doc = json::parse(r.out);
    c.expect(doc.at("schema_version") == 1, "schema_version 1");
    const auto& rows = doc.at("rows");
    c.expect(rows.size() == 4, "four rows");
    const std::vector<std::int64_t> expect_bounds{9, 27, 9, 25};
    const std::vector<std::vector<std::int64_t>> expect_tmq{
        {2, 4, 3}, {2, 5, 3}, {3, 5, 3}, {2, 4, 5}};
    for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
        const auto& row = rows[i];
        c.expect(row.at("bound") == expect_bounds[i],
                 "row " + std::to_string(i) + " bound " + row.at("bound").dump() +
                     " expected " + std::to_string(expect_bounds[i]));
        c.expect(row.at("t") == expect_tmq[i][0] && row.at("m") == expect_tmq[i][1] &&
                     row.at("q") == expect_tmq[i][2],
                 "row " + std::to_string(i) + " parameter tuple");
        const std::string st = row.at("status");
        if (row.at("n").get<std::int64_t>() <= 400)
            c.expect(st == "verified_bound" || st == "verified_exact",
                     "row " + std::to_string(i) + " verified via run_scan, got " + st);
    }
    c.expect(rows[0].at("status") == "verified_exact",
             "row (2,4,3) exhaustively verified");

    // the exhaustive leg, independently: exact dual distance over the 3^12
    // message space of the dual code
    bounds::BoundReport rep = bounds::verify_claim(bounds::theorem1_claim(3, 1, 4, 2, 5),
                                                   bounds::VerifyMode::exhaustive);
    c.expect(rep.status == bounds::VerifyStatus::verified_exact,
             "exact dual distance >= 9 at (2,4,3), delta = 5");
    c.note("row (2,4,3): " + rep.evidence);
    return c.ok;
}

// 2. Table 2 reproduction: printed bounds (81, 625) next to theorem values
//    (82, 626); membership {11..19} in T^perpH at the n = 91 analogue; the
//    m = 4 rows verified by defining-set run scan only.
bool criterion2(Check& c) {
    CliResult r = run_cli("tables --which 2 --output json");
    c.expect(r.exit_code == 0, "tables --which 2 exited with " + std::to_string(r.exit_code));
    if (r.exit_code != 0) return c.ok;
    json doc = json::parse(r.out);
    const auto& rows = doc.at("rows");
    c.expect(rows.size() == 3, "two table rows plus the desk-scale analogue");
    c.expect(rows[0].at("bound") == 81 && rows[0].at("theorem_bound") == 82,
             "row 1 prints 81 alongside 82");
    c.expect(rows[1].at("bound") == 625 && rows[1].at("theorem_bound") == 626,
             "row 2 prints 625 alongside 626");
    for (int i = 0; i < 2; ++i)
        c.expect(rows[i].at("status") == "verified_bound",
                 "m = 4 row " + std::to_string(i) + " verified by run scan");
    c.expect(rows[2].at("analogue") == true && rows[2].at("n") == 91,
             "analogue row at n = 91");
    c.expect(rows[2].at("status") == "verified_bound", "analogue verified");

    // exact membership of the proof range at the analogue, all deltas
    for (std::uint64_t delta = 11; delta <= 13; ++delta) {
        DefiningSet T = bch_defining_set(91, 9, delta);
        DefiningSet D = dual_defining_set(T, Inner::hermitian);
        bool contained = true;
        for (std::uint64_t i = 11; i <= 19; ++i) contained = contained && D.contains(i);
        c.expect(contained, "{11..19} inside T^perpH at delta = " + std::to_string(delta));
        c.expect(bch_bound(D) >= 10, "dual run bound >= 10 at delta = " + std::to_string(delta));
    }
    return c.ok;
}

// 3. Lemma 5 sweeps: every admissible u must give a coset leader STRICTLY
//    above q^{st} + q^{s+t-1} - q^{t-1} - 1, with zero failures.
bool criterion3(Check& c) {
    const std::vector<std::array<std::int64_t, 4>> sets = {
        {3, 1, 4, 2}, {5, 1, 4, 2}, {3, 1, 6, 2}, {3, 2, 6, 2}}; // (q, s, m, t)
    for (const auto& p : sets) {
        bounds::BoundReport rep = bounds::lemma5_sweep(p[0], p[1], p[3], p[2]);
        std::ostringstream tag;
        tag << "(q=" << p[0] << ",s=" << p[1] << ",m=" << p[2] << ",t=" << p[3] << ")";
        c.expect(rep.status == bounds::VerifyStatus::verified_exact,
                 "strict sweep at " + tag.str() + ": " + rep.evidence);
        if (rep.status != bounds::VerifyStatus::verified_exact)
            c.note("note: the non-strict comparison (leader >= threshold) holds for "
                   "every u in this sweep; the threshold is attained with equality");
    }
    return c.ok;
}

// 4. Lemma 6 sweeps: every admissible u (the stated range includes the
//    boundary u = Q^{m-t}) must pass.
bool criterion4(Check& c) {
    const std::vector<std::array<std::int64_t, 3>> sets = {
        {3, 3, 2}, {3, 4, 2}, {3, 4, 3}}; // (q, m, t)
    for (const auto& p : sets) {
        bounds::BoundReport rep = bounds::lemma6_sweep(p[0], p[1], p[2]);
        std::ostringstream tag;
        tag << "(q=" << p[0] << ",m=" << p[1] << ",t=" << p[2] << ")";
        c.expect(rep.status == bounds::VerifyStatus::verified_exact,
                 "sweep at " + tag.str() + ": " + rep.evidence);
        if (rep.status != bounds::VerifyStatus::verified_exact) {
            // locate the interior behaviour for the diagnostic note
            const std::int64_t umax = [&] {
                std::int64_t v = 1;
                for (std::int64_t i = 0; i < p[1] - p[2]; ++i) v *= p[0] * p[0];
                return v;
            }();
            bool interior_nonstrict = true;
            for (std::int64_t u = 0; u < umax; ++u) {
                bounds::BoundReport ri = bounds::lemma6_threshold_check(p[0], p[1], p[2], u);
                if (ri.status != bounds::VerifyStatus::verified_exact &&
                    ri.evidence.find("WITNESS: leader " +
                                     std::to_string(ri.claim.claimed_bound)) ==
                        std::string::npos)
                    interior_nonstrict = false;
            }
            c.note(std::string("note: for u <= Q^{m-t}-1 the non-strict comparison ") +
                   (interior_nonstrict ? "holds" : "ALSO fails") +
                   "; the boundary u = Q^{m-t} is a flat counterexample");
        }
    }
    return c.ok;
}

// 5. Proposition-1 case coverage: all seven cases produce certified
//    self-dual codes; case 1 gives [14,7,4] exactly; case 4 works for 20
//    random D with no assumed property.
bool criterion5(Check& c) {
    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);
    const Field& f5 = Field::get(5, 1);
    auto mat = [](const Field& f, Elem a, Elem b, Elem cc, Elem d) {
        return GfMatrix{&f, {{a, b}, {cc, d}}};
    };
    LinearCode hamming(f2, 7,
                       {{1, 0, 0, 0, 1, 1, 0},
                        {0, 1, 0, 0, 1, 0, 1},
                        {0, 0, 1, 0, 0, 1, 1},
                        {0, 0, 0, 1, 1, 1, 1}});

    auto check_build = [&](const LinearCode& d, const GfMatrix& a, int want_case,
                           const std::string& tag) {
        SelfDualResult r = build_self_dual(d, a, Inner::euclidean);
        c.expect(r.verified.self_dual && r.verified.self_orthogonal,
                 tag + ": zero Gram matrix");
        c.expect(r.code.dim() == d.length(), tag + ": dimension n");
        c.expect(r.code.length() == 2 * d.length(), tag + ": length 2n");
        if (want_case > 0)
            c.expect(r.decision.case_id == want_case, tag + ": matched case");
        return r;
    };

    // case 1: [14, 7, 4] with exact distance by enumeration
    SelfDualResult c1 = check_build(hamming, mat(f2, 1, 1, 0, 1), 1, "case 1");
    DistanceResult d1 = min_distance(c1.code);
    c.expect(d1.kind == DistanceResult::Kind::exact && d1.value == 4,
             "case 1 distance exactly 4");

    // case 2: simplex (self-orthogonal)
    check_build(dual(hamming), mat(f2, 1, 0, 1, 1), 2, "case 2");

    // case 3: tetracode [8, 4]
    LinearCode tetra(f3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    SelfDualResult c3 = check_build(tetra, mat(f3, 1, 0, 0, 1), 3, "case 3");
    c.expect(c3.code.length() == 8 && c3.code.dim() == 4, "case 3 is [8, 4]");

    // case 4: 20 random D over GF(5), no property required
    std::mt19937 rng(20260810);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 2 + rng() % 5;
        std::uniform_int_distribution<Elem> dist(0, 4);
        std::vector<std::vector<Elem>> rows(1 + rng() % n, std::vector<Elem>(n));
        for (auto& row : rows)
            for (auto& x : row) x = dist(rng);
        LinearCode d(f5, n, rows);
        check_build(d, mat(f5, 2, 1, 3, 1), 4, "case 4 #" + std::to_string(it));
    }

    // cases 5-7 fixtures over GF(5)
    LinearCode sd5(f5, 4, {{1, 2, 0, 0}, {0, 0, 1, 2}});
    LinearCode so5(f5, 4, {{1, 2, 0, 0}});
    LinearCode dc5(f5, 4, {{1, 2, 0, 0}, {0, 0, 1, 2}, {0, 1, 0, 0}});
    check_build(dc5, mat(f5, 2, 1, 0, 1), 5, "case 5");
    check_build(so5, mat(f5, 1, 0, 3, 4), 6, "case 6");
    check_build(sd5, mat(f5, 1, 0, 0, 1), 7, "case 7");
    return c.ok;
}

// 6. Matrix-product exactness for triangular defining matrices.
bool criterion6(Check& c) {
    std::mt19937 rng(1904);
    int done = 0;
    while (done < 10) {
        const std::uint32_t qs[] = {2, 3, 5};
        const Field& f = Field::get(qs[rng() % 3], 1);
        std::uniform_int_distribution<Elem> nz(1, f.order() - 1);
        std::uniform_int_distribution<Elem> any(0, f.order() - 1);
        const bool upper = rng() % 2 == 0;
        GfMatrix a{&f,
                   upper ? std::vector<std::vector<Elem>>{{nz(rng), any(rng)}, {0, nz(rng)}}
                         : std::vector<std::vector<Elem>>{{nz(rng), 0}, {any(rng), nz(rng)}}};
        const std::size_t n = 4 + rng() % 4;
        std::vector<LinearCode> cs;
        for (int i = 0; i < 2; ++i) {
            std::vector<std::vector<Elem>> rows(1 + rng() % 3, std::vector<Elem>(n));
            for (auto& row : rows)
                for (auto& x : row) x = any(rng);
            cs.emplace_back(f, n, rows);
        }
        if (cs[0].dim() == 0 || cs[1].dim() == 0) continue;
        ++done;
        MpBound bound = mp_distance_bound(a, {min_distance(cs[0]), min_distance(cs[1])});
        c.expect(bound.exact, "triangular bound flagged exact");
        DistanceResult actual = min_distance(matrix_product(cs, a));
        c.expect(actual.value == bound.value,
                 "exact equality #" + std::to_string(done) + ": enumerated " +
                     std::to_string(actual.value) + " vs bound " +
                     std::to_string(bound.value));
    }
    return c.ok;
}

// 7. Aly dual-containing range consistency at n = 40 (max delta 4) and
//    n = 63 (max delta 7), with failure just past the range.
bool criterion7(Check& c) {
    struct Case {
        std::uint64_t n, q;
        std::uint32_t m;
        std::uint64_t max_delta;
    };
    for (const Case& k : {Case{40, 3, 4, 4}, Case{63, 2, 6, 7}}) {
        c.expect(aly_dual_containing_max_delta(k.n, k.q, k.m) == k.max_delta,
                 "max delta at n = " + std::to_string(k.n));
        for (std::uint64_t delta = 2; delta <= k.max_delta; ++delta) {
            BCHSpec spec = bch_code(k.n, k.q, delta);
            LinearCode mat = bch_matrix(spec);
            DualityStatus st = self_duality_status(mat, Inner::euclidean);
            const bool contains = mat.contains(dual(mat));
            c.expect(st.dual_containing && contains,
                     "delta = " + std::to_string(delta) + " dual-containing at n = " +
                         std::to_string(k.n));
        }
        BCHSpec past = bch_code(k.n, k.q, k.max_delta + 1);
        LinearCode mat = bch_matrix(past);
        const bool fails = !self_duality_status(mat, Inner::euclidean).dual_containing &&
                           !mat.contains(dual(mat));
        c.expect(fails, "delta = max + 1 fails containment at n = " + std::to_string(k.n));
    }
    return c.ok;
}

// 8. Structural oracle equivalence: matrix-level dual of the BCH code equals
//    the cyclic code generated from the dual defining set, for all delta.
bool criterion8(Check& c) {
    for (std::uint64_t n : {13ull, 40ull}) {
        for (std::uint64_t delta = 2; delta <= n; ++delta) {
            BCHSpec spec = bch_code(n, 3, delta);
            LinearCode direct = dual(bch_matrix(spec));
            Poly g = generator_from_defining_set(
                dual_defining_set(spec.defining_set, Inner::euclidean));
            LinearCode via_set = cyclic_code(Field::get(3, 1), n, g);
            if (!(direct == via_set)) {
                c.expect(false, "mismatch at n = " + std::to_string(n) +
                                    ", delta = " + std::to_string(delta));
                return c.ok;
            }
        }
        c.note("n = " + std::to_string(n) + ": all delta in [2, " + std::to_string(n) +
               "] canonical matrices identical");
    }
    return c.ok;
}

// 9. Square-root(-like) character of every catalog theorem, asserted
//    symbolically at its smallest admissible parameters.
bool criterion9(Check& c) {
    using bounds::TheoremId;
    struct Pick {
        TheoremId id;
        std::map<std::string, std::int64_t> params;
    };
    const std::vector<Pick> picks = {
        {TheoremId::thm3, {{"q", 3}, {"lambda", 1}, {"m", 3}, {"delta", 6}}},
        {TheoremId::thm4, {{"q", 3}, {"lambda", 1}, {"m", 3}, {"delta", 8}}},
        {TheoremId::remark_binary, {{"m", 3}, {"delta", 2}, {"construction", 11125}}},
        {TheoremId::remark_binary, {{"m", 3}, {"delta", 4}, {"construction", 1112501}}},
        {TheoremId::thm5, {{"q", 7}, {"m", 4}, {"delta", 124}}},
        {TheoremId::thm6,
         {{"q", 3}, {"s", 1}, {"t", 2}, {"m", 3}, {"delta", 5}, {"construction", 11125}}},
        {TheoremId::thm6,
         {{"q", 3}, {"s", 1}, {"t", 2}, {"m", 3}, {"delta", 5}, {"construction", 1112501}}},
        {TheoremId::thm7, {{"q", 2}, {"m", 3}, {"delta", 6}}},
        {TheoremId::thm8, {{"q", 2}, {"m", 3}, {"delta", 16}}},
        {TheoremId::thm9, {{"q", 2}, {"m", 3}, {"delta", 6}, {"construction", 1125}}},
        {TheoremId::thm9, {{"q", 2}, {"m", 3}, {"delta", 6}, {"construction", 112501}}},
    };
    for (const Pick& p : picks) {
        bounds::BoundClaim claim = bounds::catalog_claim(p.id, p.params);
        bounds::BoundReport rep = bounds::verify_claim(claim, bounds::VerifyMode::run_scan);
        const std::int64_t n = claim.params.at("n");
        const std::int64_t cb = claim.claimed_bound;
        std::ostringstream tag;
        tag << bounds::theorem_name(p.id) << " at n = " << n << ", claimed " << cb;
        if (claim.cls == bounds::BoundClass::square_root)
            c.expect(cb * cb > 2 * n, tag.str() + ": claimed^2 > 2n");
        else
            c.expect(2 * cb * cb > n, tag.str() + ": 2*claimed^2 > n");
        c.expect(rep.status == bounds::VerifyStatus::verified_bound,
                 tag.str() + ": verify_claim agrees");
    }
    c.note("asymptotic/unbounded-length claims are represented by these finite "
           "symbolic checks plus the run-scan and enumeration suites");
    return c.ok;
}

struct Criterion {
    int number;
    const char* title;
    double time_limit;
    std::function<bool(Check&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "Table 1 reproduction (bounds 9, 27, 9, 25; exhaustive at (2,4,3))", 60.0,
     criterion1},
    {2, "Table 2 reproduction (81/82, 625/626; membership {11..19} at n = 91)", 60.0,
     criterion2},
    {3, "Lemma 5 sweeps strictly above the threshold", 10.0, criterion3},
    {4, "Lemma 6 sweeps over the stated u range", 30.0, criterion4},
    {5, "Proposition 1 case coverage (seven cases, certified)", 10.0, criterion5},
    {6, "Matrix-product exactness for triangular matrices", 60.0, criterion6},
    {7, "Dual-containing range consistency", 60.0, criterion7},
    {8, "Structural oracle equivalence (dual = cyclic-from-dual-set)", 60.0, criterion8},
    {9, "Square-root character of the construction catalog", 60.0, criterion9},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (a == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
    }

    bool all_ok = true;
    for (const Criterion& crit : kCriteria) {
        if (only != 0 && crit.number != only) continue;
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = crit.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        if (dt > crit.time_limit) {
            ok = false;
            c.expect(false, "runtime " + std::to_string(dt) + "s exceeds " +
                                std::to_string(crit.time_limit) + "s");
        }
        std::printf("%s  criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", crit.number,
                    crit.title, dt);
        std::fputs(c.log.str().c_str(), stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
