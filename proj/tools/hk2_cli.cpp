/*
 * Copyright 2026 the hk2 authors
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
 */

// Command line front end for the characteristic-two colength library.
// Every numeric field is exact; decimals only appear in fields whose name
// says they are approximations.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hk2/hk2.hpp"

namespace {

using hk2::Dyadic;
using hk2::Rat;
using nlohmann::ordered_json;

struct CliError {
    std::string message;
    int code = 2;
};

struct RunContext {
    std::string cache_dir;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string format = "json";
    hk2::ColengthCache cache;

    void open_cache() {
        std::string file;
        if (!cache_dir.empty()) {
            std::filesystem::create_directories(cache_dir);
            file = cache_dir + "/colengths.csv";
        } else {
            file = hk2::default_cache_file();
        }
        if (!file.empty()) cache.open(file);
    }
};

struct Verdicts {
    ordered_json obj = ordered_json::object();
    bool all = true;

    void add(const std::string& name, bool ok) {
        obj[name] = ok ? "pass" : "fail";
        all = all && ok;
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Dyadic parse_point(const std::string& text) {
    Rat r;
    try {
        r = hk2::rat_from_string(text);
    } catch (const std::exception&) {
        throw CliError{"cannot parse point '" + text + "' (expected p/q)"};
    }
    if (r < 0 || r > 1) throw CliError{"point " + text + " lies outside [0,1]"};
    hk2::Int den = denominator(r);
    unsigned level = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++level;
    }
    if (den != 1) throw CliError{"point " + text + " is not dyadic (denominator must be 2^k)"};
    if (level > 62) throw CliError{"point " + text + " is deeper than level 62"};
    return Dyadic(numerator(r).convert_to<std::uint64_t>(), level);
}

hk2::XElement parse_expr(const std::string& text) {
    try {
        return hk2::parse_element(text);
    } catch (const std::exception& e) {
        throw CliError{std::string("cannot parse generator expression: ") + e.what()};
    }
}

ordered_json term_list(const hk2::BiPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const hk2::PolyTerm& t : hk2::bi_terms(p)) {
        std::string s = hk2::rat_to_string(t.coeff);
        if (t.xdeg > 0) s += "*x^" + std::to_string(t.xdeg);
        if (t.wdeg > 0) s += "*w^" + std::to_string(t.wdeg);
        arr.push_back(s);
    }
    return arr;
}

ordered_json term_list(const hk2::UniPoly& p, const std::string& var) {
    ordered_json arr = ordered_json::array();
    for (long k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == 0) continue;
        std::string s = hk2::rat_to_string(p.coeff(k));
        if (k > 0) s += "*" + var + "^" + std::to_string(k);
        arr.push_back(s);
    }
    return arr;
}

void emit(const RunContext& ctx, const ordered_json& doc, const std::string& csv) {
    if (ctx.format == "csv") {
        if (csv.empty()) throw CliError{"csv output is not available for this subcommand"};
        std::cout << csv;
        return;
    }
    if (ctx.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // Plain text: one "key: value" line per top-level field, entries verbatim.
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array() || value.is_object())
            std::cout << key << ": " << value.dump() << "\n";
        else if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

ordered_json envelope(const RunContext& ctx, const std::string& sub) {
    ordered_json doc;
    doc["subcommand"] = sub;
    doc["seed"] = ctx.seed;
    return doc;
}

int finish(const RunContext& ctx, ordered_json& doc, const Timer& timer, const Verdicts* v,
           const std::string& csv = std::string()) {
    if (v != nullptr) doc["verdicts"] = v->obj;
    doc["elapsed_ms"] = timer.elapsed_ms();
    emit(ctx, doc, csv);
    return (v == nullptr || v->all) ? 0 : 1;
}

void require_power_of_two(std::uint64_t q, const std::string& what) {
    if (q < 2 || (q & (q - 1)) != 0) throw CliError{what + " must be a power of two, at least 2"};
}

// Refuse grids whose quotient dimension would blow the in-memory cap, with
// an explanation instead of a bare failure.
void require_feasible(const hk2::F2MultiPoly& f, std::uint64_t q) {
    const unsigned r = static_cast<unsigned>(f.vars().size());
    std::uint64_t dim = 1;
    for (unsigned k = 0; k < r; ++k) {
        dim *= q;
        if (dim > hk2::kMaxQuotientDim)
            throw CliError{"q=" + std::to_string(q) + " on " + std::to_string(r) +
                           " variables needs an F2 quotient of dimension q^r > " +
                           std::to_string(hk2::kMaxQuotientDim) +
                           "; this exceeds the in-memory rank computation cap"};
    }
}

// ---------------------------------------------------------------- colength

int run_colength(RunContext& ctx, const std::string& poly, std::uint64_t q, std::int64_t i_opt) {
    Timer timer;
    require_power_of_two(q, "--q");
    hk2::F2MultiPoly f = hk2::F2MultiPoly::parse(poly);
    require_feasible(f, q);

    std::vector<hk2::ColengthJob> jobs;
    if (i_opt >= 0) {
        if (std::uint64_t(i_opt) > q) throw CliError{"--i must satisfy 0 <= i <= q"};
        jobs.push_back({q, std::uint64_t(i_opt)});
    } else {
        for (std::uint64_t i = 0; i <= q; ++i) jobs.push_back({q, i});
    }
    const std::vector<std::int64_t> values = hk2::colength_batch(f, jobs, ctx.jobs, &ctx.cache);
    const unsigned r = static_cast<unsigned>(f.vars().size());
    const hk2::Int qr = hk2::int_pow(hk2::Int(q), r);

    ordered_json doc = envelope(ctx, "colength");
    doc["poly"] = f.canonical_string();
    doc["q"] = q;
    std::string csv = "q,i,colength,phi\n";
    ordered_json entries = ordered_json::array();
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Rat phi(hk2::Int(values[k]), qr);
        ordered_json e;
        e["i"] = jobs[k].i;
        e["colength"] = values[k];
        e["phi"] = hk2::rat_to_string(phi);
        entries.push_back(e);
        csv += std::to_string(jobs[k].q) + "," + std::to_string(jobs[k].i) + "," +
               std::to_string(values[k]) + "," + hk2::rat_to_string(phi) + "\n";
    }
    if (i_opt >= 0) {
        doc["i"] = entries[0]["i"];
        doc["colength"] = entries[0]["colength"];
        doc["phi"] = entries[0]["phi"];
    } else {
        doc["entries"] = entries;
    }
    return finish(ctx, doc, timer, nullptr, csv);
}

// ---------------------------------------------------------------- phi-eval

int run_phi_eval(RunContext& ctx, const std::string& gen, const std::string& point) {
    Timer timer;
    const hk2::XElement e = parse_expr(gen);
    const Dyadic t = parse_point(point);
    hk2::GeneratorRegistry reg;
    const Rat value = reg.eval(e, t);

    ordered_json doc = envelope(ctx, "phi-eval");
    doc["gen"] = e.str();
    doc["point"] = t.str();
    doc["value"] = hk2::rat_to_string(value);
    doc["value_approx"] = hk2::to_double(value);
    return finish(ctx, doc, timer, nullptr);
}

// ---------------------------------------------------------------- grid

int run_grid(RunContext& ctx, const std::string& gen, unsigned level, const std::string& check) {
    Timer timer;
    if (level > 16) throw CliError{"--level beyond 16 is not supported for grid sweeps"};
    const hk2::XElement e = parse_expr(gen);
    hk2::GeneratorRegistry reg;
    hk2::XFunction fn = reg.as_function(e);
    const std::vector<Rat> values = hk2::grid_values(fn, level);

    ordered_json doc = envelope(ctx, "grid");
    doc["gen"] = e.str();
    doc["level"] = level;
    ordered_json entries = ordered_json::array();
    std::string csv = "point,value\n";
    const std::uint64_t q = std::uint64_t(1) << level;
    for (std::uint64_t i = 0; i <= q; ++i) {
        ordered_json row;
        row["point"] = Dyadic(i, level).str();
        row["value"] = hk2::rat_to_string(values[i]);
        entries.push_back(row);
        csv += Dyadic(i, level).str() + "," + hk2::rat_to_string(values[i]) + "\n";
    }
    doc["entries"] = entries;

    if (check.empty() || check == "none") return finish(ctx, doc, timer, nullptr, csv);
    Verdicts v;
    if (check == "convex") {
        v.add("convex", hk2::is_convex_on_grid(values));
    } else {
        throw CliError{"unknown --check '" + check + "' (expected convex)"};
    }
    return finish(ctx, doc, timer, &v, csv);
}

// ---------------------------------------------------------------- sharp

int run_sharp(RunContext& ctx, const std::string& left, const std::string& right,
              const std::string& point, const std::string& engine) {
    Timer timer;
    const hk2::XElement a = parse_expr(left);
    const hk2::XElement b = parse_expr(right);
    const Dyadic t = parse_point(point);
    hk2::GeneratorRegistry reg;

    ordered_json doc = envelope(ctx, "sharp");
    doc["left"] = a.str();
    doc["right"] = b.str();
    doc["point"] = t.str();

    bool want_symbolic = engine == "symbolic" || engine == "both";
    bool want_blackbox = engine == "blackbox" || engine == "both";
    if (!want_symbolic && !want_blackbox)
        throw CliError{"unknown --engine '" + engine + "' (expected symbolic, blackbox or both)"};

    Rat symbolic, blackbox;
    if (want_symbolic) {
        symbolic = reg.eval(reg.sharp(a, b), t);
        doc["symbolic"] = hk2::rat_to_string(symbolic);
    }
    if (want_blackbox) {
        hk2::SharpBlackbox box(reg.as_function(a), reg.as_function(b), t.level() + 2, true);
        blackbox = box.eval(t);
        doc["blackbox"] = hk2::rat_to_string(blackbox);
    }
    if (want_symbolic && want_blackbox) {
        Verdicts v;
        v.add("engines_agree", symbolic == blackbox);
        return finish(ctx, doc, timer, &v);
    }
    return finish(ctx, doc, timer, nullptr);
}

// ---------------------------------------------------------------- gamma

// delta_decompose returns the coefficient of delta_r at index r-1.
ordered_json delta_json(const std::vector<Rat>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        ordered_json e;
        e["delta"] = k + 1;
        e["coefficient"] = hk2::rat_to_string(coeffs[k]);
        arr.push_back(e);
    }
    return arr;
}

std::uint64_t pow2_at_least(std::uint64_t n) {
    std::uint64_t q = 1;
    while (q < n) q <<= 1;
    return q;
}

int run_gamma(RunContext& ctx, const std::string& op, std::uint64_t r, std::uint64_t s) {
    Timer timer;
    if (r == 0 || s == 0) throw CliError{"--r and --s must be positive"};
    if (r > 64 || s > 64) throw CliError{"--r and --s beyond 64 are not supported"};

    ordered_json doc = envelope(ctx, "gamma");
    doc["op"] = op;
    doc["r"] = r;
    doc["s"] = s;

    if (op == "tensor") {
        const std::vector<std::uint64_t> blocks = hk2::jordan_tensor(r, s);
        ordered_json blist = ordered_json::array();
        std::uint64_t maxblock = 1;
        for (std::uint64_t b : blocks) {
            blist.push_back(b);
            maxblock = std::max(maxblock, b);
        }
        doc["jordan_blocks"] = blist;
        const hk2::GammaElement from_blocks = hk2::gamma_class(blocks);
        const hk2::GammaElement from_nim =
            hk2::GammaElement::delta(r) * hk2::GammaElement::delta(s);
        doc["class"] = from_blocks.str();
        const std::uint64_t q = pow2_at_least(std::max({r, s, maxblock}));
        doc["delta_decomposition"] = delta_json(hk2::delta_decompose(from_blocks, q));
        Verdicts v;
        v.add("nim_product_matches_jordan_type", from_blocks == from_nim);
        return finish(ctx, doc, timer, &v);
    }
    if (op == "nim") {
        const hk2::GammaElement prod = hk2::GammaElement::delta(r) * hk2::GammaElement::delta(s);
        doc["class"] = prod.str();
        const std::uint64_t q = pow2_at_least(std::max(r, s));
        const std::vector<Rat> coeffs = hk2::delta_decompose(prod, 2 * q);
        doc["delta_decomposition"] = delta_json(coeffs);
        Verdicts v;
        v.add("decomposition_admissible", hk2::delta_coefficients_admissible(coeffs));
        return finish(ctx, doc, timer, &v);
    }
    throw CliError{"unknown --op '" + op + "' (expected tensor or nim)"};
}

// ---------------------------------------------------------------- conjecture

int run_conjecture(RunContext& ctx, const std::string& poly, const std::string& model_text,
                   std::uint64_t qmax, bool q32) {
    Timer timer;
    require_power_of_two(qmax, "--qmax");
    if (qmax > 16 && !q32)
        throw CliError{"qmax beyond 16 multiplies runtime sharply; pass --q32 to allow q=32"};
    hk2::F2MultiPoly f = hk2::F2MultiPoly::parse(poly);
    require_feasible(f, qmax);

    hk2::GeneratorRegistry reg;
    const hk2::XElement model = parse_expr(model_text);
    const hk2::SweepReport report =
        hk2::conjecture_sweep(poly, reg, model, qmax, &ctx.cache, ctx.jobs);

    ordered_json doc = envelope(ctx, "conjecture");
    doc["poly"] = report.poly;
    doc["model"] = report.model;
    doc["qmax"] = qmax;
    ordered_json entries = ordered_json::array();
    std::string csv = "q,i,colength,phi,model,ok\n";
    for (const hk2::SweepEntry& e : report.entries) {
        ordered_json row;
        row["q"] = e.q;
        row["i"] = e.i;
        row["colength"] = e.colength_value;
        row["phi"] = hk2::rat_to_string(e.phi_value);
        row["model"] = hk2::rat_to_string(e.model_value);
        row["ok"] = e.ok;
        entries.push_back(row);
        csv += std::to_string(e.q) + "," + std::to_string(e.i) + "," +
               std::to_string(e.colength_value) + "," + hk2::rat_to_string(e.phi_value) + "," +
               hk2::rat_to_string(e.model_value) + "," + (e.ok ? "1" : "0") + "\n";
    }
    doc["entries"] = entries;
    doc["mismatches"] = report.mismatches;

    // Multiplicity estimates 2^n phi(2^-n) ride along for free: every value
    // they need is already in the cache after the sweep.
    unsigned depth = 0;
    for (std::uint64_t q = qmax; q > 1; q >>= 1) ++depth;
    const std::vector<Rat> mu = hk2::mu_estimates(poly, depth + 1, &ctx.cache);
    ordered_json mu_rows = ordered_json::array();
    bool nondecreasing = true;
    for (std::size_t n = 0; n < mu.size(); ++n) {
        ordered_json row;
        row["n"] = n;
        row["estimate"] = hk2::rat_to_string(mu[n]);
        row["estimate_approx"] = hk2::to_double(mu[n]);
        mu_rows.push_back(row);
        if (n > 0 && mu[n] < mu[n - 1]) nondecreasing = false;
    }
    doc["mu_estimates"] = mu_rows;

    Verdicts v;
    v.add("phi_matches_model", report.mismatches == 0);
    v.add("mu_estimates_nondecreasing", nondecreasing);
    return finish(ctx, doc, timer, &v, csv);
}

// ---------------------------------------------------------------- thm19

int run_thm19(RunContext& ctx, const std::string& left, const std::string& right,
              std::uint64_t qmax, bool fivevar_q8) {
    Timer timer;
    require_power_of_two(qmax, "--qmax");
    if (qmax > 4 && !fivevar_q8)
        throw CliError{"qmax beyond 4 needs five-variable colengths at the dimension cap; "
                       "pass --fivevar-q8 to allow q=8"};
    if (qmax > 8) throw CliError{"qmax beyond 8 exceeds the five-variable dimension cap"};
    unsigned level = 0;
    for (std::uint64_t q = qmax; q > 1; q >>= 1) ++level;

    const hk2::PairCheckReport report =
        hk2::disjoint_sum_check(left, right, level, &ctx.cache, ctx.jobs);

    ordered_json doc = envelope(ctx, "thm19");
    doc["left"] = report.left;
    doc["right"] = report.right;
    doc["sum"] = report.sum;
    doc["qmax"] = qmax;
    ordered_json entries = ordered_json::array();
    for (const hk2::PairCheckEntry& e : report.entries) {
        ordered_json row;
        row["point"] = e.t.str();
        row["direct"] = hk2::rat_to_string(e.direct);
        row["product"] = hk2::rat_to_string(e.product);
        row["ok"] = e.ok;
        entries.push_back(row);
    }
    doc["entries"] = entries;
    doc["mismatches"] = report.mismatches;
    Verdicts v;
    v.add("sum_factors_through_sharp", report.mismatches == 0);
    return finish(ctx, doc, timer, &v);
}

// ---------------------------------------------------------------- series

int run_series(RunContext& ctx, const std::string& engine, unsigned order) {
    Timer timer;
    if (order > 200) throw CliError{"--order beyond 200 is not supported"};
    bool want_band = engine == "band" || engine == "both";
    bool want_closed = engine == "closed" || engine == "both";
    if (!want_band && !want_closed)
        throw CliError{"unknown --engine '" + engine + "' (expected band, closed or both)"};

    ordered_json doc = envelope(ctx, "series");
    doc["order"] = order;
    std::string csv = "n,value\n";
    std::vector<hk2::Int> band;
    hk2::TruncSeries closed(0);
    if (want_band) {
        band = hk2::e1_band_sequence(order + 1);
        ordered_json arr = ordered_json::array();
        for (const hk2::Int& b : band) arr.push_back(b.str());
        doc["band"] = arr;
        for (unsigned n = 0; n <= order; ++n) csv += std::to_string(n) + "," + band[n].str() + "\n";
    }
    if (want_closed) {
        closed = hk2::band_series_closed_form(order);
        ordered_json arr = ordered_json::array();
        for (unsigned n = 0; n <= order; ++n) arr.push_back(hk2::rat_to_string(closed.coeff(n)));
        doc["closed"] = arr;
        if (!want_band)
            for (unsigned n = 0; n <= order; ++n)
                csv += std::to_string(n) + "," + hk2::rat_to_string(closed.coeff(n)) + "\n";
    }
    if (want_band && want_closed) {
        bool agree = true;
        for (unsigned n = 0; n <= order; ++n)
            if (Rat(band[n]) != closed.coeff(n)) agree = false;
        Verdicts v;
        v.add("engines_agree", agree);
        return finish(ctx, doc, timer, &v, csv);
    }
    return finish(ctx, doc, timer, nullptr, csv);
}

// ---------------------------------------------------------------- lambda

int run_lambda(RunContext& ctx) {
    Timer timer;
    const hk2::QuadraticNumber lambda = hk2::lambda_exact();
    const hk2::QuadraticNumber mu = hk2::mu_uv_plus_nodal_exact();

    ordered_json doc = envelope(ctx, "lambda");
    doc["lambda_exact"] = lambda.str();
    doc["lambda_approx"] = lambda.to_double();
    doc["mu_exact"] = mu.str();
    doc["mu_approx"] = mu.to_double();

    const std::vector<hk2::BandConvergenceRow> rows = hk2::band_convergence(13);
    ordered_json table = ordered_json::array();
    for (const hk2::BandConvergenceRow& row : rows) {
        ordered_json e;
        e["n"] = row.n;
        e["scaled"] = hk2::rat_to_string(row.scaled);
        e["gap_approx"] = row.gap.to_double();
        table.push_back(e);
    }
    doc["convergence"] = table;

    Verdicts v;
    const hk2::QuadraticNumber bound(Rat(1, 10000));
    v.add("gap_below_1e-4_at_n12", rows.back().gap < bound);
    v.add("gap_strictly_decreasing_from_n2", hk2::band_gaps_strictly_decreasing(rows, 2));
    return finish(ctx, doc, timer, &v);
}

// ---------------------------------------------------------------- psi

int run_psi(RunContext& ctx, const std::string& data) {
    Timer timer;
    if (data != "section4")
        throw CliError{"unknown --data '" + data + "' (only section4 is bundled)"};

    const hk2::BiPoly psi = hk2::psi_polynomial(hk2::SexticRep::j0(), hk2::SexticRep::j1());
    const hk2::BiPoly star = hk2::psi_star_reference();
    const hk2::BiPoly expected = star * hk2::bi_constant(Rat(-1)) * hk2::bi_x() * hk2::bi_x();

    ordered_json doc = envelope(ctx, "psi");
    doc["data"] = data;
    doc["source_polynomial"] = hk2::SexticRep::source_polynomial();
    doc["determinant"] = term_list(psi);
    doc["psi_star"] = term_list(star);
    Verdicts v;
    v.add("determinant_equals_minus_x2_psi_star", psi == expected);
    return finish(ctx, doc, timer, &v);
}

// ------------------------------------------------------- section4-report

int run_section4_report(RunContext& ctx, bool u2_stretch) {
    Timer timer;
    ordered_json doc = envelope(ctx, "section4-report");
    Verdicts v;

    doc["source_polynomial"] = hk2::SexticRep::source_polynomial();

    const hk2::BiPoly psi = hk2::psi_polynomial(hk2::SexticRep::j0(), hk2::SexticRep::j1());
    const hk2::BiPoly star = hk2::psi_star_reference();
    doc["psi_star"] = term_list(star);
    v.add("determinant_equals_minus_x2_psi_star",
          psi == star * hk2::bi_constant(Rat(-1)) * hk2::bi_x() * hk2::bi_x());

    const hk2::BiPoly cubic = hk2::fold_reciprocal(star);
    ordered_json cubic_obj = ordered_json::object();
    for (long k = cubic.degree(); k >= 0; --k)
        cubic_obj["y^" + std::to_string(k)] = term_list(cubic.coeff(k), "w");
    doc["folded_cubic"] = cubic_obj;

    const hk2::UniPoly u1sq = hk2::u1_squared_from_cubic(cubic);
    ordered_json u1_obj;
    u1_obj["factored_form"] = "(w^2-1)^2 * (w^2+1)^4 * ((1-w^2)^2 - 4*w^6)";
    u1_obj["terms"] = term_list(u1sq, "w");
    doc["u1_squared"] = u1_obj;
    v.add("u1_squared_matches_reference", u1sq == hk2::u1_squared_reference());

    const hk2::ResidueReport rr = hk2::residue_field_report(u1sq, Rat(1, 16));
    ordered_json res_obj;
    res_obj["point"] = "1/16";
    res_obj["value"] = hk2::rat_to_string(rr.value);
    res_obj["squarefree_part"] = rr.radicand.str();
    ordered_json factors = ordered_json::array();
    for (const auto& [p, e] : rr.factors) {
        ordered_json fe;
        fe["prime"] = p.str();
        fe["multiplicity"] = e;
        factors.push_back(fe);
    }
    res_obj["factors"] = factors;
    doc["residue_field"] = res_obj;
    v.add("residue_squarefree_part_is_13_157_2039", rr.radicand == hk2::Int(4161599));

    // Advisory block: the half-values fitted from colength data, plus the
    // grid checks that the fitted family closes under magnification.  Not
    // part of the exit verdict.
    {
        hk2::BetaChain chain = hk2::fit_beta_chain(&ctx.cache);
        ordered_json fit;
        fit["advisory"] = true;
        ordered_json cs = ordered_json::array();
        for (const Rat& c : chain.c) cs.push_back(hk2::rat_to_string(c));
        fit["half_values"] = cs;
        const std::vector<hk2::ClosureCheck> checks = hk2::closure_checks(chain, 2);
        std::size_t failures = 0;
        for (const hk2::ClosureCheck& ck : checks)
            if (!ck.ok) ++failures;
        fit["closure_checks"] = checks.size();
        fit["closure_failures"] = failures;
        doc["beta_chain_fit"] = fit;
    }

    if (u2_stretch) {
        const hk2::BiPoly quartic = hk2::u2_quartic_from_cubic(cubic);
        const hk2::UniPoly disc = hk2::u2_discriminant(quartic);
        ordered_json u2_obj = ordered_json::object();
        ordered_json q_obj = ordered_json::object();
        for (long k = quartic.degree(); k >= 0; --k)
            q_obj["z^" + std::to_string(k)] = term_list(quartic.coeff(k), "w");
        u2_obj["quartic"] = q_obj;
        u2_obj["discriminant_degree"] = disc.degree();
        doc["u2"] = u2_obj;
        const std::vector<hk2::UniPoly> primes = hk2::ramified_prime_reference();
        for (std::size_t k = 0; k < primes.size(); ++k)
            v.add("ramified_prime_" + std::to_string(k + 1) + "_divides_discriminant",
                  hk2::divides(primes[k], disc));
    }

    return finish(ctx, doc, timer, &v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert-Kunz colength calculator for characteristic two"};
    app.require_subcommand(1);

    RunContext ctx;
    app.add_option("--cache", ctx.cache_dir, "Directory for the shared colength cache");
    app.add_option("--jobs", ctx.jobs, "Worker threads for independent colength jobs")
        ->check(CLI::Range(1u, 64u));
    app.add_option("--seed", ctx.seed, "Seed echoed into the report (for scripted sweeps)");
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // colength
    auto* c_col = app.add_subcommand("colength", "Colength of f^i on the q-th Frobenius quotient");
    std::string col_poly;
    std::uint64_t col_q = 2;
    std::int64_t col_i = -1;
    c_col->add_option("--poly", col_poly, "Polynomial over F2, e.g. \"x^3+y^3+x*y*z\"")
        ->required();
    c_col->add_option("--q", col_q, "Power of two")->required();
    c_col->add_option("--i", col_i, "Numerator (omit to sweep 0..q)");

    // phi-eval
    auto* c_phi = app.add_subcommand("phi-eval", "Evaluate a generator combination at a point");
    std::string phi_gen, phi_point;
    c_phi->add_option("--gen", phi_gen, "Expression, e.g. \"t+phi0\"")->required();
    c_phi->add_option("--point", phi_point, "Dyadic point p/q")->required();

    // grid
    auto* c_grid = app.add_subcommand("grid", "Tabulate a generator combination on a dyadic grid");
    std::string grid_gen, grid_check;
    unsigned grid_level = 4;
    c_grid->add_option("--gen", grid_gen, "Expression, e.g. \"t+phi0\"")->required();
    c_grid->add_option("--level", grid_level, "Grid level n (points i/2^n)")->required();
    c_grid->add_option("--check", grid_check, "Property to verify: convex");

    // sharp
    auto* c_sharp = app.add_subcommand("sharp", "Evaluate a # product");
    std::string sharp_left, sharp_right, sharp_point, sharp_engine = "both";
    c_sharp->add_option("--left", sharp_left, "Left factor expression")->required();
    c_sharp->add_option("--right", sharp_right, "Right factor expression")->required();
    c_sharp->add_option("--point", sharp_point, "Dyadic point p/q")->required();
    c_sharp->add_option("--engine", sharp_engine, "symbolic, blackbox or both");

    // gamma
    auto* c_gamma = app.add_subcommand("gamma", "Grothendieck ring computations");
    std::string gamma_op = "tensor";
    std::uint64_t gamma_r = 2, gamma_s = 2;
    c_gamma->add_option("--op", gamma_op, "tensor or nim")->required();
    c_gamma->add_option("--r", gamma_r, "First block size")->required();
    c_gamma->add_option("--s", gamma_s, "Second block size")->required();

    // conjecture
    auto* c_conj = app.add_subcommand(
        "conjecture", "Sweep colengths of a polynomial against a generator model");
    std::string conj_poly = hk2::nodal_cubic_text();
    std::string conj_model = "t+phi0";
    std::uint64_t conj_qmax = 16;
    bool conj_q32 = false;
    c_conj->add_option("--poly", conj_poly, "Polynomial over F2");
    c_conj->add_option("--model", conj_model, "Model expression");
    c_conj->add_option("--qmax", conj_qmax, "Largest q in the sweep");
    c_conj->add_flag("--q32", conj_q32, "Allow the long q=32 pass");

    // thm19
    auto* c_t19 = app.add_subcommand(
        "thm19", "Check that phi of a disjoint-variable sum is the # product of the parts");
    std::string t19_left = "u*v";
    std::string t19_right = hk2::nodal_cubic_text();
    std::uint64_t t19_qmax = 4;
    bool t19_q8 = false;
    c_t19->add_option("--left", t19_left, "First polynomial");
    c_t19->add_option("--right", t19_right, "Second polynomial (disjoint variables)");
    c_t19->add_option("--qmax", t19_qmax, "Grid denominator");
    c_t19->add_flag("--fivevar-q8", t19_q8, "Allow the long five-variable q=8 pass");

    // series
    auto* c_series = app.add_subcommand("series", "Band recurrence series coefficients");
    std::string series_engine = "both";
    unsigned series_order = 12;
    c_series->add_option("--engine", series_engine, "band, closed or both");
    c_series->add_option("--order", series_order, "Highest coefficient index");

    // lambda
    app.add_subcommand("lambda", "Exact limit of the scaled band sequence");

    // psi
    auto* c_psi = app.add_subcommand("psi", "Characteristic polynomial of a matrix family");
    std::string psi_data;
    c_psi->add_option("--data", psi_data, "Bundled data set name (section4)")->required();

    // section4-report
    auto* c_s4 = app.add_subcommand("section4-report",
                                    "Full report on the bundled sextic data set");
    bool s4_u2 = false;
    c_s4->add_flag("--u2-stretch", s4_u2, "Include the second-period quartic block");

    CLI11_PARSE(app, argc, argv);

    try {
        ctx.open_cache();
        if (c_col->parsed()) return run_colength(ctx, col_poly, col_q, col_i);
        if (c_phi->parsed()) return run_phi_eval(ctx, phi_gen, phi_point);
        if (c_grid->parsed()) return run_grid(ctx, grid_gen, grid_level, grid_check);
        if (c_sharp->parsed())
            return run_sharp(ctx, sharp_left, sharp_right, sharp_point, sharp_engine);
        if (c_gamma->parsed()) return run_gamma(ctx, gamma_op, gamma_r, gamma_s);
        if (c_conj->parsed())
            return run_conjecture(ctx, conj_poly, conj_model, conj_qmax, conj_q32);
        if (c_t19->parsed()) return run_thm19(ctx, t19_left, t19_right, t19_qmax, t19_q8);
        if (c_series->parsed()) return run_series(ctx, series_engine, series_order);
        if (app.get_subcommand("lambda")->parsed()) return run_lambda(ctx);
        if (c_psi->parsed()) return run_psi(ctx, psi_data);
        if (c_s4->parsed()) return run_section4_report(ctx, s4_u2);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
}
