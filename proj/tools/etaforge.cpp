// etaforge: exact arithmetic for holomorphic eta quotients of a fixed level.
//
// Subcommands: matrix, enumerate, census, kmin, kmax, fn, factorize, qexp,
// tables, check.  All data-mode output is deterministic; --verbose adds a
// header line that is excluded from the determinism contract.
//
// Exit codes: 0 success (including conjecture mismatches, which are reported,
// not failed), 1 theorem-check failure or internal error, 2 invalid flags or
// input, 3 cost-guard violation.
#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etaforge/factor.hpp"
#include "etaforge/qseries.hpp"

using namespace etaforge;
using nlohmann::ordered_json;

namespace {

ordered_json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::string rat_str(const Rat& v) {
    const Int num(boost::multiprecision::numerator(v));
    const Int den(boost::multiprecision::denominator(v));
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

ordered_json rat_json(const Rat& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return int_json(Int(boost::multiprecision::numerator(v)));
    return rat_str(v);
}

ordered_json orders_json(const EtaQuotient& f) {
    ordered_json a = ordered_json::array();
    for (const Int& v : scaled_orders(f)) a.push_back(int_json(v));
    return a;
}

// "6,10..14,30" -> {6,10,11,12,13,14,30}; throws std::invalid_argument.
std::vector<long long> parse_levels(const std::string& text) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty level token in '" + text + "'");
        long long a, b;
        auto dots = tok.find("..");
        try {
            std::size_t used = 0;
            if (dots == std::string::npos) {
                a = b = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
            } else {
                std::string left = tok.substr(0, dots), right = tok.substr(dots + 2);
                a = std::stoll(left, &used);
                if (used != left.size()) throw std::invalid_argument("");
                b = std::stoll(right, &used);
                if (used != right.size()) throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad level token '" + tok + "': want N or A..B");
        }
        if (a < 1 || b < a) throw std::invalid_argument("bad level range '" + tok + "'");
        if (b - a > 1'000'000) throw std::invalid_argument("level range '" + tok + "' too wide");
        for (long long n = a; n <= b; ++n) out.push_back(n);
    }
    if (out.empty()) throw std::invalid_argument("no levels given");
    return out;
}

// ---------------------------------------------------------------- matrix ----

int cmd_matrix(long long n, const std::string& which, const std::string& format) {
    require_divisor_guard(n, 64);
    auto ld = LevelData::get(n);
    const bool rational = (which == "A-inv" || which == "B-inv");
    const IntMat* im = nullptr;
    const RatMat* rm = nullptr;
    if (which == "A") im = &ld->order_mat;
    else if (which == "B") im = &ld->weight_mat;
    else if (which == "C") im = &ld->cusp_simplex;
    else if (which == "A-inv") rm = &ld->order_inv;
    else if (which == "B-inv") rm = &ld->weight_inv;
    else throw std::invalid_argument("unknown matrix kind '" + which + "'");

    if (format == "table") {
        if (im) std::cout << format_matrix(*im);
        else std::cout << format_matrix(*rm);
        return 0;
    }
    ordered_json j;
    j["level"] = n;
    j["basis"] = ld->basis.divisors;
    ordered_json rows = ordered_json::array();
    std::size_t dim = ld->dim;
    for (std::size_t i = 0; i < dim; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < dim; ++c)
            row.push_back(rational ? rat_json(rm->at(i, c)) : int_json(im->at(i, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump() << "\n";
    return 0;
}

// ------------------------------------------------------------- enumerate ----

// Enumerate weight-k/2 holomorphic quotients in ascending scaled-order
// order, optionally across several workers; ordering is job-independent.
std::vector<EtaQuotient> enumerate_sorted(long long n, long long k, unsigned jobs) {
    if (k < 0) throw std::invalid_argument("weight numerator must be nonnegative");
    require_divisor_guard(n);
    require_weight_guard(k);
    auto ld = LevelData::get(n);
    long long target = k * ld->index_psi;
    std::vector<long long> hi(ld->dim);
    for (std::size_t i = 0; i < ld->dim; ++i) hi[i] = target / ld->cusp_count[i];

    std::vector<std::vector<long long>> found;
    if (jobs <= 1) {
        sweep_weight_slice(*ld, hi, target,
                           [&](const std::vector<long long>& x) { found.push_back(x); });
    } else {
        std::vector<std::vector<std::vector<long long>>> parts(jobs);
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                sweep_weight_slice(*ld, hi, target,
                                   [&parts, j](const std::vector<long long>& x) {
                                       parts[j].push_back(x);
                                   },
                                   jobs, j);
            });
        for (auto& t : pool) t.join();
        for (auto& p : parts)
            for (auto& x : p) found.push_back(std::move(x));
        std::sort(found.begin(), found.end());
    }
    std::vector<EtaQuotient> out;
    out.reserve(found.size());
    for (const auto& x : found) out.emplace_back(ld, exponent_preimage(*ld, x));
    return out;
}

int cmd_enumerate(long long n, long long k, bool exact, bool primitive, bool quasi,
                  bool count_only, unsigned jobs) {
    auto all = enumerate_sorted(n, k, jobs);
    std::vector<const EtaQuotient*> kept;
    for (const auto& f : all) {
        if (exact || primitive || quasi) {
            auto lvl = level(f);
            if (!lvl) continue;   // the constant carries no level
            if (exact && *lvl != n) continue;
            if (primitive && !is_primitive(f)) continue;
            if (quasi && !is_quasi_irreducible(f)) continue;
        }
        kept.push_back(&f);
    }
    if (count_only) {
        std::cout << kept.size() << "\n";
        return 0;
    }
    for (const EtaQuotient* f : kept) {
        ordered_json line;
        line["exponents"] = eta_to_json(*f)["exponents"];
        line["k"] = weight_numerator(*f);
        line["orders"] = orders_json(*f);
        std::cout << line.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- census ----

const char* source_name(CensusSource s) {
    return s == CensusSource::b_column ? "column" : "parallelepiped";
}

int cmd_census(long long n, bool count_only, unsigned jobs) {
    auto census = nonfactorizable_census(n, jobs);
    if (count_only) {
        std::cout << census.size() << "\n";
        return 0;
    }
    std::cout << "exponents,level,k,source,quasi_irreducible\n";
    for (const auto& e : census)
        std::cout << format_eta(e.quotient) << "," << e.level << "," << e.k << ","
                  << source_name(e.source) << "," << (e.quasi_irreducible ? "true" : "false")
                  << "\n";
    return 0;
}

// ---------------------------------------------------- kmin / kmax / fn ----

int cmd_kmin(long long n, long long cap) {
    auto v = k_min(n, cap);
    ordered_json j;
    j["level"] = n;
    j["kmin"] = v ? ordered_json(*v) : ordered_json(nullptr);
    j["cap"] = cap > 0 ? ordered_json(cap) : ordered_json(nullptr);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_kmax(long long n, unsigned jobs) {
    ordered_json j;
    j["level"] = n;
    j["kmax"] = k_max(n, jobs);
    j["kappa"] = kappa(n);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_fn(long long n) {
    require_divisor_guard(n);
    EtaQuotient f = extremal_quotient(n);
    ordered_json j;
    j["level"] = n;
    j["eta"] = format_eta(f);
    j["k"] = weight_numerator(f);
    j["exponents"] = eta_to_json(f)["exponents"];
    j["orders"] = orders_json(f);
    std::cout << j.dump() << "\n";
    return 0;
}

// ------------------------------------------------------ factorize / qexp ----

int cmd_factorize(const std::string& text, long long modulus) {
    EtaQuotient f = parse_eta(text);
    long long m = modulus;
    if (m == 0) m = f.modulus();
    auto w = factorizable_on(f, m);
    ordered_json j;
    j["input"] = format_eta(f);
    j["factorizable"] = w.has_value();
    if (w) {
        ordered_json wit;
        wit["left"] = format_eta(w->left);
        wit["right"] = format_eta(w->right);
        j["witness"] = std::move(wit);
    } else {
        j["witness"] = nullptr;
    }
    j["modulus"] = m;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_qexp(const std::string& text, long long modulus, long long terms) {
    if (terms < 1) throw std::invalid_argument("--terms must be positive");
    EtaQuotient f = parse_eta(text, modulus);
    QSeries s = q_expansion(f, static_cast<std::size_t>(terms));
    ordered_json j;
    j["eta"] = format_eta(f);
    j["terms"] = terms;
    j["leading_exponent"] = rat_str(s.leading_exponent);
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : s.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    std::cout << j.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------- tables ----

int cmd_tables(const std::string& kind, const std::vector<long long>& levels, long long cap,
               unsigned jobs) {
    if (kind == "kmin") {
        std::cout << "N,kmin\n";
        for (long long n : levels) {
            std::cout << n << ",";
            try {
                auto v = k_min(n, cap);
                if (v) std::cout << *v;
                else std::cout << "none";
            } catch (const GuardViolation&) {
                std::cout << "skipped";
            }
            std::cout << "\n";
        }
        return 0;
    }
    if (kind == "kmax-kappa") {
        std::cout << "N,kmax,kappa\n";
        for (long long n : levels) {
            std::cout << n << ",";
            try {
                std::cout << k_max(n, jobs);
            } catch (const GuardViolation&) {
                std::cout << "skipped";
            }
            std::cout << "," << kappa(n) << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("unknown table kind '" + kind + "'");
}

// ----------------------------------------------------------------- check ----

struct CheckResult {
    ordered_json report;
    bool pass = true;       // theorem-grade checks
    bool mismatch = false;  // conjecture-grade discrepancies (never a failure)
};

CheckResult check_valence(const std::vector<long long>& levels) {
    CheckResult r;
    r.report["target"] = "valence";
    long long total = 0;
    bool ok = true;
    for (long long n : levels) {
        auto ld = LevelData::get(n);
        for (long long k = 0; k <= 2; ++k)
            for (const auto& f : enumerate_by_weight(n, k)) {
                ++total;
                // Sum of cusp-class sizes times scaled orders = k * psi(N).
                Int lhs = 0;
                auto ords = scaled_orders(f);
                for (std::size_t i = 0; i < ld->dim; ++i)
                    lhs += Int(ld->cusp_count[i]) * ords[i];
                if (lhs != Int(k) * ld->index_psi || !is_holomorphic(f)) ok = false;
            }
    }
    r.report["levels"] = levels;
    r.report["quotients"] = total;
    r.report["pass"] = ok;
    r.pass = ok;
    return r;
}

CheckResult check_inverse_identities(long long max_level) {
    CheckResult r;
    r.report["target"] = "inverse-identities";
    bool ok = true;
    for (long long n = 1; n <= max_level; ++n) {
        auto ld = LevelData::get(n);
        std::size_t dim = ld->dim;
        for (std::size_t i = 0; i < dim && ok; ++i)
            for (std::size_t j = 0; j < dim && ok; ++j) {
                Rat aid = 0, bid = 0;
                Int ab = 0;
                for (std::size_t l = 0; l < dim; ++l) {
                    aid += Rat(ld->order_mat.at(i, l)) * ld->order_inv.at(l, j);
                    bid += Rat(ld->weight_mat.at(i, l)) * ld->weight_inv.at(l, j);
                    ab += ld->order_mat.at(i, l) * ld->weight_mat.at(l, j);
                }
                Rat want = (i == j) ? Rat(1) : Rat(0);
                Int abwant = (i == j) ? ld->clear_denoms[j] : Int(0);
                if (aid != want || bid != want || ab != abwant) ok = false;
            }
        if (!ok) break;
    }
    r.report["max_level"] = max_level;
    r.report["pass"] = ok;
    r.pass = ok;
    return r;
}

CheckResult check_census_bounds(const std::vector<long long>& levels, unsigned jobs) {
    CheckResult r;
    r.report["target"] = "census-bounds";
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (long long n : levels) {
        auto census = nonfactorizable_census(n, jobs);
        long long exact = 0;
        for (const auto& e : census)
            if (e.level == n) ++exact;
        bool row_ok = Rat(Int(census.size())) <= omega_bound(n) &&
                      Rat(Int(exact)) <= omega_zero_bound(n);
        ordered_json row;
        row["n"] = n;
        row["size"] = census.size();
        row["omega"] = rat_str(omega_bound(n));
        row["level_exact"] = exact;
        row["omega0"] = rat_str(omega_zero_bound(n));
        row["pass"] = row_ok;
        rows.push_back(std::move(row));
        ok = ok && row_ok;
    }
    r.report["rows"] = std::move(rows);
    r.report["pass"] = ok;
    r.pass = ok;
    return r;
}

CheckResult check_fn_divisibility(long long n) {
    CheckResult r;
    r.report["target"] = "fn-divisibility";
    bool ok = verify_extremal_divisibility(n);
    r.report["level"] = n;
    r.report["pass"] = ok;
    r.pass = ok;
    return r;
}

CheckResult check_conj1(const std::vector<long long>& levels) {
    CheckResult r;
    r.report["target"] = "conjecture1";
    ordered_json rows = ordered_json::array();
    bool mismatch = false;
    for (const auto& row : check_conjecture_1(levels)) {
        ordered_json j;
        j["n"] = row.n;
        j["kmin"] = row.kmin ? ordered_json(*row.kmin) : ordered_json(nullptr);
        j["max_prime_power"] = row.max_np;
        j["holds"] = row.holds;
        j["skipped"] = row.skipped;
        if (!row.note.empty()) j["note"] = row.note;
        if (!row.skipped && !row.holds) mismatch = true;
        rows.push_back(std::move(j));
    }
    r.report["rows"] = std::move(rows);
    r.report["mismatch"] = mismatch;
    r.mismatch = mismatch;
    return r;
}

CheckResult check_conj2(long long p, long long n, unsigned jobs) {
    CheckResult r;
    r.report["target"] = "conjecture2";
    auto rep = check_conjecture_2(p, n, jobs);
    r.report["p"] = rep.p;
    r.report["n"] = rep.n;
    r.report["predicted"] = rep.predicted;
    r.report["computed"] = rep.computed;
    r.report["mismatch"] = !rep.match;
    r.mismatch = !rep.match;
    return r;
}

void print_check(const CheckResult& r, const std::string& format) {
    if (format == "json") {
        std::cout << r.report.dump() << "\n";
        return;
    }
    const std::string target = r.report.at("target").get<std::string>();
    if (r.report.contains("rows"))
        for (const auto& row : r.report.at("rows")) std::cout << row.dump() << "\n";
    if (r.report.contains("mismatch"))
        std::cout << "check " << target << ": "
                  << (r.mismatch ? "mismatch (reported, not a failure)" : "consistent") << "\n";
    else
        std::cout << "check " << target << ": " << (r.pass ? "pass" : "FAIL") << "\n";
}

// ------------------------------------------------------------------ main ----

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for holomorphic eta quotients of a fixed level"};
    app.require_subcommand(1);

    bool verbose = false;
    long long opt_max_divisors = 0, opt_max_det = 0, opt_max_weight = 0;
    app.add_flag("--verbose", verbose, "print a run header before the data");
    app.add_option("--max-divisors", opt_max_divisors, "override the divisor-count guard")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-det", opt_max_det, "override the lattice-volume guard")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-weight", opt_max_weight, "override the weight guard")
        ->check(CLI::PositiveNumber);

    long long mx_level = 1;
    std::string mx_which = "A", mx_format = "table";
    auto* mx = app.add_subcommand("matrix", "print an order/weight/cusp matrix");
    mx->add_option("--level", mx_level, "level N")->required()->check(CLI::PositiveNumber);
    mx->add_option("--which", mx_which, "A, A-inv, B, B-inv or C")
        ->check(CLI::IsMember({"A", "A-inv", "B", "B-inv", "C"}));
    mx->add_option("--format", mx_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    long long en_level = 1, en_k = 0;
    bool en_exact = false, en_prim = false, en_quasi = false, en_count = false;
    unsigned en_jobs = 1;
    auto* en = app.add_subcommand("enumerate", "list holomorphic eta quotients of one weight");
    en->add_option("--level", en_level, "level N")->required()->check(CLI::PositiveNumber);
    en->add_option("--k", en_k, "weight numerator (weight = k/2)")->required();
    en->add_flag("--exact-level", en_exact, "keep only quotients of level exactly N");
    en->add_flag("--primitive", en_prim, "keep only primitive quotients");
    en->add_flag("--quasi-irreducible", en_quasi, "keep only quasi-irreducible quotients");
    en->add_flag("--count-only", en_count, "print the count instead of the list");
    en->add_option("--jobs", en_jobs, "worker threads")->check(CLI::PositiveNumber);

    long long ce_level = 2;
    bool ce_count = false;
    unsigned ce_jobs = 1;
    auto* ce = app.add_subcommand("census", "CSV of all non-factorizable quotients of a level");
    ce->add_option("--level", ce_level, "level N >= 2")->required()->check(CLI::PositiveNumber);
    ce->add_flag("--count-only", ce_count, "print the count instead of the CSV");
    ce->add_option("--jobs", ce_jobs, "worker threads")->check(CLI::PositiveNumber);

    long long kn_level = 1, kn_cap = 0;
    auto* kn = app.add_subcommand("kmin", "least weight of a primitive quasi-irreducible quotient");
    kn->add_option("--level", kn_level, "level N")->required()->check(CLI::PositiveNumber);
    kn->add_option("--cap", kn_cap, "stop searching above this weight numerator")
        ->check(CLI::PositiveNumber);

    long long kx_level = 2;
    unsigned kx_jobs = 1;
    auto* kx = app.add_subcommand("kmax", "largest weight of a non-factorizable quotient");
    kx->add_option("--level", kx_level, "level N >= 2")->required()->check(CLI::PositiveNumber);
    kx->add_option("--jobs", kx_jobs, "worker threads")->check(CLI::PositiveNumber);

    long long fn_level = 1;
    auto* fn = app.add_subcommand("fn", "the extremal holomorphic quotient of a level");
    fn->add_option("--level", fn_level, "level N")->required()->check(CLI::PositiveNumber);

    std::string fa_eta;
    long long fa_modulus = 0;
    auto* fa = app.add_subcommand("factorize", "find a proper holomorphic factor");
    fa->add_option("--eta", fa_eta, "eta quotient, e.g. '1^24'")->required();
    fa->add_option("--modulus", fa_modulus, "group modulus (default: the quotient's level)")
        ->check(CLI::PositiveNumber);

    std::string qx_eta;
    long long qx_modulus = 0, qx_terms = 50;
    auto* qx = app.add_subcommand("qexp", "q-expansion of an eta quotient");
    qx->add_option("--eta", qx_eta, "eta quotient, e.g. '1^2 2^-1'")->required();
    qx->add_option("--modulus", qx_modulus, "ambient modulus (default: the quotient's level)")
        ->check(CLI::PositiveNumber);
    qx->add_option("--terms", qx_terms, "number of coefficients")->check(CLI::PositiveNumber);

    std::string tb_kind, tb_levels;
    long long tb_cap = 0;
    unsigned tb_jobs = 1;
    auto* tb = app.add_subcommand("tables", "CSV tables of kmin or kmax vs kappa");
    tb->add_option("--kind", tb_kind, "kmin or kmax-kappa")
        ->required()
        ->check(CLI::IsMember({"kmin", "kmax-kappa"}));
    tb->add_option("--levels", tb_levels, "levels, e.g. '6,10..14,30'")->required();
    tb->add_option("--cap", tb_cap, "kmin search cap")->check(CLI::PositiveNumber);
    tb->add_option("--jobs", tb_jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string ck_target, ck_levels, ck_format = "text";
    long long ck_level = 2, ck_max_level = 60, ck_p = 3, ck_n = 4;
    unsigned ck_jobs = 1;
    auto* ck = app.add_subcommand("check", "run an invariant or conjecture check");
    ck->add_option("--target", ck_target,
                   "valence, inverse-identities, census-bounds, fn-divisibility, "
                   "conjecture1 or conjecture2")
        ->required()
        ->check(CLI::IsMember({"valence", "inverse-identities", "census-bounds",
                               "fn-divisibility", "conjecture1", "conjecture2"}));
    ck->add_option("--levels", ck_levels, "levels, e.g. '6..30'");
    ck->add_option("--level", ck_level, "single level")->check(CLI::PositiveNumber);
    ck->add_option("--max-level", ck_max_level, "upper bound for inverse-identities")
        ->check(CLI::PositiveNumber);
    ck->add_option("--p", ck_p, "odd prime for conjecture2")->check(CLI::PositiveNumber);
    ck->add_option("--n", ck_n, "exponent > 3 for conjecture2")->check(CLI::PositiveNumber);
    ck->add_option("--format", ck_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    ck->add_option("--jobs", ck_jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    init_guards_from_environment();
    if (opt_max_divisors > 0) guard_limits().max_divisors = opt_max_divisors;
    if (opt_max_det > 0) guard_limits().max_det = opt_max_det;
    if (opt_max_weight > 0) guard_limits().max_weight = opt_max_weight;

    if (verbose) {
        std::cout << "# etaforge";
        for (int i = 1; i < argc; ++i) std::cout << " " << argv[i];
        std::cout << "\n";
    }

    if (app.got_subcommand(mx)) return cmd_matrix(mx_level, mx_which, mx_format);
    if (app.got_subcommand(en))
        return cmd_enumerate(en_level, en_k, en_exact, en_prim, en_quasi, en_count, en_jobs);
    if (app.got_subcommand(ce)) return cmd_census(ce_level, ce_count, ce_jobs);
    if (app.got_subcommand(kn)) return cmd_kmin(kn_level, kn_cap);
    if (app.got_subcommand(kx)) return cmd_kmax(kx_level, kx_jobs);
    if (app.got_subcommand(fn)) return cmd_fn(fn_level);
    if (app.got_subcommand(fa)) return cmd_factorize(fa_eta, fa_modulus);
    if (app.got_subcommand(qx)) return cmd_qexp(qx_eta, qx_modulus, qx_terms);
    if (app.got_subcommand(tb)) return cmd_tables(tb_kind, parse_levels(tb_levels), tb_cap, tb_jobs);

    // check
    CheckResult result;
    if (ck_target == "valence") {
        result = check_valence(ck_levels.empty() ? std::vector<long long>{ck_level}
                                                 : parse_levels(ck_levels));
    } else if (ck_target == "inverse-identities") {
        result = check_inverse_identities(ck_max_level);
    } else if (ck_target == "census-bounds") {
        result = check_census_bounds(ck_levels.empty() ? std::vector<long long>{2, 3, 4, 6, 8, 9}
                                                       : parse_levels(ck_levels),
                                     ck_jobs);
    } else if (ck_target == "fn-divisibility") {
        result = check_fn_divisibility(ck_level);
    } else if (ck_target == "conjecture1") {
        if (ck_levels.empty()) throw std::invalid_argument("conjecture1 needs --levels");
        result = check_conj1(parse_levels(ck_levels));
    } else {
        result = check_conj2(ck_p, ck_n, ck_jobs);
    }
    print_check(result, ck_format);
    return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardViolation& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
