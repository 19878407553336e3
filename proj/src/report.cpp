#include "ellcorr/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "ellcorr/parser.hpp"

namespace ellcorr {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename F>
void parallel_for(int n, F&& fn) {
    int workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err)
                        err = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

struct ExpectedBalance {
    int q;
    Cx u0;
    double K;
};

ExpectedBalance expected_balance(int row, const RowParams& params) {
    switch (row) {
    case 1: return {-2, Cx(1), 3};
    case 2: return {-3, Cx(-2), 8};
    case 3: return {-4, Cx(1), 15};
    case 4: return {-6, Cx(1), 35};
    default: {
        Cx a = params.a_row5;
        return {-2, Cx(0, 2) / (a * a * a), 3};
    }
    }
}

RowRecord eval_row(const CanonicalRow& cr, const SuiteConfig& cfg) {
    RowRecord rec;
    rec.row = cr.index;
    rec.family = family_name(cr.family.kind);
    rec.p = cr.eq.p;
    try {
        SplitMix64 rng = SplitMix64::split(cfg.seed, static_cast<uint64_t>(cr.index));
        std::vector<Cx> pts = sample_points(cr, cfg.samples, rng);
        std::vector<double> vals(pts.size(), 0.0);
        parallel_for(static_cast<int>(pts.size()),
                     [&](int i) { vals[i] = std::abs(residual(cr, pts[i])); });
        double m = 0;
        for (double v : vals)
            m = std::max(m, v);
        rec.max_residual = m;
        rec.sample_count = static_cast<int>(pts.size());
        rec.pass = m < cfg.tol;
    } catch (const Error& e) {
        rec.max_residual = std::nan("");
        rec.pass = false;
        rec.note = e.what();
    }
    return rec;
}

FuchsRecord eval_fuchs(const CanonicalRow& cr, const RowParams& params) {
    FuchsRecord rec;
    rec.row = cr.index;
    try {
        FuchsReport fr = fuchs_report(cr.eq);
        if (fr.balances.empty()) {
            rec.note = fr.note;
            rec.pass = cr.index == 6;
            return rec;
        }
        ExpectedBalance ex = expected_balance(cr.index, params);
        const BalanceAnalysis* match = nullptr;
        for (const BalanceAnalysis& ba : fr.balances)
            if (ba.bal.q == ex.q && std::abs(ba.bal.u0 - ex.u0) <= 1e-8 * (1.0 + std::abs(ex.u0))) {
                match = &ba;
                break;
            }
        if (match == nullptr) {
            const BalanceAnalysis& ba = fr.balances.front();
            rec.has_balance = true;
            rec.q = ba.bal.q;
            rec.u0 = ba.bal.u0;
            rec.indicial = ba.indicial.coeffs;
            rec.indices = ba.indicial.roots;
            rec.K = ba.K;
            rec.pass = false;
            rec.note = "no balance matches the expected leading pair";
            return rec;
        }
        rec.has_balance = true;
        rec.q = match->bal.q;
        rec.u0 = match->bal.u0;
        rec.indicial = match->indicial.coeffs;
        rec.indices = match->indicial.roots;
        rec.K = match->K;
        std::array<Cx, 4> want{Cx(-ex.K), Cx(-(ex.K + 1.0)), Cx(0), Cx(1)};
        double coeff_err = 0;
        for (int i = 0; i < 4; ++i)
            coeff_err = std::max(coeff_err, std::abs(rec.indicial[i] - want[i]));
        double at_minus_one = std::abs(match->indicial.eval(Cx(-1)));
        rec.pass = coeff_err < 1e-8 && at_minus_one < 1e-8;
        if (!rec.pass)
            rec.note = "indicial cubic deviates from the expected factored form";
    } catch (const Error& e) {
        rec.pass = false;
        rec.note = e.what();
    }
    return rec;
}

CorrespondenceRecord eval_correspondence(int row, const SuiteConfig& cfg, const RowParams& params) {
    static const int ks[5] = {0, 2, 3, 4, 6};
    static const int degNs[5] = {0, 3, 4, 5, 7};
    CorrespondenceRecord rec;
    rec.row = row;
    rec.k = ks[row];
    try {
        CanonicalRow cr = canonical_row(row, params);
        LaurentSeries base = family_base_series(cr.family, 36);
        RationalFn R;
        try {
            R = fit_binomial_from_series(base, ks[row], degNs[row], 0);
        } catch (const NoExactFit&) {
            R = fit_binomial_sweep(base, ks[row]);
        }
        rec.fitted = format_rational(R);
        BinomialEquation beq{ks[row], R, Cx(0)};
        SplitMix64 rng = SplitMix64::split(cfg.seed, 100 + static_cast<uint64_t>(row));
        std::vector<Cx> pts = sample_family_points(cr.family, cr.eq.R, cfg.samples, rng);
        std::vector<double> vals(pts.size(), 0.0);
        parallel_for(static_cast<int>(pts.size()), [&](int i) {
            DerivativeJet j = jet(cr.family, pts[i]);
            vals[i] = std::max(std::abs(residual(cr, pts[i])),
                               std::abs(residual_binomial(beq, j)));
        });
        double m = 0;
        for (double v : vals)
            m = std::max(m, v);
        rec.max_residual = m;
        rec.pass = m < cfg.tol;
    } catch (const Error& e) {
        rec.max_residual = std::nan("");
        rec.pass = false;
        rec.note = e.what();
    }
    return rec;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_exp(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

ordered_json jcx(Cx v) { return ordered_json::array({v.real(), v.imag()}); }

std::string emit_json(const VerificationReport& r) {
    ordered_json j;
    j["schwarzian_rows"] = ordered_json::array();
    for (const RowRecord& rec : r.schwarzian_rows) {
        ordered_json o;
        o["row"] = rec.row;
        o["family"] = rec.family;
        o["p"] = rec.p;
        o["max_residual"] = rec.max_residual;
        o["samples"] = rec.sample_count;
        o["pass"] = rec.pass;
        if (!rec.note.empty())
            o["note"] = rec.note;
        j["schwarzian_rows"].push_back(o);
    }
    j["fuchs"] = ordered_json::array();
    for (const FuchsRecord& rec : r.fuchs) {
        ordered_json o;
        o["row"] = rec.row;
        if (rec.has_balance) {
            o["q"] = rec.q;
            o["u0"] = jcx(rec.u0);
            o["K"] = rec.K;
            o["indicial"] = ordered_json::array();
            for (Cx c : rec.indicial)
                o["indicial"].push_back(jcx(c));
            o["indices"] = ordered_json::array();
            for (Cx c : rec.indices)
                o["indices"].push_back(jcx(c));
        }
        o["pass"] = rec.pass;
        if (!rec.note.empty())
            o["note"] = rec.note;
        j["fuchs"].push_back(o);
    }
    j["correspondence"] = ordered_json::array();
    for (const CorrespondenceRecord& rec : r.correspondence) {
        ordered_json o;
        o["row"] = rec.row;
        o["k"] = rec.k;
        o["R"] = rec.fitted;
        o["max_residual"] = rec.max_residual;
        o["pass"] = rec.pass;
        if (!rec.note.empty())
            o["note"] = rec.note;
        j["correspondence"].push_back(o);
    }
    j["meta"] = {{"seed", r.seed}, {"tol", r.tol}, {"samples", r.samples},
                 {"wall_time_ms", r.wall_time_ms}};
    return j.dump(2) + "\n";
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string emit_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "section,schwarzian_rows\n";
    os << "row,family,p,max_residual,samples,pass\n";
    for (const RowRecord& rec : r.schwarzian_rows)
        os << rec.row << ',' << rec.family << ',' << rec.p << ',' << fmt(rec.max_residual) << ','
           << rec.sample_count << ',' << (rec.pass ? 1 : 0) << '\n';
    os << "section,fuchs\n";
    os << "row,q,u0_re,u0_im,K,idx1,idx2,idx3\n";
    for (const FuchsRecord& rec : r.fuchs) {
        if (!rec.has_balance)
            continue;
        os << rec.row << ',' << rec.q << ',' << fmt(rec.u0.real()) << ',' << fmt(rec.u0.imag())
           << ',' << fmt(rec.K);
        for (Cx idx : rec.indices)
            os << ',' << fmt(idx.real());
        os << '\n';
    }
    os << "section,correspondence\n";
    os << "row,k,R,max_residual,pass\n";
    for (const CorrespondenceRecord& rec : r.correspondence)
        os << rec.row << ',' << rec.k << ',' << csv_quote(rec.fitted) << ','
           << fmt(rec.max_residual) << ',' << (rec.pass ? 1 : 0) << '\n';
    os << "section,meta\n";
    os << "key,value\n";
    os << "seed," << r.seed << '\n';
    os << "tol," << fmt(r.tol) << '\n';
    os << "samples," << r.samples << '\n';
    os << "wall_time_ms," << fmt(r.wall_time_ms) << '\n';
    return os.str();
}

std::string emit_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "schwarzian rows\n";
    os << "  row  family        p  samples  max residual  result\n";
    char line[160];
    for (const RowRecord& rec : r.schwarzian_rows) {
        std::snprintf(line, sizeof line, "  %3d  %-12s %2d  %7d  %-12s  %s\n", rec.row,
                      rec.family.c_str(), rec.p, rec.sample_count,
                      fmt_exp(rec.max_residual).c_str(), rec.pass ? "ok" : "FAIL");
        os << line;
        if (!rec.note.empty())
            os << "       note: " << rec.note << '\n';
    }
    os << "fuchs analysis\n";
    os << "  row   q  u0            K     indices                              result\n";
    for (const FuchsRecord& rec : r.fuchs) {
        if (rec.has_balance) {
            std::string idx = fmt_short(rec.indices[0].real()) + ", " +
                              fmt_short(rec.indices[1].real()) + ", " +
                              fmt_short(rec.indices[2].real());
            std::snprintf(line, sizeof line, "  %3d  %2d  %-12s  %-4s  %-35s  %s\n", rec.row,
                          rec.q, format_complex(rec.u0).c_str(), fmt_short(rec.K).c_str(),
                          idx.c_str(), rec.pass ? "ok" : "FAIL");
            os << line;
            if (!rec.note.empty())
                os << "       note: " << rec.note << '\n';
        } else {
            std::snprintf(line, sizeof line, "  %3d  %s (%s)\n", rec.row,
                          rec.note.empty() ? "no balance" : rec.note.c_str(),
                          rec.pass ? "ok" : "FAIL");
            os << line;
        }
    }
    os << "correspondence\n";
    os << "  row  k  max residual  result  equation right side\n";
    for (const CorrespondenceRecord& rec : r.correspondence) {
        std::snprintf(line, sizeof line, "  %3d  %d  %-12s  %-4s  ", rec.row, rec.k,
                      fmt_exp(rec.max_residual).c_str(), rec.pass ? "ok" : "FAIL");
        os << line << rec.fitted << '\n';
        if (!rec.note.empty())
            os << "       note: " << rec.note << '\n';
    }
    os << "meta\n";
    os << "  seed " << r.seed << '\n';
    os << "  tol " << fmt(r.tol) << '\n';
    os << "  samples " << r.samples << '\n';
    os << "  wall_time_ms " << fmt(r.wall_time_ms) << '\n';
    os << "overall " << (r.all_pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace

bool VerificationReport::all_pass() const {
    for (const RowRecord& rec : schwarzian_rows)
        if (!rec.pass)
            return false;
    for (const FuchsRecord& rec : fuchs)
        if (!rec.pass)
            return false;
    for (const CorrespondenceRecord& rec : correspondence)
        if (!rec.pass)
            return false;
    return true;
}

int thread_cap() {
    if (const char* env = std::getenv("ELLCORR_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

Mobius random_mobius(SplitMix64& rng) {
    for (int tries = 0; tries < 100; ++tries) {
        Cx a = rng.complex_in_square(1.0), b = rng.complex_in_square(1.0);
        Cx c = rng.complex_in_square(1.0), d = rng.complex_in_square(1.0);
        if (std::abs(a * d - b * c) > 0.1)
            return Mobius(a, b, c, d);
    }
    return Mobius();
}

VerificationReport run_suite(const SuiteConfig& cfg) {
    if (!(cfg.tol > 0))
        throw Error("tol must be positive");
    if (cfg.samples < 1)
        throw Error("samples must be at least 1");
    if (cfg.row < 0 || cfg.row > 6)
        throw Error("row must lie in 1..6");

    auto t0 = std::chrono::steady_clock::now();
    RowParams params = cfg.params;
    if (cfg.randomize_m6) {
        SplitMix64 rng = SplitMix64::split(cfg.seed, 6006);
        params.m_row6 = random_mobius(rng);
    }

    VerificationReport rep;
    rep.seed = cfg.seed;
    rep.tol = cfg.tol;
    rep.samples = cfg.samples;

    for (int row = 1; row <= 6; ++row) {
        if (cfg.row != 0 && cfg.row != row)
            continue;
        try {
            CanonicalRow cr = canonical_row(row, params);
            rep.schwarzian_rows.push_back(eval_row(cr, cfg));
            rep.fuchs.push_back(eval_fuchs(cr, params));
        } catch (const Error& e) {
            RowRecord rec;
            rec.row = row;
            rec.p = 0;
            rec.max_residual = std::nan("");
            rec.pass = false;
            rec.note = e.what();
            rep.schwarzian_rows.push_back(rec);
            FuchsRecord fr;
            fr.row = row;
            fr.pass = false;
            fr.note = e.what();
            rep.fuchs.push_back(fr);
        }
        if (row <= 4)
            rep.correspondence.push_back(eval_correspondence(row, cfg, params));
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::string emit(const VerificationReport& r, ReportFormat format) {
    switch (format) {
    case ReportFormat::JSON: return emit_json(r);
    case ReportFormat::CSV: return emit_csv(r);
    default: return emit_text(r);
    }
}

} // namespace ellcorr
