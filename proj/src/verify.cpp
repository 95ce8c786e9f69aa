#include "superstructure/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace superstructure::verify {

namespace {

using QA = AlgebraOver<QField>;
using PA = AlgebraOver<PField>;
using Sub = GradedSub<Rational>;
using El = Element<Rational>;

std::string dims_str(const std::map<int, int>& dims) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, r] : dims) {
        os << (first ? "" : " ") << d << ":" << r;
        first = false;
    }
    return os.str();
}

template <class K>
std::string element_str(const AlgebraPtr& g, const Element<K>& e) {
    // readable form via the rational model (coordinates printed exactly)
    ModelExpresser ex(g);
    Coords c = g->coords();
    if constexpr (std::is_same_v<K, Rational>) {
        return is_h_type(g->series) ? poly_str(c, ex.gf_of(e)) : vf_str(c, ex.vf_of(e));
    } else {
        Element<Rational> lift{e.degree, Vec<Rational>(e.coords.size())};
        for (std::size_t i = 0; i < e.coords.size(); ++i) lift.coords[i] = Rational((long)e.coords[i].v);
        return (is_h_type(g->series) ? poly_str(c, ex.gf_of(lift)) : vf_str(c, ex.vf_of(lift))) +
               " (mod " + std::to_string(e.coords.empty() ? 0 : e.coords[0].p) + ")";
    }
}

// ---- rational eigenvalues ------------------------------------------------

// char poly by Faddeev-LeVerrier; returns c so that det(tI - M) = sum c_i t^i
std::vector<Rational> char_poly(const Mat<Rational>& m) {
    int q = (int)m.size();
    std::vector<Rational> c(q + 1);
    c[q] = Rational(1);
    Mat<Rational> acc(q, Vec<Rational>(q));  // starts as zero, becomes M_k
    for (int k = 1; k <= q; ++k) {
        // acc = M * (acc + c_{q-k+1} I)
        Mat<Rational> t = acc;
        for (int i = 0; i < q; ++i) t[i][i] += c[q - k + 1];
        Mat<Rational> next(q, Vec<Rational>(q));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                Rational sum;
                for (int r = 0; r < q; ++r)
                    if (!m[i][r].is_zero() && !t[r][j].is_zero()) sum += m[i][r] * t[r][j];
                next[i][j] = sum;
            }
        acc = std::move(next);
        Rational tr;
        for (int i = 0; i < q; ++i) tr += acc[i][i];
        c[q - k] = Rational(-1, k) * tr;
    }
    return c;
}

// all rational roots of det(tI - M) = 0
std::vector<Rational> rational_eigenvalues(const Mat<Rational>& m) {
    int q = (int)m.size();
    if (q == 0) return {};
    std::vector<Rational> c = char_poly(m);
    // integerize: lambda = r / d with d = lcm of denominators of c
    long d = 1;
    for (const auto& x : c) {
        long den = x.den_long();
        d = std::lcm(d, den);
    }
    // p(t) = sum c_i t^i ; integer roots r' of d^q p(r'/d) divide the constant
    auto eval = [&](const Rational& t) {
        Rational v, pw(1);
        for (int i = 0; i <= q; ++i) {
            v += c[i] * pw;
            pw = pw * t;
        }
        return v;
    };
    std::vector<Rational> roots;
    auto try_root = [&](long num) {
        Rational cand(num, d);
        if (eval(cand).is_zero()) roots.push_back(cand);
    };
    // strip zero roots
    int low = 0;
    while (low <= q && c[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low > q) return roots;
    // scaled constant coefficient: integer roots of the scaled poly divide it
    // scaled poly: sum (c_i d^{q-i}) (d t)^i has integer coefficients
    Rational a0 = c[low];
    for (int i = 0; i < q - low; ++i) a0 = Rational((long)d) * a0;
    mpz_class a0z = a0.num();  // denominator is 1 by construction
    if (a0z < 0) a0z = -a0z;
    if (a0z == 0) return roots;
    // divisor enumeration by trial division
    std::vector<mpz_class> divisors{1};
    mpz_class rest = a0z;
    for (mpz_class f = 2; f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        int e = 0;
        while (rest % f == 0) {
            rest /= f;
            ++e;
        }
        std::size_t base = divisors.size();
        mpz_class pw = 1;
        for (int t = 1; t <= e; ++t) {
            pw *= f;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pw);
        }
    }
    if (rest > 1) {
        std::size_t base = divisors.size();
        for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * rest);
    }
    for (const auto& dv : divisors) {
        if (!dv.fits_slong_p()) continue;
        long r = dv.get_si();
        try_root(r);
        try_root(-r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---- quotient actions ----------------------------------------------------

// action of the degree-0 rows of s on g_d / s_d, as q x q matrices acting on
// column coordinates over the free columns
template <class F>
std::vector<Mat<typename F::Elem>> quotient_action(const AlgebraOver<F>& A,
                                                   const GradedSub<typename F::Elem>& s, int d,
                                                   const Echelon<typename F::Elem>& sd,
                                                   const std::vector<int>& free_cols) {
    using K = typename F::Elem;
    std::vector<Mat<K>> out;
    auto it0 = s.comp.find(0);
    if (it0 == s.comp.end()) return out;
    int q = (int)free_cols.size();
    int md = A.g->dim_at(d);
    for (const auto& x : it0->second.rows()) {
        Mat<K> M(q, Vec<K>(q));
        for (int c = 0; c < q; ++c) {
            Vec<K> v(md);
            v[free_cols[c]] = A.field(1);
            Vec<K> img(md);
            A.bracket_acc(0, x, d, v, img);
            sd.reduce(img);
            for (int r = 0; r < q; ++r) M[r][c] = img[free_cols[r]];
        }
        out.push_back(std::move(M));
    }
    return out;
}

// common eigenlines of a list of rational matrices; multi-dimensional joint
// eigenspaces are reported separately (the modular sweep covers their lines)
struct EigenResult {
    Mat<Rational> lines;     // one row per 1-dim joint eigenspace
    int fat_spaces = 0;      // joint eigenspaces of dimension > 1
};

EigenResult common_eigenlines(const std::vector<Mat<Rational>>& ms, int q) {
    QField F;
    EigenResult res;
    Mat<Rational> id(q, Vec<Rational>(q));
    for (int i = 0; i < q; ++i) id[i][i] = Rational(1);
    std::vector<Mat<Rational>> spaces{id};  // row-basis matrices
    for (const auto& M : ms) {
        auto evs = rational_eigenvalues(M);
        std::vector<Mat<Rational>> next;
        for (const auto& E : spaces) {
            for (const auto& lambda : evs) {
                // kernel of (M - lambda) restricted to row-span E:
                // rows x of coefficients with (x E)(M - lambda)^T = 0
                Mat<Rational> img(E.size(), Vec<Rational>(q));
                for (std::size_t i = 0; i < E.size(); ++i)
                    for (int r = 0; r < q; ++r) {
                        Rational sum;
                        for (int c = 0; c < q; ++c)
                            if (!M[r][c].is_zero() && !E[i][c].is_zero()) sum += M[r][c] * E[i][c];
                        img[i][r] = sum - lambda * E[i][r];
                    }
                Mat<Rational> ker = left_kernel(img, q, F);
                if (ker.empty()) continue;
                Mat<Rational> basis;
                for (const auto& krow : ker) {
                    Vec<Rational> v(q);
                    for (std::size_t i = 0; i < E.size(); ++i)
                        if (!krow[i].is_zero())
                            for (int cc = 0; cc < q; ++cc) v[cc] += krow[i] * E[i][cc];
                    basis.push_back(std::move(v));
                }
                next.push_back(std::move(basis));
            }
        }
        spaces = std::move(next);
        if (spaces.empty()) break;
    }
    for (auto& E : spaces) {
        if (E.size() == 1) {
            // normalize to a primitive integer vector for readability
            Vec<Rational> v = E[0];
            long den = 1;
            for (const auto& x : v) den = std::lcm(den, x.den_long());
            for (auto& x : v) x = Rational(den) * x;
            res.lines.push_back(std::move(v));
        } else {
            res.fat_spaces++;
        }
    }
    return res;
}

// ---- candidate closures ----------------------------------------------------

struct CandidateOutcome {
    bool solvable = false;
    bool aborted = false;
    int derived_index = -1;
    std::map<int, int> dims;
};

template <class F>
CandidateOutcome candidate_closure(const AlgebraOver<F>& A, const GradedSub<typename F::Elem>& s,
                                   const std::vector<Element<typename F::Elem>>& extra) {
    using K = typename F::Elem;
    std::vector<Element<K>> gens = s.elements();
    gens.insert(gens.end(), extra.begin(), extra.end());
    auto res = closure(A, gens, ClosureOpts{true});
    CandidateOutcome out;
    if (res.aborted_nonsolvable) {
        out.aborted = true;
        return out;
    }
    auto info = solvability(A, res.sub);
    out.solvable = info.solvable;
    out.derived_index = info.steps;
    out.dims = res.sub.dims();
    return out;
}

// F_p submodule generated by a quotient vector under the action matrices
template <class K>
Echelon<K> generated_module(const std::vector<Mat<K>>& action, const Vec<K>& v0, int q) {
    Echelon<K> mod(q);
    std::vector<Vec<K>> work{v0};
    mod.insert(v0);
    while (!work.empty()) {
        Vec<K> v = std::move(work.back());
        work.pop_back();
        for (const auto& M : action) {
            Vec<K> img(q);
            for (int r = 0; r < q; ++r) {
                K sum{};
                for (int c = 0; c < q; ++c)
                    if (!M[r][c].is_zero() && !v[c].is_zero()) sum += M[r][c] * v[c];
                img[r] = sum;
            }
            if (mod.insert(img)) work.push_back(std::move(img));
        }
    }
    return mod;
}

std::string module_key(const Echelon<Zp>& e) {
    std::ostringstream os;
    for (const auto& r : e.rows()) {
        for (const auto& x : r) os << x.v << ',';
        os << ';';
    }
    return os.str();
}

}  // namespace

int effective_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUPERSTRUCTURE_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

std::string Verdict::status_name(Status s) {
    switch (s) {
        case Status::maximal: return "maximal";
        case Status::not_maximal: return "not_maximal";
        default: return "evidence_only";
    }
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json j;
    j["status"] = status_name(status);
    nlohmann::json mbd = nlohmann::json::array();
    long total = 0;
    for (const auto& r : by_degree) {
        mbd.push_back({{"degree", r.degree},
                       {"quotient_dim", r.quotient_dim},
                       {"method", r.method},
                       {"candidates_checked", r.candidates_checked},
                       {"closures_run", r.closures_run}});
        total += r.candidates_checked;
    }
    j["method_by_degree"] = std::move(mbd);
    j["candidates_checked"] = total;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : witnesses)
        ws.push_back({{"degree", w.degree}, {"element", w.element}, {"over_algebra_dims", w.over_dims}});
    j["witnesses"] = std::move(ws);
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : certificates)
        cs.push_back({{"degree", c.degree},
                      {"element", c.element},
                      {"reason", c.reason},
                      {"derived_index", c.derived_index}});
    j["certificates"] = std::move(cs);
    j["notes"] = notes;
    return j;
}

Verdict check_maximal(const Sub& s, const SweepConfig& cfg) {
    AlgebraPtr g = s.g;
    if (!g) throw std::invalid_argument("check_maximal: subalgebra has no ambient");
    QA A(g, QField{});
    if (!is_solvable(A, s)) throw std::invalid_argument("check_maximal: input is not solvable");

    Verdict verdict;
    bool any_capped = false;

    // per-prime machinery, built once
    struct PrimeCtx {
        PField field;
        PA A;
        GradedSub<Zp> s;
        bool usable;
        PrimeCtx(AlgebraPtr g, std::uint32_t p, const Sub& sq)
            : field(p), A(g, field), s(g), usable(true) {
            try {
                s = reduce_mod_p(A, sq);
            } catch (const std::domain_error&) {
                usable = false;
            }
        }
    };
    std::vector<PrimeCtx> primes;
    for (auto p : cfg.primes) {
        primes.emplace_back(g, p, s);
        if (!primes.back().usable || primes.back().s.dim() != s.dim()) {
            verdict.notes.push_back("prime " + std::to_string(p) +
                                    ": reduction does not preserve dimensions; skipped");
            primes.pop_back();
        }
    }

    for (int d = g->min_deg; d <= g->max_deg; ++d) {
        int md = g->dim_at(d);
        if (md == 0) continue;
        Echelon<Rational> sd(md);
        auto it = s.comp.find(d);
        if (it != s.comp.end()) sd = it->second;
        auto free_cols = sd.free_columns();
        int q = (int)free_cols.size();
        Verdict::DegreeReport rep;
        rep.degree = d;
        rep.quotient_dim = q;
        if (q == 0) {
            rep.method = "full";
            verdict.by_degree.push_back(rep);
            continue;
        }

        // exact candidates over Q: the single class when q = 1, plus the
        // common eigenlines of the s_0 action on the quotient
        std::vector<Vec<Rational>> exact_cands;  // quotient coordinates
        if (q == 1) exact_cands.push_back(Vec<Rational>{Rational(1)});
        auto action_q = quotient_action(A, s, d, sd, free_cols);
        if (!action_q.empty() && q > 1) {
            EigenResult eig = common_eigenlines(action_q, q);
            for (auto& line : eig.lines) exact_cands.push_back(std::move(line));
            if (eig.fat_spaces > 0)
                verdict.notes.push_back("degree " + std::to_string(d) + ": " +
                                        std::to_string(eig.fat_spaces) +
                                        " joint eigenspaces of dim > 1 left to the modular sweep");
        }
        // dedupe projectively (first nonzero coordinate scaled to 1)
        std::set<std::string> seen;
        std::vector<Vec<Rational>> cands;
        for (auto& v : exact_cands) {
            Vec<Rational> w = v;
            for (auto& x : w)
                if (!x.is_zero()) {
                    Rational inv = x.inverse();
                    for (auto& y : w) y = inv * y;
                    break;
                }
            std::string key;
            for (const auto& x : w) key += x.str() + ",";
            if (seen.insert(key).second) cands.push_back(std::move(w));
        }

        bool had_exact = !cands.empty();
        for (const auto& cand : cands) {
            El v{d, Vec<Rational>(md)};
            for (int i = 0; i < q; ++i) v.coords[free_cols[i]] = cand[i];
            auto out = candidate_closure(A, s, {v});
            rep.candidates_checked++;
            rep.closures_run++;
            std::string name = element_str(g, v);
            if (out.aborted) {
                verdict.certificates.push_back(
                    {d, name, "closure swallows a non-solvable subalgebra (early exit)", -1});
            } else if (out.solvable) {
                verdict.add_witness({d, name, dims_str(out.dims)});
            } else {
                verdict.certificates.push_back(
                    {d, name, "derived series of the closure stabilizes nonzero", out.derived_index});
            }
        }

        // exhaustive modular sweeps
        bool swept = false;
        if (q <= cfg.cap && !primes.empty()) {
            swept = true;
            for (auto& pc : primes) {
                std::uint32_t p = pc.field.p;
                Echelon<Zp> sdp(md);
                auto itp = pc.s.comp.find(d);
                if (itp != pc.s.comp.end()) sdp = itp->second;
                auto free_p = sdp.free_columns();
                if ((int)free_p.size() != q) {
                    verdict.notes.push_back("degree " + std::to_string(d) + ", prime " +
                                            std::to_string(p) + ": quotient dimension changed; skipped");
                    any_capped = true;
                    continue;
                }
                auto action_p = quotient_action(pc.A, pc.s, d, sdp, free_p);
                std::map<std::string, bool> module_solvable;  // key -> candidate survived

                // canonical projective enumeration: leading coordinate 1
                std::vector<Zp> point(q);
                for (int lead = 0; lead < q; ++lead) {
                    long tail = q - lead - 1;
                    long count = 1;
                    for (long t = 0; t < tail; ++t) count *= p;
                    for (long idx = 0; idx < count; ++idx) {
                        for (int i = 0; i < lead; ++i) point[i] = pc.field(0);
                        point[lead] = pc.field(1);
                        long rest = idx;
                        for (int i = lead + 1; i < q; ++i) {
                            point[i] = pc.field(rest % p);
                            rest /= p;
                        }
                        rep.candidates_checked++;
                        Echelon<Zp> mod = generated_module(action_p, point, q);
                        std::string key = module_key(mod);
                        auto cached = module_solvable.find(key);
                        bool solvable;
                        if (cached != module_solvable.end()) {
                            solvable = cached->second;
                        } else {
                            Element<Zp> v{d, Vec<Zp>(md)};
                            for (int i = 0; i < q; ++i) v.coords[free_p[i]] = point[i];
                            auto out = candidate_closure(pc.A, pc.s, {v});
                            rep.closures_run++;
                            solvable = !out.aborted && out.solvable;
                            module_solvable.emplace(std::move(key), solvable);
                        }
                        if (!solvable) continue;
                        // modular survivor: lift and decide over Q
                        El lift{d, Vec<Rational>(md)};
                        for (int i = 0; i < q; ++i)
                            lift.coords[free_cols[i]] = Rational((long)point[i].v);
                        auto outq = candidate_closure(A, s, {lift});
                        rep.closures_run++;
                        std::string name = element_str(g, lift);
                        if (!outq.aborted && outq.solvable) {
                            verdict.add_witness({d, name, dims_str(outq.dims)});
                        } else {
                            verdict.notes.push_back("degree " + std::to_string(d) + ", prime " +
                                                    std::to_string(p) + ": F_p-solvable class of " +
                                                    name + " refuted over Q");
                        }
                    }
                }
            }
        } else if (q > cfg.cap) {
            any_capped = true;
        }
        if (primes.empty()) any_capped = true;

        if (swept)
            rep.method = had_exact ? "exact+sweep" : "sweep";
        else
            rep.method = had_exact ? "exact+witness-only" : "witness-only";
        verdict.by_degree.push_back(rep);
    }

    if (!verdict.witnesses.empty())
        verdict.status = Verdict::Status::not_maximal;
    else if (any_capped)
        verdict.status = Verdict::Status::evidence_only;
    else
        verdict.status = Verdict::Status::maximal;
    return verdict;
}

bool generation_check(AlgebraPtr g) {
    QA A(g, QField{});
    std::vector<El> gens;
    if (g->has_degree(-1))
        for (int i = g->offset_at(-1); i < g->offset_at(-1) + g->dim_at(-1); ++i)
            gens.push_back(A.basis_element(i));
    return closure(A, gens).sub.dim() == g->dim();
}

Fingerprint fingerprint(const Sub& s) {
    Fingerprint fp;
    if (s.dim() == 0) return fp;
    QA A(s.g, QField{});
    for (const auto& [d, e] : s.comp) {
        int par = s.g->parity_of_degree(d);
        auto& sd = fp.graded_sdims[d];
        (par ? sd.second : sd.first) += e.rank();
        (par ? fp.total_sdim.second : fp.total_sdim.first) += e.rank();
    }
    auto info = solvability(A, s);
    fp.derived_sdims = info.sdims;
    // center: kernel of x -> ([x, m_j])_j; images are laid out over the full
    // ambient coordinates since the target degree varies with both factors
    auto members = s.elements();
    int D = (int)members.size();
    int G = s.g->dim();
    Mat<Rational> rows(D);
    for (int i = 0; i < D; ++i) {
        Vec<Rational> img(D * G);
        for (int j = 0; j < D; ++j) {
            auto br = A.bracket(members[i], members[j]);
            if (br.coords.empty()) continue;
            int off = j * G + s.g->offset_at(br.degree);
            for (std::size_t t = 0; t < br.coords.size(); ++t) img[off + t] += br.coords[t];
        }
        rows[i] = std::move(img);
    }
    fp.center_dim = rows.empty() ? 0 : (int)left_kernel(rows, D * G, QField{}).size();
    return fp;
}

// ------------------------------------------------------------------------
// witness suites
// ------------------------------------------------------------------------

namespace {

void check(Report& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.lines.push_back({name, pass, detail});
}

// the linear claim behind the ms0 proofs: v -> ([v, w] mod s_0)_w, over the
// listed degree-1 witnesses w, annihilates no nonzero element of g_{-1}
bool witness_map_injective(const QA& A, const Echelon<Rational>& s0, const std::vector<El>& ws) {
    const AlgebraDesc& g = *A.g;
    int m1 = g.dim_at(-1);
    Mat<Rational> rows(m1);
    for (int i = 0; i < m1; ++i) {
        Vec<Rational> x(m1);
        x[i] = Rational(1);
        Vec<Rational> img;
        for (const auto& w : ws) {
            Vec<Rational> br(g.dim_at(0));
            A.bracket_acc(-1, x, 1, w.coords, br);
            s0.reduce(br);
            img.insert(img.end(), br.begin(), br.end());
        }
        rows[i] = std::move(img);
    }
    return left_kernel(rows, (int)rows[0].size(), QField{}).empty();
}

Report witness_prop1(Series series, int n) {
    Report rep;
    auto g = build_algebra(series, n);
    QA A(g, QField{});
    ModelExpresser ex(g);
    auto entry = catalog::ms0(A);
    auto b0 = catalog::borel0(A);

    std::vector<El> ws;
    std::vector<std::string> wnames;
    if (series == Series::Vect || series == Series::Svect) {
        ws.push_back(ex.from_vf(field_monomial<Rational>(n, 0b011, 2, Rational(1))));  // x1x2 d3
        wnames.push_back("x1.x2.d3");
        for (int i = 2; i < n; ++i) {
            ws.push_back(ex.from_vf(field_monomial<Rational>(n, Mono(1) | (Mono(1) << i), 1, Rational(1))));
            wnames.push_back("x1.x" + std::to_string(i + 1) + ".d2");
        }
    } else {
        int K = g->split.pairs, L = g->split.zetas;
        auto xi = [&](int i) { return Mono(1) << i; };
        auto eta = [&](int i) { return Mono(1) << (K + i); };
        // <xi> (x) Lambda^2(eta), and Lambda^3(eta) resp. <zeta> (x) Lambda^2(eta)
        for (int i = 0; i < K; ++i)
            for (int a = 0; a < K; ++a)
                for (int b = a + 1; b < K; ++b) {
                    ws.push_back(ex.from_gf(SuperPoly<Rational>::monomial(xi(i) | eta(a) | eta(b), Rational(1))));
                    wnames.push_back("xi.eta.eta monomial");
                }
        if (L == 0) {
            for (int a = 0; a < K; ++a)
                for (int b = a + 1; b < K; ++b)
                    for (int c = b + 1; c < K; ++c) {
                        ws.push_back(ex.from_gf(SuperPoly<Rational>::monomial(eta(a) | eta(b) | eta(c), Rational(1))));
                        wnames.push_back("eta.eta.eta monomial");
                    }
        } else {
            Mono z = Mono(1) << (2 * K);
            for (int a = 0; a < K; ++a)
                for (int b = a + 1; b < K; ++b) {
                    ws.push_back(ex.from_gf(SuperPoly<Rational>::monomial(z | eta(a) | eta(b), Rational(1))));
                    wnames.push_back("zeta.eta.eta monomial");
                }
        }
    }
    bool all_in = true;
    for (const auto& w : ws) all_in = all_in && entry.sub.contains(w);
    check(rep, "witnesses lie in ms0 (degree 1 is full)", all_in);
    check(rep, "[t_{-1}, witnesses] <= s_0 forces t_{-1} = 0", witness_map_injective(A, b0, ws),
          std::to_string(ws.size()) + " witnesses");

    if (series == Series::Vect || series == Series::Svect) {
        // the quoted bracket fact: [d2, x1.x2.d3] = -x1.d3, strictly upper
        auto br = bracket(field_monomial<Rational>(n, 0, 1, Rational(1)),
                          field_monomial<Rational>(n, 0b011, 2, Rational(1)));
        auto e = ex.from_vf(br);
        check(rep, "[d2, x1.x2.d3] lands outside the lower-triangular borel", !b0.contains(e.coords),
          vf_str(g->coords(), br));
    }

    // adjoining any coordinate direction of g_{-1} destroys solvability
    bool all_nonsolv = true;
    for (int i = 0; i < g->dim_at(-1); ++i) {
        auto gens = entry.sub.elements();
        gens.push_back(A.basis_element(g->offset_at(-1) + i));
        auto res = closure(A, gens, ClosureOpts{true});
        bool nonsolv = res.aborted_nonsolvable || !is_solvable(A, res.sub);
        all_nonsolv = all_nonsolv && nonsolv;
    }
    check(rep, "closure(ms0 + direction) is non-solvable for every direction", all_nonsolv);
    return rep;
}

Report witness_prop3(Series series, int n, int k) {
    Report rep;
    auto g = build_algebra(series, n);
    QA A(g, QField{});
    ModelExpresser ex(g);
    auto msv_k = catalog::msv_vect(A, k);

    // the separating element of degree 1
    VectorField<Rational> vmodel(n);
    std::string vname;
    if (k == 1 && series != Series::Vect) {
        // the divergence-free replacement witness (svect and its deformation)
        vmodel = field_monomial<Rational>(n, 0b011, 1, Rational(1)) -
                 field_monomial<Rational>(n, 0b101, 2, Rational(1));
        vname = "x1.x2.d2 - x1.x3.d3";
    } else if (k == 1) {
        vmodel = field_monomial<Rational>(n, 0b011, 1, Rational(1));
        vname = "x1.x2.d2";
    } else {
        vmodel = field_monomial<Rational>(n, Mono(1) | (Mono(1) << k), 1, Rational(1));
        vname = "x1.x" + std::to_string(k + 1) + ".d2";
    }
    auto v = ex.from_vf(vmodel);
    check(rep, "separating element " + vname + " lies in msV(k=" + std::to_string(k) + ")",
          msv_k.sub.contains(v));
    bool escapes_all = true;
    for (int l = k + 1; l < n; ++l) {
        auto msv_l = catalog::msv_vect(A, l);
        escapes_all = escapes_all && !msv_l.sub.contains(v);
    }
    check(rep, "it escapes msV(l) for every larger coordinate subspace l", escapes_all);

    // forcing the extra direction makes the closure non-solvable
    El dir = (series == Series::TildeSvect) ? A.basis_element(g->offset_at(-1) + k)
                                            : ex.from_vf(field_monomial<Rational>(n, 0, k, Rational(1)));
    auto gens = msv_k.sub.elements();
    gens.push_back(dir);
    auto res = closure(A, gens, ClosureOpts{true});
    check(rep, "closure(msV + d" + std::to_string(k + 1) + ") is non-solvable",
          res.aborted_nonsolvable || !is_solvable(A, res.sub));
    return rep;
}

Report witness_prop4(const catalog::WittShape& shape) {
    Report rep;
    auto built = catalog::msv_h(shape, Series::H);
    QA A(built.model, QField{});
    ModelExpresser ex(built.model);
    auto blocks = catalog::shape_blocks(shape);
    int K = shape.k + shape.l + shape.m;
    auto xi = [&](int i) { return Mono(1) << i; };
    auto eta = [&](int i) { return Mono(1) << (K + i); };
    auto bxi = [&](int i) { return Mono(1) << (shape.k + shape.l + i); };
    auto beta_eta = [&](int i) { return Mono(1) << (K + shape.k + shape.l + i); };
    auto aeta = [&](int i) { return Mono(1) << (K + shape.k + i); };
    Mono za = shape.za ? (Mono(1) << (2 * K)) : 0;
    Mono zb = shape.zb ? (Mono(1) << (2 * K + (shape.za ? 1 : 0))) : 0;

    Mono u = 0, x = 0;
    std::string case_name;
    if (shape.m != 0) {
        x = bxi(0);
        case_name = "case (i): t_{-1} must contain xi^b_1";
        if (shape.k >= 1) u = bxi(0) | beta_eta(0) | eta(0);
        else if (shape.l >= 1) u = bxi(0) | beta_eta(0) | aeta(0);
        else u = beta_eta(0) | beta_eta(1) | za;  // l = 0 forces m >= 2 and za = 1
    } else if (shape.zb) {
        if (shape.k <= 1) {
            check(rep, "singular shape: witness cases do not apply", false, shape.str());
            return rep;
        }
        x = zb;
        case_name = "case (ii): t_{-1} must contain zeta^b";
        u = xi(1) | eta(0) | zb;
    } else {
        x = eta(shape.k - 1);
        case_name = "case (iii): t_{-1} must contain eta_k";
        if (shape.l >= 1) u = xi(shape.k - 1) | eta(shape.k - 1) | aeta(0);
        else if (shape.za) u = xi(shape.k - 1) | eta(shape.k - 1) | za;
        else u = xi(shape.k - 1) | xi(1) | eta(0);  // Lagrangian, k >= 3
    }
    Coords c = built.model->coords();
    auto uel = ex.from_gf(SuperPoly<Rational>::monomial(u, Rational(1)));
    check(rep, case_name + ": u = " + c.mono_str(u) + " lies in s_1",
          uel.degree == 1 && built.sub.contains(uel));

    auto br = poisson(built.model->split, SuperPoly<Rational>::monomial(x, Rational(1)),
                      SuperPoly<Rational>::monomial(u, Rational(1)))
                  .without_constant();
    auto brel = ex.from_gf(br);
    // {x, .} differentiates along the dual coordinate: eta_i for xi_i and
    // vice versa, zeta for itself
    int xpos = std::countr_zero(x);
    int dual = xpos < K ? K + xpos : (xpos < 2 * K ? xpos - K : xpos);
    Mono expected = u & ~(Mono(1) << dual);
    bool is_expected = !br.is_zero() && br.terms().size() == 1 && br.terms().begin()->first == expected;
    check(rep, "[" + c.mono_str(x) + ", u] = (+-) " + c.mono_str(expected), is_expected,
          poly_str(c, br));
    auto it0 = built.sub.comp.find(0);
    bool outside = it0 == built.sub.comp.end() || !it0->second.contains(brel.coords);
    check(rep, "the bracket leaves s_0", outside);

    auto gens = built.sub.elements();
    gens.push_back(ex.from_gf(SuperPoly<Rational>::monomial(x, Rational(1))));
    auto res = closure(A, gens, ClosureOpts{true});
    check(rep, "closure(msV + " + c.mono_str(x) + ") is non-solvable",
          res.aborted_nonsolvable || !is_solvable(A, res.sub));
    return rep;
}

}  // namespace

std::vector<std::string> witness_cases() {
    std::vector<std::string> out = {
        "prop1:vect:3", "prop1:vect:4", "prop1:svect:3", "prop1:svect:4",
        "prop1:h:5",    "prop1:h:6",
        "prop3:vect:3:k=1", "prop3:vect:3:k=2", "prop3:svect:3:k=1", "prop3:svect:3:k=2",
        "prop3:svect:4:k=1", "prop3:svect:4:k=2", "prop3:svect:4:k=3",
        "prop3:tilde-svect:4:k=1", "prop3:tilde-svect:4:k=2", "prop3:tilde-svect:4:k=3",
    };
    for (int n : {5, 6})
        for (const auto& s : catalog::shapes_for(n))
            if (!catalog::is_singular(s)) out.push_back("prop4:" + std::to_string(n) + ":" + s.str());
    return out;
}

Report witness_suite(const std::string& case_id) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : case_id) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() >= 3 && parts[0] == "prop1") return witness_prop1(parse_series(parts[1]), std::stoi(parts[2]));
    if (parts.size() >= 4 && parts[0] == "prop3") {
        int k = std::stoi(parts[3].substr(parts[3].find('=') + 1));
        return witness_prop3(parse_series(parts[1]), std::stoi(parts[2]), k);
    }
    if (parts.size() >= 3 && parts[0] == "prop4")
        return witness_prop4(catalog::WittShape::parse(parts[2]));
    throw std::invalid_argument("witness_suite: unknown case '" + case_id + "'");
}

Report containment_suite() {
    Report rep;

    {  // vect(0|2): ms0 < msV, codim 1 in degree -1
        auto g = build_algebra(Series::Vect, 2);
        QA A(g, QField{});
        auto zero = catalog::ms0(A);
        auto v = catalog::msv_vect(A, 1);
        bool strict = v.sub.contains_sub(zero.sub) && v.sub.dim() == zero.sub.dim() + 1 &&
                      v.sub.dim_at(-1) == 1 && zero.sub.dim_at(-1) == 0;
        check(rep, "vect(0|2): ms0 < msV(<d1>) with codim 1 in degree -1",
              strict && is_solvable(A, v.sub), zero.note);
    }
    {  // h'(0|4): ms0 < msV(<x1>)
        auto built = catalog::msv_h({1, 0, 1, false, false}, Series::HPrime, true);
        QA A(built.model, QField{});
        auto zero = catalog::ms0(A);
        check(rep, "h'(0|4): ms0 < msV(<x1>)",
              built.sub.contains_sub(zero.sub) && built.sub.dim() > zero.sub.dim() &&
                  is_solvable(A, built.sub),
              zero.note);
    }
    {  // the three h'(0|4) pairs
        auto sc = catalog::small_cases();
        int idx = 1;
        for (const auto& p : sc.five_sub) {
            QA A(p.ambient, QField{});
            bool ok = p.outer.sub.contains_sub(p.inner.sub) &&
                      p.outer.sub.dim() > p.inner.sub.dim() && is_solvable(A, p.outer.sub) &&
                      is_solvable(A, p.inner.sub);
            check(rep, "h'(0|4) pair " + std::to_string(idx++) + ": msV < msV~ (strict, solvable)", ok);
        }
    }
    // singular shapes at n = 5, 6
    for (int n : {5, 6}) {
        for (const auto& s : catalog::shapes_for(n)) {
            if (!catalog::is_singular(s)) continue;
            auto built = catalog::msv_h(s, Series::H);
            QA A(built.model, QField{});
            bool ok = !built.over.comp.empty() && built.over.contains_sub(built.sub) &&
                      built.over.dim() > built.sub.dim() && is_solvable(A, built.over);
            check(rep, "h(0|" + std::to_string(n) + ") " + s.str() + ": " + built.note, ok);
        }
    }
    return rep;
}

}  // namespace superstructure::verify
