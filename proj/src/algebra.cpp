#include "superstructure/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superstructure/subalgebra.hpp"

namespace superstructure {

std::string series_name(Series s) {
    switch (s) {
        case Series::Vect: return "vect";
        case Series::Svect: return "svect";
        case Series::TildeSvect: return "tilde-svect";
        case Series::Po: return "po";
        case Series::H: return "h";
        case Series::HPrime: return "h-prime";
    }
    throw std::logic_error("series_name: bad tag");
}

Series parse_series(const std::string& name) {
    if (name == "vect") return Series::Vect;
    if (name == "svect") return Series::Svect;
    if (name == "tilde-svect" || name == "tilde_svect" || name == "tsvect") return Series::TildeSvect;
    if (name == "po") return Series::Po;
    if (name == "h") return Series::H;
    if (name == "h-prime" || name == "h_prime" || name == "hprime" || name == "h'") return Series::HPrime;
    throw std::invalid_argument("unknown series '" + name + "'");
}

std::string scalar_prefix(const std::string& coeff) {
    if (coeff == "1") return "";
    if (coeff == "-1") return "-";
    return coeff + ".";
}

namespace {

std::string join_signed(std::vector<std::pair<Rational, std::string>> terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [c, body] : terms) {
        bool neg = c.sgn() < 0;
        Rational a = neg ? -c : c;
        std::string piece = body.empty() ? a.str() : scalar_prefix(a.str()) + body;
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

}  // namespace

std::string poly_str(const Coords& c, const SuperPoly<Rational>& f) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [m, x] : f.terms()) terms.emplace_back(x, m == 0 ? "" : c.mono_str(m));
    return join_signed(std::move(terms));
}

std::string vf_str(const Coords& c, const VectorField<Rational>& d) {
    std::vector<std::pair<Rational, std::string>> terms;
    // canonical order: monomial-major, direction-minor
    std::map<Mono, std::vector<std::pair<int, Rational>>, MonoLess> by_mono;
    for (int j = 0; j < d.n; ++j)
        for (const auto& [m, x] : d.comp[j].terms()) by_mono[m].emplace_back(j, x);
    for (const auto& [m, dirs] : by_mono)
        for (const auto& [j, x] : dirs) {
            std::string body = (m == 0 ? "" : c.mono_str(m) + ".");
            body += "d" + std::to_string(j + 1);
            terms.emplace_back(x, body);
        }
    return join_signed(std::move(terms));
}

namespace {

// ---- model coordinate spaces -------------------------------------------

// Columns of the model space a homogeneous component lives in: (monomial,
// direction) pairs for the vector-field series, monomials for the h series.
struct ModelSpace {
    bool h_type = false;
    std::vector<std::pair<Mono, int>> vf_cols;
    std::vector<Mono> gf_cols;
    std::map<std::pair<Mono, int>, int> vf_idx;
    std::map<Mono, int, MonoLess> gf_idx;

    int cols() const { return h_type ? (int)gf_cols.size() : (int)vf_cols.size(); }

    void add_vf_degree(int n, int lambda_deg) {
        for (Mono m : monomials_of_degree(n, lambda_deg))
            for (int j = 0; j < n; ++j) {
                vf_idx[{m, j}] = (int)vf_cols.size();
                vf_cols.emplace_back(m, j);
            }
    }
    void add_gf_degree(int n, int lambda_deg) {
        h_type = true;
        for (Mono m : monomials_of_degree(n, lambda_deg)) {
            gf_idx[m] = (int)gf_cols.size();
            gf_cols.push_back(m);
        }
    }

    Vec<Rational> vf_vec(const VectorField<Rational>& d) const {
        Vec<Rational> v(vf_cols.size());
        for (int j = 0; j < d.n; ++j)
            for (const auto& [m, c] : d.comp[j].terms()) {
                auto it = vf_idx.find({m, j});
                if (it == vf_idx.end()) throw std::logic_error("model space: bracket left the graded component");
                v[it->second] = c;
            }
        return v;
    }
    Vec<Rational> gf_vec(const SuperPoly<Rational>& f) const {
        Vec<Rational> v(gf_cols.size());
        for (const auto& [m, c] : f.terms()) {
            auto it = gf_idx.find(m);
            if (it == gf_idx.end()) throw std::logic_error("model space: bracket left the graded component");
            v[it->second] = c;
        }
        return v;
    }
};

// svect_d: canonical kernel basis of the divergence on vect_d, as coefficient
// vectors over the (monomial, direction) basis of vect_d.
Mat<Rational> svect_kernel(int n, int d, const std::vector<std::pair<Mono, int>>& vf_cols) {
    QField F;
    auto target = monomials_of_degree(n, d);  // divergence lands in Lambda^d
    std::map<Mono, int, MonoLess> tidx;
    for (std::size_t i = 0; i < target.size(); ++i) tidx[target[i]] = (int)i;
    Mat<Rational> img(vf_cols.size());
    for (std::size_t i = 0; i < vf_cols.size(); ++i) {
        img[i].assign(target.size(), Rational());
        auto [m, j] = vf_cols[i];
        VectorField<Rational> vf = field_monomial<Rational>(n, m, j, Rational(1));
        SuperPoly<Rational> div = divergence(vf);
        for (const auto& [mm, c] : div.terms()) img[i][tidx.at(mm)] = c;
    }
    return left_kernel(img, (int)target.size(), F);
}

struct Builder {
    AlgebraDesc desc;
    std::map<int, ModelSpace> spaces;

    void add_elem(int degree, AlgebraDesc::Elem e) {
        e.degree = degree;
        desc.basis.push_back(std::move(e));
    }

    void finish_offsets() {
        desc.offsets.assign(desc.max_deg - desc.min_deg + 2, 0);
        for (const auto& e : desc.basis) desc.offsets[e.degree - desc.min_deg + 1]++;
        for (std::size_t i = 1; i < desc.offsets.size(); ++i) desc.offsets[i] += desc.offsets[i - 1];
        // basis must already be ordered by degree
        for (int i = 1; i < (int)desc.basis.size(); ++i)
            if (desc.basis[i - 1].degree > desc.basis[i].degree)
                throw std::logic_error("builder: basis not ordered by degree");
    }

    void compute_table() {
        QField F;
        const int dim = desc.dim();
        const bool h_type = is_h_type(desc.series);
        // per-degree solvers over the model spaces
        std::map<int, SpanSolver<Rational>> solvers;
        for (int d = desc.min_deg; d <= desc.max_deg; ++d) {
            const ModelSpace& sp = spaces.at(d);
            Mat<Rational> gens;
            for (int i = desc.offset_at(d); i < desc.offset_at(d) + desc.dim_at(d); ++i)
                gens.push_back(h_type ? sp.gf_vec(desc.basis[i].gf) : sp.vf_vec(desc.basis[i].vf));
            solvers.emplace(d, SpanSolver<Rational>(sp.cols(), gens, Rational(1)));
        }
        desc.table.assign(dim, {});
        for (int a = 0; a < dim; ++a) {
            desc.table[a].resize(dim);
            for (int b = 0; b < dim; ++b) {
                int dc = desc.canon_degree(desc.basis[a].degree + desc.basis[b].degree);
                SuperPoly<Rational> gf;
                VectorField<Rational> vf;
                bool zero;
                if (h_type) {
                    gf = poisson(desc.split, desc.basis[a].gf, desc.basis[b].gf);
                    if (desc.series != Series::Po) gf = gf.without_constant();
                    zero = gf.is_zero();
                } else {
                    vf = bracket(desc.basis[a].vf, desc.basis[b].vf);
                    zero = vf.is_zero();
                }
                if (zero) continue;
                if (!desc.has_degree(dc))
                    throw std::logic_error("algebra build: bracket escapes the stored degree range");
                const ModelSpace& sp = spaces.at(dc);
                auto coords = solvers.at(dc).coords(h_type ? sp.gf_vec(gf) : sp.vf_vec(vf));
                if (!coords) throw std::logic_error("algebra build: bracket not in the basis span");
                int off = desc.offset_at(dc);
                for (int t = 0; t < (int)coords->size(); ++t)
                    if (!(*coords)[t].is_zero()) desc.table[a][b].push_back({off + t, (*coords)[t]});
            }
        }
    }
};

void compute_solvability_flags(AlgebraDesc& d, AlgebraPtr ptr) {
    AlgebraOver<QField> A(ptr, QField{});
    auto run = [&](GradedSub<Rational> cur) {
        while (cur.dim() > 0) {
            GradedSub<Rational> next = bracket_span(A, cur, cur, cur.dim());
            if (next.dim() == cur.dim()) return true;  // stabilized nonzero
            cur = std::move(next);
        }
        return false;
    };
    d.nonsolvable = run(full_sub(A));
    if (d.has_degree(0) && d.dim_at(0) > 0) {
        GradedSub<Rational> z(ptr);
        for (int i = d.offset_at(0); i < d.offset_at(0) + d.dim_at(0); ++i) z.insert(A.basis_element(i));
        d.deg0_nonsolvable = run(z);
    }
}

AlgebraPtr finalize(Builder&& b) {
    b.finish_offsets();
    b.compute_table();
    auto ptr = std::make_shared<AlgebraDesc>(std::move(b.desc));
    compute_solvability_flags(const_cast<AlgebraDesc&>(*ptr), ptr);
    return ptr;
}

void check_n(Series s, int n) {
    switch (s) {
        case Series::Vect:
            if (n < 2) throw std::invalid_argument("vect(0|n) requires n > 1");
            break;
        case Series::Svect:
            if (n < 3) throw std::invalid_argument("svect(0|n) requires n > 2");
            break;
        case Series::TildeSvect:
            if (n < 4 || n % 2) throw std::invalid_argument("~svect(0|n) requires even n >= 4");
            break;
        default:
            if (n < 2) throw std::invalid_argument("h-type series require n >= 2");
    }
    if (n > 10) throw std::invalid_argument("n > 10 is not supported");
}

AlgebraPtr build_vect_like(Series series, int n, FieldSpec field) {
    Builder b;
    b.desc.series = series;
    b.desc.n = n;
    b.desc.field = field;
    Coords coords{n, false, {}};

    if (series == Series::Vect) {
        b.desc.min_deg = -1;
        b.desc.max_deg = n - 1;
        for (int d = -1; d <= n - 1; ++d) {
            b.spaces[d].add_vf_degree(n, d + 1);
            for (Mono m : monomials_of_degree(n, d + 1))
                for (int j = 0; j < n; ++j) {
                    VectorField<Rational> vf = field_monomial<Rational>(n, m, j, Rational(1));
                    b.add_elem(d, {d, {}, vf, vf_str(coords, vf)});
                }
        }
        return finalize(std::move(b));
    }

    // svect / ~svect share the divergence-free components
    auto svect_component = [&](int d) {
        std::vector<std::pair<Mono, int>> cols;
        for (Mono m : monomials_of_degree(n, d + 1))
            for (int j = 0; j < n; ++j) cols.emplace_back(m, j);
        Mat<Rational> ker = svect_kernel(n, d, cols);
        std::vector<VectorField<Rational>> out;
        for (const auto& row : ker) {
            VectorField<Rational> vf(n);
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (!row[i].is_zero()) vf += row[i] * field_monomial<Rational>(n, cols[i].first, cols[i].second, Rational(1));
            out.push_back(std::move(vf));
        }
        return out;
    };

    if (series == Series::Svect) {
        b.desc.min_deg = -1;
        b.desc.max_deg = n - 1;
        for (int d = -1; d <= n - 1; ++d) {
            b.spaces[d].add_vf_degree(n, d + 1);
            for (auto& vf : svect_component(d)) b.add_elem(d, {d, {}, vf, vf_str(coords, vf)});
        }
        return finalize(std::move(b));
    }

    // ~svect(0|n) = (1 + Xi) svect(0|n), Z/n-graded with degrees -1..n-2.
    b.desc.zmod = true;
    b.desc.min_deg = -1;
    b.desc.max_deg = n - 2;
    Mono top = (Mono(1) << n) - 1;
    b.spaces[-1].add_vf_degree(n, 0);
    b.spaces[-1].add_vf_degree(n, n);  // the (1 + Xi) tails live here
    for (int j = 0; j < n; ++j) {
        VectorField<Rational> vf = field_monomial<Rational>(n, 0, j, Rational(1));
        vf += field_monomial<Rational>(n, top, j, Rational(1));
        b.add_elem(-1, {-1, {}, vf, vf_str(coords, vf)});
    }
    for (int d = 0; d <= n - 2; ++d) {
        b.spaces[d].add_vf_degree(n, d + 1);
        for (auto& vf : svect_component(d)) b.add_elem(d, {d, {}, vf, vf_str(coords, vf)});
    }
    return finalize(std::move(b));
}

AlgebraPtr build_h_like(Series series, HSplit split, FieldSpec field) {
    int n = split.n();
    Builder b;
    b.desc.series = series;
    b.desc.n = n;
    b.desc.split = split;
    b.desc.field = field;
    Coords coords{n, true, split};

    int lo, hi;  // Lambda-degree range of generating functions
    switch (series) {
        case Series::Po: lo = 0; hi = n; break;
        case Series::H: lo = 1; hi = n; break;
        case Series::HPrime: lo = 1; hi = n - 1; break;
        default: throw std::logic_error("build_h_like: not an h-type series");
    }
    b.desc.min_deg = lo - 2;
    b.desc.max_deg = hi - 2;
    for (int ld = lo; ld <= hi; ++ld) {
        int d = ld - 2;
        b.spaces[d].add_gf_degree(n, ld);
        for (Mono m : monomials_of_degree(n, ld)) {
            SuperPoly<Rational> gf = SuperPoly<Rational>::monomial(m, Rational(1));
            b.add_elem(d, {d, gf, {}, coords.mono_str(m)});
        }
    }
    AlgebraPtr ptr = finalize(std::move(b));

    if (series == Series::HPrime) {
        // the claimed basis (monomials of degree 1..n-1) must equal [h, h]
        AlgebraPtr h = build_h_like(Series::H, split, field);
        AlgebraOver<QField> A(h, QField{});
        GradedSub<Rational> derived = bracket_span(A, full_sub(A), full_sub(A));
        if (derived.dim() != ptr->dim())
            throw std::logic_error("h'(0|n): derived subalgebra does not match the monomial basis");
        for (int d = ptr->min_deg; d <= ptr->max_deg; ++d)
            if (derived.dim_at(d) != ptr->dim_at(d))
                throw std::logic_error("h'(0|n): derived subalgebra has unexpected graded dimensions");
    }
    return ptr;
}

}  // namespace

AlgebraPtr build_algebra(Series series, int n, FieldSpec field) {
    check_n(series, n);
    if (is_h_type(series)) return build_h_like(series, HSplit{n / 2, n % 2}, field);
    return build_vect_like(series, n, field);
}

AlgebraPtr build_algebra_h(Series series, HSplit split, FieldSpec field) {
    if (!is_h_type(series)) throw std::invalid_argument("build_algebra_h: series is not h-type");
    check_n(series, split.n());
    if (split.pairs < 0 || split.zetas < 0 || split.zetas > 2)
        throw std::invalid_argument("build_algebra_h: split must have 0 <= zetas <= 2");
    return build_h_like(series, split, field);
}

struct ModelExpresser::Impl {
    std::map<int, ModelSpace> spaces;
    std::map<int, SpanSolver<Rational>> solvers;
};

ModelExpresser::ModelExpresser(AlgebraPtr g) : g_(std::move(g)), impl_(new Impl) {
    const AlgebraDesc& d = *g_;
    const bool h_type = is_h_type(d.series);
    for (int deg = d.min_deg; deg <= d.max_deg; ++deg) {
        ModelSpace sp;
        Mat<Rational> gens;
        if (h_type) {
            sp.add_gf_degree(d.n, deg + 2);
            for (int i = d.offset_at(deg); i < d.offset_at(deg) + d.dim_at(deg); ++i)
                gens.push_back(sp.gf_vec(d.basis[i].gf));
        } else {
            // collect every Lambda-degree that actually occurs in the models
            std::vector<bool> seen(d.n + 1, false);
            for (int i = d.offset_at(deg); i < d.offset_at(deg) + d.dim_at(deg); ++i)
                for (int j = 0; j < d.n; ++j)
                    for (const auto& [m, c] : d.basis[i].vf.comp[j].terms()) seen[mono_deg(m)] = true;
            if (std::none_of(seen.begin(), seen.end(), [](bool b) { return b; })) seen[deg + 1] = true;
            for (int ld = 0; ld <= d.n; ++ld)
                if (seen[ld]) sp.add_vf_degree(d.n, ld);
            for (int i = d.offset_at(deg); i < d.offset_at(deg) + d.dim_at(deg); ++i)
                gens.push_back(sp.vf_vec(d.basis[i].vf));
        }
        impl_->solvers.emplace(deg, SpanSolver<Rational>(sp.cols(), gens, Rational(1)));
        impl_->spaces.emplace(deg, std::move(sp));
    }
}

ModelExpresser::~ModelExpresser() = default;
ModelExpresser::ModelExpresser(ModelExpresser&&) noexcept = default;

std::optional<Element<Rational>> ModelExpresser::try_from_vf(const VectorField<Rational>& d) const {
    const AlgebraDesc& g = *g_;
    if (is_h_type(g.series)) throw std::logic_error("try_from_vf: h-type ambient expects generating functions");
    if (d.is_zero()) return Element<Rational>{g.min_deg, Vec<Rational>(g.dim_at(g.min_deg))};
    int min_ld = kMaxVars + 1;
    for (int j = 0; j < d.n; ++j)
        for (const auto& [m, c] : d.comp[j].terms()) min_ld = std::min(min_ld, mono_deg(m));
    int deg = g.canon_degree(min_ld - 1);
    if (!g.has_degree(deg)) return std::nullopt;
    Vec<Rational> v;
    try {
        v = impl_->spaces.at(deg).vf_vec(d);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    auto coords = impl_->solvers.at(deg).coords(v);
    if (!coords) return std::nullopt;
    return Element<Rational>{deg, std::move(*coords)};
}

std::optional<Element<Rational>> ModelExpresser::try_from_gf(const SuperPoly<Rational>& f) const {
    const AlgebraDesc& g = *g_;
    if (!is_h_type(g.series)) throw std::logic_error("try_from_gf: vect-type ambient expects vector fields");
    if (f.is_zero()) return Element<Rational>{g.min_deg, Vec<Rational>(g.dim_at(g.min_deg))};
    if (!f.is_homogeneous()) return std::nullopt;
    int deg = f.degree() - 2;
    if (!g.has_degree(deg)) return std::nullopt;
    auto coords = impl_->solvers.at(deg).coords(impl_->spaces.at(deg).gf_vec(f));
    if (!coords) return std::nullopt;
    return Element<Rational>{deg, std::move(*coords)};
}

Element<Rational> ModelExpresser::from_vf(const VectorField<Rational>& d) const {
    auto e = try_from_vf(d);
    if (!e) throw std::invalid_argument("element does not lie in " + series_name(g_->series) + " ambient");
    return *e;
}

Element<Rational> ModelExpresser::from_gf(const SuperPoly<Rational>& f) const {
    auto e = try_from_gf(f);
    if (!e) throw std::invalid_argument("element does not lie in " + series_name(g_->series) + " ambient");
    return *e;
}

VectorField<Rational> ModelExpresser::vf_of(const Element<Rational>& e) const {
    const AlgebraDesc& g = *g_;
    VectorField<Rational> out(g.n);
    int off = g.offset_at(e.degree);
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (!e.coords[i].is_zero()) out += e.coords[i] * g.basis[off + i].vf;
    return out;
}

SuperPoly<Rational> ModelExpresser::gf_of(const Element<Rational>& e) const {
    const AlgebraDesc& g = *g_;
    SuperPoly<Rational> out;
    int off = g.offset_at(e.degree);
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (!e.coords[i].is_zero()) out += e.coords[i] * g.basis[off + i].gf;
    return out;
}

AlgebraPtr subalgebra_desc(const AlgebraOver<QField>& A, const GradedSub<Rational>& s,
                           const std::string& label) {
    const AlgebraDesc& g = *A.g;
    if (s.dim() == 0) throw std::invalid_argument("subalgebra_desc: zero subalgebra");
    AlgebraDesc d;
    d.series = g.series;
    d.n = g.n;
    d.split = g.split;
    d.field = g.field;
    d.zmod = g.zmod;
    d.min_deg = s.comp.begin()->first;
    d.max_deg = s.comp.rbegin()->first;
    if (g.zmod) {  // keep the full representative range for wraparound
        d.min_deg = g.min_deg;
        d.max_deg = g.max_deg;
    }

    Coords coords = g.coords();
    const bool h_type = is_h_type(g.series);
    std::map<int, SpanSolver<Rational>> solvers;
    for (int deg = d.min_deg; deg <= d.max_deg; ++deg) {
        Mat<Rational> gens;
        auto it = s.comp.find(deg);
        if (it != s.comp.end())
            for (const auto& row : it->second.rows()) {
                gens.push_back(row);
                AlgebraDesc::Elem e;
                e.degree = deg;
                int off = g.offset_at(deg);
                if (h_type) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        if (!row[i].is_zero()) e.gf += row[i] * g.basis[off + i].gf;
                    e.name = poly_str(coords, e.gf);
                } else {
                    e.vf = VectorField<Rational>(g.n);
                    for (std::size_t i = 0; i < row.size(); ++i)
                        if (!row[i].is_zero()) e.vf += row[i] * g.basis[off + i].vf;
                    e.name = vf_str(coords, e.vf);
                }
                d.basis.push_back(std::move(e));
            }
        solvers.emplace(deg, SpanSolver<Rational>(g.dim_at(deg), gens, Rational(1)));
    }
    d.offsets.assign(d.max_deg - d.min_deg + 2, 0);
    for (const auto& e : d.basis) d.offsets[e.degree - d.min_deg + 1]++;
    for (std::size_t i = 1; i < d.offsets.size(); ++i) d.offsets[i] += d.offsets[i - 1];

    // structure constants via the parent bracket, re-expressed in s
    int dim = d.dim();
    d.table.assign(dim, {});
    auto parent_el = [&](int idx) {
        int deg = d.basis[idx].degree;
        auto it = s.comp.find(deg);
        return Element<Rational>{deg, it->second.rows()[idx - d.offsets[deg - d.min_deg]]};
    };
    for (int a = 0; a < dim; ++a) {
        d.table[a].resize(dim);
        for (int bb = 0; bb < dim; ++bb) {
            Element<Rational> r = A.bracket(parent_el(a), parent_el(bb));
            if (r.is_zero()) continue;
            if (r.degree < d.min_deg || r.degree > d.max_deg)
                throw std::invalid_argument("subalgebra_desc: input is not bracket-closed (degree range)");
            auto coords_r = solvers.at(r.degree).coords(r.coords);
            if (!coords_r) throw std::invalid_argument("subalgebra_desc: input is not bracket-closed");
            int off = d.offsets[r.degree - d.min_deg];
            for (int t = 0; t < (int)coords_r->size(); ++t)
                if (!(*coords_r)[t].is_zero()) d.table[a][bb].push_back({off + t, (*coords_r)[t]});
        }
    }
    (void)label;
    auto ptr = std::make_shared<AlgebraDesc>(std::move(d));
    compute_solvability_flags(const_cast<AlgebraDesc&>(*ptr), ptr);
    return ptr;
}

}  // namespace superstructure
