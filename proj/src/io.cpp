#include "superstructure/io.hpp"

#include <algorithm>
#include <sstream>

namespace superstructure {

namespace {

int parse_generator(const Coords& c, const std::string& tok) {
    if (tok.size() < 2) throw std::invalid_argument("bad generator '" + tok + "'");
    int idx = 0;
    try {
        idx = std::stoi(tok.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad generator '" + tok + "'");
    }
    if (idx < 1) throw std::invalid_argument("bad generator index in '" + tok + "'");
    char kind = tok[0];
    if (!c.h_type) {
        if (kind != 'x' || idx > c.n) throw std::invalid_argument("unknown generator '" + tok + "'");
        return idx - 1;
    }
    if (kind == 'x' && idx <= c.split.pairs) return idx - 1;
    if (kind == 'e' && idx <= c.split.pairs) return c.split.pairs + idx - 1;
    if (kind == 'z' && idx <= c.split.zetas) return 2 * c.split.pairs + idx - 1;
    throw std::invalid_argument("unknown generator '" + tok + "' for this coordinate split");
}

std::vector<std::string> split_dots(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '.') {
            out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string term_coeff(const Rational& model_c, const Rational& x) { return (x * model_c).str(); }
std::string term_coeff(const Rational& model_c, const Zp& x) {
    PField f(x.p);
    return (x * f.from_rational(model_c)).str();
}

}  // namespace

Mono parse_mono(const Coords& c, const std::string& text) {
    if (text == "1") return 0;
    Mono m = 0;
    int last = -1;
    for (const auto& tok : split_dots(text)) {
        int g = parse_generator(c, tok);
        if (g <= last)
            throw std::invalid_argument("monomial '" + text + "' is not in canonical generator order");
        last = g;
        m |= Mono(1) << g;
    }
    return m;
}

int parse_direction(const Coords& c, const std::string& text) {
    if (text.size() < 2 || text[0] != 'd') throw std::invalid_argument("bad direction '" + text + "'");
    int idx = 0;
    try {
        idx = std::stoi(text.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad direction '" + text + "'");
    }
    if (idx < 1 || idx > c.n) throw std::invalid_argument("direction out of range in '" + text + "'");
    return idx - 1;
}

VectorField<Rational> parse_vf_terms(const Coords& c, const nlohmann::json& terms) {
    VectorField<Rational> d(c.n);
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("field term must be [coeff, monomial, direction]");
        Rational coeff = Rational::from_string(t[0].get<std::string>());
        Mono m = parse_mono(c, t[1].get<std::string>());
        int dir = parse_direction(c, t[2].get<std::string>());
        d += coeff * field_monomial<Rational>(c.n, m, dir, Rational(1));
    }
    return d;
}

SuperPoly<Rational> parse_gf_terms(const Coords& c, const nlohmann::json& terms) {
    SuperPoly<Rational> f;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("function term must be [coeff, monomial]");
        f.add_term(parse_mono(c, t[1].get<std::string>()), Rational::from_string(t[0].get<std::string>()));
    }
    return f;
}

template <class K>
nlohmann::json sub_to_json(const GradedSub<K>& s) {
    const AlgebraDesc& g = *s.g;
    nlohmann::json j;
    j["series"] = series_name(g.series);
    j["n"] = g.n;
    j["field"] = g.field.str();
    if (is_h_type(g.series) && g.split.zetas != g.n % 2) j["split"] = {g.split.pairs, g.split.zetas};
    Coords c = g.coords();
    const bool h_type = is_h_type(g.series);
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& [d, e] : s.comp) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& row : e.rows()) {
            nlohmann::json terms = nlohmann::json::array();
            int off = g.offset_at(d);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row[i].is_zero()) continue;
                const auto& be = g.basis[off + i];
                if (h_type) {
                    for (const auto& [m, cf] : be.gf.terms())
                        terms.push_back({term_coeff(cf, row[i]), c.mono_str(m)});
                } else {
                    for (int dir = 0; dir < g.n; ++dir)
                        for (const auto& [m, cf] : be.vf.comp[dir].terms())
                            terms.push_back(
                                {term_coeff(cf, row[i]), c.mono_str(m), "d" + std::to_string(dir + 1)});
                }
            }
            basis.push_back(std::move(terms));
        }
        comps.push_back({{"degree", d}, {"basis", std::move(basis)}});
    }
    j["components"] = std::move(comps);
    return j;
}

ParsedSub sub_from_json(const nlohmann::json& j) {
    Series series = parse_series(j.at("series").get<std::string>());
    int n = j.at("n").get<int>();
    FieldSpec field = FieldSpec::parse(j.at("field").get<std::string>());
    AlgebraPtr g;
    if (is_h_type(series) && j.contains("split")) {
        HSplit split{j["split"][0].get<int>(), j["split"][1].get<int>()};
        if (split.n() != n) throw std::invalid_argument("split does not match n");
        g = build_algebra_h(series, split, field);
    } else {
        g = build_algebra(series, n, field);
    }
    ModelExpresser ex(g);
    Coords c = g->coords();

    auto parse_q = [&]() {
        GradedSub<Rational> s(g);
        for (const auto& comp : j.at("components")) {
            int degree = comp.at("degree").get<int>();
            for (const auto& terms : comp.at("basis")) {
                Element<Rational> e = is_h_type(series) ? ex.from_gf(parse_gf_terms(c, terms))
                                                        : ex.from_vf(parse_vf_terms(c, terms));
                if (!e.is_zero() && e.degree != degree)
                    throw std::invalid_argument("element degree disagrees with its component");
                s.insert(e);
            }
        }
        return s;
    };

    ParsedSub out{g, GradedSub<Rational>(g)};
    if (field.is_q()) {
        out.sub = parse_q();
    } else {
        AlgebraOver<PField> Ap(g, PField(field.p));
        out.sub = reduce_mod_p(Ap, parse_q());
    }
    return out;
}

std::vector<std::string> component_names(const GradedSub<Rational>& s, int degree) {
    std::vector<std::string> out;
    const AlgebraDesc& g = *s.g;
    Coords c = g.coords();
    auto it = s.comp.find(degree);
    if (it == s.comp.end()) return out;
    ModelExpresser ex(s.g);
    for (const auto& row : it->second.rows()) {
        Element<Rational> e{degree, row};
        out.push_back(is_h_type(g.series) ? poly_str(c, ex.gf_of(e)) : vf_str(c, ex.vf_of(e)));
    }
    return out;
}

std::string emit_table(const std::string& title, const std::vector<TableRow>& rows) {
    if (rows.empty()) return title + "\n(empty)\n";
    std::vector<int> degrees;
    for (const auto& r : rows)
        for (const auto& [d, e] : r.sub.comp)
            if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"name"};
    for (int d : degrees) header.push_back("basis of s_(" + std::to_string(d) + ")");
    cells.push_back(header);
    for (const auto& r : rows) {
        std::vector<std::string> line{r.name};
        for (int d : degrees) {
            auto names = component_names(r.sub, d);
            std::string cell;
            for (std::size_t i = 0; i < names.size(); ++i) cell += (i ? ", " : "") + names[i];
            if (cell.empty()) cell = "-";
            line.push_back(cell);
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    os << title << "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i + 1 < line.size())
                os << line[i] << std::string(width[i] - line[i].size(), ' ') << " | ";
            else
                os << line[i];
        }
        os << "\n";
    }
    return os.str();
}

template nlohmann::json sub_to_json<Rational>(const GradedSub<Rational>&);
template nlohmann::json sub_to_json<Zp>(const GradedSub<Zp>&);

}  // namespace superstructure
