#pragma once

// Finite-dimensional ambient superalgebras with a fixed homogeneous basis and
// exact structure constants: vect(0|n), svect(0|n), ~svect(0|2m) (Z/n-graded),
// po(0|n), h(0|n) and its derived algebra h'(0|n).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superstructure/linalg.hpp"
#include "superstructure/vectorfield.hpp"

namespace superstructure {

/// Homogeneous element of an ambient algebra, as coordinates over the
/// ambient basis of its degree.
template <class K>
struct Element {
    int degree = 0;
    Vec<K> coords;
    bool is_zero() const { return vec_is_zero(coords); }
};

enum class Series { Vect, Svect, TildeSvect, Po, H, HPrime };

inline bool is_h_type(Series s) {
    return s == Series::Po || s == Series::H || s == Series::HPrime;
}

std::string series_name(Series s);
Series parse_series(const std::string& name);

/// Variable naming for a coordinate system: x = xi, e = eta, z = zeta.
struct Coords {
    int n = 0;
    bool h_type = false;
    HSplit split;

    std::string var_name(int i) const {  // i 0-based
        if (!h_type) return "x" + std::to_string(i + 1);
        if (i < split.pairs) return "x" + std::to_string(i + 1);
        if (i < 2 * split.pairs) return "e" + std::to_string(i - split.pairs + 1);
        return "z" + std::to_string(i - 2 * split.pairs + 1);
    }
    std::string mono_str(Mono m) const {
        if (m == 0) return "1";
        std::string out;
        for (Mono t = m; t; t &= t - 1) {
            if (!out.empty()) out += '.';
            out += var_name(std::countr_zero(t));
        }
        return out;
    }
};

std::string scalar_prefix(const std::string& coeff);  // "", "-", "2.", "-1/2." ...
std::string poly_str(const Coords& c, const SuperPoly<Rational>& f);
std::string vf_str(const Coords& c, const VectorField<Rational>& d);

struct AlgebraDesc {
    Series series;
    int n = 0;
    HSplit split;      // meaningful for h-type series
    FieldSpec field;   // display/serialization tag; structure constants are integral
    bool zmod = false; // Z/n grading (TildeSvect); degrees represented -1..n-2
    int min_deg = 0;
    int max_deg = -1;

    struct Elem {
        int degree;
        SuperPoly<Rational> gf;     // generating function (h-type series)
        VectorField<Rational> vf;   // vector-field model (vect-type series)
        std::string name;
    };
    std::vector<Elem> basis;        // ordered by degree, canonical within degree
    std::vector<int> offsets;       // offsets[d - min_deg], plus trailing total

    struct TableTerm {
        int idx;
        Rational c;
    };
    std::vector<std::vector<std::vector<TableTerm>>> table;  // [a][b] -> sparse result

    bool nonsolvable = false;        // the algebra itself is not solvable
    bool deg0_nonsolvable = false;   // its degree-0 component is not solvable

    int dim() const { return static_cast<int>(basis.size()); }
    bool has_degree(int d) const { return d >= min_deg && d <= max_deg; }
    int canon_degree(int d) const {
        if (!zmod) return d;
        int r = (d + 1) % n;
        if (r < 0) r += n;
        return r - 1;
    }
    int offset_at(int d) const { return offsets[d - min_deg]; }
    int dim_at(int d) const {
        if (!has_degree(d)) return 0;
        return offsets[d - min_deg + 1] - offsets[d - min_deg];
    }
    int degree_of(int idx) const { return basis[idx].degree; }
    std::vector<int> degrees() const {
        std::vector<int> out;
        for (int d = min_deg; d <= max_deg; ++d) out.push_back(d);
        return out;
    }
    Coords coords() const { return Coords{n, is_h_type(series), split}; }

    /// Parity of every element of the given degree (gradings are compatible).
    int parity_of_degree(int d) const { return ((d % 2) + 2) % 2; }
};

using AlgebraPtr = std::shared_ptr<const AlgebraDesc>;

/// Constructs the ambient algebra; throws on inadmissible (series, n).
/// Admissible: vect n>1, svect n>2, ~svect even n>=4, po/h/h' n>=2
/// (simplicity bounds for h are enforced by the catalog, not here).
AlgebraPtr build_algebra(Series series, int n, FieldSpec field = {});

/// h-type constructor with an explicit coordinate split (n = 2k + l); the
/// default split has l = n mod 2.  Splits with l = 2 arise as normal-form
/// models for subspaces whose orthogonal complement carries two zeta's.
AlgebraPtr build_algebra_h(Series series, HSplit split, FieldSpec field = {});

/// Expresses vector-field or generating-function models in the ambient basis.
class ModelExpresser {
public:
    explicit ModelExpresser(AlgebraPtr g);
    ~ModelExpresser();
    ModelExpresser(ModelExpresser&&) noexcept;

    std::optional<Element<Rational>> try_from_vf(const VectorField<Rational>& d) const;
    std::optional<Element<Rational>> try_from_gf(const SuperPoly<Rational>& f) const;
    Element<Rational> from_vf(const VectorField<Rational>& d) const;
    Element<Rational> from_gf(const SuperPoly<Rational>& f) const;

    /// Model of a coordinate vector (inverse direction).
    VectorField<Rational> vf_of(const Element<Rational>& e) const;
    SuperPoly<Rational> gf_of(const Element<Rational>& e) const;

    const AlgebraPtr& algebra() const { return g_; }

private:
    struct Impl;
    AlgebraPtr g_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace superstructure
