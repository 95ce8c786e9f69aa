#pragma once

// The classified maximal graded solvable subalgebras: triangular degree-0
// data, ms0 (trivial negative part), msc (complete negative part, by Cartan
// prolongation cross-checked against explicit monomial bases), msV for the
// vect-type series (three-summand spans), msV for the h series from a Witt
// normal form, and the small-case tables for vect(0|2) and h'(0|4).

#include "superstructure/io.hpp"
#include "superstructure/prolong.hpp"
#include "superstructure/subalgebra.hpp"

namespace superstructure::catalog {

/// The triangular maximal solvable subalgebra of g_0: lower-triangular for
/// vect/svect/~svect, upper-triangular (xi over eta) for the h series; for a
/// 2-zeta split the anisotropic plane contributes zeta1.zeta2.
Echelon<Rational> borel0(const AlgebraOver<QField>& A);

struct Entry {
    GradedSub<Rational> sub;
    std::string note;      // nonempty: known strict containment (not maximal)
    std::string decision;  // certification remark (e.g. which deformed span closed)
};

/// Borel in degree 0 plus the full positive part.
Entry ms0(const AlgebraOver<QField>& A);

/// (g_{-1}, borel0)_* ; equals the explicit monomial span (asserted where the
/// series has one).  Refused for ~svect: its degree -1 component generates
/// the whole algebra, so no solvable subalgebra contains all of it.
Entry msc(const AlgebraOver<QField>& A);

/// msV for vect/svect/~svect with V = <d_1..d_k> (deformed for ~svect):
/// the prolong equals the explicit three-summand span; both are computed and
/// compared.  1 <= k <= n-1.
Entry msv_vect(const AlgebraOver<QField>& A, int k);

/// Witt normal form of a subspace V of h(0|n)_{-1}:
/// k = dim V cap V^perp, l/m = hyperbolic ranks of the complements in V and
/// V^perp, za/zb = presence of the anisotropic zeta^a / zeta^b.
struct WittShape {
    int k = 0, l = 0, m = 0;
    bool za = false, zb = false;

    int n() const { return 2 * (k + l + m) + za + zb; }
    int dim_v() const { return k + 2 * l + za; }
    int dim_vperp() const { return k + 2 * m + zb; }
    void validate() const;
    std::string str() const;
    static WittShape parse(const std::string& text);  // "k=1,l=1,m=0,za=0,zb=1"
};

/// Singular shapes are exactly those where msV fails to be maximal:
/// dim Ker B|_V <= 1 and Ker B|_V has codimension 1 in V^perp.
bool is_singular(const WittShape& s);

/// Coordinate positions (0-based Grassmann indices) of the shape's blocks in
/// the standard embedding: sing xi, sing eta, alpha block, beta block.
struct ShapeBlocks {
    std::vector<int> sing_xi, sing_eta, alpha, beta;
    Mono sing_xi_mask = 0, sing_eta_mask = 0, alpha_mask = 0, beta_mask = 0;
};
ShapeBlocks shape_blocks(const WittShape& s);

struct MsvH {
    AlgebraPtr model;  // h (or h') built with the shape's split
    WittShape shape;
    GradedSub<Rational> sub;
    Echelon<Rational> v;          // the negative component in model coordinates
    std::string note;             // singular diagnostic, empty if maximal-candidate
    GradedSub<Rational> over;     // for singular shapes: solvable over-algebra
};

/// msV for the h series on the shape model.  Requires n > 4 unless
/// allow_small_n (the h'(0|4) tables reuse the same construction).
MsvH msv_h(const WittShape& shape, Series series = Series::H, bool allow_small_n = false);

/// Witt shape of a subspace spanned by standard basis coordinates of an
/// h-model's g_{-1}; rejects anything that is not a standard Witt-basis span
/// in normal position.
WittShape witt_shape_of(const AlgebraPtr& h_model, const std::vector<int>& coordinates);

/// All consistent shapes for a given n (V nonzero and proper).
std::vector<WittShape> shapes_for(int n);

struct SmallCases {
    AlgebraPtr vect2;
    std::vector<TableRow> vect02;  // msV, msc

    AlgebraPtr h4;                    // h'(0|4), standard split (2,0)
    std::vector<TableRow> h04;        // msV, msc, msVt
    std::vector<TableRow> h04_alpha;  // the same three rows in alpha-coordinate naming

    struct Pair {
        AlgebraPtr ambient;
        TableRow inner, outer;  // msV < msVt, both solvable and closed
    };
    std::vector<Pair> five_sub;  // the three non-maximal msV of h'(0|4)
};

/// Loads and validates (closed + solvable + expected spans) the small-case
/// tables.
SmallCases small_cases();

}  // namespace superstructure::catalog
