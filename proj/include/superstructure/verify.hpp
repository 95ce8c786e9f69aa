#pragma once

// Maximality certification.  A graded solvable s < g is tested degree by
// degree: any graded solvable t > s adds, in some degree d, a line of
// g_d/s_d, and closure(s + v) only depends on the s_0-submodule generated by
// the line (t_d is s_0-invariant), so candidates are enumerated as projective
// points and their closures memoized per generated submodule.  Candidate
// classes with 1-dimensional quotient and common-eigenline candidates of the
// s_0 action are decided exactly over Q; full projective sweeps over F_p are
// exhaustive evidence.  F_p survivors are always re-checked over Q before a
// not_maximal verdict.

#include "superstructure/catalog.hpp"

namespace superstructure::verify {

struct SweepConfig {
    std::vector<std::uint32_t> primes{5, 7};
    int cap = 8;   // max quotient dimension for exhaustive projective sweeps
    int jobs = 0;  // 0: SUPERSTRUCTURE_JOBS or hardware concurrency
};

struct Verdict {
    enum class Status { maximal, not_maximal, evidence_only };
    Status status = Status::evidence_only;

    struct DegreeReport {
        int degree = 0;
        int quotient_dim = 0;
        std::string method;  // full | exact | exact+sweep | sweep | witness-only
        long candidates_checked = 0;
        long closures_run = 0;
    };
    std::vector<DegreeReport> by_degree;

    struct Witness {
        int degree;
        std::string element;   // the solvable extension direction
        std::string over_dims; // graded dimensions of the solvable over-algebra
    };
    std::vector<Witness> witnesses;
    void add_witness(Witness w) {
        for (const auto& x : witnesses)
            if (x.degree == w.degree && x.element == w.element) return;
        witnesses.push_back(std::move(w));
    }

    struct Certificate {
        int degree;
        std::string element;
        std::string reason;     // non-solvability evidence for the candidate
        int derived_index = -1; // index at which the derived series stabilizes nonzero
    };
    std::vector<Certificate> certificates;

    std::vector<std::string> notes;

    bool is_maximal() const { return status == Status::maximal; }
    static std::string status_name(Status s);
    nlohmann::json to_json() const;
};

/// Certifies maximality of a graded solvable subalgebra inside its ambient.
Verdict check_maximal(const GradedSub<Rational>& s, const SweepConfig& cfg = {});

/// closure(basis of g_{-1}) == g.  True for ~svect (wraparound brackets),
/// false for Z-graded ambients whose degree -1 component is abelian.
bool generation_check(AlgebraPtr g);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct Report {
    std::vector<CheckLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

/// Replays the explicit proof elements for a named case; see witness_cases().
Report witness_suite(const std::string& case_id);
std::vector<std::string> witness_cases();

/// The strict-containment facts: singular shapes at n = 5, 6, the three
/// h'(0|4) pairs, and the small-case ms0 embeddings.
Report containment_suite();

/// Abstract-isomorphism-level invariants of a solvable subalgebra.
struct Fingerprint {
    std::pair<int, int> total_sdim{0, 0};                 // (even | odd)
    std::vector<std::pair<int, int>> derived_sdims;       // along the derived series
    int center_dim = 0;
    std::map<int, std::pair<int, int>> graded_sdims;

    bool ungraded_equal(const Fingerprint& o) const {
        return total_sdim == o.total_sdim && derived_sdims == o.derived_sdims &&
               center_dim == o.center_dim;
    }
    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.ungraded_equal(b) && a.graded_sdims == b.graded_sdims;
    }
};
Fingerprint fingerprint(const GradedSub<Rational>& s);

int effective_jobs(int requested);

}  // namespace superstructure::verify
