#ifndef PCUBE_SIGN_SYSTEM_HPP
#define PCUBE_SIGN_SYSTEM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcube/sign_vector.hpp"

namespace pcube {

// Finite set of sign vectors over a shared ground set. Nonempty, uniform
// length, duplicate-free; vectors kept in sorted order ('+' < '-' < '0').
struct SignSystem {
    int ground = 0;
    std::vector<SignVec> vecs;

    static SignSystem from_vectors(int ground, std::vector<SignVec> vecs);
    static SignSystem full(int r);  // {+,-,0}^r

    bool contains(const SignVec& x) const;
    std::vector<SignVec> topes() const;

    SignSystem reoriented(CoordSet a) const;
};

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};

struct AxiomReport {
    bool c = false, fs = false, se = false, ic = false, z = false, sym = false, a = false;
    std::vector<AxiomViolation> first_violations;  // one entry per failed axiom

    const AxiomViolation* violation(const std::string& axiom) const;
};

// Checks every axiom by literal exhaustive quantification over the system.
AxiomReport check_axioms(const SignSystem& l);

enum class SystemClass { COM, OM, AOM, LOP };

// COM = FS&SE, OM = Z&FS&SE, AOM = A&FS&SE, LOP = IC&SE.
std::set<SystemClass> classify_system(const SignSystem& l);
std::set<SystemClass> classify_system(const AxiomReport& report);

enum class MinorOp { Delete, Hyperplane, Halfspace };

// Delete / hyperplane (keep X_e = 0) / halfspace (keep X_e = sign), dropping
// coordinate e. Throws BadIndex and EmptyResult.
SignSystem system_minor(const SignSystem& l, MinorOp op, int e, char sign = '+');

struct SimplifyResult {
    SignSystem system;
    // kept coordinate -> the original parallel class it represents
    // (the representative is the lowest original index, listed first).
    std::vector<std::vector<int>> coordinate_classes;
    // parallel to coordinate_classes: whether each member is reversed
    // relative to the representative.
    std::vector<std::vector<bool>> flipped;
    std::vector<int> dropped_redundant;
    bool collapsed_to_point = false;  // ground shrank to 0
};

// Deletes redundant coordinates (not all three signs present) and collapses
// parallel classes to their lowest-index representative.
SimplifyResult simplify(const SignSystem& l);

// Largest r such that deleting some coordinate subset leaves {+,-,0}^r
// (the VC-dimension of the system).
int system_rank(const SignSystem& l);

}  // namespace pcube

#endif
