#pragma once

// 133Ba+ level structure: five electronic terms, hyperfine manifolds for
// nuclear spin I = 1/2, dipole selection rules and decay bookkeeping.
// The 36-sublevel space (4 + 4 + 8 + 8 + 12) is enumerated in a fixed
// canonical order shared by every other module.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ionspam {

enum class Term { S12, P12, D32, P32, D52 };

constexpr std::array<Term, 5> kTerms{Term::S12, Term::P12, Term::D32, Term::P32, Term::D52};

const char* term_name(Term t);
std::optional<Term> term_from_name(const std::string& name);

// Doubled electronic angular momentum 2J of a term.
int term_tj(Term t);
bool is_excited(Term t);

// E1-connected term pairs (parity change, |dJ| <= 1).
bool terms_dipole_connected(Term a, Term b);

struct HyperfineState {
    Term term;
    int F;
    int mF;

    bool operator==(const HyperfineState&) const = default;
};

inline constexpr int kNumStates = 36;

// Allowed F values for a term (I = 1/2): {tJ-1, tJ+1}/2.
std::array<int, 2> term_f_values(Term t);

int state_index(const HyperfineState& s);           // throws on invalid state
const HyperfineState& state_at(int index);          // canonical ordering
const std::array<HyperfineState, kNumStates>& all_states();

enum class Polarization { Pi, SigmaPlus, SigmaMinus, Isotropic };

const char* polarization_name(Polarization q);
std::optional<Polarization> polarization_from_name(const std::string& name);
int polarization_dm(Polarization q);                // Pi -> 0, Sigma+/- -> +/-1

// A hyperfine component of an electronic line: lower(F) <-> upper(F').
struct ManifoldTransition {
    Term lower;
    int F_lower;
    Term upper;
    int F_upper;
};

struct SplittingTable {
    // Hyperfine splittings between the two F manifolds of each term, MHz.
    double s12_mhz = 9925.0;
    double p12_mhz = 1840.0;   // not measured in-house; literature-scale config value
    double d32_mhz = 937.0;    // config value, see docs
    double p32_mhz = 623.0;
    double d52_mhz = 83.0;
    // Isotope shifts of the 455 nm and 614 nm lines relative to 138Ba+, MHz.
    double iso455_mhz = 358.0;
    double iso614_mhz = 216.0;

    double splitting_mhz(Term t) const;
};

struct BranchingTable {
    // excited term -> (lower term -> probability); each row sums to 1.
    std::map<Term, std::map<Term, double>> rows = {
        {Term::P32, {{Term::S12, 0.74}, {Term::D52, 0.23}, {Term::D32, 0.03}}},
        {Term::P12, {{Term::S12, 0.73}, {Term::D32, 0.27}}},
    };

    double fraction(Term upper, Term lower) const;
    void validate() const;  // throws unless every row sums to 1 within 1e-12
};

struct Lifetimes {
    double p32_s = 10e-9;
    double p12_s = 7.9e-9;
    double d52_s = 30.0;
    double d32_s = 80.0;   // config value; irrelevant on simulated timescales

    double lifetime_s(Term t) const;  // throws for S12
};

struct DecayChannel {
    HyperfineState lower;
    double probability;
};

class AtomSpec {
  public:
    AtomSpec(SplittingTable splittings = {}, BranchingTable branching = {},
             Lifetimes lifetimes = {});

    const SplittingTable& splittings() const { return splittings_; }
    const BranchingTable& branching() const { return branching_; }
    const Lifetimes& lifetimes() const { return lifetimes_; }

    // Natural linewidth Gamma = 1/tau expressed in MHz (Gamma / 2pi).
    double linewidth_mhz(Term t) const;

    // Hyperfine energy offset of manifold F from the term's degeneracy-weighted
    // centroid, MHz.
    double hyperfine_offset_mhz(Term t, int F) const;

    // Frequency of a hyperfine component relative to the 138Ba+ line of the
    // same term pair (455/614 carry the configured isotope shifts), MHz.
    double transition_frequency_mhz(const ManifoldTransition& t) const;

    // Signed detuning of a probe component from a laser resonant with
    // `target` plus `extra_detuning_mhz`; convention: nu_probe - nu_laser.
    double transition_detuning_mhz(const ManifoldTransition& target,
                                   double extra_detuning_mhz,
                                   const ManifoldTransition& probe) const;

    // Relative strength of lower <-> upper for polarization component q,
    // normalized so the sum over all lower sublevels of lower's term and all
    // q from a fixed upper sublevel is 1. Zero on the selection-rule-forbidden
    // set; nullopt when the terms are not dipole-connected at all.
    std::optional<double> line_strength(const HyperfineState& lower,
                                        const HyperfineState& upper,
                                        Polarization q) const;

    // Decay distribution of an excited sublevel over all lower sublevels;
    // term-level marginals match the branching table. Empty for ground states.
    const std::vector<DecayChannel>& decay_channels(const HyperfineState& upper) const;
    const std::vector<DecayChannel>& decay_channels(int upper_index) const;

  private:
    SplittingTable splittings_;
    BranchingTable branching_;
    Lifetimes lifetimes_;

    // strength_[g*36*3 + e*3 + q]; -1 marks term-forbidden pairs.
    std::vector<double> strength_;
    std::array<std::vector<DecayChannel>, kNumStates> decay_;

    void build_tables();
};

}  // namespace ionspam
