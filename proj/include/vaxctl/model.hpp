#ifndef VAXCTL_MODEL_HPP
#define VAXCTL_MODEL_HPP

#include <array>
#include <cstddef>

namespace vaxctl {

/// The two age cohorts of the model: over-65 (O) and under-65 (Y).
enum class AgeGroup : int { Over65 = 0, Under65 = 1 };

inline constexpr std::array<AgeGroup, 2> kAgeGroups{AgeGroup::Over65, AgeGroup::Under65};

constexpr int group_index(AgeGroup g)
{
    return static_cast<int>(g);
}

/// Disease/vaccination compartments, duplicated per age group:
/// Susceptible, Vaccinated-waiting, vaccine-Not-effective, Unwilling,
/// Exposed, Infectious, Recovered, Protected.
enum class Compartment : int { S = 0, V, N, U, E, I, R, P };

inline constexpr int kCompartmentsPerGroup = 8;
inline constexpr int kStateSize = 16;

/// The 16 compartment populations (persons, real-valued). Layout is the
/// over-65 block S..P followed by the under-65 block.
struct StateVec {
    std::array<double, kStateSize> data{};

    static constexpr int index(AgeGroup g, Compartment c)
    {
        return kCompartmentsPerGroup * group_index(g) + static_cast<int>(c);
    }

    double& operator()(AgeGroup g, Compartment c) { return data[index(g, c)]; }
    double operator()(AgeGroup g, Compartment c) const { return data[index(g, c)]; }

    /// Sum of the eight compartments of one group; conserved by the dynamics.
    double group_sum(AgeGroup g) const
    {
        double s = 0.0;
        for (int c = 0; c < kCompartmentsPerGroup; ++c)
            s += data[kCompartmentsPerGroup * group_index(g) + c];
        return s;
    }
};

/// Mean holding times in days for the E, I and V compartments.
struct HoldingTimes {
    double t_E;
    double t_I;
    double t_V;

    void validate() const;
};

/// The four within/between-group mean secondary infection numbers.
struct R0Set {
    double R0_OO;
    double R0_YY;
    double R0_OY; // y65 infected by an o65
    double R0_YO; // o65 infected by a y65

    void validate() const;
};

/// Per-day transmission rates derived from an R0Set.
struct TransmissionRates {
    double beta_OO;
    double beta_YO;
    double beta_OY;
    double beta_YY;
};

/// Full parameter set of the state dynamics.
struct EpiParams {
    double beta_OO, beta_YO, beta_OY, beta_YY; // per-day transmission rates
    double gamma_E, gamma_I, gamma_V;          // per-day rates, inverses of holding times
    double alpha_V;                            // vaccine effectiveness in [0,1]
    double T_O, T_Y;                           // group totals, persons
    double r_O, r_Y;                           // refusal fractions in [0,1]

    double group_total(AgeGroup g) const { return g == AgeGroup::Over65 ? T_O : T_Y; }

    /// Numerical slack below zero tolerated in trajectories (integrator noise).
    double negativity_slack() const { return 1e-9 * (T_O + T_Y); }

    void validate() const;
};

struct GroupDemographics {
    double total;
    double exposed;
    double infected;
    double recovered;
};

/// Census-style initial data; the S/U split is derived from refusal fractions.
struct DemographicInput {
    GroupDemographics over65;
    GroupDemographics under65;

    const GroupDemographics& of(AgeGroup g) const
    {
        return g == AgeGroup::Over65 ? over65 : under65;
    }

    void validate() const;
};

/// beta_ij = R0_ij / (t_E + t_I). The transmission window of a case spans the
/// exposed and infectious stages; this scaling reproduces the reference
/// attack rates, with R0_w + R0_x acting as the effective reproduction number
/// of a fully susceptible population.
TransmissionRates derive_betas(const R0Set& r0, const HoldingTimes& ht);

/// Splits each group's non-infected population into willing (S) and refusing
/// (U) susceptibles: S = (1-r)*(T-(E+I+R)), U = r*(T-(E+I+R)); V=N=P=0.
StateVec build_initial_state(const DemographicInput& demo, double r_O, double r_Y);

/// Per-capita infection hazard on group g:
/// B_g = beta_{Og}(E_O+I_O)/T_O + beta_{Yg}(E_Y+I_Y)/T_Y.
double force_of_infection(const StateVec& x, const EpiParams& p, AgeGroup g);

/// Right-hand side of the 16 state ODEs. Per-group derivative sums are zero.
StateVec state_rhs(const StateVec& x, double u_O, double u_Y, const EpiParams& p);

/// As state_rhs, additionally returning the cumulative-infection rates
/// dC_g = B_g (S+V+N+U)_g integrated alongside the state.
void state_rhs_full(const StateVec& x, double u_O, double u_Y, const EpiParams& p,
                    StateVec& dx, double& dC_O, double& dC_Y);

} // namespace vaxctl

#endif
