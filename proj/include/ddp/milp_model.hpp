#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ddp/route_cost.hpp"
#include "ddp/scenario.hpp"

namespace ddp {

enum class VarKind { Continuous, Binary };

struct MilpVariable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    // Continuous variables live in [0, inf); binaries in {0, 1}.
};

enum class RowSense { Le, Ge, Eq };

struct MilpRow {
    std::string name;                            // group + indices, e.g. "c4a_3"
    std::vector<std::pair<int, double>> terms;   // (variable index, coefficient)
    RowSense sense = RowSense::Le;
    double rhs = 0.0;
};

enum class MilpObjective { MinTime, MinCost };

// The routing problem written out as a mixed-integer linear program.
// Variable/row layout is fixed and documented in the README; counts follow
// closed forms in the location count so structure is testable.
class MilpModel {
public:
    const std::vector<MilpVariable>& variables() const { return vars_; }
    const std::vector<MilpRow>& rows() const { return rows_; }
    MilpObjective objective() const { return objective_; }
    int objective_variable() const { return objective_var_; }  // index of l or c
    int location_count() const { return n_; }
    int battery_type_count() const { return battery_types_; }

    // Index of a variable by name; throws ValidationError if unknown.
    int variable_index(const std::string& name) const;

    static int expected_variable_count(int n_locations, int battery_type_count = 0);
    static int expected_row_count(int n_locations, int battery_type_count = 0);

private:
    friend MilpModel build_model(const Scenario&, MilpObjective, bool);
    std::vector<MilpVariable> vars_;
    std::vector<MilpRow> rows_;
    std::map<std::string, int> index_;
    MilpObjective objective_ = MilpObjective::MinTime;
    int objective_var_ = -1;
    int n_ = 0;
    int battery_types_ = 0;
};

// Builds every constraint group over the scenario's locations.  When
// use_battery_types is set the scenario must carry a battery catalogue;
// battery weight and cost then come from the chosen types instead of the
// continuous energy variables.
MilpModel build_model(const Scenario& scn, MilpObjective objective,
                      bool use_battery_types = false);

// LP text format, byte-stable for identical models.
void export_lp(const MilpModel& model, std::ostream& out);
void export_lp(const MilpModel& model, const std::string& path);

// A value for every variable, keyed by variable name.
struct MilpAssignment {
    std::map<std::string, double> values;

    double at(const std::string& name) const;  // throws ValidationError if missing
};

struct Violation {
    std::string row;     // constraint or bound pseudo-row name
    double amount = 0.0; // how far past the limit, always > 0
};

// Checks every row, every non-negativity bound and every binary domain.
// Empty result means feasible within tol.  Missing values throw.
std::vector<Violation> validate_assignment(const MilpModel& model,
                                           const MilpAssignment& asn, double tol);

// Lifts a fully feasible (unpenalized) solution string into model
// variables.  route_to_drone is the schedule produced by
// list_schedule_assign for the breakdown's drone count; reuse arcs, the
// timeline, payload flows, battery weights and energies are all replayed
// from it.
MilpAssignment string_to_assignment(const SolutionString& s,
                                    const std::vector<int>& route_to_drone,
                                    const Scenario& scn, const MilpModel& model);

}  // namespace ddp
