#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ffopt/trials.hpp"

namespace ffopt {

// Shortest round-trip decimal text for a double (and the exact inverse).
// All CSV numbers go through these, so written files parse back to
// bit-identical values.
std::string format_double(double value);
double parse_double(const std::string& text);  // throws on garbage

// "3752 ± 725 (99%)" — mean/std rounded half-even to integers, rate to a
// whole percent; "— (0%)" when no run succeeded.
std::string format_cell(const SummaryRow& row);

// Comparison-table text: one row per objective (first-appearance order),
// one column per algorithm present (GA, PSO, FA order), header column
// "Functions/Algorithms".
std::string emit_table(const std::vector<SummaryRow>& rows);

// summary files: header algorithm,objective,runs,successes,success_rate,
// mean_evaluations,std_evaluations
void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows,
                   char sep = ',');
std::vector<SummaryRow> read_summary(std::istream& is);  // sep auto-detected

// run files: header algorithm,objective,seed,evaluations,best_value,success
void write_runs(std::ostream& os, const std::vector<RunRecord>& records,
                char sep = ',');
std::vector<RunRecord> read_runs(std::istream& is);

// trace files: header generation,agent_id,x1..xd,f
struct TraceRow {
    std::size_t generation = 0;
    std::size_t agent_id = 0;
    std::vector<double> position;
    double value = 0.0;
};
void write_trace(std::ostream& os, const std::vector<TraceRow>& rows,
                 std::size_t dim, char sep = ',');

}  // namespace ffopt
