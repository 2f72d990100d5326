#ifndef SAG_ANALYSIS_HPP
#define SAG_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "sag/constructor.hpp"
#include "sag/model.hpp"

namespace sag {

	// Absolute completion bounds of one job over its execute edges.
	struct Completion {
		Time ect = 0;
		Time lct = 0;
	};

	class Malformed_graph : public std::logic_error {
	public:
		using std::logic_error::logic_error;
	};

	// Indexed by job id (entry 0 unused). Absent edges do not count as
	// completions. Throws Malformed_graph if a job has no edge at all or
	// only absent edges.
	std::vector<Completion> completion_intervals(const Sag_graph& g);

	struct Graph_stats {
		std::size_t vertex_count = 0;
		std::size_t edge_count = 0;
		std::size_t max_width = 0;
		std::size_t depth = 0;

		friend bool operator==(const Graph_stats&, const Graph_stats&) = default;
	};

	Graph_stats graph_stats(const Sag_graph& g);

	// Number of root-to-leaf paths, saturating at the largest double.
	double path_count(const Sag_graph& g);

	// Distinct root-to-leaf job sequences (absent edges labeled by their
	// job). Throws std::length_error once more than `limit` are found.
	std::set<std::vector<Job_id>> orderings(const Sag_graph& g, std::size_t limit = 1'000'000);

	// True iff some root-to-leaf path carries exactly this job sequence.
	bool has_ordering(const Sag_graph& g, const std::vector<Job_id>& order);

	struct Job_result {
		Job job;
		Time ect = 0;
		Time lct = 0;
		Time bcrt = 0; // ect - r_min
		Time wcrt = 0; // lct - r_min
		bool miss = false;

		friend bool operator==(const Job_result&, const Job_result&) = default;
	};

	struct Analysis_report {
		std::vector<Job_result> jobs; // in id order
		bool schedulable = true;
		Graph_stats stats;
		double construct_seconds = 0.0;
		double scenario_log10 = 0.0;

		friend bool operator==(const Analysis_report&, const Analysis_report&) = default;
	};

	// Builds the full report for a graph constructed from js.
	Analysis_report analyze(const Sag_graph& g, const Job_set& js);

	// True iff every job's latest completion is within its deadline.
	bool schedulability(const Analysis_report& report, const Job_set& js);

	// Common logarithm of the number of execution scenarios assumed by a
	// variant: per job, (r_max - r_min + 1) release choices times
	//   original: c_max - c_min + 1
	//   extended: c_max + 1 for HT jobs (every value in [0, c_max])
	//   hybrid:   c_max - c_min + 1, plus the absence for HT jobs.
	// Hybrid equals the number of actual scenarios.
	double count_scenarios_log10(const Job_set& js, Variant variant);

	struct Idle_time {
		Time idle = 0;
		double efficiency = 1.0;
	};

	// Idle time reserved when absent HT jobs keep their minimum slot:
	// sum of c_min over HT jobs, and 1 - idle / horizon.
	Idle_time idle_time_for_safety(const Job_set& js);

} // namespace sag

#endif
