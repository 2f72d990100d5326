#ifndef SAG_ORACLE_HPP
#define SAG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sag/constructor.hpp"
#include "sag/model.hpp"

namespace sag {

	// One concrete execution: a release time and an execution time per job
	// (index k holds job k + 1). An execution time of 0 means the HT job is
	// absent.
	struct Scenario {
		std::vector<Time> releases;
		std::vector<Time> exec_times;

		friend bool operator==(const Scenario&, const Scenario&) = default;
		friend auto operator<=>(const Scenario&, const Scenario&) = default;
	};

	std::ostream& operator<<(std::ostream& os, const Scenario& s);

	inline constexpr std::uint64_t default_scenario_cap = 1'000'000;

	class Scenario_cap_exceeded : public std::runtime_error {
	public:
		Scenario_cap_exceeded(double log10_count, std::uint64_t cap);

		double log10_count;
		std::uint64_t cap;
	};

	// Literal number of actual scenarios, or nullopt if it overflows 64 bits.
	std::optional<std::uint64_t> scenario_count(const Job_set& js);

	// Visits every scenario exactly once in lexicographic order of
	// (r_1, ..., r_m, C_1, ..., C_m); for HT jobs C = 0 comes first.
	class Scenario_enumerator {
	public:
		// Throws Scenario_cap_exceeded if there are more than `cap` scenarios.
		Scenario_enumerator(const Job_set& js, std::uint64_t cap = default_scenario_cap);

		// Advances to the next scenario; false once exhausted. The first
		// call yields the first scenario.
		bool next();

		const Scenario& current() const { return scenario; }
		std::uint64_t total() const { return count; }

	private:
		std::vector<std::vector<Time>> release_choices;
		std::vector<std::vector<Time>> cost_choices;
		std::vector<std::size_t> digit;
		Scenario scenario;
		std::uint64_t count = 0;
		bool started = false;
	};

	struct Simulation {
		std::vector<Job_id> order;      // dispatch order
		std::vector<Time> completion;   // by job id; entry 0 unused
		std::vector<Time> dispatch;     // by job id; entry 0 unused
	};

	// Work-conserving non-preemptive uniprocessor: whenever the processor is
	// free it dispatches the highest-priority released pending job, or idles
	// until the next release. Absent jobs are dispatched for zero time.
	Simulation simulate(const Job_set& js, const Scenario& s, Policy policy);

	struct Witness {
		std::string message;
		std::optional<Scenario> scenario;
	};

	struct Exactness_verdict {
		// every job's analysed [ect, lct] equals the true completion range
		// over all scenarios in which it executes (no scenario escapes the
		// bounds, and both bounds are attained)
		bool intervals_exact = false;
		// every dispatch order that occurs at runtime is a path of the graph
		bool orderings_match = false;
		// the graph's path label sequences equal the runtime orders exactly;
		// nullopt when the graph has too many paths to list. Informational:
		// merging can join prefixes and suffixes of different paths.
		std::optional<bool> orderings_equal;
		std::optional<Witness> witness;

		bool passes() const { return intervals_exact && orderings_match; }
	};

	// Brute-force comparison of a constructed graph against every scenario.
	// Throws Scenario_cap_exceeded.
	Exactness_verdict exactness_check(const Sag_graph& g, const Job_set& js, Policy policy,
	                                  std::uint64_t cap = default_scenario_cap);

	// "<J1!,J2,J4,J3>": absent jobs (zero execution time) carry a '!'.
	std::string format_order(const std::vector<Job_id>& order, const Scenario* s = nullptr);

} // namespace sag

#endif
