#ifndef SAG_SCHEDULER_HPP
#define SAG_SCHEDULER_HPP

#include <vector>

#include "sag/model.hpp"
#include "sag/state.hpp"

namespace sag {

	// One way of leaving a state: dispatch job_id (executing, or absent with
	// zero execution time) somewhere in [est, lst], finishing within `finish`.
	struct Expansion {
		Job_id job_id = 0;
		Edge_kind kind = Edge_kind::execute;
		Time est = 0;
		Time lst = 0;
		Interval finish;

		friend bool operator==(const Expansion&, const Expansion&) = default;
	};

	// Expansion rules for one job set under one policy. For a state with
	// finish interval [e, l] and a pending job i:
	//
	//   EST_i  = max(e, r_i^min)
	//   t_wc   = max(l, min of r_j^max over pending j)
	//   t_high = min of r_j^max over pending j with higher priority than i
	//   LST_i  = min(t_wc, t_high - 1)
	//
	// and i may be dispatched next iff EST_i <= LST_i.
	class Scheduler {
	public:
		Scheduler(const Job_set& js, Policy policy);

		const Job_set& jobs() const { return workload; }
		Policy policy() const { return order_policy; }

		bool higher_priority(Job_id a, Job_id b) const { return rank[a] < rank[b]; }

		// Ordered by job id, execute before absent.
		std::vector<Expansion> expand(const State& s, Variant variant) const;

		// Same as expand(), reusing `out` to avoid reallocation.
		void expand(const State& s, Variant variant, std::vector<Expansion>& out) const;

		// release_cursor for a successor whose dispatched set is `dispatched`,
		// starting from the parent's cursor.
		std::size_t advance_cursor(const Index_set& dispatched, std::size_t cursor) const;

	private:
		Job_set workload;
		Policy order_policy;
		std::vector<std::size_t> rank;        // by job id; 0 = highest priority
		std::vector<Job_id> by_release;       // ids sorted by (r_min, id)
	};

	// Convenience form of Scheduler::expand for a single state.
	std::vector<Expansion> eligible_expansions(const State& s, const Job_set& js, Policy policy,
	                                           Variant variant);

} // namespace sag

#endif
