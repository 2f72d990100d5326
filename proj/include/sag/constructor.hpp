#ifndef SAG_CONSTRUCTOR_HPP
#define SAG_CONSTRUCTOR_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sag/model.hpp"
#include "sag/scheduler.hpp"
#include "sag/state.hpp"

namespace sag {

	// A job-labeled edge. `finish` is the finish interval of the dispatch
	// itself, before the target state absorbed any merged siblings.
	struct Edge {
		std::size_t from = 0;
		std::size_t to = 0;
		Job_id job = 0;
		Edge_kind kind = Edge_kind::execute;
		Interval finish;
	};

	class Sag_graph {
	public:
		Variant variant = Variant::original;
		Policy policy = Policy::fp;
		std::size_t job_count = 0;

		// states[k] has index k + 1; levels are contiguous and ordered by depth
		std::vector<State> states;
		// level_begin[d] is the position of the first state at depth d;
		// one trailing sentinel
		std::vector<std::size_t> level_begin;
		// ordered by (from, job, kind)
		std::vector<Edge> edges;

		double construct_seconds = 0.0;

		const State& root() const { return states.front(); }
		const State& state(std::size_t index) const { return states[index - 1]; }

		std::size_t depth() const { return level_begin.size() - 2; }

		std::span<const State> level(std::size_t d) const
		{
			return {states.data() + level_begin[d], level_begin[d + 1] - level_begin[d]};
		}

		std::span<const Edge> out_edges(std::size_t index) const;
	};

	class State_cap_exceeded : public std::runtime_error {
	public:
		State_cap_exceeded(std::size_t cap, std::size_t depth);

		std::size_t cap;
		std::size_t depth;
	};

	inline constexpr std::size_t default_state_cap = 10'000'000;

	struct Construction_options {
		Variant variant = Variant::original;
		Policy policy = Policy::fp;
		std::size_t state_cap = default_state_cap;
		// false drops the dispatched sets of finished levels
		bool retain_dispatched = true;
	};

	// A successor candidate before merging.
	struct Pending_state {
		Index_set dispatched;
		Interval finish;
	};

	struct Merge_result {
		std::vector<Pending_state> states;
		// origin[k] = position in `states` that input k was merged into
		std::vector<std::size_t> origin;
	};

	// Merges states with equal dispatched sets whose finish intervals
	// intersect, to a fixed point. Each output state is the union of a
	// maximal cluster; output order follows the first input of each cluster.
	Merge_result merge_level(std::span<const Pending_state> level);

	// Breadth-first construction over depths 0..m, expanding every state of
	// a level and merging the successors. Throws State_cap_exceeded.
	Sag_graph construct(const Job_set& js, const Construction_options& opts);

	inline Sag_graph construct(const Job_set& js, Policy policy, Variant variant)
	{
		return construct(js, Construction_options{variant, policy});
	}

} // namespace sag

#endif
