#ifndef SAG_STATE_HPP
#define SAG_STATE_HPP

#include <cstddef>
#include <string_view>

#include "sag/index_set.hpp"
#include "sag/model.hpp"

namespace sag {

	enum class Variant { original, extended, hybrid };

	std::string_view to_string(Variant v);
	// throws std::invalid_argument on unknown names
	Variant parse_variant(std::string_view s);

	enum class Edge_kind { execute, absent };

	// A vertex of the graph: the jobs accounted for so far and the interval
	// of reachable finish times of the last job on any path reaching it.
	struct State {
		std::size_t index = 1;
		std::size_t depth = 0;
		Index_set dispatched;
		Interval finish{0, 0};
		// Number of leading jobs in release order that are all dispatched.
		// A function of `dispatched`; kept to skip the settled prefix.
		std::size_t release_cursor = 0;
	};

	// Root state for a job set with `job_count` jobs.
	inline State root_state(std::size_t job_count)
	{
		return State{1, 0, Index_set(job_count), {0, 0}, 0};
	}

} // namespace sag

#endif
