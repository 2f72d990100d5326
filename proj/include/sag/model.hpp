#ifndef SAG_MODEL_HPP
#define SAG_MODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sag {

	// Discrete time, in abstract time units.
	using Time = std::int64_t;
	inline constexpr Time time_infinity = std::numeric_limits<Time>::max();

	// Jobs are numbered densely from 1.
	using Job_id = std::size_t;

	struct Interval {
		Time lo = 0;
		Time hi = 0;

		bool intersects(const Interval& other) const
		{
			return std::max(lo, other.lo) <= std::min(hi, other.hi);
		}

		bool contains(const Interval& other) const
		{
			return lo <= other.lo && other.hi <= hi;
		}

		bool contains(Time t) const { return lo <= t && t <= hi; }

		friend bool operator==(const Interval&, const Interval&) = default;
	};

	std::ostream& operator<<(std::ostream& os, const Interval& iv);

	// One non-preemptive job: release jitter [r_min, r_max], execution time
	// [c_min, c_max], absolute deadline and priority (smaller is higher).
	// A hybrid-triggered job (ht) may additionally be absent at runtime.
	struct Job {
		Job_id id = 0;
		Time r_min = 0;
		Time r_max = 0;
		Time c_min = 1;
		Time c_max = 1;
		Time deadline = 1;
		std::int64_t priority = 1;
		bool ht = false;

		Interval release() const { return {r_min, r_max}; }
		Interval cost() const { return {c_min, c_max}; }

		friend bool operator==(const Job&, const Job&) = default;
	};

	std::ostream& operator<<(std::ostream& os, const Job& j);

	inline constexpr Time default_horizon = 10000;

	struct Job_set {
		std::vector<Job> jobs;
		Time horizon = default_horizon;

		std::size_t size() const { return jobs.size(); }
		bool empty() const { return jobs.empty(); }

		// 1-based lookup
		const Job& operator[](Job_id id) const { return jobs[id - 1]; }
		Job& operator[](Job_id id) { return jobs[id - 1]; }

		auto begin() const { return jobs.begin(); }
		auto end() const { return jobs.end(); }

		bool has_ht_jobs() const
		{
			return std::any_of(jobs.begin(), jobs.end(), [](const Job& j) { return j.ht; });
		}

		friend bool operator==(const Job_set&, const Job_set&) = default;
	};

	enum class Policy { fp, edf };

	std::string_view to_string(Policy p);
	// accepts "fp"/"np-fp" and "edf"/"np-edf"; throws std::invalid_argument otherwise
	Policy parse_policy(std::string_view s);

	// True iff a strictly precedes b under the policy's total order:
	// NP-FP orders by (priority, id), NP-EDF by (deadline, id).
	bool higher_priority(const Job& a, const Job& b, Policy policy);

	struct Violation {
		Job_id job = 0; // 0 for set-level rules
		std::string rule;
	};

	// Empty iff every job and job-set invariant holds.
	std::vector<Violation> validate_jobset(const Job_set& js);

} // namespace sag

#endif
