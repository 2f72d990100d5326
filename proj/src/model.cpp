#include "sag/model.hpp"

#include <stdexcept>
#include <tuple>

namespace sag {

	std::ostream& operator<<(std::ostream& os, const Interval& iv)
	{
		return os << "[" << iv.lo << "," << iv.hi << "]";
	}

	std::ostream& operator<<(std::ostream& os, const Job& j)
	{
		return os << "J" << j.id << "(r=" << j.release() << ", C=" << j.cost()
		          << ", d=" << j.deadline << ", p=" << j.priority
		          << ", ht=" << (j.ht ? 1 : 0) << ")";
	}

	std::string_view to_string(Policy p)
	{
		switch (p) {
		case Policy::fp:
			return "fp";
		case Policy::edf:
			return "edf";
		}
		return "?";
	}

	Policy parse_policy(std::string_view s)
	{
		if (s == "fp" || s == "np-fp")
			return Policy::fp;
		if (s == "edf" || s == "np-edf")
			return Policy::edf;
		throw std::invalid_argument("unknown policy '" + std::string(s) + "'");
	}

	bool higher_priority(const Job& a, const Job& b, Policy policy)
	{
		switch (policy) {
		case Policy::fp:
			return std::tie(a.priority, a.id) < std::tie(b.priority, b.id);
		case Policy::edf:
			return std::tie(a.deadline, a.id) < std::tie(b.deadline, b.id);
		}
		return false;
	}

	std::vector<Violation> validate_jobset(const Job_set& js)
	{
		std::vector<Violation> found;
		Time max_release = 0;

		for (std::size_t k = 0; k < js.jobs.size(); ++k) {
			const Job& j = js.jobs[k];
			const Job_id expected = k + 1;
			const Job_id id = j.id;

			if (j.id != expected)
				found.push_back({id, "ids must be dense and 1-based: expected id "
				                         + std::to_string(expected) + ", found "
				                         + std::to_string(j.id)});
			if (j.r_min < 0)
				found.push_back({id, "release jitter: r_min must be >= 0"});
			if (j.r_min > j.r_max)
				found.push_back({id, "release jitter: r_min must be <= r_max"});
			if (j.c_min < 1)
				found.push_back({id, "execution bounds: c_min must be >= 1 (use the ht flag for absence)"});
			if (j.c_min > j.c_max)
				found.push_back({id, "execution bounds: c_min must be <= c_max"});
			if (j.deadline <= j.r_min)
				found.push_back({id, "deadline must be > r_min"});
			if (j.priority < 1)
				found.push_back({id, "priority must be >= 1"});

			max_release = std::max(max_release, j.r_max);
		}

		if (js.horizon < max_release)
			found.push_back({0, "horizon must be >= max r_max (" + std::to_string(max_release) + ")"});

		return found;
	}

} // namespace sag
