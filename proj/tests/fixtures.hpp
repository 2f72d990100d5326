#ifndef SAG_TEST_FIXTURES_HPP
#define SAG_TEST_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sag/model.hpp"

namespace sag::test {

	inline Job J(Job_id id, Time r_lo, Time r_hi, Time c_lo, Time c_hi, Time d, std::int64_t p,
	             bool ht)
	{
		return Job{id, r_lo, r_hi, c_lo, c_hi, d, p, ht};
	}

	// alarm released in [1,2], acting for 3..4 units, possibly not needed
	inline Job_set smoke_alarm()
	{
		return Job_set{{J(1, 1, 2, 3, 4, 6, 1, true)}, 10000};
	}

	// no jitter, no execution variation; J1 may be absent
	inline Job_set example_1()
	{
		return Job_set{{
			J(1, 0, 0, 2, 2, 5, 1, true),
			J(2, 0, 0, 2, 2, 10, 4, false),
			J(3, 1, 1, 2, 2, 10, 3, false),
			J(4, 2, 2, 3, 3, 5, 2, false),
		}, 10000};
	}

	inline Job_set example_2()
	{
		return Job_set{{
			J(1, 0, 2, 9, 10, 20, 1, true),
			J(2, 1, 2, 5, 6, 25, 4, false),
			J(3, 4, 5, 1, 2, 25, 3, false),
			J(4, 3, 6, 2, 3, 25, 2, false),
		}, 10000};
	}

	inline constexpr const char* example_1_text =
		"0 0 2 2 5 1 1\n0 0 2 2 10 4 0\n1 1 2 2 10 3 0\n2 2 3 3 5 2 0";

	struct Small_set_params {
		std::size_t min_jobs = 3;
		std::size_t max_jobs = 6;
		Time max_jitter = 3;
		Time max_spread = 3;
		double ht_probability = 0.5;
		Time release_window = 10;
		Time max_c_min = 4;
		std::int64_t priority_levels = 5;
	};

	// Small random job sets for brute-force cross-checks.
	inline Job_set random_small_set(std::mt19937_64& rng, const Small_set_params& p = {})
	{
		auto pick = [&](std::int64_t lo, std::int64_t hi) {
			return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
		};
		Job_set js;
		const auto m = static_cast<std::size_t>(pick(static_cast<std::int64_t>(p.min_jobs),
		                                             static_cast<std::int64_t>(p.max_jobs)));
		for (std::size_t k = 0; k < m; ++k) {
			Job j;
			j.id = k + 1;
			j.r_min = pick(0, p.release_window);
			j.r_max = j.r_min + pick(0, p.max_jitter);
			j.c_min = pick(1, p.max_c_min);
			j.c_max = j.c_min + pick(0, p.max_spread);
			j.deadline = j.r_min + pick(3, 40);
			j.priority = pick(1, p.priority_levels);
			j.ht = std::bernoulli_distribution(p.ht_probability)(rng);
			js.jobs.push_back(j);
		}
		js.horizon = 100;
		return js;
	}

} // namespace sag::test

#endif
