#include "sag/generator.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace sag {

	namespace {
		constexpr Time release_lo = 1;
		constexpr Time release_hi = 9990;
		constexpr Time max_jitter = 9;
		constexpr Time cost_lo = 2;
		constexpr Time min_cost_spread = 1;
		constexpr Time max_cost_spread = 4;
		constexpr Time fixed_deadline = 9999;
		constexpr std::int64_t priority_levels = 10;
	}

	std::int64_t Random_stream::uniform(std::int64_t lo, std::int64_t hi)
	{
		const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
		if (span == 0) // full 64-bit range
			return static_cast<std::int64_t>(engine());
		// reject the incomplete tail so every residue is equally likely
		const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
		                            - std::numeric_limits<std::uint64_t>::max() % span;
		std::uint64_t x;
		do {
			x = engine();
		} while (x >= limit);
		return lo + static_cast<std::int64_t>(x % span);
	}

	bool Random_stream::chance(std::uint64_t num, std::uint64_t den)
	{
		return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
	}

	std::int64_t cost_bound(int utilization_pct)
	{
		return utilization_pct / 5 - 7;
	}

	std::size_t ht_count(std::size_t num_jobs, int ht_ratio_pct)
	{
		return (num_jobs * static_cast<std::size_t>(ht_ratio_pct) + 50) / 100;
	}

	Job_set generate(const Gen_params& params)
	{
		if (params.num_jobs == 0)
			throw Invalid_parameters("num_jobs must be positive");
		if (params.ht_ratio_pct < 0 || params.ht_ratio_pct > 100)
			throw Invalid_parameters("ht ratio must be within [0, 100], got "
			                         + std::to_string(params.ht_ratio_pct));
		const auto c_u = cost_bound(params.utilization_pct);
		if (c_u < cost_lo)
			throw Invalid_parameters("utilization " + std::to_string(params.utilization_pct)
			                         + "% gives C_U = " + std::to_string(c_u)
			                         + " < 2 (use U >= 45)");
		if (params.horizon < fixed_deadline)
			throw Invalid_parameters("horizon must be >= " + std::to_string(fixed_deadline));

		Random_stream rng(params.seed);
		Job_set js;
		js.horizon = params.horizon;
		js.jobs.reserve(params.num_jobs);

		for (std::size_t k = 0; k < params.num_jobs; ++k) {
			Job j;
			j.id = k + 1;
			j.r_min = rng.uniform(release_lo, release_hi);
			j.r_max = j.r_min + rng.uniform(0, max_jitter);
			j.c_min = rng.uniform(cost_lo, c_u);
			j.c_max = j.c_min + rng.uniform(min_cost_spread, max_cost_spread);
			j.deadline = fixed_deadline;
			j.priority = rng.uniform(1, priority_levels);
			js.jobs.push_back(j);
		}

		std::vector<std::size_t> pool(params.num_jobs);
		std::iota(pool.begin(), pool.end(), std::size_t{0});
		const auto n_ht = ht_count(params.num_jobs, params.ht_ratio_pct);
		for (std::size_t k = 0; k < n_ht; ++k) {
			const auto pick = static_cast<std::size_t>(
				rng.uniform(static_cast<std::int64_t>(k), static_cast<std::int64_t>(pool.size()) - 1));
			std::swap(pool[k], pool[pick]);
			js.jobs[pool[k]].ht = true;
		}

		return js;
	}

} // namespace sag
