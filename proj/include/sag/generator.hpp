#ifndef SAG_GENERATOR_HPP
#define SAG_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "sag/model.hpp"

namespace sag {

	struct Gen_params {
		std::size_t num_jobs = 1000;
		int utilization_pct = 60;
		int ht_ratio_pct = 15;
		std::uint64_t seed = 1;
		Time horizon = default_horizon;
	};

	class Invalid_parameters : public std::invalid_argument {
	public:
		using std::invalid_argument::invalid_argument;
	};

	// Upper bound of the minimum execution time draw: floor(U / 5) - 7.
	// Utilization (counted over c_max) tracks U/100 of the default horizon.
	std::int64_t cost_bound(int utilization_pct);

	// Number of HT jobs: n * ratio / 100, rounded half up.
	std::size_t ht_count(std::size_t num_jobs, int ht_ratio_pct);

	// Portable random stream: std::mt19937_64 (bit-exact by the standard)
	// with unbiased rejection sampling for bounded integers, so a seed
	// produces the same job set with any standard library.
	class Random_stream {
	public:
		explicit Random_stream(std::uint64_t seed) : engine(seed) {}

		// uniform over [lo, hi], lo <= hi
		std::int64_t uniform(std::int64_t lo, std::int64_t hi);

		// true with probability num / den
		bool chance(std::uint64_t num, std::uint64_t den);

	private:
		std::mt19937_64 engine;
	};

	// Draws, per job in order: r_min in [1, 9990], jitter in [0, 9],
	// c_min in [2, C_U], c_max - c_min in [1, 4], priority in [1, 10];
	// deadline is 9999. Afterwards ht_count distinct jobs are marked HT by a
	// partial Fisher-Yates shuffle over the same stream.
	Job_set generate(const Gen_params& params);

} // namespace sag

#endif
