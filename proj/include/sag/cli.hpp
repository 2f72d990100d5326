#ifndef SAG_CLI_HPP
#define SAG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sag/constructor.hpp"
#include "sag/state.hpp"

namespace sag {

	namespace exit_code {
		inline constexpr int ok = 0;
		inline constexpr int usage = 1;
		inline constexpr int inexact = 2;
		inline constexpr int resource_cap = 3;
	}

	struct Sweep_grid {
		std::vector<int> utilizations{45, 50, 55, 60, 65, 70, 75};
		std::vector<int> ht_ratios{0, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
		std::size_t jobs_per_set = 1000;
		std::vector<std::uint64_t> seeds{1};
		std::vector<Variant> algorithms{Variant::original, Variant::extended, Variant::hybrid};
		Policy policy = Policy::fp;
		std::size_t state_cap = default_state_cap;
	};

	struct Sweep_row {
		int utilization = 0;
		int ht_ratio = 0;
		Variant algorithm = Variant::original;
		std::uint64_t seed = 0;
		std::size_t vertices = 0;
		std::size_t edges = 0;
		std::size_t max_width = 0;
		bool schedulable = false;
		double time_s = 0.0;
		double scenario_log10 = 0.0;
		std::string error; // empty on success
	};

	// Seed of the job set for one grid cell, mixed from (seed, U, H) with
	// splitmix64 so every cell gets an independent stream.
	std::uint64_t cell_seed(std::uint64_t seed, int utilization, int ht_ratio);

	// Runs every (U, H, seed) cell on `threads` workers; each cell builds its
	// job set once and constructs it with every algorithm. Rows come back
	// sorted by (U, H, algorithm, seed) whatever the interleaving.
	std::vector<Sweep_row> run_sweep(const Sweep_grid& grid, unsigned threads = 1);

	// utilization,ht_ratio,algorithm,seed,vertices,edges,max_width,
	// schedulable,time_s,scenario_log10,error
	std::string render_sweep_csv(const std::vector<Sweep_row>& rows);

	// Entry point of the sagtool command line; returns the process exit code.
	int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sag

#endif
