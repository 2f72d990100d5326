#include "sag/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "CLI11.hpp"

#include "sag/analysis.hpp"
#include "sag/generator.hpp"
#include "sag/io.hpp"
#include "sag/oracle.hpp"

namespace sag {

	std::uint64_t cell_seed(std::uint64_t seed, int utilization, int ht_ratio)
	{
		auto splitmix = [](std::uint64_t x) {
			x += 0x9e3779b97f4a7c15ull;
			x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
			x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
			return x ^ (x >> 31);
		};
		std::uint64_t h = splitmix(seed);
		h = splitmix(h ^ static_cast<std::uint64_t>(utilization));
		h = splitmix(h ^ static_cast<std::uint64_t>(ht_ratio));
		return h;
	}

	std::vector<Sweep_row> run_sweep(const Sweep_grid& grid, unsigned threads)
	{
		struct Cell {
			int utilization;
			int ht_ratio;
			std::uint64_t seed;
		};
		std::vector<Cell> cells;
		for (int u : grid.utilizations)
			for (int h : grid.ht_ratios)
				for (auto s : grid.seeds)
					cells.push_back({u, h, s});

		const std::size_t n_algo = grid.algorithms.size();
		std::vector<Sweep_row> rows(cells.size() * n_algo);

		auto run_cell = [&](std::size_t c) {
			const Cell& cell = cells[c];
			Job_set js;
			std::string gen_error;
			try {
				js = generate({grid.jobs_per_set, cell.utilization, cell.ht_ratio,
				               cell_seed(cell.seed, cell.utilization, cell.ht_ratio)});
			} catch (const std::exception& e) {
				gen_error = e.what();
			}

			for (std::size_t a = 0; a < n_algo; ++a) {
				Sweep_row& row = rows[c * n_algo + a];
				row.utilization = cell.utilization;
				row.ht_ratio = cell.ht_ratio;
				row.algorithm = grid.algorithms[a];
				row.seed = cell.seed;
				if (!gen_error.empty()) {
					row.error = gen_error;
					continue;
				}
				try {
					Construction_options opts{grid.algorithms[a], grid.policy, grid.state_cap, false};
					const Sag_graph g = construct(js, opts);
					const Analysis_report r = analyze(g, js);
					row.vertices = r.stats.vertex_count;
					row.edges = r.stats.edge_count;
					row.max_width = r.stats.max_width;
					row.schedulable = r.schedulable;
					row.time_s = r.construct_seconds;
					row.scenario_log10 = r.scenario_log10;
				} catch (const std::exception& e) {
					row.error = e.what();
				}
			}
		};

		std::atomic<std::size_t> next{0};
		auto worker = [&] {
			for (std::size_t c = next++; c < cells.size(); c = next++)
				run_cell(c);
		};
		const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
		std::vector<std::thread> pool;
		for (unsigned t = 1; t < n_threads; ++t)
			pool.emplace_back(worker);
		worker();
		for (auto& t : pool)
			t.join();

		std::stable_sort(rows.begin(), rows.end(), [](const Sweep_row& a, const Sweep_row& b) {
			return std::tie(a.utilization, a.ht_ratio, a.algorithm, a.seed)
			       < std::tie(b.utilization, b.ht_ratio, b.algorithm, b.seed);
		});
		return rows;
	}

	std::string render_sweep_csv(const std::vector<Sweep_row>& rows)
	{
		std::ostringstream os;
		os << "utilization,ht_ratio,algorithm,seed,vertices,edges,max_width,schedulable,time_s,"
		      "scenario_log10,error\n";
		for (const Sweep_row& r : rows) {
			std::string error = r.error;
			std::replace(error.begin(), error.end(), ',', ';');
			std::replace(error.begin(), error.end(), '\n', ' ');
			os << r.utilization << ',' << r.ht_ratio << ',' << to_string(r.algorithm) << ','
			   << r.seed << ',';
			if (error.empty()) {
				os << r.vertices << ',' << r.edges << ',' << r.max_width << ','
				   << (r.schedulable ? "true" : "false") << ',' << std::fixed
				   << std::setprecision(6) << r.time_s << ',' << std::setprecision(4)
				   << r.scenario_log10 << ',';
			} else {
				os << ",,,,,,";
			}
			os << error << '\n';
		}
		return os.str();
	}

	namespace {

		Job_set load_jobset(const std::string& path) { return parse_jobset(read_file(path)); }

		int cmd_generate(const Gen_params& params, const std::string& out_path, std::ostream& out)
		{
			const Job_set js = generate(params);
			write_file(out_path, render_jobset(js));
			out << "wrote " << js.size() << " jobs (" << ht_count(params.num_jobs, params.ht_ratio_pct)
			    << " hybrid-triggered) to " << out_path << "\n";
			return exit_code::ok;
		}

		struct Construct_flags {
			std::string algo = "original";
			std::string policy = "fp";
			std::string input;
			std::string dot;
			std::string report;
			std::string format = "csv";
			std::size_t state_cap = default_state_cap;
			bool no_timing = false;
		};

		int cmd_construct(const Construct_flags& f, std::ostream& out)
		{
			const Variant variant = parse_variant(f.algo);
			const Policy policy = parse_policy(f.policy);
			const Report_format format = parse_report_format(f.format);
			const Job_set js = load_jobset(f.input);

			const Sag_graph g = construct(js, {variant, policy, f.state_cap, true});
			const Analysis_report r = analyze(g, js);

			if (!f.dot.empty())
				write_file(f.dot, write_dot(g));
			if (!f.report.empty())
				write_file(f.report, write_report(r, format, {!f.no_timing}));

			out << "vertices=" << r.stats.vertex_count << " edges=" << r.stats.edge_count
			    << " width=" << r.stats.max_width << " depth=" << r.stats.depth
			    << " paths=" << std::setprecision(17) << path_count(g)
			    << " schedulable=" << (r.schedulable ? "true" : "false");
			if (!f.no_timing)
				out << " time=" << std::fixed << std::setprecision(6) << r.construct_seconds << "s";
			out << "\n";
			return exit_code::ok;
		}

		struct Verify_flags {
			std::string input;
			std::string algo = "hybrid";
			std::string policy = "fp";
			std::uint64_t cap = default_scenario_cap;
			std::size_t state_cap = default_state_cap;
		};

		int cmd_verify(const Verify_flags& f, std::ostream& out)
		{
			const Variant variant = parse_variant(f.algo);
			const Policy policy = parse_policy(f.policy);
			const Job_set js = load_jobset(f.input);

			// fail on the scenario cap before paying for a construction
			const auto literal = scenario_count(js);
			if (!literal || *literal > f.cap)
				throw Scenario_cap_exceeded(count_scenarios_log10(js, Variant::hybrid), f.cap);

			const Sag_graph g = construct(js, {variant, policy, f.state_cap, true});
			const Exactness_verdict v = exactness_check(g, js, policy, f.cap);

			auto flag = [](bool b) { return b ? "true" : "false"; };
			out << "scenarios=" << *literal << " intervals_exact=" << flag(v.intervals_exact)
			    << " orderings_match=" << flag(v.orderings_match) << " orderings_equal="
			    << (v.orderings_equal ? flag(*v.orderings_equal) : "unknown") << "\n";
			if (v.witness) {
				std::istringstream lines(v.witness->message);
				for (std::string line; std::getline(lines, line);)
					out << "witness: " << line << "\n";
				if (v.witness->scenario)
					out << "scenario: " << *v.witness->scenario << "\n";
			}
			out << "verdict=" << (v.passes() ? "PASS" : "FAIL") << "\n";
			return v.passes() ? exit_code::ok : exit_code::inexact;
		}

		struct Sweep_flags {
			Sweep_grid grid;
			std::vector<std::string> algorithms{"original", "extended", "hybrid"};
			std::string policy = "fp";
			std::string out;
			unsigned threads = 1;
		};

		int cmd_sweep(Sweep_flags f, std::ostream& out)
		{
			f.grid.algorithms.clear();
			for (const auto& a : f.algorithms)
				f.grid.algorithms.push_back(parse_variant(a));
			std::sort(f.grid.algorithms.begin(), f.grid.algorithms.end());
			f.grid.algorithms.erase(std::unique(f.grid.algorithms.begin(), f.grid.algorithms.end()),
			                        f.grid.algorithms.end());
			f.grid.policy = parse_policy(f.policy);
			if (f.grid.utilizations.empty() || f.grid.ht_ratios.empty() || f.grid.seeds.empty()
			    || f.grid.algorithms.empty())
				throw std::invalid_argument("sweep grid lists must be non-empty");
			if (f.grid.jobs_per_set == 0)
				throw std::invalid_argument("--jobs-per-set must be positive");

			const auto rows = run_sweep(f.grid, f.threads);
			write_file(f.out, render_sweep_csv(rows));
			const auto failed = std::count_if(rows.begin(), rows.end(),
			                                  [](const Sweep_row& r) { return !r.error.empty(); });
			out << "wrote " << rows.size() << " rows (" << failed << " failed) to " << f.out << "\n";
			return exit_code::ok;
		}

	} // namespace

	int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
	{
		CLI::App app{"Schedule-abstraction graph response-time analysis", "sagtool"};
		app.require_subcommand(1);

		Gen_params gen;
		std::string gen_out;
		auto* generate_cmd = app.add_subcommand("generate", "Generate a random job set");
		generate_cmd->add_option("--num-jobs", gen.num_jobs, "Number of jobs")->required();
		generate_cmd->add_option("--utilization", gen.utilization_pct, "Utilization U in percent")->required();
		generate_cmd->add_option("--ht-ratio", gen.ht_ratio_pct, "Share of hybrid-triggered jobs in percent")->required();
		generate_cmd->add_option("--seed", gen.seed, "Random seed")->required();
		generate_cmd->add_option("--out", gen_out, "Output job-set file")->required();
		generate_cmd->add_option("--horizon", gen.horizon, "Analysis horizon");

		Construct_flags cf;
		auto* construct_cmd = app.add_subcommand("construct", "Build a graph and analyse a job set");
		construct_cmd->add_option("--algo", cf.algo, "original | extended | hybrid")->required();
		construct_cmd->add_option("--policy", cf.policy, "fp | edf");
		construct_cmd->add_option("--input", cf.input, "Job-set file")->required();
		construct_cmd->add_option("--dot", cf.dot, "Write the graph in DOT format");
		construct_cmd->add_option("--report", cf.report, "Write the analysis report");
		construct_cmd->add_option("--format", cf.format, "csv | json");
		construct_cmd->add_option("--state-cap", cf.state_cap, "Maximum number of states");
		construct_cmd->add_flag("--no-timing", cf.no_timing, "Omit wall time from outputs");

		Verify_flags vf;
		auto* verify_cmd = app.add_subcommand("verify", "Check a graph against every execution scenario");
		verify_cmd->add_option("--input", vf.input, "Job-set file")->required();
		verify_cmd->add_option("--algo", vf.algo, "original | extended | hybrid");
		verify_cmd->add_option("--policy", vf.policy, "fp | edf");
		verify_cmd->add_option("--cap", vf.cap, "Maximum number of scenarios");
		verify_cmd->add_option("--state-cap", vf.state_cap, "Maximum number of states");

		Sweep_flags sf;
		auto* sweep_cmd = app.add_subcommand("sweep", "Construct graphs over a utilization x HT-ratio grid");
		sweep_cmd->add_option("--utilizations", sf.grid.utilizations, "Utilizations in percent")->delimiter(',');
		sweep_cmd->add_option("--ht-ratios", sf.grid.ht_ratios, "HT ratios in percent")->delimiter(',');
		sweep_cmd->add_option("--algorithms", sf.algorithms, "Construction algorithms")->delimiter(',');
		sweep_cmd->add_option("--jobs-per-set", sf.grid.jobs_per_set, "Jobs per generated set");
		sweep_cmd->add_option("--seed,--seeds", sf.grid.seeds, "Base seed(s)")->delimiter(',');
		sweep_cmd->add_option("--policy", sf.policy, "fp | edf");
		sweep_cmd->add_option("--state-cap", sf.grid.state_cap, "Maximum number of states per graph");
		sweep_cmd->add_option("--threads", sf.threads, "Worker threads");
		sweep_cmd->add_option("--out", sf.out, "Output CSV")->required();

		std::vector<std::string> argv_storage{"sagtool"};
		argv_storage.insert(argv_storage.end(), args.begin(), args.end());
		std::vector<const char*> argv;
		for (const auto& a : argv_storage)
			argv.push_back(a.c_str());

		try {
			app.parse(static_cast<int>(argv.size()), argv.data());
		} catch (const CLI::ParseError& e) {
			const int code = app.exit(e, out, err);
			return code == 0 ? exit_code::ok : exit_code::usage;
		}

		try {
			if (generate_cmd->parsed())
				return cmd_generate(gen, gen_out, out);
			if (construct_cmd->parsed())
				return cmd_construct(cf, out);
			if (verify_cmd->parsed())
				return cmd_verify(vf, out);
			if (sweep_cmd->parsed())
				return cmd_sweep(sf, out);
		} catch (const State_cap_exceeded& e) {
			err << "error: " << e.what() << "\n";
			return exit_code::resource_cap;
		} catch (const Scenario_cap_exceeded& e) {
			err << "error: " << e.what() << "\n";
			return exit_code::resource_cap;
		} catch (const std::exception& e) {
			err << "error: " << e.what() << "\n";
			return exit_code::usage;
		}
		return exit_code::usage;
	}

} // namespace sag
