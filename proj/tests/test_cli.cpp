#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "sag/cli.hpp"
#include "sag/io.hpp"

using namespace sag;

namespace {

	struct Run {
		int code;
		std::string out;
		std::string err;
	};

	Run sagtool(std::vector<std::string> args)
	{
		std::ostringstream out, err;
		const int code = run_cli(args, out, err);
		return {code, out.str(), err.str()};
	}

	class Temp_dir {
	public:
		Temp_dir()
		{
			static int counter = 0;
			root = std::filesystem::temp_directory_path()
			       / ("sag_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
			std::filesystem::create_directories(root);
		}
		~Temp_dir() { std::filesystem::remove_all(root); }
		std::string file(const std::string& name) const { return (root / name).string(); }
		std::string write(const std::string& name, const std::string& text) const
		{
			write_file(file(name), text);
			return file(name);
		}

	private:
		std::filesystem::path root;
	};

	std::size_t count_lines(const std::string& s)
	{
		return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
	}

}

TEST_CASE("[cli] generate")
{
	Temp_dir dir;
	const std::string a = dir.file("a.txt"), b = dir.file("b.txt");
	const Run r = sagtool({"generate", "--num-jobs", "1000", "--utilization", "60", "--ht-ratio", "15",
	                       "--seed", "1", "--out", a});
	REQUIRE(r.code == exit_code::ok);
	CHECK(r.out == "wrote 1000 jobs (150 hybrid-triggered) to " + a + "\n");

	const Job_set js = parse_jobset(read_file(a));
	CHECK(js.size() == 1000);
	CHECK(std::count_if(js.begin(), js.end(), [](const Job& j) { return j.ht; }) == 150);

	sagtool({"generate", "--num-jobs", "1000", "--utilization", "60", "--ht-ratio", "15", "--seed", "1",
	         "--out", b});
	CHECK(read_file(a) == read_file(b));

	const Run bad = sagtool({"generate", "--num-jobs", "0", "--utilization", "60", "--ht-ratio", "15",
	                         "--seed", "1", "--out", a});
	CHECK(bad.code == exit_code::usage);
	CHECK(bad.err.rfind("error: ", 0) == 0);

	CHECK(sagtool({"generate", "--utilization", "60"}).code == exit_code::usage);
	CHECK(sagtool({}).code == exit_code::usage);
}

TEST_CASE("[cli] construct")
{
	Temp_dir dir;
	const std::string ex1 = dir.write("ex1.txt", test::example_1_text);

	const Run r = sagtool({"construct", "--algo", "hybrid", "--input", ex1, "--no-timing"});
	REQUIRE(r.code == exit_code::ok);
	CHECK(r.out == "vertices=9 edges=8 width=2 depth=4 paths=2 schedulable=true\n");

	const Run timed = sagtool({"construct", "--algo", "hybrid", "--input", ex1});
	CHECK(timed.out.find(" time=") != std::string::npos);

	const std::string smoke = dir.write("smoke.txt", "1 2 3 4 6 1 1\n");
	const std::string dot = dir.file("smoke.dot");
	REQUIRE(sagtool({"construct", "--algo", "original", "--input", smoke, "--dot", dot}).code == exit_code::ok);
	CHECK(read_file(dot) == "digraph SAG {\n\tS1 [label=\"S1\\n[0,0]\"];\n\tS2 [label=\"S2\\n[4,6]\"];\n"
	                        "\tS1->S2 [label=\"J1\"];\n}\n");

	CHECK(sagtool({"construct", "--algo", "quantum", "--input", ex1}).code == exit_code::usage);
	CHECK(sagtool({"construct", "--algo", "hybrid", "--input", dir.file("missing.txt")}).code
	      == exit_code::usage);
	const std::string broken = dir.write("broken.txt", "1 2 3\n");
	const Run parse_failure = sagtool({"construct", "--algo", "hybrid", "--input", broken});
	CHECK(parse_failure.code == exit_code::usage);
	CHECK(parse_failure.err.find("line 1") != std::string::npos);

	const Run capped = sagtool({"construct", "--algo", "hybrid", "--input", ex1, "--state-cap", "3"});
	CHECK(capped.code == exit_code::resource_cap);
}

TEST_CASE("[cli] reports without HT jobs match across variants")
{
	Temp_dir dir;
	const std::string set = dir.file("set.txt");
	REQUIRE(sagtool({"generate", "--num-jobs", "200", "--utilization", "60", "--ht-ratio", "0", "--seed", "4",
	                 "--out", set}).code == exit_code::ok);
	for (const char* fmt : {"csv", "json"}) {
		const std::string a = dir.file(std::string("orig.") + fmt), b = dir.file(std::string("hyb.") + fmt);
		REQUIRE(sagtool({"construct", "--algo", "original", "--input", set, "--report", a, "--format", fmt,
		                 "--no-timing"}).code == exit_code::ok);
		REQUIRE(sagtool({"construct", "--algo", "hybrid", "--input", set, "--report", b, "--format", fmt,
		                 "--no-timing"}).code == exit_code::ok);
		CHECK(read_file(a) == read_file(b));
	}
}

TEST_CASE("[cli] verify")
{
	Temp_dir dir;
	std::ostringstream ex2_text;
	for (const Job& j : test::example_2())
		ex2_text << j.r_min << ' ' << j.r_max << ' ' << j.c_min << ' ' << j.c_max << ' ' << j.deadline << ' '
		         << j.priority << ' ' << (j.ht ? 1 : 0) << '\n';
	const std::string ex2 = dir.write("ex2.txt", ex2_text.str());

	const Run hyb = sagtool({"verify", "--input", ex2, "--algo", "hybrid"});
	CHECK(hyb.code == exit_code::ok);
	CHECK(hyb.out.find("verdict=PASS") != std::string::npos);

	const Run ext = sagtool({"verify", "--input", ex2, "--algo", "extended"});
	CHECK(ext.code == exit_code::inexact);
	CHECK(ext.out.find("witness: J3: analysed earliest completion 5") != std::string::npos);
	CHECK(ext.out.find("verdict=FAIL") != std::string::npos);

	const std::string big = dir.file("big.txt");
	REQUIRE(sagtool({"generate", "--num-jobs", "1000", "--utilization", "60", "--ht-ratio", "15", "--seed", "1",
	                 "--out", big}).code == exit_code::ok);
	const Run capped = sagtool({"verify", "--input", big});
	CHECK(capped.code == exit_code::resource_cap);
	CHECK_FALSE(capped.err.empty());
}

TEST_CASE("[cli] sweep")
{
	Temp_dir dir;
	const std::string one = dir.file("one.csv");
	const Run r = sagtool({"sweep", "--utilizations", "60", "--ht-ratios", "15", "--algorithms", "hybrid",
	                       "--jobs-per-set", "100", "--out", one});
	REQUIRE(r.code == exit_code::ok);
	CHECK(r.out == "wrote 1 rows (0 failed) to " + one + "\n");
	const std::string csv = read_file(one);
	CHECK(count_lines(csv) == 2);
	CHECK(csv.rfind("utilization,ht_ratio,algorithm,seed,vertices,edges,max_width,schedulable,time_s,"
	                "scenario_log10,error\n", 0) == 0);

	const std::string grid = dir.file("grid.csv");
	const Run g = sagtool({"sweep", "--utilizations", "40,45,50", "--ht-ratios", "0,50", "--jobs-per-set", "60",
	                       "--seeds", "1,2", "--threads", "2", "--out", grid});
	REQUIRE(g.code == exit_code::ok);
	// U=40 cannot be generated; its rows record the error and the sweep goes on
	CHECK(g.out == "wrote 36 rows (12 failed) to " + grid + "\n");

	Sweep_grid sg;
	sg.utilizations = {50, 45};
	sg.ht_ratios = {30, 0};
	sg.jobs_per_set = 40;
	sg.seeds = {3, 1};
	const auto rows = run_sweep(sg, 3);
	REQUIRE(rows.size() == 24);
	CHECK(std::is_sorted(rows.begin(), rows.end(), [](const Sweep_row& a, const Sweep_row& b) {
		return std::tie(a.utilization, a.ht_ratio, a.algorithm, a.seed)
		       < std::tie(b.utilization, b.ht_ratio, b.algorithm, b.seed);
	}));
	const auto again = run_sweep(sg, 1);
	for (std::size_t k = 0; k < rows.size(); ++k) {
		CHECK(rows[k].vertices == again[k].vertices);
		CHECK(rows[k].edges == again[k].edges);
		CHECK(rows[k].error.empty());
	}
	CHECK(cell_seed(1, 45, 0) != cell_seed(1, 45, 10));
	CHECK(cell_seed(1, 45, 0) != cell_seed(2, 45, 0));
}
