#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "sag/oracle.hpp"
#include "sag/scheduler.hpp"

using namespace sag;
using sag::test::J;

namespace {

	State state_after(const Job_set& js, std::initializer_list<Job_id> done, Interval finish)
	{
		State s = root_state(js.size());
		for (Job_id id : done)
			s.dispatched.add(id);
		s.depth = done.size();
		s.finish = finish;
		return s;
	}

	const Expansion* find(const std::vector<Expansion>& xs, Job_id id, Edge_kind kind)
	{
		for (const auto& x : xs)
			if (x.job_id == id && x.kind == kind)
				return &x;
		return nullptr;
	}

}

TEST_CASE("[scheduler] smoke alarm from the root")
{
	const Job_set js = test::smoke_alarm();
	const auto xs = eligible_expansions(root_state(1), js, Policy::fp, Variant::hybrid);
	REQUIRE(xs.size() == 2);
	CHECK(xs[0] == Expansion{1, Edge_kind::execute, 1, 2, {4, 6}});
	CHECK(xs[1] == Expansion{1, Edge_kind::absent, 1, 2, {1, 2}});

	const auto orig = eligible_expansions(root_state(1), js, Policy::fp, Variant::original);
	REQUIRE(orig.size() == 1);
	CHECK(orig[0].finish == Interval{4, 6});

	const auto ext = eligible_expansions(root_state(1), js, Policy::fp, Variant::extended);
	REQUIRE(ext.size() == 1);
	CHECK(ext[0].finish == Interval{1, 6});
}

TEST_CASE("[scheduler] example 1: only J1 can start first")
{
	const Job_set js = test::example_1();
	const auto xs = eligible_expansions(root_state(4), js, Policy::fp, Variant::original);
	REQUIRE(xs.size() == 1);
	CHECK(xs[0].job_id == 1);
	CHECK(xs[0].finish == Interval{2, 2});
}

TEST_CASE("[scheduler] example 1: after J1 is absent, J2 runs before J4")
{
	const Job_set js = test::example_1();
	const auto xs = eligible_expansions(state_after(js, {1}, {0, 0}), js, Policy::fp, Variant::hybrid);
	REQUIRE(xs.size() == 1);
	CHECK(xs[0].job_id == 2);
	CHECK(xs[0].finish == Interval{2, 2});
}

TEST_CASE("[scheduler] example 2: extended state after J1 lets J3 finish at 5")
{
	const Job_set js = test::example_2();
	const auto xs = eligible_expansions(state_after(js, {1}, {0, 12}), js, Policy::fp, Variant::extended);
	const Expansion* j3 = find(xs, 3, Edge_kind::execute);
	REQUIRE(j3 != nullptr);
	CHECK(j3->finish == Interval{5, 7});
	CHECK(j3->est == 4);
	CHECK(j3->lst == 5);
}

TEST_CASE("[scheduler] degenerate single remaining job")
{
	const Job_set js{{J(1, 0, 0, 1, 1, 50, 1, false), J(2, 7, 7, 3, 3, 50, 2, false)}};
	const auto xs = eligible_expansions(state_after(js, {1}, {7, 7}), js, Policy::fp, Variant::original);
	REQUIRE(xs.size() == 1);
	CHECK(xs[0] == Expansion{2, Edge_kind::execute, 7, 7, {10, 10}});
}

TEST_CASE("[scheduler] EDF uses deadlines")
{
	// same release; J2 has the earlier deadline but the worse fixed priority
	const Job_set js{{J(1, 0, 0, 2, 2, 30, 1, false), J(2, 0, 0, 2, 2, 10, 2, false)}};
	const auto fp = eligible_expansions(root_state(2), js, Policy::fp, Variant::original);
	const auto edf = eligible_expansions(root_state(2), js, Policy::edf, Variant::original);
	REQUIRE(fp.size() == 1);
	REQUIRE(edf.size() == 1);
	CHECK(fp[0].job_id == 1);
	CHECK(edf[0].job_id == 2);
}

TEST_CASE("[scheduler] variant invariants on random states")
{
	std::mt19937_64 rng(11);
	for (int round = 0; round < 300; ++round) {
		const Job_set js = test::random_small_set(rng, {2, 7, 4, 3, 0.5, 12});
		const Scheduler sched(js, round % 2 ? Policy::edf : Policy::fp);

		// a random partial state
		State s = root_state(js.size());
		for (Job_id id = 1; id < js.size(); ++id)
			if (std::bernoulli_distribution(0.4)(rng)) {
				s.dispatched.add(id);
				++s.depth;
			}
		const Time e = std::uniform_int_distribution<Time>(0, 15)(rng);
		s.finish = {e, e + std::uniform_int_distribution<Time>(0, 5)(rng)};

		const auto orig = sched.expand(s, Variant::original);
		const auto ext = sched.expand(s, Variant::extended);
		const auto hyb = sched.expand(s, Variant::hybrid);

		// progress: some pending job is always eligible
		CHECK_FALSE(orig.empty());

		CHECK(std::is_sorted(hyb.begin(), hyb.end(), [](const Expansion& a, const Expansion& b) {
			return std::tie(a.job_id, a.kind) < std::tie(b.job_id, b.kind);
		}));

		REQUIRE(orig.size() == ext.size());
		for (std::size_t k = 0; k < orig.size(); ++k) {
			const Job& j = js[orig[k].job_id];
			CHECK(ext[k].job_id == orig[k].job_id);
			CHECK(ext[k].est == orig[k].est);
			CHECK(ext[k].lst == orig[k].lst);
			CHECK(orig[k].est <= orig[k].lst);
			CHECK_FALSE(s.dispatched.contains(j.id));
			CHECK(orig[k].finish == Interval{orig[k].est + j.c_min, orig[k].lst + j.c_max});

			const Expansion* hx = find(hyb, j.id, Edge_kind::execute);
			REQUIRE(hx != nullptr);
			CHECK(hx->est == orig[k].est);
			CHECK(hx->lst == orig[k].lst);
			CHECK(hx->finish == orig[k].finish);
			CHECK(ext[k].finish.contains(hx->finish));

			const Expansion* ha = find(hyb, j.id, Edge_kind::absent);
			CHECK((ha != nullptr) == j.ht);
			if (ha) {
				CHECK(ha->finish == Interval{ha->est, ha->lst});
				CHECK(ext[k].finish.contains(ha->finish));
			}
		}
	}
}

// Independent oracle for the root expansion: over every scenario, record
// which job the simulator dispatches first and when it finishes.
TEST_CASE("[scheduler] root expansions match brute-force first dispatches")
{
	std::mt19937_64 rng(23);
	int checked = 0;
	for (int round = 0; round < 200; ++round) {
		const Job_set js = test::random_small_set(rng, {2, 5, 3, 3, 0.5, 8});
		const auto count = scenario_count(js);
		if (!count || *count > 50'000)
			continue;
		++checked;

		for (Policy policy : {Policy::fp, Policy::edf}) {
			std::map<std::pair<Job_id, Edge_kind>, Interval> truth;
			Scenario_enumerator en(js, 50'000);
			while (en.next()) {
				const Scenario& sc = en.current();
				const Simulation sim = simulate(js, sc, policy);
				const Job_id first = sim.order.front();
				const Edge_kind kind = sc.exec_times[first - 1] == 0 ? Edge_kind::absent : Edge_kind::execute;
				const Time t = sim.completion[first];
				auto [it, inserted] = truth.try_emplace({first, kind}, Interval{t, t});
				it->second.lo = std::min(it->second.lo, t);
				it->second.hi = std::max(it->second.hi, t);
			}

			const auto xs = eligible_expansions(root_state(js.size()), js, policy, Variant::hybrid);
			std::map<std::pair<Job_id, Edge_kind>, Interval> analysed;
			for (const auto& x : xs)
				analysed[{x.job_id, x.kind}] = x.finish;
			CHECK(analysed == truth);
		}
	}
	CHECK(checked > 100);
}
