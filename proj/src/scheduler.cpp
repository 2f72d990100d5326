#include "sag/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace sag {

	std::string_view to_string(Variant v)
	{
		switch (v) {
		case Variant::original:
			return "original";
		case Variant::extended:
			return "extended";
		case Variant::hybrid:
			return "hybrid";
		}
		return "?";
	}

	Variant parse_variant(std::string_view s)
	{
		if (s == "original")
			return Variant::original;
		if (s == "extended")
			return Variant::extended;
		if (s == "hybrid")
			return Variant::hybrid;
		throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
	}

	Scheduler::Scheduler(const Job_set& js, Policy policy)
	: workload(js)
	, order_policy(policy)
	, rank(js.size() + 1, 0)
	, by_release(js.size())
	{
		std::vector<Job_id> by_priority(js.size());
		std::iota(by_priority.begin(), by_priority.end(), Job_id{1});
		std::sort(by_priority.begin(), by_priority.end(), [&](Job_id a, Job_id b) {
			return sag::higher_priority(js[a], js[b], policy);
		});
		for (std::size_t k = 0; k < by_priority.size(); ++k)
			rank[by_priority[k]] = k;

		std::iota(by_release.begin(), by_release.end(), Job_id{1});
		std::sort(by_release.begin(), by_release.end(), [&](Job_id a, Job_id b) {
			return std::tie(js[a].r_min, a) < std::tie(js[b].r_min, b);
		});
	}

	std::size_t Scheduler::advance_cursor(const Index_set& dispatched, std::size_t cursor) const
	{
		while (cursor < by_release.size() && dispatched.contains(by_release[cursor]))
			++cursor;
		return cursor;
	}

	std::vector<Expansion> Scheduler::expand(const State& s, Variant variant) const
	{
		std::vector<Expansion> out;
		expand(s, variant, out);
		return out;
	}

	void Scheduler::expand(const State& s, Variant variant, std::vector<Expansion>& out) const
	{
		out.clear();
		const std::size_t n = by_release.size();
		const Time e = s.finish.lo;
		const Time l = s.finish.hi;

		// Earliest certain release among pending jobs. Jobs are visited by
		// r_min, so once r_min exceeds the running minimum nothing later
		// can lower it.
		Time min_r_max = time_infinity;
		for (std::size_t p = s.release_cursor; p < n; ++p) {
			const Job& j = workload[by_release[p]];
			if (j.r_min > min_r_max)
				break;
			if (!s.dispatched.contains(j.id))
				min_r_max = std::min(min_r_max, j.r_max);
		}
		if (min_r_max == time_infinity)
			return;

		const Time t_wc = std::max(l, min_r_max);

		// Only jobs possibly released by t_wc can start next, and only those
		// can delay a lower-priority job below t_wc.
		std::vector<Job_id> pending;
		for (std::size_t p = s.release_cursor; p < n; ++p) {
			const Job& j = workload[by_release[p]];
			if (j.r_min > t_wc)
				break;
			if (!s.dispatched.contains(j.id))
				pending.push_back(j.id);
		}
		std::sort(pending.begin(), pending.end(),
		          [&](Job_id a, Job_id b) { return rank[a] < rank[b]; });

		Time t_high = time_infinity;
		for (Job_id id : pending) {
			// every remaining candidate has lower priority: LST < e <= EST
			if (t_high != time_infinity && t_high - 1 < e)
				break;

			const Job& j = workload[id];
			const Time est = std::max(e, j.r_min);
			const Time lst = t_high == time_infinity ? t_wc : std::min(t_wc, t_high - 1);
			t_high = std::min(t_high, j.r_max);

			if (est > lst)
				continue;

			const bool may_be_absent = j.ht && variant != Variant::original;
			const Time fastest = (may_be_absent && variant == Variant::extended) ? 0 : j.c_min;
			out.push_back({id, Edge_kind::execute, est, lst, {est + fastest, lst + j.c_max}});
			if (may_be_absent && variant == Variant::hybrid)
				out.push_back({id, Edge_kind::absent, est, lst, {est, lst}});
		}

		std::sort(out.begin(), out.end(), [](const Expansion& a, const Expansion& b) {
			return std::tie(a.job_id, a.kind) < std::tie(b.job_id, b.kind);
		});
	}

	std::vector<Expansion> eligible_expansions(const State& s, const Job_set& js, Policy policy,
	                                           Variant variant)
	{
		return Scheduler(js, policy).expand(s, variant);
	}

} // namespace sag
