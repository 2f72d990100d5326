#include "sag/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sag {

	std::vector<Completion> completion_intervals(const Sag_graph& g)
	{
		std::vector<Completion> out(g.job_count + 1,
		                            Completion{time_infinity, std::numeric_limits<Time>::min()});
		std::vector<bool> seen(g.job_count + 1, false);
		std::vector<bool> executed(g.job_count + 1, false);

		for (const Edge& e : g.edges) {
			seen[e.job] = true;
			if (e.kind != Edge_kind::execute)
				continue;
			executed[e.job] = true;
			out[e.job].ect = std::min(out[e.job].ect, e.finish.lo);
			out[e.job].lct = std::max(out[e.job].lct, e.finish.hi);
		}

		for (Job_id id = 1; id <= g.job_count; ++id) {
			if (!seen[id])
				throw Malformed_graph("job J" + std::to_string(id) + " labels no edge");
			if (!executed[id])
				throw Malformed_graph("job J" + std::to_string(id) + " is never executed");
		}
		return out;
	}

	Graph_stats graph_stats(const Sag_graph& g)
	{
		Graph_stats st;
		st.vertex_count = g.states.size();
		st.edge_count = g.edges.size();
		st.depth = g.depth();
		for (std::size_t d = 0; d <= g.depth(); ++d)
			st.max_width = std::max(st.max_width, g.level(d).size());
		return st;
	}

	double path_count(const Sag_graph& g)
	{
		// edges are ordered by source, and sources by depth
		std::vector<double> paths(g.states.size() + 1, 0.0);
		paths[1] = 1.0;
		for (const Edge& e : g.edges)
			paths[e.to] = std::min(paths[e.to] + paths[e.from], std::numeric_limits<double>::max());
		double total = 0.0;
		for (const State& s : g.level(g.depth()))
			total = std::min(total + paths[s.index], std::numeric_limits<double>::max());
		return total;
	}

	namespace {
		void collect_orderings(const Sag_graph& g, std::size_t index, std::vector<Job_id>& prefix,
		                       std::set<std::vector<Job_id>>& out, std::size_t limit)
		{
			auto next = g.out_edges(index);
			if (next.empty()) {
				out.insert(prefix);
				if (out.size() > limit)
					throw std::length_error("more than " + std::to_string(limit)
					                        + " distinct orderings");
				return;
			}
			for (const Edge& e : next) {
				prefix.push_back(e.job);
				collect_orderings(g, e.to, prefix, out, limit);
				prefix.pop_back();
			}
		}
	}

	std::set<std::vector<Job_id>> orderings(const Sag_graph& g, std::size_t limit)
	{
		std::set<std::vector<Job_id>> out;
		std::vector<Job_id> prefix;
		collect_orderings(g, 1, prefix, out, limit);
		return out;
	}

	bool has_ordering(const Sag_graph& g, const std::vector<Job_id>& order)
	{
		if (order.size() != g.depth())
			return false;
		std::vector<std::size_t> frontier{1};
		for (Job_id job : order) {
			std::vector<std::size_t> next;
			for (std::size_t s : frontier)
				for (const Edge& e : g.out_edges(s))
					if (e.job == job)
						next.push_back(e.to);
			std::sort(next.begin(), next.end());
			next.erase(std::unique(next.begin(), next.end()), next.end());
			if (next.empty())
				return false;
			frontier = std::move(next);
		}
		return true;
	}

	Analysis_report analyze(const Sag_graph& g, const Job_set& js)
	{
		Analysis_report r;
		const auto completions = completion_intervals(g);
		r.jobs.reserve(js.size());
		for (const Job& j : js) {
			Job_result jr;
			jr.job = j;
			jr.ect = completions[j.id].ect;
			jr.lct = completions[j.id].lct;
			jr.bcrt = jr.ect - j.r_min;
			jr.wcrt = jr.lct - j.r_min;
			jr.miss = jr.lct > j.deadline;
			r.jobs.push_back(jr);
		}
		r.schedulable = schedulability(r, js);
		r.stats = graph_stats(g);
		r.construct_seconds = g.construct_seconds;
		r.scenario_log10 = count_scenarios_log10(js, g.variant);
		return r;
	}

	bool schedulability(const Analysis_report& report, const Job_set& js)
	{
		for (const Job_result& jr : report.jobs)
			if (jr.lct > js[jr.job.id].deadline)
				return false;
		return true;
	}

	double count_scenarios_log10(const Job_set& js, Variant variant)
	{
		double total = 0.0;
		for (const Job& j : js) {
			const double releases = static_cast<double>(j.r_max - j.r_min + 1);
			double costs = static_cast<double>(j.c_max - j.c_min + 1);
			if (j.ht) {
				if (variant == Variant::extended)
					costs = static_cast<double>(j.c_max + 1);
				else if (variant == Variant::hybrid)
					costs += 1.0;
			}
			total += std::log10(releases) + std::log10(costs);
		}
		return total;
	}

	Idle_time idle_time_for_safety(const Job_set& js)
	{
		Idle_time it;
		for (const Job& j : js)
			if (j.ht)
				it.idle += j.c_min;
		it.efficiency = 1.0 - static_cast<double>(it.idle) / static_cast<double>(js.horizon);
		return it;
	}

} // namespace sag
