#include "sag/constructor.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <tuple>
#include <unordered_map>

namespace sag {

	std::span<const Edge> Sag_graph::out_edges(std::size_t index) const
	{
		auto lo = std::lower_bound(edges.begin(), edges.end(), index,
		                           [](const Edge& e, std::size_t i) { return e.from < i; });
		auto hi = std::upper_bound(lo, edges.end(), index,
		                           [](std::size_t i, const Edge& e) { return i < e.from; });
		return {edges.data() + (lo - edges.begin()), static_cast<std::size_t>(hi - lo)};
	}

	State_cap_exceeded::State_cap_exceeded(std::size_t cap, std::size_t depth)
	: std::runtime_error("state cap of " + std::to_string(cap) + " states exceeded at depth "
	                     + std::to_string(depth))
	, cap(cap)
	, depth(depth)
	{
	}

	Merge_result merge_level(std::span<const Pending_state> level)
	{
		// group by dispatched set, keyed by the first member's position
		auto hash = [&](std::size_t k) { return level[k].dispatched.hash(); };
		auto same = [&](std::size_t a, std::size_t b) {
			return level[a].dispatched == level[b].dispatched;
		};
		std::unordered_map<std::size_t, std::vector<std::size_t>, decltype(hash), decltype(same)>
			groups(level.size() * 2 + 1, hash, same);
		std::vector<std::size_t> group_order;
		for (std::size_t k = 0; k < level.size(); ++k) {
			auto [it, inserted] = groups.try_emplace(k);
			it->second.push_back(k);
			if (inserted)
				group_order.push_back(k);
		}

		struct Cluster {
			std::size_t first;
			Interval finish;
			std::vector<std::size_t> members;
		};
		std::vector<Cluster> clusters;

		for (std::size_t key : group_order) {
			auto& members = groups.find(key)->second;
			std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
				return std::tie(level[a].finish.lo, level[a].finish.hi, a)
				       < std::tie(level[b].finish.lo, level[b].finish.hi, b);
			});
			// sweep by lower bound: a member joins the open cluster iff it
			// intersects the cluster's union so far
			const std::size_t group_start = clusters.size();
			for (std::size_t k : members) {
				const Interval& iv = level[k].finish;
				if (clusters.size() == group_start || !clusters.back().finish.intersects(iv)) {
					clusters.push_back({k, iv, {k}});
				} else {
					Cluster& c = clusters.back();
					c.finish.hi = std::max(c.finish.hi, iv.hi);
					c.first = std::min(c.first, k);
					c.members.push_back(k);
				}
			}
		}

		std::sort(clusters.begin(), clusters.end(),
		          [](const Cluster& a, const Cluster& b) { return a.first < b.first; });

		Merge_result out;
		out.states.reserve(clusters.size());
		out.origin.assign(level.size(), 0);
		for (std::size_t c = 0; c < clusters.size(); ++c) {
			out.states.push_back({level[clusters[c].first].dispatched, clusters[c].finish});
			for (std::size_t k : clusters[c].members)
				out.origin[k] = c;
		}
		return out;
	}

	Sag_graph construct(const Job_set& js, const Construction_options& opts)
	{
		using clock = std::chrono::steady_clock;
		const auto started = clock::now();

		const std::size_t m = js.size();
		const Scheduler scheduler(js, opts.policy);

		Sag_graph g;
		g.variant = opts.variant;
		g.policy = opts.policy;
		g.job_count = m;
		g.states.push_back(root_state(m));
		g.level_begin = {0, 1};

		std::vector<Expansion> expansions;
		std::vector<Pending_state> successors;
		std::vector<Edge> new_edges;
		std::vector<std::size_t> parent_of;

		for (std::size_t depth = 0; depth < m; ++depth) {
			const std::size_t begin = g.level_begin[depth];
			const std::size_t end = g.level_begin[depth + 1];

			successors.clear();
			new_edges.clear();
			parent_of.clear();

			for (std::size_t pos = begin; pos < end; ++pos) {
				const State& s = g.states[pos];
				scheduler.expand(s, opts.variant, expansions);
				if (expansions.empty())
					throw std::logic_error("state S" + std::to_string(s.index) + " at depth "
					                       + std::to_string(depth) + " has no eligible job");
				for (const Expansion& x : expansions) {
					successors.push_back({s.dispatched.with(x.job_id), x.finish});
					new_edges.push_back({s.index, 0, x.job_id, x.kind, x.finish});
					parent_of.push_back(pos);
				}
			}

			Merge_result merged = merge_level(successors);

			if (g.states.size() + merged.states.size() > opts.state_cap)
				throw State_cap_exceeded(opts.state_cap, depth + 1);

			// the release cursor depends only on the dispatched set, so any
			// parent of a merged state can seed it
			std::vector<std::size_t> cursor(merged.states.size(), 0);
			std::vector<bool> seeded(merged.states.size(), false);
			for (std::size_t k = 0; k < successors.size(); ++k) {
				const std::size_t t = merged.origin[k];
				if (!seeded[t]) {
					cursor[t] = scheduler.advance_cursor(merged.states[t].dispatched,
					                                     g.states[parent_of[k]].release_cursor);
					seeded[t] = true;
				}
			}

			const std::size_t first_index = g.states.size() + 1;
			for (std::size_t t = 0; t < merged.states.size(); ++t) {
				g.states.push_back({first_index + t, depth + 1,
				                    std::move(merged.states[t].dispatched),
				                    merged.states[t].finish, cursor[t]});
			}
			for (std::size_t k = 0; k < new_edges.size(); ++k) {
				new_edges[k].to = first_index + merged.origin[k];
				g.edges.push_back(new_edges[k]);
			}

			if (!opts.retain_dispatched) {
				for (std::size_t pos = begin; pos < end; ++pos)
					g.states[pos].dispatched.release();
			}
			g.level_begin.push_back(g.states.size());
		}

		g.construct_seconds = std::chrono::duration<double>(clock::now() - started).count();
		return g;
	}

} // namespace sag
