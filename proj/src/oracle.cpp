#include "sag/oracle.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "sag/analysis.hpp"

namespace sag {

	namespace {
		std::string format_log10(double v)
		{
			std::ostringstream os;
			os.precision(4);
			os << std::fixed << v;
			return os.str();
		}

		template<class T>
		void write_tuple(std::ostream& os, const std::vector<T>& xs)
		{
			os << "(";
			for (std::size_t k = 0; k < xs.size(); ++k)
				os << (k ? "," : "") << xs[k];
			os << ")";
		}
	}

	std::ostream& operator<<(std::ostream& os, const Scenario& s)
	{
		os << "r=";
		write_tuple(os, s.releases);
		os << " C=";
		write_tuple(os, s.exec_times);
		return os;
	}

	Scenario_cap_exceeded::Scenario_cap_exceeded(double log10_count, std::uint64_t cap)
	: std::runtime_error("10^" + format_log10(log10_count) + " execution scenarios exceed the cap of "
	                     + std::to_string(cap) + "; shrink the job set")
	, log10_count(log10_count)
	, cap(cap)
	{
	}

	std::optional<std::uint64_t> scenario_count(const Job_set& js)
	{
		std::uint64_t total = 1;
		for (const Job& j : js) {
			const auto choices = static_cast<std::uint64_t>(j.r_max - j.r_min + 1)
			                     * static_cast<std::uint64_t>(j.c_max - j.c_min + 1 + (j.ht ? 1 : 0));
			if (__builtin_mul_overflow(total, choices, &total))
				return std::nullopt;
		}
		return total;
	}

	Scenario_enumerator::Scenario_enumerator(const Job_set& js, std::uint64_t cap)
	{
		const auto literal = scenario_count(js);
		if (!literal || *literal > cap)
			throw Scenario_cap_exceeded(count_scenarios_log10(js, Variant::hybrid), cap);
		count = *literal;

		for (const Job& j : js) {
			std::vector<Time> rel;
			for (Time r = j.r_min; r <= j.r_max; ++r)
				rel.push_back(r);
			release_choices.push_back(std::move(rel));

			std::vector<Time> cost;
			if (j.ht)
				cost.push_back(0);
			for (Time c = j.c_min; c <= j.c_max; ++c)
				cost.push_back(c);
			cost_choices.push_back(std::move(cost));
		}
		digit.assign(2 * js.size(), 0);
	}

	bool Scenario_enumerator::next()
	{
		const std::size_t m = release_choices.size();
		auto choices = [&](std::size_t k) -> const std::vector<Time>& {
			return k < m ? release_choices[k] : cost_choices[k - m];
		};

		if (!started) {
			started = true;
		} else {
			// odometer, last digit fastest
			std::size_t k = digit.size();
			while (k > 0) {
				--k;
				if (++digit[k] < choices(k).size())
					break;
				digit[k] = 0;
				if (k == 0)
					return false;
			}
			if (digit.empty())
				return false;
		}

		scenario.releases.resize(m);
		scenario.exec_times.resize(m);
		for (std::size_t k = 0; k < m; ++k) {
			scenario.releases[k] = release_choices[k][digit[k]];
			scenario.exec_times[k] = cost_choices[k][digit[m + k]];
		}
		return true;
	}

	Simulation simulate(const Job_set& js, const Scenario& s, Policy policy)
	{
		const std::size_t m = js.size();
		Simulation sim;
		sim.completion.assign(m + 1, 0);
		sim.dispatch.assign(m + 1, 0);
		std::vector<bool> done(m + 1, false);

		Time t = 0;
		while (sim.order.size() < m) {
			Job_id pick = 0;
			Time next_release = time_infinity;
			for (Job_id id = 1; id <= m; ++id) {
				if (done[id])
					continue;
				const Time r = s.releases[id - 1];
				if (r <= t) {
					if (pick == 0 || higher_priority(js[id], js[pick], policy))
						pick = id;
				} else {
					next_release = std::min(next_release, r);
				}
			}
			if (pick == 0) {
				t = next_release;
				continue;
			}
			done[pick] = true;
			sim.order.push_back(pick);
			sim.dispatch[pick] = t;
			t += s.exec_times[pick - 1];
			sim.completion[pick] = t;
		}
		return sim;
	}

	std::string format_order(const std::vector<Job_id>& order, const Scenario* s)
	{
		std::string out = "<";
		for (std::size_t k = 0; k < order.size(); ++k) {
			if (k)
				out += ",";
			out += "J" + std::to_string(order[k]);
			if (s && s->exec_times[order[k] - 1] == 0)
				out += "!";
		}
		return out + ">";
	}

	Exactness_verdict exactness_check(const Sag_graph& g, const Job_set& js, Policy policy,
	                                  std::uint64_t cap)
	{
		const std::size_t m = js.size();
		Scenario_enumerator scenarios(js, cap);

		struct Observed {
			Time lo = time_infinity;
			Time hi = std::numeric_limits<Time>::min();
			Scenario lo_witness;
			Scenario hi_witness;
		};
		std::vector<Observed> truth(m + 1);
		std::map<std::vector<Job_id>, Scenario> runtime_orders;

		while (scenarios.next()) {
			const Scenario& s = scenarios.current();
			Simulation sim = simulate(js, s, policy);
			for (Job_id id = 1; id <= m; ++id) {
				if (s.exec_times[id - 1] == 0)
					continue;
				Observed& o = truth[id];
				if (sim.completion[id] < o.lo) {
					o.lo = sim.completion[id];
					o.lo_witness = s;
				}
				if (sim.completion[id] > o.hi) {
					o.hi = sim.completion[id];
					o.hi_witness = s;
				}
			}
			runtime_orders.try_emplace(std::move(sim.order), s);
		}

		Exactness_verdict v;
		const auto analysed = completion_intervals(g);

		// one line per job whose bounds differ; the scenario of the first
		v.intervals_exact = true;
		std::vector<std::string> mismatches;
		std::optional<Scenario> first_scenario;
		for (Job_id id = 1; id <= m; ++id) {
			const Observed& o = truth[id];
			const Completion& a = analysed[id];
			const std::string job = "J" + std::to_string(id);
			std::ostringstream msg;
			const Scenario* s = nullptr;
			if (a.ect < o.lo) {
				msg << job << ": analysed earliest completion " << a.ect
				    << " is attained by no scenario (true earliest " << o.lo << ")";
				s = &o.lo_witness;
			} else if (a.ect > o.lo) {
				msg << job << ": completes at " << o.lo << " before the analysed earliest "
				    << a.ect;
				s = &o.lo_witness;
			}
			if (a.lct > o.hi) {
				msg << (s ? "; " : "") << job << ": analysed latest completion " << a.lct
				    << " is attained by no scenario (true latest " << o.hi << ")";
				s = s ? s : &o.hi_witness;
			} else if (a.lct < o.hi) {
				msg << (s ? "; " : "") << job << ": completes at " << o.hi
				    << " after the analysed latest " << a.lct;
				s = s ? s : &o.hi_witness;
			}
			if (!s)
				continue;
			v.intervals_exact = false;
			mismatches.push_back(msg.str());
			if (!first_scenario)
				first_scenario = *s;
		}
		if (!mismatches.empty()) {
			std::string joined;
			for (const auto& line : mismatches)
				joined += (joined.empty() ? "" : "\n") + line;
			v.witness = Witness{joined, first_scenario};
		}

		v.orderings_match = true;
		for (const auto& [order, s] : runtime_orders) {
			if (!has_ordering(g, order)) {
				v.orderings_match = false;
				if (!v.witness)
					v.witness = Witness{"ordering " + format_order(order, &s)
					                        + " occurs at runtime but is no path of the graph",
					                    s};
				break;
			}
		}

		try {
			const auto paths = orderings(g, std::max<std::uint64_t>(cap, runtime_orders.size()));
			bool equal = paths.size() == runtime_orders.size();
			for (auto it = runtime_orders.begin(); equal && it != runtime_orders.end(); ++it)
				equal = paths.count(it->first) > 0;
			v.orderings_equal = equal;
		} catch (const std::length_error&) {
			v.orderings_equal = std::nullopt;
		}

		return v;
	}

} // namespace sag
