#include "sag/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace sag {

	using json = nlohmann::ordered_json;

	namespace {
		constexpr std::array<const char*, 7> field_names{
			"r_min", "r_max", "c_min", "c_max", "deadline", "priority", "ht_flag"};

		std::vector<std::string_view> split_ws(std::string_view line)
		{
			std::vector<std::string_view> out;
			std::size_t k = 0;
			while (k < line.size()) {
				while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k])))
					++k;
				std::size_t start = k;
				while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])))
					++k;
				if (k > start)
					out.push_back(line.substr(start, k - start));
			}
			return out;
		}

		std::string_view trim(std::string_view s)
		{
			while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
				s.remove_prefix(1);
			while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
				s.remove_suffix(1);
			return s;
		}

		std::int64_t parse_int(std::string_view tok, std::size_t line, const char* field)
		{
			std::int64_t v = 0;
			auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
			if (ec != std::errc() || ptr != tok.data() + tok.size())
				throw Parse_error(line, std::string("field ") + field + ": '" + std::string(tok)
				                            + "' is not an integer");
			return v;
		}
	}

	Parse_error::Parse_error(std::size_t line, const std::string& what)
	: std::runtime_error("line " + std::to_string(line) + ": " + what)
	, line(line)
	{
	}

	Job_set parse_jobset(std::string_view text)
	{
		Job_set js;
		std::vector<std::size_t> line_of_job{0};
		std::size_t horizon_line = 0;
		std::size_t line_no = 0;

		while (!text.empty()) {
			const auto nl = text.find('\n');
			std::string_view line = trim(text.substr(0, nl));
			text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
			++line_no;

			if (line.empty() || line.front() == '#')
				continue;

			const auto tokens = split_ws(line);
			if (tokens.front() == "@horizon") {
				if (!js.jobs.empty() || horizon_line != 0)
					throw Parse_error(line_no, "@horizon must precede all jobs and appear once");
				if (tokens.size() != 2)
					throw Parse_error(line_no, "expected '@horizon <int>'");
				js.horizon = parse_int(tokens[1], line_no, "horizon");
				horizon_line = line_no;
				continue;
			}
			if (tokens.front().front() == '@')
				throw Parse_error(line_no, "unknown directive '" + std::string(tokens.front()) + "'");

			if (tokens.size() != field_names.size())
				throw Parse_error(line_no, "expected 7 fields, found " + std::to_string(tokens.size()));

			std::array<std::int64_t, 7> v{};
			for (std::size_t k = 0; k < v.size(); ++k)
				v[k] = parse_int(tokens[k], line_no, field_names[k]);
			if (v[6] != 0 && v[6] != 1)
				throw Parse_error(line_no, "field ht_flag: must be 0 or 1");

			Job j;
			j.id = js.jobs.size() + 1;
			j.r_min = v[0];
			j.r_max = v[1];
			j.c_min = v[2];
			j.c_max = v[3];
			j.deadline = v[4];
			j.priority = v[5];
			j.ht = v[6] == 1;
			js.jobs.push_back(j);
			line_of_job.push_back(line_no);
		}

		const auto violations = validate_jobset(js);
		if (!violations.empty()) {
			const Violation& first = violations.front();
			if (first.job == 0)
				throw Parse_error(horizon_line ? horizon_line : 1, first.rule);
			throw Parse_error(line_of_job[first.job],
			                  "job J" + std::to_string(first.job) + ": " + first.rule);
		}
		return js;
	}

	std::string render_jobset(const Job_set& js)
	{
		std::ostringstream os;
		os << "@horizon " << js.horizon << "\n";
		os << "# r_min r_max c_min c_max deadline priority ht\n";
		for (const Job& j : js)
			os << j.r_min << ' ' << j.r_max << ' ' << j.c_min << ' ' << j.c_max << ' '
			   << j.deadline << ' ' << j.priority << ' ' << (j.ht ? 1 : 0) << '\n';
		return os.str();
	}

	std::string write_dot(const Sag_graph& g)
	{
		std::ostringstream os;
		os << "digraph SAG {\n";
		for (const State& s : g.states)
			os << "\tS" << s.index << " [label=\"S" << s.index << "\\n[" << s.finish.lo << ","
			   << s.finish.hi << "]\"];\n";
		for (const Edge& e : g.edges) {
			os << "\tS" << e.from << "->S" << e.to << " [label=\"J" << e.job;
			if (e.kind == Edge_kind::absent)
				os << "!\", style=dashed];\n";
			else
				os << "\"];\n";
		}
		os << "}\n";
		return os.str();
	}

	Report_format parse_report_format(std::string_view s)
	{
		if (s == "csv")
			return Report_format::csv;
		if (s == "json")
			return Report_format::json;
		throw std::invalid_argument("unknown report format '" + std::string(s) + "'");
	}

	namespace {
		std::string write_csv(const Analysis_report& r, const Report_options& opts)
		{
			std::ostringstream os;
			os << "id,r_min,r_max,c_min,c_max,deadline,priority,ht,ect,lct,bcrt,wcrt,miss\n";
			for (const Job_result& jr : r.jobs) {
				const Job& j = jr.job;
				os << j.id << ',' << j.r_min << ',' << j.r_max << ',' << j.c_min << ',' << j.c_max
				   << ',' << j.deadline << ',' << j.priority << ',' << (j.ht ? 1 : 0) << ','
				   << jr.ect << ',' << jr.lct << ',' << jr.bcrt << ',' << jr.wcrt << ','
				   << (jr.miss ? 1 : 0) << '\n';
			}
			os << "\nsummary,value\n";
			os << "schedulable," << (r.schedulable ? "true" : "false") << '\n';
			os << "vertex_count," << r.stats.vertex_count << '\n';
			os << "edge_count," << r.stats.edge_count << '\n';
			os << "max_width," << r.stats.max_width << '\n';
			os << "depth," << r.stats.depth << '\n';
			if (opts.include_timing)
				os << "construct_wall_time," << std::fixed << std::setprecision(6)
				   << r.construct_seconds << '\n';
			os << "scenario_log10," << std::fixed << std::setprecision(6) << r.scenario_log10
			   << '\n';
			return os.str();
		}

		std::string write_json(const Analysis_report& r, const Report_options& opts)
		{
			json doc;
			json jobs = json::array();
			for (const Job_result& jr : r.jobs) {
				const Job& j = jr.job;
				jobs.push_back({{"id", j.id},
				                {"r_min", j.r_min},
				                {"r_max", j.r_max},
				                {"c_min", j.c_min},
				                {"c_max", j.c_max},
				                {"deadline", j.deadline},
				                {"priority", j.priority},
				                {"ht", j.ht},
				                {"ect", jr.ect},
				                {"lct", jr.lct},
				                {"bcrt", jr.bcrt},
				                {"wcrt", jr.wcrt},
				                {"miss", jr.miss}});
			}
			doc["jobs"] = std::move(jobs);
			json summary;
			summary["schedulable"] = r.schedulable;
			summary["vertex_count"] = r.stats.vertex_count;
			summary["edge_count"] = r.stats.edge_count;
			summary["max_width"] = r.stats.max_width;
			summary["depth"] = r.stats.depth;
			if (opts.include_timing)
				summary["construct_wall_time"] = r.construct_seconds;
			summary["scenario_log10"] = r.scenario_log10;
			doc["summary"] = std::move(summary);
			return doc.dump(2) + "\n";
		}
	}

	std::string write_report(const Analysis_report& r, Report_format format,
	                         const Report_options& opts)
	{
		return format == Report_format::csv ? write_csv(r, opts) : write_json(r, opts);
	}

	Analysis_report read_report_json(std::string_view text)
	{
		const json doc = json::parse(text);
		Analysis_report r;
		for (const auto& item : doc.at("jobs")) {
			Job_result jr;
			jr.job.id = item.at("id").get<Job_id>();
			jr.job.r_min = item.at("r_min").get<Time>();
			jr.job.r_max = item.at("r_max").get<Time>();
			jr.job.c_min = item.at("c_min").get<Time>();
			jr.job.c_max = item.at("c_max").get<Time>();
			jr.job.deadline = item.at("deadline").get<Time>();
			jr.job.priority = item.at("priority").get<std::int64_t>();
			jr.job.ht = item.at("ht").get<bool>();
			jr.ect = item.at("ect").get<Time>();
			jr.lct = item.at("lct").get<Time>();
			jr.bcrt = item.at("bcrt").get<Time>();
			jr.wcrt = item.at("wcrt").get<Time>();
			jr.miss = item.at("miss").get<bool>();
			r.jobs.push_back(jr);
		}
		const auto& s = doc.at("summary");
		r.schedulable = s.at("schedulable").get<bool>();
		r.stats.vertex_count = s.at("vertex_count").get<std::size_t>();
		r.stats.edge_count = s.at("edge_count").get<std::size_t>();
		r.stats.max_width = s.at("max_width").get<std::size_t>();
		r.stats.depth = s.at("depth").get<std::size_t>();
		r.construct_seconds = s.value("construct_wall_time", 0.0);
		r.scenario_log10 = s.at("scenario_log10").get<double>();
		return r;
	}

	std::string read_file(const std::string& path)
	{
		std::ifstream in(path, std::ios::binary);
		if (!in)
			throw std::runtime_error("cannot open '" + path + "'");
		std::ostringstream os;
		os << in.rdbuf();
		return os.str();
	}

	void write_file(const std::string& path, std::string_view contents)
	{
		std::ofstream out(path, std::ios::binary);
		if (!out)
			throw std::runtime_error("cannot write '" + path + "'");
		out << contents;
		if (!out)
			throw std::runtime_error("error writing '" + path + "'");
	}

} // namespace sag
