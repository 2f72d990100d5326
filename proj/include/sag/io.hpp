#ifndef SAG_IO_HPP
#define SAG_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sag/analysis.hpp"
#include "sag/constructor.hpp"
#include "sag/model.hpp"

namespace sag {

	class Parse_error : public std::runtime_error {
	public:
		Parse_error(std::size_t line, const std::string& what);

		std::size_t line;
	};

	// Job-set text format: one job per line as seven integers
	//   r_min r_max c_min c_max deadline priority ht_flag
	// numbered from 1 in line order. Blank lines and lines starting with '#'
	// are ignored. An optional "@horizon <int>" directive may precede the
	// jobs (default 10000).
	Job_set parse_jobset(std::string_view text);
	std::string render_jobset(const Job_set& js);

	// Graphviz description: nodes "S<i>\n[e,l]", edges labeled "J<id>",
	// absent edges labeled "J<id>!" and dashed.
	std::string write_dot(const Sag_graph& g);

	enum class Report_format { csv, json };

	Report_format parse_report_format(std::string_view s);

	struct Report_options {
		// wall time varies between runs; leave it out for reproducible files
		bool include_timing = true;
	};

	std::string write_report(const Analysis_report& r, Report_format format,
	                         const Report_options& opts = {});

	// Inverse of write_report(..., json). A missing construct_wall_time
	// reads as 0.
	Analysis_report read_report_json(std::string_view text);

	std::string read_file(const std::string& path);
	void write_file(const std::string& path, std::string_view contents);

} // namespace sag

#endif
