// splitroot: decide and construct split square roots from the command line.
//
// Exit codes: 0 success / positive decision, 1 parse or format error,
// 2 precondition violation, 3 negative decision, 4 internal verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <splitroot/classes.hpp>
#include <splitroot/cliques.hpp>
#include <splitroot/io.hpp>
#include <splitroot/oracle.hpp>
#include <splitroot/roots.hpp>
#include <splitroot/serialize.hpp>

namespace {

using namespace splitroot;

enum exit_code : int { ok = 0, parse_failure = 1, precondition = 2, negative = 3, internal = 4 };

struct options {
	std::string format; // empty: by file extension
	std::size_t jobs = 0;
	bool force = false;
	std::string class_name;
	std::size_t cap = 0;
	std::size_t max_n = 6;
	std::string root_path;
	std::vector<std::string> inputs;
};

bool is_graph6(const std::string& path, const std::string& format) {
	if (!format.empty()) return format == "graph6";
	for (const char* ext : {".g6", ".graph6"})
		if (path.size() >= std::string(ext).size() && path.ends_with(ext)) return true;
	return false;
}

std::string slurp(const std::string& path) {
	if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
	std::ifstream in(path, std::ios::binary);
	if (!in) throw parse_error("cannot open " + path);
	return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<graph> read_graphs(const std::string& path, const std::string& format) {
	const std::string text = slurp(path);
	if (is_graph6(path, format)) return io::parse_graph6_lines(text);
	return {io::parse_edge_list(text)};
}

graph read_single(const std::string& path, const std::string& format) {
	auto gs = read_graphs(path, format);
	if (gs.size() != 1) throw parse_error(path + ": expected exactly one graph, found " + std::to_string(gs.size()));
	return std::move(gs.front());
}

std::string write_graph(const graph& g, bool graph6) { return graph6 ? io::to_graph6(g) + "\n" : io::to_edge_list(g); }

std::size_t job_count(const options& opt) {
	if (opt.jobs) return opt.jobs;
	if (const char* env = std::getenv("SPLITROOT_JOBS")) {
		try {
			return std::max<std::size_t>(1, std::stoul(env));
		} catch (...) {
			throw parse_error("SPLITROOT_JOBS is not a number");
		}
	}
	return 1;
}

struct outcome {
	std::string text;
	int code = ok;
};

int code_of(const std::exception_ptr& e) {
	try {
		std::rethrow_exception(e);
	} catch (const parse_error&) {
		return parse_failure;
	} catch (const precondition_error&) {
		return precondition;
	} catch (const internal_error&) {
		return internal;
	} catch (...) {
		return internal;
	}
}

std::string message_of(const std::exception_ptr& e) {
	try {
		std::rethrow_exception(e);
	} catch (const std::exception& ex) {
		return ex.what();
	} catch (...) {
		return "unknown failure";
	}
}

// Runs `task` on every input graph (in parallel when asked), prints results
// in input order and folds exit codes: the first error wins, then any negative decision.
template <typename Task>
int for_each_graph(const options& opt, Task task) {
	std::vector<graph> graphs;
	for (const auto& path : opt.inputs) {
		auto gs = read_graphs(path, opt.format);
		graphs.insert(graphs.end(), std::make_move_iterator(gs.begin()), std::make_move_iterator(gs.end()));
	}
	std::vector<outcome> results(graphs.size());
	oracle::detail::parallel_for(graphs.size(), job_count(opt), [&](std::size_t i) {
		try {
			results[i] = task(graphs[i]);
		} catch (...) {
			auto e = std::current_exception();
			results[i] = {json{{"error", message_of(e)}}.dump() + "\n", code_of(e)};
		}
	});
	int error = ok;
	bool any_negative = false;
	for (const auto& r : results) {
		std::cout << r.text;
		if (r.code == negative) any_negative = true;
		else if (r.code != ok && error == ok) error = r.code;
	}
	if (error != ok) return error;
	return any_negative ? negative : ok;
}

bool output_graph6(const options& opt) {
	if (!opt.format.empty()) return opt.format == "graph6";
	return !opt.inputs.empty() && is_graph6(opt.inputs.front(), "");
}

recognize_options recognizer_options(const options& opt) {
	recognize_options r;
	r.cycles.force = opt.force;
	return r;
}

int run_square(const options& opt) {
	const bool g6 = output_graph6(opt);
	return for_each_graph(opt, [&](const graph& g) { return outcome{write_graph(square(g), g6), ok}; });
}

int run_cliques(const options& opt) {
	return for_each_graph(opt, [&](const graph& g) {
		const std::size_t cap = opt.cap ? opt.cap : std::max<std::size_t>(g.order(), 1);
		return outcome{to_json(maximal_cliques(g, cap)).dump() + "\n", ok};
	});
}

int run_recognize(const options& opt) {
	const class_id cls = parse_class(opt.class_name);
	return for_each_graph(opt, [&](const graph& g) {
		auto r = recognize(g, cls, recognizer_options(opt));
		return outcome{to_json(r).dump() + "\n", r.member ? ok : negative};
	});
}

int run_root(const options& opt) {
	const class_id cls = parse_class(opt.class_name);
	return for_each_graph(opt, [&](const graph& g) {
		auto cert = find_root(g, cls, recognizer_options(opt));
		return outcome{to_json(cert).dump() + "\n", cert.decision ? ok : negative};
	});
}

int run_verify(const options& opt) {
	if (opt.inputs.size() != 1) throw parse_error("verify takes exactly one target graph");
	const graph h = read_single(opt.root_path, opt.format);
	const graph g = read_single(opt.inputs.front(), opt.format);
	const bool good = verify_root(h, g);
	std::cout << json{{"verified", good}}.dump() << "\n";
	return good ? ok : negative;
}

int run_oracle_root(const options& opt) {
	std::optional<class_id> cls;
	if (!opt.class_name.empty() && opt.class_name != "split") cls = parse_class(opt.class_name);
	const bool g6 = output_graph6(opt);
	return for_each_graph(opt, [&](const graph& g) {
		auto h = oracle::oracle_find_root(g, cls);
		if (!h) return outcome{"none\n", negative};
		return outcome{write_graph(*h, g6), ok};
	});
}

int run_mine(const options& opt) {
	const class_id cls = parse_class(opt.class_name);
	auto report = oracle::mine_obstructions(cls, opt.max_n, job_count(opt));
	std::cout << to_json(report).dump() << "\n";
	return ok;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Recognize squares of split graphs and construct square roots"};
	app.require_subcommand(1);
	options opt;
	app.add_option("--format", opt.format, "graph I/O format (default: by extension, .g6 is graph6)")
	    ->check(CLI::IsMember({"edgelist", "graph6"}));
	app.add_option("--jobs", opt.jobs, "worker threads for batches and the miner (env SPLITROOT_JOBS)");
	app.add_flag("--force", opt.force, "lift the size guard of the induced-cycle search");

	auto* sq = app.add_subcommand("square", "print the square of each input graph");
	sq->add_option("inputs", opt.inputs)->required();

	auto* cl = app.add_subcommand("cliques", "list maximal cliques as JSON");
	cl->add_option("--cap", opt.cap, "stop after cap+1 cliques (default |V|)");
	cl->add_option("inputs", opt.inputs)->required();

	auto* rec = app.add_subcommand("recognize", "test class membership of a split graph");
	rec->add_option("--class", opt.class_name)->required();
	rec->add_option("inputs", opt.inputs)->required();

	auto* rt = app.add_subcommand("root", "decide whether the input is the square of a class member");
	rt->add_option("--class", opt.class_name)->required();
	rt->add_option("inputs", opt.inputs)->required();

	auto* ver = app.add_subcommand("verify", "check that root^2 equals the graph");
	ver->add_option("--root", opt.root_path)->required();
	ver->add_option("inputs", opt.inputs)->required();

	auto* orc = app.add_subcommand("oracle-root", "exhaustive root search (at most 7 vertices)");
	orc->add_option("--class", opt.class_name, "class name, or 'split' for any split root");
	orc->add_option("inputs", opt.inputs)->required();

	auto* mine = app.add_subcommand("mine", "search minimal obstructions up to --max-n vertices");
	mine->add_option("--class", opt.class_name)->required();
	mine->add_option("--max-n", opt.max_n)->required();

	// Options given before or after the subcommand both land in `opt`.
	for (auto* sub : {sq, cl, rec, rt, ver, orc, mine}) sub->fallthrough();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return parse_failure;
	}

	try {
		if (*sq) return run_square(opt);
		if (*cl) return run_cliques(opt);
		if (*rec) return run_recognize(opt);
		if (*rt) return run_root(opt);
		if (*ver) return run_verify(opt);
		if (*orc) return run_oracle_root(opt);
		if (*mine) return run_mine(opt);
	} catch (...) {
		auto e = std::current_exception();
		std::cerr << "splitroot: " << message_of(e) << "\n";
		return code_of(e);
	}
	return parse_failure;
}
